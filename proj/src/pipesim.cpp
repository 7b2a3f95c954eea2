#include "upscale/pipesim.hpp"

#include <stdexcept>

namespace upscale {

PipelineReport simulate(const ScaleJob& job) {
  PipelineReport r;
  r.fill_latency = job.line_buffers() * job.in_width() + job.window_size();
  r.outputs = static_cast<std::uint64_t>(job.out_width()) * job.out_height();
  r.total_cycles = r.fill_latency + r.outputs;
  r.steady_state_rate = 1.0;
  if (job.mode() == Mode::Fixed) r.resources = resource_proxy(job);
  return r;
}

namespace {

std::uint64_t multiplier_adders(const AxisPlan& plan) {
  std::uint64_t n = 0;
  for (const auto& fwv : plan.fixed)
    for (const auto& w : fwv.taps) n += static_cast<std::uint64_t>(w.adder_cost());
  return n;
}

}  // namespace

ResourceProxy resource_proxy(const ScaleJob& job) {
  if (job.mode() != Mode::Fixed) throw std::invalid_argument("resource proxy is only defined for fixed mode");
  const auto k = job.window_size();
  const auto px = make_axis_plan(job.method(), job.mode(), job.qformat(), job.scale_x(), job.in_width(), job.out_width());
  const auto py = make_axis_plan(job.method(), job.mode(), job.qformat(), job.scale_y(), job.in_height(), job.out_height());

  ResourceProxy r;
  // k row dot products share the horizontal coefficients; one column dot product
  // uses the vertical ones. Each dot product sums k terms with k-1 adders.
  r.adder_count = k * multiplier_adders(px) + multiplier_adders(py) + (k + 1) * (k - 1);
  r.register_count = 8 * (job.line_buffers() * job.in_width() + k * k);
  return r;
}

}  // namespace upscale
