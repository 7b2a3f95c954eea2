#include "upscale/stream.hpp"

#include <algorithm>
#include <stdexcept>

#include "upscale/interp.hpp"

namespace upscale {

const char* to_string(Method m) { return m == Method::Bicubic ? "bicubic" : "bilinear"; }
const char* to_string(Mode m) { return m == Mode::Fixed ? "fixed" : "exact"; }

ScaleJob::ScaleJob(Method method, Mode mode, Scale scale_x, Scale scale_y, std::size_t in_width,
                   std::size_t in_height, QFormat qformat)
    : method_(method),
      mode_(mode),
      qformat_(qformat),
      scale_x_(scale_x),
      scale_y_(scale_y),
      in_width_(in_width),
      in_height_(in_height),
      out_width_(scale_x.output_length(in_width)),
      out_height_(scale_y.output_length(in_height)) {
  if (in_width == 0 || in_height == 0) throw std::invalid_argument("input dimensions must be >= 1");
}

ScaleJob::ScaleJob(Method method, Mode mode, Scale scale, std::size_t in_width, std::size_t in_height,
                   QFormat qformat)
    : ScaleJob(method, mode, scale, scale, in_width, in_height, qformat) {}

AxisPlan make_axis_plan(Method method, Mode mode, QFormat q, Scale scale, std::size_t in, std::size_t out) {
  AxisPlan plan{phase_table(scale, in, out), {}, {}};
  for (const auto& ph : plan.phases.period_phases()) {
    plan.exact.push_back(weights_for(method, ph.dx));
    if (mode == Mode::Fixed) plan.fixed.push_back(quantize_weights(plan.exact.back(), q));
  }
  return plan;
}

namespace {

std::int64_t clamp_index(std::int64_t i, std::size_t len) {
  return std::clamp<std::int64_t>(i, 0, static_cast<std::int64_t>(len) - 1);
}

// For every source index, the half-open range of outputs whose last needed
// tap (after clamping) is that index.
void group_by_last_tap(const AxisPlan& plan, Method method, std::vector<std::size_t>& first,
                       std::vector<std::size_t>& end) {
  const auto in = plan.phases.in();
  first.assign(in, 0);
  end.assign(in, 0);
  const auto reach = first_tap_offset(method) + static_cast<std::int64_t>(tap_count(method)) - 1;
  for (std::size_t u = 0; u < plan.phases.out(); ++u) {
    const auto last = static_cast<std::size_t>(clamp_index(plan.phases.at(u).base + reach, in));
    if (first[last] == end[last]) first[last] = u;
    end[last] = u + 1;
  }
}

}  // namespace

StreamScaler::StreamScaler(const ScaleJob& job)
    : job_(job),
      plan_x_(make_axis_plan(job.method(), job.mode(), job.qformat(), job.scale_x(), job.in_width(), job.out_width())),
      plan_y_(make_axis_plan(job.method(), job.mode(), job.qformat(), job.scale_y(), job.in_height(), job.out_height())),
      k_(job.window_size()),
      total_inputs_(job.in_width() * job.in_height()),
      fill_target_(job.line_buffers() * job.in_width() + job.window_size()),
      line_buffers_(job.line_buffers(), std::vector<Pixel>(job.in_width(), 0)) {
  group_by_last_tap(plan_x_, job.method(), col_first_, col_end_);
  group_by_last_tap(plan_y_, job.method(), row_first_, row_end_);
}

std::size_t StreamScaler::storage_pixels() const {
  std::size_t n = k_ * k_;
  for (const auto& lb : line_buffers_) n += lb.size();
  return n;
}

void StreamScaler::clock_cycle() {
  if (cycles_.fill_cycles < fill_target_) ++cycles_.fill_cycles;
}

std::vector<Emission> StreamScaler::push_pixel(Pixel p) {
  if (done()) throw std::out_of_range("push_pixel: image already fully ingested");
  const auto width = job_.in_width();
  const auto col = ingested_ % width;
  const auto row = ingested_ / width;
  const auto nlb = line_buffers_.size();

  // shift the window one column and load the new column from the line buffer taps
  for (std::size_t r = 0; r < k_; ++r) {
    for (std::size_t c = 0; c + 1 < k_; ++c) window_[r][c] = window_[r][c + 1];
  }
  window_[k_ - 1][k_ - 1] = p;
  for (std::size_t m = 0; m < nlb; ++m) window_[k_ - 2 - m][k_ - 1] = line_buffers_[m][col];

  // advance the line-buffer delay chain
  for (std::size_t m = nlb - 1; m > 0; --m) line_buffers_[m][col] = line_buffers_[m - 1][col];
  line_buffers_[0][col] = p;

  ++ingested_;
  clock_cycle();

  std::vector<Emission> out;
  for (auto v = row_first_[row]; v < row_end_[row]; ++v) {
    for (auto u = col_first_[col]; u < col_end_[col]; ++u) out.push_back({u, v, compute(u, v, col, row)});
  }
  emitted_ += out.size();
  cycles_.output_cycles += out.size();

  if (done()) {
    while (cycles_.fill_cycles < fill_target_) clock_cycle();  // drain with bubbles
  }
  return out;
}

Pixel StreamScaler::compute(std::size_t u, std::size_t v, std::size_t col, std::size_t row) const {
  const auto px = plan_x_.phases.at(u);
  const auto py = plan_y_.phases.at(v);
  const auto ix = plan_x_.phases.phase_index(u);
  const auto iy = plan_y_.phases.phase_index(v);
  const auto off = first_tap_offset(job_.method());
  const auto oldest_row = static_cast<std::int64_t>(row) - static_cast<std::int64_t>(k_ - 1);
  const auto oldest_col = static_cast<std::int64_t>(col) - static_cast<std::int64_t>(k_ - 1);

  auto reg = [&](std::size_t i, std::size_t j) {
    const auto sy = clamp_index(py.base + off + static_cast<std::int64_t>(i), job_.in_height());
    const auto sx = clamp_index(px.base + off + static_cast<std::int64_t>(j), job_.in_width());
    return window_[static_cast<std::size_t>(sy - oldest_row)][static_cast<std::size_t>(sx - oldest_col)];
  };

  if (job_.method() == Method::Bicubic) {
    Window4x4 w;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) w.p[i][j] = reg(i, j);
    if (job_.mode() == Mode::Fixed) return bicubic_fixed(w, plan_x_.fixed[ix], plan_y_.fixed[iy]);
    return to_pixel(bicubic_exact(w, plan_x_.exact[ix], plan_y_.exact[iy]));
  }
  Window2x2 w;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) w.p[i][j] = reg(i, j);
  if (job_.mode() == Mode::Fixed) return bilinear_fixed(w, plan_x_.fixed[ix], plan_y_.fixed[iy]);
  return to_pixel(bilinear_exact(w, px.dx, py.dx));
}

Image scale_image(const Image& img, const ScaleJob& job, CycleCounter& cycles) {
  if (img.width() != job.in_width() || img.height() != job.in_height())
    throw std::invalid_argument("image dimensions do not match the job");
  StreamScaler engine(job);
  Image out(job.out_width(), job.out_height());
  std::vector<bool> seen(out.size(), false);
  for (const auto p : img.pixels()) {
    for (const auto& e : engine.push_pixel(p)) {
      const auto idx = e.y * out.width() + e.x;
      if (seen[idx]) throw std::logic_error("output pixel emitted twice");
      seen[idx] = true;
      out.set(e.x, e.y, e.value);
    }
  }
  if (engine.emitted() != out.size()) throw std::logic_error("streaming engine did not emit every output pixel");
  cycles = engine.cycles();
  return out;
}

Image scale_image(const Image& img, const ScaleJob& job) {
  CycleCounter unused;
  return scale_image(img, job, unused);
}

Image scale_image_reference(const Image& img, const ScaleJob& job) {
  if (img.width() != job.in_width() || img.height() != job.in_height())
    throw std::invalid_argument("image dimensions do not match the job");
  const auto plan_x = make_axis_plan(job.method(), job.mode(), job.qformat(), job.scale_x(), job.in_width(), job.out_width());
  const auto plan_y = make_axis_plan(job.method(), job.mode(), job.qformat(), job.scale_y(), job.in_height(), job.out_height());
  const auto off = first_tap_offset(job.method());
  Image out(job.out_width(), job.out_height());

  for (std::size_t v = 0; v < out.height(); ++v) {
    const auto py = plan_y.phases.at(v);
    const auto iy = plan_y.phases.phase_index(v);
    for (std::size_t u = 0; u < out.width(); ++u) {
      const auto px = plan_x.phases.at(u);
      const auto ix = plan_x.phases.phase_index(u);
      Pixel value = 0;
      if (job.method() == Method::Bicubic) {
        Window4x4 w;
        for (std::int64_t i = 0; i < 4; ++i)
          for (std::int64_t j = 0; j < 4; ++j) w.p[i][j] = img.sample_clamped(px.base + off + j, py.base + off + i);
        value = job.mode() == Mode::Fixed ? bicubic_fixed(w, plan_x.fixed[ix], plan_y.fixed[iy])
                                          : to_pixel(bicubic_exact(w, px.dx, py.dx));
      } else {
        Window2x2 w;
        for (std::int64_t i = 0; i < 2; ++i)
          for (std::int64_t j = 0; j < 2; ++j) w.p[i][j] = img.sample_clamped(px.base + j, py.base + i);
        value = job.mode() == Mode::Fixed ? bilinear_fixed(w, plan_x.fixed[ix], plan_y.fixed[iy])
                                          : to_pixel(bilinear_exact(w, px.dx, py.dx));
      }
      out.set(u, v, value);
    }
  }
  return out;
}

}  // namespace upscale
