#ifndef UPSCALE_PIPESIM_HPP
#define UPSCALE_PIPESIM_HPP

#include <cstdint>
#include <optional>

#include "upscale/stream.hpp"

namespace upscale {

/// Structural cost stand-ins for a fixed-point datapath.
struct ResourceProxy {
  /// Two-input adders: CSD digits beyond the first in every phase's constant
  /// multipliers, plus the fixed adder trees summing the tap products.
  std::uint64_t adder_count = 0;
  /// Storage bits: line buffers plus window registers, 8 bits per pixel.
  std::uint64_t register_count = 0;
};

struct PipelineReport {
  std::uint64_t fill_latency = 0;
  std::uint64_t total_cycles = 0;
  std::uint64_t outputs = 0;
  double steady_state_rate = 1.0;  // outputs per cycle once primed
  std::optional<ResourceProxy> resources;  // fixed mode only
};

/// fill_latency = line_buffers * in_width + window_size (3W+4 bicubic, W+2
/// bilinear); total = fill_latency + out_width * out_height.
PipelineReport simulate(const ScaleJob& job);

/// Throws std::invalid_argument for exact-mode jobs, which have no hardware analog.
ResourceProxy resource_proxy(const ScaleJob& job);

}  // namespace upscale

#endif  // UPSCALE_PIPESIM_HPP
