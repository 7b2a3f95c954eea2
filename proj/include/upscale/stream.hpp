#ifndef UPSCALE_STREAM_HPP
#define UPSCALE_STREAM_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "upscale/fixedpoint.hpp"
#include "upscale/image.hpp"
#include "upscale/kernel.hpp"

namespace upscale {

enum class Mode { Exact, Fixed };

const char* to_string(Method m);
const char* to_string(Mode m);

/// What to compute. Output dimensions are fixed at construction from the
/// input dimensions and the per-axis scale.
class ScaleJob {
 public:
  ScaleJob(Method method, Mode mode, Scale scale_x, Scale scale_y, std::size_t in_width, std::size_t in_height,
           QFormat qformat = QFormat{});
  /// Same scale on both axes.
  ScaleJob(Method method, Mode mode, Scale scale, std::size_t in_width, std::size_t in_height,
           QFormat qformat = QFormat{});

  Method method() const { return method_; }
  Mode mode() const { return mode_; }
  QFormat qformat() const { return qformat_; }
  Scale scale_x() const { return scale_x_; }
  Scale scale_y() const { return scale_y_; }
  std::size_t in_width() const { return in_width_; }
  std::size_t in_height() const { return in_height_; }
  std::size_t out_width() const { return out_width_; }
  std::size_t out_height() const { return out_height_; }

  /// Line buffers the streaming window needs: 3 for bicubic, 1 for bilinear.
  std::size_t line_buffers() const { return method_ == Method::Bicubic ? 3 : 1; }
  /// Window edge length: 4 for bicubic, 2 for bilinear.
  std::size_t window_size() const { return tap_count(method_); }

 private:
  Method method_;
  Mode mode_;
  QFormat qformat_;
  Scale scale_x_;
  Scale scale_y_;
  std::size_t in_width_;
  std::size_t in_height_;
  std::size_t out_width_;
  std::size_t out_height_;
};

/// Per-axis coefficient tables: one entry per phase in the table's period.
struct AxisPlan {
  PhaseTable phases;
  std::vector<WeightVector> exact;
  std::vector<FixedWeightVector> fixed;  // empty in exact mode
};

AxisPlan make_axis_plan(Method method, Mode mode, QFormat q, Scale scale, std::size_t in, std::size_t out);

struct Emission {
  std::size_t x;
  std::size_t y;
  Pixel value;
};

/// Cycle accounting under the one-output-per-cycle model: the pipeline is
/// primed after line_buffers*width + window cycles; every emitted pixel then
/// costs one cycle. Streams too short to prime are drained with bubbles.
struct CycleCounter {
  std::uint64_t fill_cycles = 0;
  std::uint64_t output_cycles = 0;
  std::uint64_t total() const { return fill_cycles + output_cycles; }
};

/// Raster-order streaming scaler. Holds line buffers of input-row length and a
/// shift-register window; never the whole image.
///
/// Output pixel (u, v) is emitted on the ingest of the last source pixel its
/// window needs. All output rows that share a source window row are therefore
/// produced together, column by column; within one ingest, emissions are in
/// raster order of output coordinates.
class StreamScaler {
 public:
  explicit StreamScaler(const ScaleJob& job);

  /// Ingests the next raster pixel. Throws std::out_of_range once the
  /// declared image has been fully ingested.
  std::vector<Emission> push_pixel(Pixel p);

  bool done() const { return ingested_ == total_inputs_; }
  std::size_t emitted() const { return emitted_; }
  const CycleCounter& cycles() const { return cycles_; }
  const ScaleJob& job() const { return job_; }

  /// Pixels held in line buffers plus window registers.
  std::size_t storage_pixels() const;

 private:
  void clock_cycle();
  Pixel compute(std::size_t u, std::size_t v, std::size_t col, std::size_t row) const;

  ScaleJob job_;
  AxisPlan plan_x_;
  AxisPlan plan_y_;
  std::size_t k_;
  std::size_t total_inputs_;
  std::size_t ingested_ = 0;
  std::size_t emitted_ = 0;
  std::uint64_t fill_target_;
  CycleCounter cycles_;

  // line_buffers_[0] holds the previous row, [1] the one before it, ...
  std::vector<std::vector<Pixel>> line_buffers_;
  // window_[row][col]; row k-1 is the live row, col k-1 the newest column
  std::array<std::array<Pixel, 4>, 4> window_{};

  // output rows/columns whose window completes at source row/column i:
  // [first_[i], end_[i])
  std::vector<std::size_t> row_first_, row_end_;
  std::vector<std::size_t> col_first_, col_end_;
};

/// Drives a StreamScaler over the raster and assembles its emissions.
Image scale_image(const Image& img, const ScaleJob& job);
/// Same, also returning the engine's cycle counts.
Image scale_image(const Image& img, const ScaleJob& job, CycleCounter& cycles);

/// Whole-image random-access scaler: gathers each window with sample_clamped.
Image scale_image_reference(const Image& img, const ScaleJob& job);

}  // namespace upscale

#endif  // UPSCALE_STREAM_HPP
