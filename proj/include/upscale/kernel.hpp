#ifndef UPSCALE_KERNEL_HPP
#define UPSCALE_KERNEL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "upscale/rational.hpp"

namespace upscale {

enum class Method { Bilinear, Bicubic };

/// Taps per axis: 2 for bilinear, 4 for bicubic.
constexpr std::size_t tap_count(Method m) { return m == Method::Bicubic ? 4 : 2; }

/// Offset of the first tap relative to the base index (-1 for bicubic, 0 for bilinear).
constexpr std::int64_t first_tap_offset(Method m) { return m == Method::Bicubic ? -1 : 0; }

/// Exact weights for one phase. Bicubic taps address source offsets -1, 0, +1, +2
/// from the base index; bilinear taps address offsets 0 and +1.
struct WeightVector {
  Method method;
  Rational phase;
  std::vector<Rational> taps;

  Rational sum() const;
};

/// Keys cubic convolution kernel with a = -1/2, evaluated exactly.
Rational keys_weight(const Rational& d);

WeightVector bicubic_weights(const Rational& dx);
WeightVector bilinear_weights(const Rational& dx);
WeightVector weights_for(Method m, const Rational& dx);

/// Positive rational scale factor (output/input), stored reduced.
struct Scale {
  std::int64_t num = 1;
  std::int64_t den = 1;

  Scale() = default;
  Scale(std::int64_t n, std::int64_t d);

  /// round(in * num/den), never below 1.
  std::size_t output_length(std::size_t in) const;
  Rational value() const { return {num, den}; }
};

struct Phase {
  std::int64_t base;  // floor of the source position
  Rational dx;        // source position - base, in [0, 1)
};

/// Output-to-source map for one axis. Source position of output u is
/// (u + 1/2) * den/num - 1/2; phases repeat every `num` outputs while the base
/// advances by `den`, so only one period is stored.
class PhaseTable {
 public:
  PhaseTable(Scale scale, std::size_t in, std::size_t out);

  Phase at(std::size_t u) const;
  std::size_t period() const { return period_.size(); }
  /// One period of phases, u = 0 .. period()-1.
  const std::vector<Phase>& period_phases() const { return period_; }
  /// Index into period_phases() used by output u.
  std::size_t phase_index(std::size_t u) const { return u % period_.size(); }

  Scale scale() const { return scale_; }
  std::size_t in() const { return in_; }
  std::size_t out() const { return out_; }

 private:
  Scale scale_;
  std::size_t in_;
  std::size_t out_;
  std::vector<Phase> period_;
};

PhaseTable phase_table(Scale scale, std::size_t in, std::size_t out);

}  // namespace upscale

#endif  // UPSCALE_KERNEL_HPP
