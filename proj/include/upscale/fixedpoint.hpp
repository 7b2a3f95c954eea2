#ifndef UPSCALE_FIXEDPOINT_HPP
#define UPSCALE_FIXEDPOINT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "upscale/image.hpp"
#include "upscale/kernel.hpp"

namespace upscale {

/// Accumulator type for every fixed-point datapath. The widest value the
/// two-stage bicubic path can produce is 255 * (sum |raw|)^2 with
/// sum |raw| < 2^(frac_bits+1); at frac_bits = 16 that is below 2^43, so a
/// signed 64-bit accumulator cannot overflow.
using Accum = std::int64_t;

/// Signed fixed-point format: value = raw * 2^-frac_bits.
class QFormat {
 public:
  static constexpr int kMinFracBits = 4;
  static constexpr int kMaxFracBits = 16;
  static constexpr int kDefaultFracBits = 8;

  constexpr QFormat() = default;
  explicit QFormat(int frac_bits);

  int frac_bits() const { return frac_bits_; }
  std::int64_t one() const { return std::int64_t{1} << frac_bits_; }
  /// Two's-complement word width able to hold every quantized tap: sign bit,
  /// one integer bit, frac_bits fraction bits.
  int word_bits() const { return frac_bits_ + 2; }

  friend bool operator==(const QFormat&, const QFormat&) = default;

 private:
  int frac_bits_ = kDefaultFracBits;
};

/// One nonzero digit of a canonical signed-digit representation: sign * 2^shift.
struct CsdTerm {
  int sign;
  int shift;
  friend bool operator==(const CsdTerm&, const CsdTerm&) = default;
};

using Csd = std::vector<CsdTerm>;

/// Non-adjacent form of `raw`, least significant digit first.
Csd csd_decompose(std::int64_t raw);
std::int64_t csd_value(const Csd& csd);
/// Renders as e.g. "+2^7+2^4"; "0" for an empty form.
std::string csd_string(const Csd& csd);

struct FixedWeight {
  std::int32_t raw = 0;
  Csd csd;

  static FixedWeight from_raw(std::int32_t raw);
  /// Adders a constant multiplier for this weight costs: one per digit beyond the first.
  int adder_cost() const { return csd.empty() ? 0 : static_cast<int>(csd.size()) - 1; }
};

struct FixedWeightVector {
  std::vector<FixedWeight> taps;
  QFormat qformat;

  std::int64_t raw_sum() const;
};

/// Rounds each tap to nearest (ties to even) at the format's step, then adds
/// the residual 2^frac_bits - sum(raw) to the tap of largest magnitude (lowest
/// index on ties) so the taps sum to exactly 2^frac_bits.
FixedWeightVector quantize_weights(const WeightVector& wv, QFormat q);

/// value * w.raw computed from shifts and adds/subtracts only.
template <typename Int>
Accum shift_add_mul_wide(Int value, const FixedWeight& w) {
  const auto v = static_cast<Accum>(value);
  Accum acc = 0;
  for (const auto& t : w.csd) {
    // left shift of a possibly negative value, done on the unsigned image
    const auto shifted = static_cast<Accum>(static_cast<std::uint64_t>(v) << t.shift);
    acc = t.sign > 0 ? acc + shifted : acc - shifted;
  }
  return acc;
}

inline Accum shift_add_mul(Pixel pixel, const FixedWeight& w) { return shift_add_mul_wide(pixel, w); }

/// (sum + 2^(shift-1)) >> shift, clamped to [0, 255]. Arithmetic shift, so the
/// rounding is half-up for negative sums too.
Pixel round_shift_clamp(Accum sum, int shift);

/// Single-stage accumulate of pixel*raw products at format q.
Pixel accumulate_round(std::span<const Accum> products, QFormat q);

}  // namespace upscale

#endif  // UPSCALE_FIXEDPOINT_HPP
