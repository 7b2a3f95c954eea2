#include "upscale/fixedpoint.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace upscale {

QFormat::QFormat(int frac_bits) : frac_bits_(frac_bits) {
  if (frac_bits < kMinFracBits || frac_bits > kMaxFracBits)
    throw std::invalid_argument("frac_bits must be in 4..16, got " + std::to_string(frac_bits));
}

Csd csd_decompose(std::int64_t raw) {
  Csd out;
  const int sign = raw < 0 ? -1 : 1;
  // magnitude as unsigned so INT64_MIN is representable
  auto m = raw < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(raw) : static_cast<std::uint64_t>(raw);
  int shift = 0;
  while (m != 0) {
    if (m & 1) {
      // digit is +1 when m = 1 (mod 4), -1 when m = 3 (mod 4)
      const int digit = (m & 3) == 1 ? 1 : -1;
      out.push_back({sign * digit, shift});
      m = digit > 0 ? m - 1 : m + 1;
    }
    m >>= 1;
    ++shift;
  }
  return out;
}

std::int64_t csd_value(const Csd& csd) {
  std::int64_t v = 0;
  for (const auto& t : csd) v += t.sign * (std::int64_t{1} << t.shift);
  return v;
}

std::string csd_string(const Csd& csd) {
  if (csd.empty()) return "0";
  std::string s;
  for (auto it = csd.rbegin(); it != csd.rend(); ++it) s += (it->sign > 0 ? "+2^" : "-2^") + std::to_string(it->shift);
  return s;
}

FixedWeight FixedWeight::from_raw(std::int32_t raw) { return {raw, csd_decompose(raw)}; }

std::int64_t FixedWeightVector::raw_sum() const {
  return std::accumulate(taps.begin(), taps.end(), std::int64_t{0},
                         [](std::int64_t s, const FixedWeight& w) { return s + w.raw; });
}

FixedWeightVector quantize_weights(const WeightVector& wv, QFormat q) {
  if (wv.sum() != 1) throw std::invalid_argument("weights must sum to exactly 1 before quantization");
  std::vector<std::int64_t> raws;
  raws.reserve(wv.taps.size());
  for (const auto& t : wv.taps) raws.push_back((t * q.one()).round_half_even());

  const auto residual = q.one() - std::accumulate(raws.begin(), raws.end(), std::int64_t{0});
  if (residual != 0) {
    const auto largest = std::max_element(raws.begin(), raws.end(),
                                          [](std::int64_t a, std::int64_t b) { return std::llabs(a) < std::llabs(b); });
    *largest += residual;
  }

  FixedWeightVector out{{}, q};
  out.taps.reserve(raws.size());
  for (const auto r : raws) out.taps.push_back(FixedWeight::from_raw(static_cast<std::int32_t>(r)));
  return out;
}

Pixel round_shift_clamp(Accum sum, int shift) {
  const auto rounded = (sum + (Accum{1} << (shift - 1))) >> shift;
  return static_cast<Pixel>(std::clamp<Accum>(rounded, 0, 255));
}

Pixel accumulate_round(std::span<const Accum> products, QFormat q) {
  return round_shift_clamp(std::accumulate(products.begin(), products.end(), Accum{0}), q.frac_bits());
}

}  // namespace upscale
