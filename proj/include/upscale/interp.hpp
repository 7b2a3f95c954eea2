#ifndef UPSCALE_INTERP_HPP
#define UPSCALE_INTERP_HPP

#include <array>

#include "upscale/fixedpoint.hpp"
#include "upscale/image.hpp"
#include "upscale/kernel.hpp"
#include "upscale/rational.hpp"

namespace upscale {

/// 2x2 neighbourhood, row-major: p[0] = {p11, p12} is the top row.
struct Window2x2 {
  std::array<std::array<Pixel, 2>, 2> p{};
};

/// 4x4 neighbourhood, p[row][col], covering source offsets -1..+2 on both axes.
struct Window4x4 {
  std::array<std::array<Pixel, 4>, 4> p{};
};

Rational bilinear_exact(const Window2x2& w, const Rational& dx, const Rational& dy);

/// One horizontal pass: sum_j p[j] * taps[j].
Rational bicubic_row(const std::array<Pixel, 4>& row, const WeightVector& wx);

Rational bicubic_exact(const Window4x4& w, const Rational& dx, const Rational& dy);
Rational bicubic_exact(const Window4x4& w, const WeightVector& wx, const WeightVector& wy);

Pixel bilinear_fixed(const Window2x2& w, const FixedWeightVector& fwx, const FixedWeightVector& fwy);

/// Four row dot products kept at full precision, one column dot product, then a
/// single round-and-clamp at 2*frac_bits.
Pixel bicubic_fixed(const Window4x4& w, const FixedWeightVector& fwx, const FixedWeightVector& fwy);

/// Exact result as an output pixel: round half up, then clamp to [0, 255].
Pixel to_pixel(const Rational& v);

}  // namespace upscale

#endif  // UPSCALE_INTERP_HPP
