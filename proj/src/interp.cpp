#include "upscale/interp.hpp"

#include <algorithm>

namespace upscale {

Rational bilinear_exact(const Window2x2& w, const Rational& dx, const Rational& dy) {
  const auto ix = 1 - dx;
  const auto iy = 1 - dy;
  return Rational(w.p[0][0]) * iy * ix + Rational(w.p[0][1]) * iy * dx + Rational(w.p[1][0]) * dy * ix +
         Rational(w.p[1][1]) * dx * dy;
}

Rational bicubic_row(const std::array<Pixel, 4>& row, const WeightVector& wx) {
  Rational acc;
  for (std::size_t j = 0; j < 4; ++j) acc += Rational(row[j]) * wx.taps[j];
  return acc;
}

Rational bicubic_exact(const Window4x4& w, const WeightVector& wx, const WeightVector& wy) {
  Rational acc;
  for (std::size_t i = 0; i < 4; ++i) acc += bicubic_row(w.p[i], wx) * wy.taps[i];
  return acc;
}

Rational bicubic_exact(const Window4x4& w, const Rational& dx, const Rational& dy) {
  return bicubic_exact(w, bicubic_weights(dx), bicubic_weights(dy));
}

Pixel bilinear_fixed(const Window2x2& w, const FixedWeightVector& fwx, const FixedWeightVector& fwy) {
  Accum col = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto row = shift_add_mul(w.p[i][0], fwx.taps[0]) + shift_add_mul(w.p[i][1], fwx.taps[1]);
    col += shift_add_mul_wide(row, fwy.taps[i]);
  }
  return round_shift_clamp(col, fwx.qformat.frac_bits() + fwy.qformat.frac_bits());
}

Pixel bicubic_fixed(const Window4x4& w, const FixedWeightVector& fwx, const FixedWeightVector& fwy) {
  Accum col = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    Accum row = 0;
    for (std::size_t j = 0; j < 4; ++j) row += shift_add_mul(w.p[i][j], fwx.taps[j]);
    col += shift_add_mul_wide(row, fwy.taps[i]);
  }
  return round_shift_clamp(col, fwx.qformat.frac_bits() + fwy.qformat.frac_bits());
}

Pixel to_pixel(const Rational& v) { return static_cast<Pixel>(std::clamp<std::int64_t>(v.round_half_up(), 0, 255)); }

}  // namespace upscale
