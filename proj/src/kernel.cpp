#include "upscale/kernel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace upscale {

Rational WeightVector::sum() const {
  Rational s;
  for (const auto& t : taps) s += t;
  return s;
}

Rational keys_weight(const Rational& d) {
  const auto x = d.abs();
  const auto x2 = x * x;
  const auto x3 = x2 * x;
  if (x < 1) return Rational(3, 2) * x3 - Rational(5, 2) * x2 + 1;
  if (x < 2) return Rational(-1, 2) * x3 + Rational(5, 2) * x2 - 4 * x + 2;
  return 0;
}

namespace {

void check_phase(const Rational& dx) {
  if (dx < 0 || dx >= 1) throw std::domain_error("phase must lie in [0, 1): " + dx.str());
}

}  // namespace

WeightVector bicubic_weights(const Rational& dx) {
  check_phase(dx);
  return {Method::Bicubic, dx,
          {keys_weight(1 + dx), keys_weight(dx), keys_weight(1 - dx), keys_weight(2 - dx)}};
}

WeightVector bilinear_weights(const Rational& dx) {
  check_phase(dx);
  return {Method::Bilinear, dx, {1 - dx, dx}};
}

WeightVector weights_for(Method m, const Rational& dx) {
  return m == Method::Bicubic ? bicubic_weights(dx) : bilinear_weights(dx);
}

Scale::Scale(std::int64_t n, std::int64_t d) {
  if (n < 1 || d < 1) throw std::invalid_argument("scale numerator and denominator must be >= 1");
  const auto g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

std::size_t Scale::output_length(std::size_t in) const {
  const auto len = (Rational(static_cast<std::int64_t>(in)) * value()).round_half_up();
  return static_cast<std::size_t>(std::max<std::int64_t>(1, len));
}

PhaseTable::PhaseTable(Scale scale, std::size_t in, std::size_t out) : scale_(scale), in_(in), out_(out) {
  if (in == 0 || out == 0) throw std::invalid_argument("phase table needs in >= 1 and out >= 1");
  const auto n = std::min<std::size_t>(static_cast<std::size_t>(scale.num), out);
  period_.reserve(n);
  const Rational step(scale.den, scale.num);
  for (std::size_t u = 0; u < n; ++u) {
    const auto s = (Rational(static_cast<std::int64_t>(u)) + Rational(1, 2)) * step - Rational(1, 2);
    const auto base = s.floor();
    period_.push_back({base, s - base});
  }
}

Phase PhaseTable::at(std::size_t u) const {
  const auto& p = period_[u % period_.size()];
  const auto cycles = static_cast<std::int64_t>(u / period_.size());
  return {p.base + cycles * scale_.den, p.dx};
}

PhaseTable phase_table(Scale scale, std::size_t in, std::size_t out) { return {scale, in, out}; }

}  // namespace upscale
