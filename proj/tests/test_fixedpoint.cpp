#include <doctest.h>

#include <cstdlib>
#include <random>

#include "test_util.hpp"
#include "upscale/fixedpoint.hpp"

using namespace upscale;

namespace {

std::vector<std::int32_t> raws(const FixedWeightVector& v) {
  std::vector<std::int32_t> out;
  for (const auto& t : v.taps) out.push_back(t.raw);
  return out;
}

bool non_adjacent(const Csd& csd) {
  for (std::size_t i = 1; i < csd.size(); ++i)
    if (csd[i].shift - csd[i - 1].shift < 2) return false;
  return true;
}

}  // namespace

TEST_CASE("QFormat range") {
  CHECK(QFormat().frac_bits() == 8);
  CHECK(QFormat(12).one() == 4096);
  CHECK_THROWS_AS(QFormat(3), std::invalid_argument);
  CHECK_THROWS_AS(QFormat(17), std::invalid_argument);
}

TEST_CASE("quantize_weights on exactly representable taps") {
  const QFormat q8(8);
  CHECK(raws(quantize_weights(bicubic_weights(0), q8)) == std::vector<std::int32_t>{0, 256, 0, 0});
  const auto half = quantize_weights(bicubic_weights(Rational(1, 2)), q8);
  CHECK(raws(half) == std::vector<std::int32_t>{-16, 144, 144, -16});
  CHECK(half.raw_sum() == 256);
  CHECK(raws(quantize_weights(bilinear_weights(Rational(1, 4)), q8)) == std::vector<std::int32_t>{192, 64});
}

TEST_CASE("quantize_weights renormalizes for every phase and format") {
  for (int f = QFormat::kMinFracBits; f <= QFormat::kMaxFracBits; ++f) {
    const QFormat q(f);
    const Rational step(1, q.one());
    for (std::int64_t k = 0; k < 64; ++k) {
      for (const auto m : {Method::Bilinear, Method::Bicubic}) {
        const auto wv = weights_for(m, Rational(k, 64));
        const auto fv = quantize_weights(wv, q);
        REQUIRE(fv.raw_sum() == q.one());
        for (std::size_t i = 0; i < wv.taps.size(); ++i) {
          const auto err = (Rational(fv.taps[i].raw) * step - wv.taps[i]).abs();
          CHECK(err <= Rational(static_cast<std::int64_t>(wv.taps.size())) * step);
        }
      }
    }
  }
}

TEST_CASE("csd_decompose examples") {
  CHECK(csd_decompose(0).empty());
  CHECK(csd_decompose(7) == Csd{{-1, 0}, {+1, 3}});
  CHECK(csd_decompose(144) == Csd{{+1, 4}, {+1, 7}});
  CHECK(csd_decompose(-16) == Csd{{-1, 4}});
  CHECK(csd_string(csd_decompose(144)) == "+2^7+2^4");
  CHECK(csd_string({}) == "0");
}

TEST_CASE("csd_decompose is exact, canonical and short") {
  for (std::int64_t v = -70000; v <= 70000; ++v) {
    const auto csd = csd_decompose(v);
    REQUIRE(csd_value(csd) == v);
    REQUIRE(non_adjacent(csd));
    int bits = 0;
    for (auto m = std::llabs(v); m; m >>= 1) ++bits;
    REQUIRE(static_cast<int>(csd.size()) <= (bits + 2) / 2);
  }
}

TEST_CASE("shift_add_mul matches multiplication") {
  CHECK(shift_add_mul(0, FixedWeight::from_raw(123)) == 0);
  CHECK(shift_add_mul(255, FixedWeight::from_raw(256)) == 65280);
  CHECK(shift_add_mul(200, FixedWeight::from_raw(-16)) == -3200);
  CHECK(shift_add_mul_wide(std::int64_t{-1000}, FixedWeight::from_raw(-37)) == 37000);

  // every pixel against every tap of 64 phases, both methods
  for (std::int64_t k = 0; k < 64; ++k) {
    for (const auto m : {Method::Bilinear, Method::Bicubic}) {
      const auto fv = quantize_weights(weights_for(m, Rational(k, 64)), QFormat(8));
      for (const auto& w : fv.taps)
        for (int p = 0; p < 256; ++p) REQUIRE(shift_add_mul(static_cast<Pixel>(p), w) == Accum{p} * w.raw);
    }
  }
}

TEST_CASE("accumulate_round clamps and rounds half up") {
  const QFormat q(8);
  const std::vector<Accum> neg{-3000, 100};
  CHECK(accumulate_round(neg, q) == 0);
  const std::vector<Accum> over{255 * 256 + 200};
  CHECK(accumulate_round(over, q) == 255);
  const std::vector<Accum> half{128};
  CHECK(accumulate_round(half, q) == 1);
  const std::vector<Accum> below_half{127};
  CHECK(accumulate_round(below_half, q) == 0);
}

TEST_CASE("constant windows survive quantized weights") {
  for (std::int64_t k = 0; k < 64; ++k) {
    const auto fv = quantize_weights(bicubic_weights(Rational(k, 64)), QFormat(8));
    for (int c = 0; c < 256; ++c) {
      std::vector<Accum> products;
      for (const auto& w : fv.taps) products.push_back(shift_add_mul(static_cast<Pixel>(c), w));
      REQUIRE(accumulate_round(products, fv.qformat) == c);
    }
  }
}

TEST_CASE("accumulator width bound holds at the widest format") {
  // worst case |sum| for the two-stage bicubic path is 255 * (sum |raw|)^2
  const QFormat q(QFormat::kMaxFracBits);
  std::int64_t worst = 0;
  for (std::int64_t k = 0; k < 256; ++k) {
    const auto fv = quantize_weights(bicubic_weights(Rational(k, 256)), q);
    std::int64_t abs_sum = 0;
    for (const auto& w : fv.taps) abs_sum += std::llabs(w.raw);
    CHECK(abs_sum < (std::int64_t{1} << (q.frac_bits() + 1)));
    worst = std::max(worst, 255 * abs_sum * abs_sum);
  }
  CHECK(worst < (std::int64_t{1} << 43));
}
