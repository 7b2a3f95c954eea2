#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "test_util.hpp"
#include "upscale/metrics.hpp"

using namespace upscale;

namespace {

Image plus_one(const Image& img) {
  std::vector<Pixel> d(img.pixels().begin(), img.pixels().end());
  for (auto& p : d) p = static_cast<Pixel>(p + 1);
  return Image(img.width(), img.height(), std::move(d));
}

Image add_noise(const Image& img, int amplitude, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> n(-amplitude, amplitude);
  std::vector<Pixel> d(img.pixels().begin(), img.pixels().end());
  for (auto& p : d) p = static_cast<Pixel>(std::clamp(p + n(rng), 0, 255));
  return Image(img.width(), img.height(), std::move(d));
}

Image mid_gray_texture(std::size_t w, std::size_t h, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> px(40, 214);
  std::vector<Pixel> d(w * h);
  for (auto& p : d) p = static_cast<Pixel>(px(rng));
  return Image(w, h, std::move(d));
}

}  // namespace

TEST_CASE("psnr examples") {
  std::mt19937 rng(31);
  const auto a = testing::random_image(rng, 20, 20);
  CHECK(psnr(a, a) == kPsnrIdentical);
  CHECK(std::isinf(psnr(a, a)));

  const Image base(16, 16, 100);
  CHECK(psnr(base, plus_one(base)) == doctest::Approx(48.1308036086791).epsilon(1e-12));
  CHECK(psnr(Image(8, 8, 0), Image(8, 8, 255)) == doctest::Approx(0.0));

  CHECK_THROWS_AS(psnr(Image(3, 3), Image(3, 4)), DimensionMismatch);
}

TEST_CASE("psnr and ssim are symmetric") {
  std::mt19937 rng(32);
  for (int i = 0; i < 5; ++i) {
    const auto a = testing::random_image(rng, 24, 17);
    const auto b = add_noise(a, 10 + 5 * i, 100 + i);
    CHECK(psnr(a, b) == psnr(b, a));
    CHECK(ssim(a, b) == doctest::Approx(ssim(b, a)).epsilon(1e-14));
  }
}

TEST_CASE("psnr decreases strictly with noise amplitude") {
  const auto img = mid_gray_texture(64, 64, 33);
  double prev = kPsnrIdentical;
  for (const int amp : {1, 2, 4, 8, 16}) {
    const auto p = psnr(img, add_noise(img, amp, 7));
    CHECK(p < prev);
    prev = p;
  }
}

TEST_CASE("ssim identity, anticorrelation and range") {
  std::mt19937 rng(34);
  const auto a = testing::random_image(rng, 32, 32);
  CHECK(ssim(a, a) == 1.0);

  std::vector<Pixel> inv(a.pixels().begin(), a.pixels().end());
  for (auto& p : inv) p = static_cast<Pixel>(255 - p);
  const Image b(32, 32, std::move(inv));
  const auto s = ssim(a, b);
  CHECK(s < 1.0);
  CHECK(s >= -1.0);

  for (int i = 0; i < 10; ++i) {
    const auto x = testing::random_image(rng, 15, 12);
    const auto y = testing::random_image(rng, 15, 12);
    const auto v = ssim(x, y);
    CHECK(v >= -1.0);
    CHECK(v <= 1.0);
  }

  CHECK_THROWS_AS(ssim(Image(10, 20), Image(10, 20)), std::invalid_argument);
  CHECK_THROWS_AS(ssim(Image(20, 20), Image(21, 20)), DimensionMismatch);
}

TEST_CASE("ssim agrees with an independent reference implementation") {
  // Expected values from scikit-image structural_similarity (gaussian_weights,
  // sigma 1.5, population covariance, data_range 255); see tests/oracles/oracles.py.
  struct Case {
    std::uint32_t seed;
    std::size_t w, h;
    double expected;
  };
  const Case cases[] = {
      {1, 16, 16, 0.9932323455339495}, {7, 23, 19, 0.9915802680835697},   {42, 40, 33, 0.9915846101230991},
      {1234, 11, 11, 0.9907867194442406}, {99, 64, 48, 0.9922316162920948},
  };
  for (const auto& c : cases) {
    testing::XorShift32 g(c.seed);
    std::vector<Pixel> a(c.w * c.h), b(c.w * c.h);
    for (auto& p : a) p = static_cast<Pixel>(g.next() >> 24);
    for (std::size_t i = 0; i < b.size(); ++i) {
      const int noise = static_cast<int>((g.next() >> 24) % 32) - 16;
      b[i] = static_cast<Pixel>(std::clamp(a[i] + noise, 0, 255));
    }
    const auto s = ssim(Image(c.w, c.h, a), Image(c.w, c.h, b));
    CAPTURE(c.seed);
    CHECK(std::abs(s - c.expected) < 1e-6);
  }
}

TEST_CASE("compare fills a QualityReport") {
  const auto img = mid_gray_texture(20, 20, 35);
  const auto r = compare(img, img, "self");
  CHECK(r.identical());
  CHECK(r.ssim == 1.0);
  CHECK(r.width == 20);
  CHECK(r.label == "self");
  const auto n = compare(img, add_noise(img, 3, 1));
  CHECK_FALSE(n.identical());
  CHECK(n.psnr_db > 0);
}
