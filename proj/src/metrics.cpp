#include "upscale/metrics.hpp"

#include <array>
#include <cmath>

namespace upscale {

namespace {

constexpr int kWindow = 11;
constexpr double kSigma = 1.5;
constexpr double kPeak = 255.0;
constexpr double kC1 = (0.01 * kPeak) * (0.01 * kPeak);
constexpr double kC2 = (0.03 * kPeak) * (0.03 * kPeak);

void require_same_dims(const Image& a, const Image& b) {
  if (a.width() != b.width() || a.height() != b.height())
    throw DimensionMismatch("image dimensions differ: " + std::to_string(a.width()) + "x" +
                            std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                            std::to_string(b.height()));
}

std::array<double, kWindow * kWindow> gaussian_window() {
  std::array<double, kWindow> g{};
  double sum = 0;
  for (int i = 0; i < kWindow; ++i) {
    const double x = i - kWindow / 2;
    g[i] = std::exp(-(x * x) / (2 * kSigma * kSigma));
    sum += g[i];
  }
  std::array<double, kWindow * kWindow> w{};
  for (int i = 0; i < kWindow; ++i)
    for (int j = 0; j < kWindow; ++j) w[i * kWindow + j] = (g[i] / sum) * (g[j] / sum);
  return w;
}

}  // namespace

double psnr(const Image& a, const Image& b) {
  require_same_dims(a, b);
  std::uint64_t sse = 0;
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const auto d = static_cast<std::int64_t>(pa[i]) - pb[i];
    sse += static_cast<std::uint64_t>(d * d);
  }
  if (sse == 0) return kPsnrIdentical;
  const double mse = static_cast<double>(sse) / static_cast<double>(pa.size());
  return 10.0 * std::log10(kPeak * kPeak / mse);
}

double ssim(const Image& a, const Image& b) {
  require_same_dims(a, b);
  if (a.width() < kWindow || a.height() < kWindow)
    throw std::invalid_argument("ssim needs images of at least 11x11");
  static const auto weights = gaussian_window();

  const auto rows = a.height() - kWindow + 1;
  const auto cols = a.width() - kWindow + 1;
  double total = 0;
  for (std::size_t y = 0; y < rows; ++y) {
    for (std::size_t x = 0; x < cols; ++x) {
      double ma = 0, mb = 0, aa = 0, bb = 0, ab = 0;
      for (int i = 0; i < kWindow; ++i) {
        for (int j = 0; j < kWindow; ++j) {
          const double w = weights[i * kWindow + j];
          const double va = a.at(x + j, y + i);
          const double vb = b.at(x + j, y + i);
          ma += w * va;
          mb += w * vb;
          aa += w * va * va;
          bb += w * vb * vb;
          ab += w * va * vb;
        }
      }
      const double var_a = aa - ma * ma;
      const double var_b = bb - mb * mb;
      const double cov = ab - ma * mb;
      total += ((2 * ma * mb + kC1) * (2 * cov + kC2)) / ((ma * ma + mb * mb + kC1) * (var_a + var_b + kC2));
    }
  }
  return total / static_cast<double>(rows * cols);
}

QualityReport compare(const Image& reference, const Image& test, std::string label) {
  QualityReport r;
  r.width = reference.width();
  r.height = reference.height();
  r.psnr_db = psnr(reference, test);
  r.ssim = ssim(reference, test);
  r.label = std::move(label);
  return r;
}

}  // namespace upscale
