#ifndef UPSCALE_METRICS_HPP
#define UPSCALE_METRICS_HPP

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

#include "upscale/image.hpp"

namespace upscale {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Returned by psnr() for identical images.
inline constexpr double kPsnrIdentical = std::numeric_limits<double>::infinity();

/// 10 log10(255^2 / MSE).
double psnr(const Image& a, const Image& b);

/// Mean SSIM over every fully valid 11x11 window position (Gaussian weights,
/// sigma 1.5, K1 = 0.01, K2 = 0.03, L = 255). No border padding.
double ssim(const Image& a, const Image& b);

struct QualityReport {
  std::size_t width = 0;
  std::size_t height = 0;
  double psnr_db = 0.0;
  double ssim = 0.0;
  std::string label;

  bool identical() const { return psnr_db == kPsnrIdentical; }
};

QualityReport compare(const Image& reference, const Image& test, std::string label = {});

}  // namespace upscale

#endif  // UPSCALE_METRICS_HPP
