#ifndef UPSCALE_IMAGE_HPP
#define UPSCALE_IMAGE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace upscale {

using Pixel = std::uint8_t;

/// Owned 8-bit grayscale raster, row-major. Immutable once built apart from
/// explicit `set` calls by whoever owns it.
class Image {
 public:
  Image(std::size_t width, std::size_t height, Pixel fill = 0);
  Image(std::size_t width, std::size_t height, std::vector<Pixel> data);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t size() const { return data_.size(); }

  Pixel at(std::size_t x, std::size_t y) const { return data_[y * width_ + x]; }
  void set(std::size_t x, std::size_t y, Pixel v) { data_[y * width_ + x] = v; }

  /// Replicate-border read: indices are clamped into the raster.
  Pixel sample_clamped(std::int64_t x, std::int64_t y) const;

  std::span<const Pixel> pixels() const { return data_; }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<Pixel> data_;
};

enum class PgmErrorKind { BadMagic, BadHeader, MaxvalTooLarge, ZeroDimension, Truncated };

class PgmError : public std::runtime_error {
 public:
  PgmError(PgmErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  PgmErrorKind kind() const { return kind_; }

 private:
  PgmErrorKind kind_;
};

/// Parses a binary P5 file. '#' comments may appear anywhere in the header.
Image read_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_pgm(const Image& img);

Image load_pgm(const std::string& path);
void save_pgm(const std::string& path, const Image& img);

}  // namespace upscale

#endif  // UPSCALE_IMAGE_HPP
