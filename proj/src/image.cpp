#include "upscale/image.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>

namespace upscale {

Image::Image(std::size_t width, std::size_t height, Pixel fill)
    : Image(width, height, std::vector<Pixel>(width * height, fill)) {}

Image::Image(std::size_t width, std::size_t height, std::vector<Pixel> data)
    : width_(width), height_(height), data_(std::move(data)) {
  if (width == 0 || height == 0) throw std::invalid_argument("image dimensions must be >= 1");
  if (data_.size() != width * height) throw std::invalid_argument("image data length != width*height");
}

Pixel Image::sample_clamped(std::int64_t x, std::int64_t y) const {
  const auto cx = std::clamp<std::int64_t>(x, 0, static_cast<std::int64_t>(width_) - 1);
  const auto cy = std::clamp<std::int64_t>(y, 0, static_cast<std::int64_t>(height_) - 1);
  return data_[static_cast<std::size_t>(cy) * width_ + static_cast<std::size_t>(cx)];
}

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  std::uint64_t number(const char* field) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size()) throw PgmError(PgmErrorKind::Truncated, std::string("PGM header ends before ") + field);
    if (!std::isdigit(bytes_[pos_])) throw PgmError(PgmErrorKind::BadHeader, std::string("PGM header: expected ") + field);
    std::uint64_t v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_++] - '0');
      if (v > (1ULL << 24)) throw PgmError(PgmErrorKind::BadHeader, std::string("PGM header: ") + field + " too large");
    }
    return v;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

Image read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') throw PgmError(PgmErrorKind::BadMagic, "not a binary PGM (expected magic P5)");
  HeaderReader r(bytes);
  r.advance(2);
  const auto width = r.number("width");
  const auto height = r.number("height");
  const auto maxval = r.number("maxval");
  if (width == 0 || height == 0) throw PgmError(PgmErrorKind::ZeroDimension, "PGM has a zero dimension");
  if (maxval == 0) throw PgmError(PgmErrorKind::BadHeader, "PGM maxval must be >= 1");
  if (maxval > 255) throw PgmError(PgmErrorKind::MaxvalTooLarge, "PGM maxval > 255 (16-bit PGM unsupported)");

  // exactly one whitespace byte separates the header from the raster
  if (r.pos() >= bytes.size()) throw PgmError(PgmErrorKind::Truncated, "PGM ends after header");
  if (!std::isspace(bytes[r.pos()])) throw PgmError(PgmErrorKind::BadHeader, "PGM header not terminated by whitespace");
  r.advance(1);

  const auto n = width * height;
  if (bytes.size() - r.pos() < n) throw PgmError(PgmErrorKind::Truncated, "PGM payload shorter than width*height");
  const auto first = bytes.begin() + static_cast<std::ptrdiff_t>(r.pos());
  return Image(width, height, std::vector<Pixel>(first, first + static_cast<std::ptrdiff_t>(n)));
}

std::vector<std::uint8_t> write_pgm(const Image& img) {
  const auto header = "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels().begin(), img.pixels().end());
  return out;
}

Image load_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return read_pgm(bytes);
}

void save_pgm(const std::string& path, const Image& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
  const auto bytes = write_pgm(img);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::ios_base::failure("write failed: " + path);
}

}  // namespace upscale
