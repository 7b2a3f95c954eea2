#ifndef UPSCALE_RATIONAL_HPP
#define UPSCALE_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace upscale {

/// Exact rational number kept in lowest terms with a positive denominator.
/// Intermediates are computed in 128 bits; a result that does not fit back
/// into 64 bits throws std::overflow_error rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Largest integer <= this.
  std::int64_t floor() const;
  /// floor(x + 1/2): round half toward +infinity.
  std::int64_t round_half_up() const;
  /// Round to nearest, ties to the even neighbour.
  std::int64_t round_half_even() const;

  Rational abs() const { return num_ < 0 ? -*this : *this; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace upscale

#endif  // UPSCALE_RATIONAL_HPP
