#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace weylac {

/// Exact rational number kept in lowest terms with a positive denominator.
/// Comparisons cross-multiply in 128-bit arithmetic, so no rounding occurs.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "p" or "p/q".
  std::string str() const;

  /// Accepts "p/q", an integer, or a finite decimal such as "1.5".
  static Rational parse(std::string_view text);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

} // namespace weylac
