#pragma once

#include "weylac/root_system.hpp"

#include <complex>
#include <cstdint>
#include <map>

namespace weylac {

/// Coefficients below this magnitude are pruned from every TorusSeries.
inline constexpr double kZeroThreshold = 1e-12;

/// Finite Fourier series on the maximal torus: exponent (a doubled-coordinate
/// Weight) -> complex coefficient. Terms are kept in lexicographic exponent order.
class TorusSeries {
public:
  using Terms = std::map<Weight, std::complex<double>>;

  explicit TorusSeries(std::size_t rank) : rank_(rank) {}
  /// Prunes coefficients below `threshold`.
  TorusSeries(std::size_t rank, Terms terms, double threshold = kZeroThreshold);

  static TorusSeries constant(std::size_t rank, std::complex<double> c);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  std::complex<double> coefficient(const Weight& exponent) const;

  /// Adds into the coefficient of `exponent`; the term is dropped if the sum prunes.
  void add(const Weight& exponent, std::complex<double> c);

  /// Largest |doubled coordinate| over all exponents (0 for the empty series).
  std::int64_t max_abs_exponent() const noexcept;

  TorusSeries pruned(double threshold) const { return TorusSeries(rank_, terms_, threshold); }
  TorusSeries scaled(std::complex<double> s) const;

  friend TorusSeries operator+(const TorusSeries& a, const TorusSeries& b);
  friend TorusSeries operator-(const TorusSeries& a, const TorusSeries& b);

private:
  std::size_t rank_;
  Terms terms_;
};

/// Laurent polynomial with exact integer coefficients over doubled exponents.
/// Used wherever the Weyl character formula must hold without rounding.
class LaurentPolynomial {
public:
  using Terms = std::map<Weight, std::int64_t>;

  explicit LaurentPolynomial(std::size_t rank) : rank_(rank) {}

  static LaurentPolynomial monomial(const Weight& exponent, std::int64_t c = 1);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  std::int64_t coefficient(const Weight& exponent) const;

  void add(const Weight& exponent, std::int64_t c);

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Exact quotient by leading-term elimination in lexicographic order.
  /// Throws ConsistencyError if `divisor` does not divide `*this`.
  LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

  TorusSeries to_series() const;

private:
  std::size_t rank_;
  Terms terms_;
};

} // namespace weylac
