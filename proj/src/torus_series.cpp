#include "weylac/torus_series.hpp"

#include "weylac/error.hpp"

#include <cstdlib>

namespace weylac {

namespace {

void check_exponent(std::size_t rank, const Weight& e) {
  if (e.rank() != rank) throw DomainError("exponent " + e.str() + " does not match series rank " + std::to_string(rank));
}

} // namespace

TorusSeries::TorusSeries(std::size_t rank, Terms terms, double threshold) : rank_(rank) {
  for (auto& [e, c] : terms) {
    check_exponent(rank_, e);
    if (std::abs(c) >= threshold) terms_.emplace(e, c);
  }
}

TorusSeries TorusSeries::constant(std::size_t rank, std::complex<double> c) {
  TorusSeries s(rank);
  s.add(Weight::zero(rank), c);
  return s;
}

std::complex<double> TorusSeries::coefficient(const Weight& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? std::complex<double>{} : it->second;
}

void TorusSeries::add(const Weight& exponent, std::complex<double> c) {
  check_exponent(rank_, exponent);
  auto [it, inserted] = terms_.try_emplace(exponent, 0.0);
  it->second += c;
  if (std::abs(it->second) < kZeroThreshold) terms_.erase(it);
}

std::int64_t TorusSeries::max_abs_exponent() const noexcept {
  std::int64_t m = 0;
  for (const auto& [e, c] : terms_)
    for (auto d : e.doubled()) m = std::max(m, d < 0 ? -d : d);
  return m;
}

TorusSeries TorusSeries::scaled(std::complex<double> s) const {
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(e, c * s);
  return TorusSeries(rank_, std::move(t));
}

TorusSeries operator+(const TorusSeries& a, const TorusSeries& b) {
  if (a.rank_ != b.rank_) throw DomainError("series rank mismatch");
  TorusSeries::Terms t = a.terms_;
  for (const auto& [e, c] : b.terms_) t[e] += c;
  return TorusSeries(a.rank_, std::move(t));
}

TorusSeries operator-(const TorusSeries& a, const TorusSeries& b) { return a + b.scaled(-1.0); }

// ---------------------------------------------------------------------------

LaurentPolynomial LaurentPolynomial::monomial(const Weight& exponent, std::int64_t c) {
  LaurentPolynomial p(exponent.rank());
  p.add(exponent, c);
  return p;
}

std::int64_t LaurentPolynomial::coefficient(const Weight& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPolynomial::add(const Weight& exponent, std::int64_t c) {
  check_exponent(rank_, exponent);
  auto [it, inserted] = terms_.try_emplace(exponent, 0);
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.rank_ != b.rank_) throw DomainError("polynomial rank mismatch");
  LaurentPolynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add(e, c);
  return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.rank_ != b.rank_) throw DomainError("polynomial rank mismatch");
  LaurentPolynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add(e, -c);
  return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.rank_ != b.rank_) throw DomainError("polynomial rank mismatch");
  LaurentPolynomial out(a.rank_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
  return out;
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
  if (divisor.rank_ != rank_) throw DomainError("polynomial rank mismatch");
  if (divisor.empty()) throw DomainError("division by the zero polynomial");

  LaurentPolynomial quotient(rank_);
  if (empty()) return quotient;

  const auto& [lead_exp, lead_coef] = *divisor.terms_.rbegin();
  // Any exact quotient has every exponent >= low(numerator) - low(divisor) in lex
  // order; once the remainder's leading term falls below that bound it can never
  // be eliminated.
  const Weight floor = terms_.begin()->first - divisor.terms_.begin()->first;

  LaurentPolynomial remainder = *this;
  while (!remainder.empty()) {
    const auto [top_exp, top_coef] = *remainder.terms_.rbegin();
    const Weight q_exp = top_exp - lead_exp;
    if (q_exp < floor || top_coef % lead_coef != 0) {
      throw ConsistencyError("Laurent division left a nonzero remainder");
    }
    const std::int64_t q_coef = top_coef / lead_coef;
    quotient.add(q_exp, q_coef);
    for (const auto& [e, c] : divisor.terms_) remainder.add(e + q_exp, -c * q_coef);
  }
  return quotient;
}

TorusSeries LaurentPolynomial::to_series() const {
  TorusSeries::Terms t;
  for (const auto& [e, c] : terms_) t.emplace(e, static_cast<double>(c));
  return TorusSeries(rank_, std::move(t));
}

} // namespace weylac
