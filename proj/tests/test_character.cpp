#include "doctest.h"

#include "weylac/character.hpp"
#include "weylac/error.hpp"
#include "weylac/torus_fourier.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace weylac;
using cplx = std::complex<double>;

namespace {

Weight nat(std::initializer_list<std::int64_t> c) { return Weight::from_natural(c); }

// Schur polynomial by the bialternant det(x_i^(lam_j + n - j)) / det(x_i^(n - j)),
// evaluated numerically at x_k = exp(i theta_k).
cplx schur_bialternant(std::span<const std::int64_t> lam, std::span<const double> theta) {
  const auto n = static_cast<Eigen::Index>(lam.size());
  Eigen::MatrixXcd num(n, n), den(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double p = static_cast<double>(lam[j] + n - 1 - j);
      num(i, j) = std::polar(1.0, p * theta[i]);
      den(i, j) = std::polar(1.0, static_cast<double>(n - 1 - j) * theta[i]);
    }
  }
  return num.determinant() / den.determinant();
}

// Number of semistandard tableaux of shape lam (nonnegative parts) with entries <= n,
// via the hook-content formula.
std::int64_t hook_content(std::vector<std::int64_t> lam) {
  const auto n = static_cast<std::int64_t>(lam.size());
  double prod = 1.0;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < lam[i]; ++j) {
      std::int64_t arm = lam[i] - j - 1;
      std::int64_t leg = 0;
      for (std::int64_t k = i + 1; k < n; ++k)
        if (lam[k] > j) ++leg;
      prod *= static_cast<double>(n + j - i) / static_cast<double>(arm + leg + 1);
    }
  }
  return std::llround(prod);
}

TorusSeries apply_weyl(const WeylElement& w, const TorusSeries& s) {
  TorusSeries::Terms t;
  for (const auto& [e, c] : s) t[w.apply(e)] += c;
  return TorusSeries(s.rank(), t);
}

bool series_equal(const TorusSeries& a, const TorusSeries& b, double tol = 1e-12) {
  const auto d = a - b;
  for (const auto& [e, c] : d)
    if (std::abs(c) > tol) return false;
  return true;
}

} // namespace

TEST_CASE("weyl numerator examples") {
  const auto su2 = build_root_system(GroupId::su2);
  for (std::int64_t n : {0, 1, 5}) {
    const auto num = weyl_numerator_exact(su2, nat({n}));
    CHECK(num.size() == 2);
    CHECK(num.coefficient(nat({n + 1})) == 1);
    CHECK(num.coefficient(nat({-n - 1})) == -1);
  }
  CHECK(weyl_numerator_exact(su2, nat({0})) == weyl_denominator_exact(su2));

  const auto u2 = build_root_system(GroupId::u2);
  const auto num = weyl_numerator_exact(u2, nat({1, 0}));
  CHECK(num.size() == 2);
  CHECK(num.coefficient(Weight({3, -1})) == 1);
  CHECK(num.coefficient(Weight({-1, 3})) == -1);
  CHECK_THROWS_AS(weyl_numerator_exact(u2, nat({0, 1})), DomainError);
}

TEST_CASE("weyl denominator examples") {
  const auto su2 = build_root_system(GroupId::su2);
  const auto d = weyl_denominator_exact(su2);
  CHECK(d.size() == 2);
  CHECK(d.coefficient(nat({1})) == 1);
  CHECK(d.coefficient(nat({-1})) == -1);

  const auto u2 = build_root_system(GroupId::u2);
  const auto d2 = weyl_denominator_exact(u2);
  CHECK(d2.coefficient(Weight({1, -1})) == 1);
  CHECK(d2.coefficient(Weight({-1, 1})) == -1);

  const auto d3 = weyl_denominator_exact(build_root_system(GroupId::u3));
  CHECK(d3.size() == 6);
  for (const auto& [e, c] : d3.terms()) CHECK(std::abs(c) == 1);
}

TEST_CASE("alternating and product denominators agree") {
  for (auto id : {GroupId::su2, GroupId::u2, GroupId::u3, GroupId::u4}) {
    const auto rs = build_root_system(id);
    CHECK(weyl_denominator_exact(rs) == weyl_denominator_product(rs));
    CHECK(series_equal(weyl_denominator(rs), weyl_denominator_product(rs).to_series()));
  }
}

TEST_CASE("character series examples") {
  const auto su2 = build_root_system(GroupId::su2);
  const auto chi2 = character_polynomial(su2, nat({2}));
  CHECK(chi2.size() == 3);
  for (std::int64_t e : {-2, 0, 2}) CHECK(chi2.coefficient(nat({e})) == 1);

  for (auto id : {GroupId::su2, GroupId::u2, GroupId::u3, GroupId::u4}) {
    const auto rs = build_root_system(id);
    const auto triv = character_polynomial(rs, Weight::zero(rs.rank));
    CHECK(triv == LaurentPolynomial::monomial(Weight::zero(rs.rank)));
  }

  const auto u2 = build_root_system(GroupId::u2);
  const auto s20 = character_polynomial(u2, nat({2, 0}));
  CHECK(s20.size() == 3);
  for (const auto& w : {nat({2, 0}), nat({1, 1}), nat({0, 2})}) CHECK(s20.coefficient(w) == 1);
}

TEST_CASE("character evaluation") {
  const auto su2 = build_root_system(GroupId::su2);
  for (std::int64_t n = 0; n <= 10; ++n) {
    const double zero[1] = {0.0};
    CHECK(character_eval(su2, nat({n}), zero) == cplx(static_cast<double>(n + 1)));
  }
  const double third[1] = {std::numbers::pi / 3};
  CHECK(std::abs(character_eval(su2, nat({1}), third) - 1.0) < 1e-14);
  const auto u3 = build_root_system(GroupId::u3);
  const double id3[3] = {0, 0, 0};
  CHECK(character_eval(u3, nat({1, 0, 0}), id3) == cplx(3.0));
  const double wrong[2] = {0, 0};
  CHECK_THROWS_AS(character_eval(u3, nat({1, 0, 0}), wrong), DomainError);
}

TEST_CASE("U(n) characters match the bialternant") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (auto id : {GroupId::u2, GroupId::u3, GroupId::u4}) {
    const auto rs = build_root_system(id);
    for (const auto& lam : dominant_weights(rs, 15)) {
      auto coords = lam.natural();
      // shift to a partition; the bialternant needs nonnegative parts
      const auto low = coords.back();
      std::vector<std::int64_t> part(coords.size());
      for (std::size_t i = 0; i < coords.size(); ++i) part[i] = coords[i] - low;
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> theta(rs.rank);
        for (auto& t : theta) t = angle(rng);
        double total = 0.0;
        for (double t : theta) total += t;
        const cplx expected = schur_bialternant(part, theta) * std::polar(1.0, static_cast<double>(low) * total);
        CHECK(std::abs(character_eval(rs, lam, theta) - expected) < 1e-9);
      }
      const double zero[4] = {0, 0, 0, 0};
      CHECK(weyl_dimension(rs, lam) == hook_content(part));
      CHECK(character_eval(rs, lam, std::span<const double>(zero, rs.rank)).real() ==
            static_cast<double>(hook_content(part)));
    }
  }
}

TEST_CASE("numerator is anti-invariant and character invariant under W") {
  for (auto id : {GroupId::su2, GroupId::u2, GroupId::u3, GroupId::u4}) {
    const auto rs = build_root_system(id);
    for (const auto& lam : dominant_weights(rs, 6)) {
      const auto num = weyl_numerator(rs, lam);
      const auto chi = character_series(rs, lam);
      for (const auto& w : rs.weyl) {
        CHECK(series_equal(apply_weyl(w, num), num.scaled(static_cast<double>(w.sign()))));
        CHECK(series_equal(apply_weyl(w, chi), chi));
      }
    }
  }
}

TEST_CASE("dimension is the multiplicity count and positive") {
  for (auto id : {GroupId::su2, GroupId::u2, GroupId::u3, GroupId::u4}) {
    const auto rs = build_root_system(id);
    for (const auto& lam : dominant_weights(rs, 10)) {
      const auto chi = character_polynomial(rs, lam);
      std::int64_t count = 0;
      for (const auto& [e, c] : chi.terms()) {
        CHECK(c > 0);
        CHECK(e.is_character());
        count += c;
      }
      CHECK(weyl_dimension(rs, lam) == count);
      CHECK(count > 0);
      // Delta * chi reproduces the numerator exactly
      CHECK(weyl_denominator_exact(rs) * chi == weyl_numerator_exact(rs, lam));
    }
  }
}

TEST_CASE("Weyl integration gram is the identity") {
  for (auto id : {GroupId::su2, GroupId::u2}) {
    const auto rs = build_root_system(id);
    const auto ws = dominant_weights(rs, 5);
    const auto gram = weyl_integration_gram(rs, ws);
    CHECK((gram - Eigen::MatrixXcd::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-9);
  }
  const auto su2 = build_root_system(GroupId::su2);
  const std::vector<Weight> ws{nat({3})};
  CHECK_THROWS_AS(weyl_integration_gram(su2, ws, 4), ParameterError);
}

TEST_CASE("exact division detects a remainder") {
  const auto su2 = build_root_system(GroupId::su2);
  auto p = weyl_numerator_exact(su2, nat({2}));
  p.add(nat({0}), 1);
  CHECK_THROWS_AS(p.divide_exact(weyl_denominator_exact(su2)), ConsistencyError);
}
