#include "weylac/character.hpp"

#include "weylac/error.hpp"
#include "weylac/kernels.hpp"
#include "weylac/torus_fourier.hpp"

#include <algorithm>
#include <cmath>

namespace weylac {

namespace {

void require_dominant(const RootSystem& rs, const Weight& lam) {
  const auto adm = is_dominant_integral(rs, lam);
  if (!adm) throw DomainError("weight " + lam.str() + " is not dominant integral: " + adm.reason);
}

LaurentPolynomial alternant(const RootSystem& rs, const Weight& mu) {
  LaurentPolynomial p(rs.rank);
  for (const auto& w : rs.weyl) p.add(w.apply(mu), w.sign());
  return p;
}

} // namespace

LaurentPolynomial weyl_numerator_exact(const RootSystem& rs, const Weight& lam) {
  require_dominant(rs, lam);
  return alternant(rs, lam + rs.rho);
}

TorusSeries weyl_numerator(const RootSystem& rs, const Weight& lam) { return weyl_numerator_exact(rs, lam).to_series(); }

LaurentPolynomial weyl_denominator_exact(const RootSystem& rs) { return alternant(rs, rs.rho); }

TorusSeries weyl_denominator(const RootSystem& rs) { return weyl_denominator_exact(rs).to_series(); }

LaurentPolynomial weyl_denominator_product(const RootSystem& rs) {
  LaurentPolynomial acc = LaurentPolynomial::monomial(Weight::zero(rs.rank));
  for (const auto& alpha : rs.positive_roots) {
    std::vector<std::int64_t> half(alpha.doubled().begin(), alpha.doubled().end());
    for (auto& x : half) x /= 2;  // doubled(alpha/2) == doubled(alpha)/2
    const Weight h(std::move(half));
    LaurentPolynomial factor = LaurentPolynomial::monomial(h);
    factor.add(-h, -1);
    acc = acc * factor;
  }
  return acc;
}

LaurentPolynomial character_polynomial(const RootSystem& rs, const Weight& lam) {
  return weyl_numerator_exact(rs, lam).divide_exact(weyl_denominator_exact(rs));
}

TorusSeries character_series(const RootSystem& rs, const Weight& lam) {
  return character_polynomial(rs, lam).to_series();
}

std::int64_t weyl_dimension(const RootSystem& rs, const Weight& lam) {
  require_dominant(rs, lam);
  const Weight shifted = lam + rs.rho;
  Rational d(1);
  for (const auto& alpha : rs.positive_roots) d = d * Rational(dot(shifted, alpha), dot(rs.rho, alpha));
  if (!d.is_integer()) throw ConsistencyError("Weyl dimension is not an integer for " + lam.str());
  return d.num();
}

std::complex<double> character_eval(const RootSystem& rs, const Weight& lam, std::span<const double> angles) {
  if (angles.size() != rs.rank) throw DomainError("torus point has the wrong number of angles");
  const auto series = character_series(rs, lam);
  const auto value = evaluate(series, angles);
  const bool identity = std::all_of(angles.begin(), angles.end(), [](double a) { return a == 0.0; });
  if (!identity) return value;

  const auto dim = weyl_dimension(rs, lam);
  std::int64_t multiplicity = 0;
  const auto chi = character_polynomial(rs, lam);
  for (const auto& [e, c] : chi.terms()) multiplicity += c;
  if (multiplicity != dim || std::abs(value - static_cast<double>(dim)) > 1e-9 * static_cast<double>(dim)) {
    throw ConsistencyError("character at the identity disagrees with the Weyl dimension for " + lam.str());
  }
  return static_cast<double>(dim);
}

Eigen::MatrixXcd weyl_integration_gram(const RootSystem& rs, std::span<const Weight> weights,
                                       std::optional<std::size_t> points_per_axis) {
  std::vector<TorusSeries> chars;
  std::int64_t max_char = 0;
  for (const auto& w : weights) {
    chars.push_back(character_series(rs, w));
    max_char = std::max(max_char, chars.back().max_abs_exponent());
  }
  const auto delta = weyl_denominator(rs);
  // |Delta|^2 Theta_a conj(Theta_b) has doubled exponents bounded by this; the
  // grid mean of exp(i d theta / 2) vanishes exactly when P does not divide d.
  const std::int64_t bound = 2 * max_char + 2 * delta.max_abs_exponent();
  const std::size_t needed = static_cast<std::size_t>(bound) + 1;
  const std::size_t p = points_per_axis.value_or(needed);
  if (p < needed) {
    throw ParameterError("orthogonality grid needs at least " + std::to_string(needed) + " points per axis");
  }

  const GridSpec grid = GridSpec::uniform(rs.rank, p);
  const auto delta_vals = synthesize_grid(delta, grid);
  std::vector<double> weight(grid.total());
  for (std::size_t i = 0; i < weight.size(); ++i) {
    weight[i] = std::norm(delta_vals[i]) / (static_cast<double>(grid.total()) * static_cast<double>(rs.weyl.size()));
  }
  std::vector<std::vector<std::complex<double>>> vals;
  for (const auto& c : chars) vals.push_back(synthesize_grid(c, grid));

  const auto n = static_cast<Eigen::Index>(weights.size());
  Eigen::MatrixXcd gram(n, n);
  std::vector<std::complex<double>> prod(grid.total());
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = vals[a][i] * std::conj(vals[b][i]);
      gram(a, b) = kernels::weighted_sum(weight, prod);
    }
  }
  return gram;
}

} // namespace weylac
