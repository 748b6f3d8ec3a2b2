#pragma once

// Weyl character formula for the cataloged groups.
//
// The irreducible representation with highest weight lam has character
//
//     Theta_lam = (sum_w sign(w) e^{w(lam + rho)}) / (sum_w sign(w) e^{w rho}),
//
// i.e. the torus character in the numerator is taken at lam + rho, so lam = 0
// gives the trivial character. Both alternants are Laurent polynomials with
// integer coefficients and the quotient is computed by exact division, never as
// a ratio of floating-point evaluations, so singular torus points need no care.

#include "weylac/root_system.hpp"
#include "weylac/torus_series.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace weylac {

/// sum_w sign(w) e^{w(lam + rho)}. Throws DomainError unless lam is dominant integral.
LaurentPolynomial weyl_numerator_exact(const RootSystem& rs, const Weight& lam);
TorusSeries weyl_numerator(const RootSystem& rs, const Weight& lam);

/// Alternating sum over the Weyl orbit of rho.
LaurentPolynomial weyl_denominator_exact(const RootSystem& rs);
TorusSeries weyl_denominator(const RootSystem& rs);

/// prod_{alpha > 0} (e^{alpha/2} - e^{-alpha/2}), expanded independently of the Weyl group.
LaurentPolynomial weyl_denominator_product(const RootSystem& rs);

LaurentPolynomial character_polynomial(const RootSystem& rs, const Weight& lam);
TorusSeries character_series(const RootSystem& rs, const Weight& lam);

/// prod_{alpha > 0} <lam + rho, alpha> / <rho, alpha>, exact.
std::int64_t weyl_dimension(const RootSystem& rs, const Weight& lam);

/// Character at the torus point with natural angles `angles`. At the identity the
/// series sum is checked against weyl_dimension and the exact integer is returned.
std::complex<double> character_eval(const RootSystem& rs, const Weight& lam, std::span<const double> angles);

/// Gram matrix (1/|W|) * mean_grid(|Delta|^2 Theta_a conj(Theta_b)) over a regular
/// torus grid, which equals the identity for distinct dominant weights. The grid
/// size is chosen to integrate the products exactly unless `points_per_axis` is
/// given, in which case it must be large enough (ParameterError otherwise).
Eigen::MatrixXcd weyl_integration_gram(const RootSystem& rs, std::span<const Weight> weights,
                                       std::optional<std::size_t> points_per_axis = std::nullopt);

} // namespace weylac
