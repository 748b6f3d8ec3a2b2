#pragma once

// SU(2) elements, unitary irreducible representations and Haar quadrature.
//
// Euler parametrization: g(phi, theta, psi) = Rz(phi) Ry(theta) Rz(psi) with
// Rz(a) = diag(e^{ia/2}, e^{-ia/2}) and Ry(b) = [[cos b/2, -sin b/2], [sin b/2, cos b/2]],
// phi in [0, 2pi), theta in [0, pi], psi in [0, 4pi). The normalized Haar measure is
// sin(theta) dphi dtheta dpsi / (16 pi^2). The maximal torus is diag(e^{it}, e^{-it}).

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <random>
#include <vector>

namespace weylac::su2 {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;

class GroupElement {
public:
  /// Throws DomainError unless `m` is unitary with determinant 1 to 1e-12.
  explicit GroupElement(const Matrix2& m);

  static GroupElement identity();
  static GroupElement euler(double phi, double theta, double psi);
  static GroupElement torus(double t);
  /// Haar-distributed element (uniform unit quaternion).
  static GroupElement random(std::mt19937_64& rng);
  /// exp of a random Lie algebra element of norm at most `radius`.
  static GroupElement random_near_identity(std::mt19937_64& rng, double radius);

  const Matrix2& matrix() const noexcept { return m_; }
  GroupElement inverse() const;
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);

private:
  struct Unchecked {};
  GroupElement(const Matrix2& m, Unchecked) : m_(m) {}

  Matrix2 m_;
};

/// The degree-n representation: g acts on homogeneous polynomials of degree n in
/// (z1, z2) by p(z) -> p(g^T z), in the orthonormal basis
/// z1^{n-k} z2^k / sqrt((n-k)! k!), k = 0..n. pi_1(g) = g and
/// pi_n(diag(e^{it}, e^{-it})) = diag(e^{int}, e^{i(n-2)t}, ..., e^{-int}).
Matrix irrep_matrix(int n, const GroupElement& g);

struct HaarGrid {
  int n_phi = 0;
  int n_theta = 0;
  int n_psi = 0;
  std::vector<GroupElement> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }

  /// Exact (to rounding) for integrands of total polynomial degree `degree` in the
  /// entries of g and conj(g): n_phi > degree/2, n_psi > degree with n_psi even,
  /// n_theta > degree/4.
  bool resolves(int degree) const noexcept;

  /// Exact for g -> f(g t g^-1) with f of band limit `band_limit`. The integrand
  /// does not depend on psi, so only n_phi > band_limit, n_theta > band_limit/2
  /// and an even n_psi are required.
  bool resolves_conjugation(int band_limit) const noexcept;
};

/// Product rule: trapezoid in phi and psi, Gauss-Legendre in cos(theta); weights sum to 1.
/// Throws ParameterError unless every count is at least 2.
HaarGrid haar_grid(int n_phi, int n_theta, int n_psi);

/// n_phi = n_psi = 4B + 4, n_theta = 2B + 4.
HaarGrid haar_grid_for_band_limit(int band_limit);

/// n_phi = 2B + 2, n_theta = B + 2, n_psi = 2; sized for conjugation integrals.
HaarGrid conjugation_grid_for_band_limit(int band_limit);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

} // namespace weylac::su2
