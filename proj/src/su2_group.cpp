#include "weylac/su2_group.hpp"

#include "weylac/error.hpp"

#include <cmath>
#include <numbers>

namespace weylac::su2 {

namespace {
constexpr double kPi = std::numbers::pi;
}

GroupElement::GroupElement(const Matrix2& m) : m_(m) {
  const double unitary_err = (m.adjoint() * m - Matrix2::Identity()).cwiseAbs().maxCoeff();
  const double det_err = std::abs(m.determinant() - 1.0);
  if (unitary_err > 1e-12 || det_err > 1e-12) {
    throw DomainError("matrix is not in SU(2) (unitarity error " + std::to_string(unitary_err) +
                      ", determinant error " + std::to_string(det_err) + ")");
  }
}

GroupElement GroupElement::identity() { return GroupElement(Matrix2::Identity(), Unchecked{}); }

GroupElement GroupElement::euler(double phi, double theta, double psi) {
  const cplx a = std::polar(1.0, 0.5 * (phi + psi));
  const cplx b = std::polar(1.0, 0.5 * (phi - psi));
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  Matrix2 m;
  m << a * c, -b * s, std::conj(b) * s, std::conj(a) * c;
  return GroupElement(m, Unchecked{});
}

GroupElement GroupElement::torus(double t) {
  Matrix2 m = Matrix2::Zero();
  m(0, 0) = std::polar(1.0, t);
  m(1, 1) = std::polar(1.0, -t);
  return GroupElement(m, Unchecked{});
}

GroupElement GroupElement::random(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  double q[4], n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& x : q) {
      x = normal(rng);
      n2 += x * x;
    }
  } while (n2 < 1e-12);
  const double inv = 1.0 / std::sqrt(n2);
  const cplx a(q[0] * inv, q[1] * inv), b(q[2] * inv, q[3] * inv);
  Matrix2 m;
  m << a, -std::conj(b), b, std::conj(a);
  return GroupElement(m, Unchecked{});
}

GroupElement GroupElement::random_near_identity(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double v[3], n = 0.0;
  do {
    n = 0.0;
    for (double& x : v) {
      x = u(rng);
      n += x * x;
    }
  } while (n > 1.0);
  // exp(i (v . sigma) r / 2) = cos(|w|) + i sin(|w|) (w . sigma) / |w|, w = v r / 2
  const double scale = 0.5 * radius;
  const double w[3] = {v[0] * scale, v[1] * scale, v[2] * scale};
  const double norm = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
  const double c = std::cos(norm), s = norm > 0 ? std::sin(norm) / norm : 1.0;
  Matrix2 m;
  m << cplx(c, s * w[2]), cplx(s * w[1], s * w[0]), cplx(-s * w[1], s * w[0]), cplx(c, -s * w[2]);
  return GroupElement(m, Unchecked{});
}

GroupElement GroupElement::inverse() const { return GroupElement(m_.adjoint(), Unchecked{}); }

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  return GroupElement(a.m_ * b.m_, GroupElement::Unchecked{});
}

// ---------------------------------------------------------------------------

Matrix irrep_matrix(int n, const GroupElement& g) {
  if (n < 0) throw DomainError("highest weight must be nonnegative");
  const Matrix2& m = g.matrix();
  const cplx g11 = m(0, 0), g12 = m(0, 1), g21 = m(1, 0), g22 = m(1, 1);

  // Powers 0..n of each entry, and binomials / factorials up to n.
  std::vector<cplx> p11(n + 1), p12(n + 1), p21(n + 1), p22(n + 1);
  p11[0] = p12[0] = p21[0] = p22[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    p11[k] = p11[k - 1] * g11;
    p12[k] = p12[k - 1] * g12;
    p21[k] = p21[k - 1] * g21;
    p22[k] = p22[k - 1] * g22;
  }
  std::vector<double> fact(n + 1, 1.0);
  for (int k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k;
  auto binom = [&](int a, int b) { return fact[a] / (fact[b] * fact[a - b]); };

  // Column k is the image of z1^{n-k} z2^k = (g11 z1 + g21 z2)^{n-k} (g12 z1 + g22 z2)^k;
  // row j collects the z1^{n-j} z2^j coefficient, taking a powers of z2 from the first factor.
  Matrix out(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) {
    for (int j = 0; j <= n; ++j) {
      cplx sum = 0.0;
      const int a_lo = std::max(0, j - k), a_hi = std::min(j, n - k);
      for (int a = a_lo; a <= a_hi; ++a) {
        const int b = j - a;
        sum += binom(n - k, a) * binom(k, b) * p11[n - k - a] * p21[a] * p12[k - b] * p22[b];
      }
      out(j, k) = sum * std::sqrt(fact[n - j] * fact[j] / (fact[n - k] * fact[k]));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
void legendre(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = n == 0 ? 1.0 : p1;
  dp = n == 0 ? 0.0 : n * (x * p1 - p0) / (x * x - 1.0);
}

} // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw ParameterError("Gauss-Legendre needs at least one node");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double p = 0.0, dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      legendre(n, x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    legendre(n, x, p, dp);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = w;
  }
}

bool HaarGrid::resolves(int degree) const noexcept {
  return 2 * n_phi > degree && n_psi > degree && n_psi % 2 == 0 && 4 * n_theta > degree;
}

bool HaarGrid::resolves_conjugation(int band_limit) const noexcept {
  return n_phi > band_limit && 2 * n_theta > band_limit && n_psi % 2 == 0;
}

HaarGrid haar_grid(int n_phi, int n_theta, int n_psi) {
  if (n_phi < 2 || n_theta < 2 || n_psi < 2) throw ParameterError("Haar grid counts must all be at least 2");
  HaarGrid grid;
  grid.n_phi = n_phi;
  grid.n_theta = n_theta;
  grid.n_psi = n_psi;

  std::vector<double> u, wu;
  gauss_legendre(n_theta, u, wu);
  grid.nodes.reserve(static_cast<std::size_t>(n_phi) * n_theta * n_psi);
  grid.weights.reserve(grid.nodes.capacity());
  double total = 0.0;
  for (int i = 0; i < n_phi; ++i) {
    const double phi = 2.0 * kPi * i / n_phi;
    for (int t = 0; t < n_theta; ++t) {
      const double theta = std::acos(u[t]);
      for (int k = 0; k < n_psi; ++k) {
        const double psi = 4.0 * kPi * k / n_psi;
        grid.nodes.push_back(GroupElement::euler(phi, theta, psi));
        // sin(theta) dtheta = du; the u-weights sum to 2.
        const double w = wu[t] / (2.0 * n_phi * n_psi);
        grid.weights.push_back(w);
        total += w;
      }
    }
  }
  for (auto& w : grid.weights) w /= total;
  return grid;
}

HaarGrid haar_grid_for_band_limit(int band_limit) {
  if (band_limit < 0) throw ParameterError("band limit must be nonnegative");
  return haar_grid(4 * band_limit + 4, 2 * band_limit + 4, 4 * band_limit + 4);
}

HaarGrid conjugation_grid_for_band_limit(int band_limit) {
  if (band_limit < 0) throw ParameterError("band limit must be nonnegative");
  return haar_grid(2 * band_limit + 2, band_limit + 2, 2);
}

} // namespace weylac::su2
