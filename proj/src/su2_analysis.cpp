#include "weylac/su2_analysis.hpp"

#include "weylac/character.hpp"
#include "weylac/error.hpp"
#include "weylac/kernels.hpp"

#include <cmath>

namespace weylac::su2 {

namespace {

std::span<cplx> as_span(Matrix& m) { return {m.data(), static_cast<std::size_t>(m.size())}; }
std::span<const cplx> as_span(const Matrix& m) { return {m.data(), static_cast<std::size_t>(m.size())}; }

void require_resolves(const HaarGrid& grid, int degree) {
  if (!grid.resolves(degree)) {
    throw ParameterError("Haar grid (" + std::to_string(grid.n_phi) + "," + std::to_string(grid.n_theta) + "," +
                         std::to_string(grid.n_psi) + ") is too coarse for integrand degree " + std::to_string(degree));
  }
}

} // namespace

BandlimitedFunction::BandlimitedFunction(Coefficients coeffs) {
  for (auto& [n, a] : coeffs) set(n, std::move(a));
}

void BandlimitedFunction::set(int n, Matrix a) {
  if (n < 0) throw DomainError("highest weight must be nonnegative");
  if (a.rows() != n + 1 || a.cols() != n + 1) {
    throw DomainError("coefficient for n = " + std::to_string(n) + " must be " + std::to_string(n + 1) + "x" +
                      std::to_string(n + 1));
  }
  coeffs_[n] = std::move(a);
}

std::vector<int> BandlimitedFunction::support() const {
  std::vector<int> out;
  for (const auto& [n, a] : coeffs_)
    if (a.cwiseAbs().maxCoeff() > 0.0) out.push_back(n);
  return out;
}

cplx BandlimitedFunction::operator()(const GroupElement& x) const {
  cplx sum = 0.0;
  for (const auto& [n, a] : coeffs_) {
    // Trace(A pi(x^-1)) = sum_ab A_ab conj(pi(x)_ab) since pi is unitary.
    const Matrix p = irrep_matrix(n, x);
    sum += static_cast<double>(n + 1) * (p.conjugate().cwiseProduct(a)).sum();
  }
  return sum;
}

double BandlimitedFunction::l2_norm() const {
  double s = 0.0;
  for (const auto& [n, a] : coeffs_) s += (n + 1) * a.squaredNorm();
  return std::sqrt(s);
}

BandlimitedFunction BandlimitedFunction::random(std::span<const int> support, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  BandlimitedFunction f;
  for (int n : support) {
    Matrix a(n + 1, n + 1);
    for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = cplx(normal(rng), normal(rng));
    f.set(n, std::move(a));
  }
  return f;
}

BandlimitedFunction synthesize_bandlimited(BandlimitedFunction::Coefficients coeffs) {
  return BandlimitedFunction(std::move(coeffs));
}

// ---------------------------------------------------------------------------

std::map<int, Matrix> fourier_transform_all(const GroupFunction& f, int band_limit, int max_n, const HaarGrid& grid) {
  if (max_n < 0) throw ParameterError("max_n must be nonnegative");
  require_resolves(grid, std::max(band_limit, 0) + max_n);
  std::map<int, Matrix> out;
  for (int n = 0; n <= max_n; ++n) out[n] = Matrix::Zero(n + 1, n + 1);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const cplx v = grid.weights[i] * f(grid.nodes[i]);
    if (v == 0.0) continue;
    for (int n = 0; n <= max_n; ++n) {
      kernels::axpy(as_span(out[n]), v, as_span(irrep_matrix(n, grid.nodes[i])));
    }
  }
  return out;
}

Matrix fourier_transform(const GroupFunction& f, int band_limit, int n, const HaarGrid& grid) {
  if (n < 0) throw DomainError("highest weight must be nonnegative");
  require_resolves(grid, std::max(band_limit, 0) + n);
  Matrix out = Matrix::Zero(n + 1, n + 1);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const cplx v = grid.weights[i] * f(grid.nodes[i]);
    kernels::axpy(as_span(out), v, as_span(irrep_matrix(n, grid.nodes[i])));
  }
  return out;
}

Matrix fourier_transform(const BandlimitedFunction& f, int n, const HaarGrid& grid) {
  return fourier_transform(f.as_function(), f.band_limit(), n, grid);
}

std::vector<cplx> central_average(const GroupFunction& f, int band_limit, std::span<const double> thetas,
                                  const HaarGrid& grid) {
  if (!grid.resolves_conjugation(std::max(band_limit, 0))) {
    throw ParameterError("Haar grid is too coarse for conjugation integrals at band limit " +
                         std::to_string(band_limit));
  }
  std::vector<cplx> out;
  out.reserve(thetas.size());
  std::vector<cplx> vals(grid.size());
  for (double theta : thetas) {
    const GroupElement t = GroupElement::torus(theta);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const GroupElement& g = grid.nodes[i];
      vals[i] = f(g * t * g.inverse());
    }
    out.push_back(kernels::weighted_sum(grid.weights, vals));
  }
  return out;
}

cplx central_average(const GroupFunction& f, int band_limit, double theta, const HaarGrid& grid) {
  return central_average(f, band_limit, std::span<const double>(&theta, 1), grid).front();
}

std::map<int, cplx> character_traces(const BandlimitedFunction& f, const HaarGrid& grid) {
  std::map<int, cplx> out;
  if (f.band_limit() < 0) return out;
  for (const auto& [n, m] : fourier_transform_all(f.as_function(), f.band_limit(), f.band_limit(), grid)) {
    out[n] = m.trace();
  }
  return out;
}

TorusSeries char_expansion(const BandlimitedFunction& f, const HaarGrid& grid) {
  const RootSystem rs = build_root_system(GroupId::su2);
  TorusSeries::Terms terms;
  for (const auto& [n, tr] : character_traces(f, grid)) {
    for (const auto& [e, c] : character_series(rs, Weight::from_natural({n}))) terms[e] += tr * c;
  }
  return TorusSeries(1, std::move(terms));
}

cplx translated_trace(const BandlimitedFunction& f, int n, const GroupElement& g, const HaarGrid& grid) {
  return (irrep_matrix(n, g).adjoint() * fourier_transform(f, n, grid)).trace();
}

Matrix translated_fourier_transform(const BandlimitedFunction& f, int n, const GroupElement& g, const HaarGrid& grid) {
  const GroupFunction translate = [&f, &g](const GroupElement& x) { return f(g * x); };
  return fourier_transform(translate, f.band_limit(), n, grid);
}

namespace {

// Row i holds the coefficients of Trace(pi(g_i)^-1 A) = sum_ab conj(pi(g_i)_ab) A_ab
// against vec(A) in column-major order.
Matrix trace_design(int n, std::span<const GroupElement> samples) {
  const int d = n + 1;
  Matrix design(static_cast<Eigen::Index>(samples.size()), d * d);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Matrix p = irrep_matrix(n, samples[i]).conjugate();
    for (Eigen::Index k = 0; k < p.size(); ++k) design(static_cast<Eigen::Index>(i), k) = p.data()[k];
  }
  return design;
}

} // namespace

int translated_trace_rank(int n, std::span<const GroupElement> samples, double tolerance) {
  Eigen::FullPivLU<Matrix> lu(trace_design(n, samples));
  lu.setThreshold(tolerance);
  return static_cast<int>(lu.rank());
}

Matrix recover_from_translated_traces(int n, std::span<const GroupElement> samples, std::span<const cplx> traces) {
  if (traces.size() != samples.size()) throw ParameterError("one trace per sample is required");
  Eigen::VectorXcd rhs(static_cast<Eigen::Index>(traces.size()));
  for (std::size_t i = 0; i < traces.size(); ++i) rhs(static_cast<Eigen::Index>(i)) = traces[i];
  const Eigen::VectorXcd v = trace_design(n, samples).colPivHouseholderQr().solve(rhs);
  return Eigen::Map<const Matrix>(v.data(), n + 1, n + 1);
}

} // namespace weylac::su2
