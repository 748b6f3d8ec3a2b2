#pragma once

#include "weylac/su2_group.hpp"
#include "weylac/torus_series.hpp"

#include <complex>
#include <functional>
#include <map>
#include <span>
#include <vector>

namespace weylac::su2 {

using GroupFunction = std::function<cplx(const GroupElement&)>;

/// A function on SU(2) given by finitely many operator coefficients A_n, each
/// (n+1) x (n+1), through the inversion formula
///
///     f(x) = sum_n (n+1) Trace(A_n pi_n(x^-1)).
///
/// With this normalization the Fourier transform int f(x) pi_n(x) dx returns A_n.
class BandlimitedFunction {
public:
  using Coefficients = std::map<int, Matrix>;

  BandlimitedFunction() = default;
  /// Throws DomainError for negative n or a wrongly sized matrix.
  explicit BandlimitedFunction(Coefficients coeffs);

  void set(int n, Matrix a);
  const Coefficients& coefficients() const noexcept { return coeffs_; }

  /// Largest n present, or -1 when there are no coefficients.
  int band_limit() const noexcept { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  /// Weights n with a nonzero coefficient matrix.
  std::vector<int> support() const;
  bool is_zero() const { return support().empty(); }

  cplx operator()(const GroupElement& x) const;

  /// (int |f|^2 dx)^{1/2} = (sum_n (n+1) ||A_n||_F^2)^{1/2}.
  double l2_norm() const;

  GroupFunction as_function() const {
    return [self = *this](const GroupElement& x) { return self(x); };
  }

  /// Coefficients with independent complex Gaussian entries (unit variance per
  /// real component) on each weight in `support`.
  static BandlimitedFunction random(std::span<const int> support, std::mt19937_64& rng);

private:
  Coefficients coeffs_;
};

BandlimitedFunction synthesize_bandlimited(BandlimitedFunction::Coefficients coeffs);

/// int f(x) pi_n(x) dx by quadrature. `band_limit` bounds the representations in f;
/// throws ParameterError unless the grid resolves degree band_limit + n.
Matrix fourier_transform(const GroupFunction& f, int band_limit, int n, const HaarGrid& grid);
Matrix fourier_transform(const BandlimitedFunction& f, int n, const HaarGrid& grid);

/// Transforms for every n in [0, max_n] in one pass over the grid.
std::map<int, Matrix> fourier_transform_all(const GroupFunction& f, int band_limit, int max_n, const HaarGrid& grid);

/// F_f(t) = int f(g t g^-1) dg at t = diag(e^{i theta}, e^{-i theta}), by direct
/// quadrature. Throws ParameterError unless grid.resolves_conjugation(band_limit).
cplx central_average(const GroupFunction& f, int band_limit, double theta, const HaarGrid& grid);
std::vector<cplx> central_average(const GroupFunction& f, int band_limit, std::span<const double> thetas,
                                  const HaarGrid& grid);

/// Trace(pi_n(f)) for n = 0..band_limit, from quadrature transforms.
std::map<int, cplx> character_traces(const BandlimitedFunction& f, const HaarGrid& grid);

/// sum_n Trace(pi_n(f)) Theta_n as a torus series (doubled exponents of SU(2)).
TorusSeries char_expansion(const BandlimitedFunction& f, const HaarGrid& grid);

/// Trace(pi_n(g)^-1 pi_n(f)).
cplx translated_trace(const BandlimitedFunction& f, int n, const GroupElement& g, const HaarGrid& grid);

/// pi_n of the left translate x -> f(g x), by direct quadrature of the translate.
Matrix translated_fourier_transform(const BandlimitedFunction& f, int n, const GroupElement& g, const HaarGrid& grid);

/// Rank of A -> (Trace(pi_n(g_i)^-1 A))_i over the sampled elements. Full rank
/// (n+1)^2 means the traces vanish on the samples only for A = 0.
int translated_trace_rank(int n, std::span<const GroupElement> samples, double tolerance = 1e-10);

/// Least-squares reconstruction of A from sampled translated traces.
Matrix recover_from_translated_traces(int n, std::span<const GroupElement> samples, std::span<const cplx> traces);

} // namespace weylac::su2
