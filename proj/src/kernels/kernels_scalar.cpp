#include "weylac/kernels.hpp"

#include <cmath>
#include <limits>

namespace weylac::kernels {

namespace {

void accumulate_phasors_scalar(cplx* out, cplx coeff, const double* phase, std::size_t n) {
  const double cr = coeff.real(), ci = coeff.imag();
  for (std::size_t p = 0; p < n; ++p) {
    const double c = std::cos(phase[p]), s = std::sin(phase[p]);
    out[p] += cplx(cr * c - ci * s, cr * s + ci * c);
  }
}

cplx phasor_dot_scalar(const cplx* samples, const double* phase, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    const double c = std::cos(phase[p]), s = std::sin(phase[p]);
    const double xr = samples[p].real(), xi = samples[p].imag();
    re += xr * c + xi * s;
    im += xi * c - xr * s;
  }
  return {re, im};
}

void axpy_scalar(cplx* y, cplx a, const cplx* x, std::size_t n) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t p = 0; p < n; ++p) {
    const double xr = x[p].real(), xi = x[p].imag();
    y[p] += cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

cplx weighted_sum_scalar(const double* w, const cplx* z, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    re += w[p] * z[p].real();
    im += w[p] * z[p].imag();
  }
  return {re, im};
}

void magnitudes_scalar(const cplx* z, double* out, std::size_t n) {
  for (std::size_t p = 0; p < n; ++p) out[p] = std::sqrt(z[p].real() * z[p].real() + z[p].imag() * z[p].imag());
}

double max_value_scalar(const double* x, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < n; ++p) m = x[p] > m ? x[p] : m;
  return m;
}

void sincos_scalar(const double* x, double* s, double* c, std::size_t n) {
  for (std::size_t p = 0; p < n; ++p) {
    s[p] = std::sin(x[p]);
    c[p] = std::cos(x[p]);
  }
}

} // namespace

namespace detail {

const KernelTable scalar_table{
    Isa::scalar,          accumulate_phasors_scalar, phasor_dot_scalar, axpy_scalar, weighted_sum_scalar,
    magnitudes_scalar,    max_value_scalar,          sincos_scalar,
};

} // namespace detail

} // namespace weylac::kernels
