#pragma once

// Data-parallel inner loops used by torus synthesis, grid analysis and Haar
// quadrature. Each kernel has a scalar reference implementation and, on x86-64,
// an AVX2+FMA variant. The variant is chosen at runtime from CPUID and can be
// overridden (tests run both and compare).

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace weylac::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);
Isa parse_isa(std::string_view name);  // "scalar", "avx2"; throws ParameterError

struct KernelTable {
  Isa isa;

  // out[p] += coeff * exp(i * phase[p])
  void (*accumulate_phasors)(cplx* out, cplx coeff, const double* phase, std::size_t n);
  // sum_p samples[p] * exp(-i * phase[p])
  cplx (*phasor_dot)(const cplx* samples, const double* phase, std::size_t n);
  // y[p] += a * x[p]
  void (*axpy)(cplx* y, cplx a, const cplx* x, std::size_t n);
  // sum_p w[p] * z[p]
  cplx (*weighted_sum)(const double* w, const cplx* z, std::size_t n);
  // out[p] = |z[p]|
  void (*magnitudes)(const cplx* z, double* out, std::size_t n);
  // max_p x[p]; -inf for n == 0
  double (*max_value)(const double* x, std::size_t n);
  // s[p] = sin(x[p]), c[p] = cos(x[p])
  void (*sincos)(const double* x, double* s, double* c, std::size_t n);
};

bool supported(Isa isa) noexcept;
Isa best_available() noexcept;

/// Table for a specific ISA; throws ParameterError if the CPU lacks it.
const KernelTable& table(Isa isa);

/// Currently selected table (best_available() until select() is called).
const KernelTable& active() noexcept;
void select(Isa isa);

// Span wrappers over the active table.

inline void accumulate_phasors(std::span<cplx> out, cplx coeff, std::span<const double> phase) {
  active().accumulate_phasors(out.data(), coeff, phase.data(), out.size());
}
inline cplx phasor_dot(std::span<const cplx> samples, std::span<const double> phase) {
  return active().phasor_dot(samples.data(), phase.data(), samples.size());
}
inline void axpy(std::span<cplx> y, cplx a, std::span<const cplx> x) { active().axpy(y.data(), a, x.data(), y.size()); }
inline cplx weighted_sum(std::span<const double> w, std::span<const cplx> z) {
  return active().weighted_sum(w.data(), z.data(), z.size());
}
inline void magnitudes(std::span<const cplx> z, std::span<double> out) {
  active().magnitudes(z.data(), out.data(), z.size());
}
inline double max_value(std::span<const double> x) { return active().max_value(x.data(), x.size()); }

namespace detail {
extern const KernelTable scalar_table;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable avx2_table;
#endif
} // namespace detail

} // namespace weylac::kernels
