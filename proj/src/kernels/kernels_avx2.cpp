#include "weylac/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <limits>

// Functions are compiled for AVX2+FMA through target attributes so that the rest
// of the library keeps the baseline ISA. They are only reached after a CPUID check.
#define WEYLAC_AVX2 __attribute__((target("avx2,fma")))

namespace weylac::kernels {

namespace {

// Minimax coefficients for sin and cos on [-pi/4, pi/4] (Cephes).
constexpr double kSin0 = 1.58962301576546568060E-10;
constexpr double kSin1 = -2.50507477628578072866E-8;
constexpr double kSin2 = 2.75573136213857245213E-6;
constexpr double kSin3 = -1.98412698295895385996E-4;
constexpr double kSin4 = 8.33333333332211858878E-3;
constexpr double kSin5 = -1.66666666666666307295E-1;

constexpr double kCos0 = -1.13585365213876817300E-11;
constexpr double kCos1 = 2.08757008419747316778E-9;
constexpr double kCos2 = -2.75573141792967388112E-7;
constexpr double kCos3 = 2.48015872888517045348E-5;
constexpr double kCos4 = -1.38888888888730564116E-3;
constexpr double kCos5 = 4.16666666666665929218E-2;

// pi/4 split into three parts; the first two have short mantissas so that
// y * kPio4a and y * kPio4b are exact for the octant counts reached here.
constexpr double kPio4a = 7.85398125648498535156E-1;
constexpr double kPio4b = 3.77489470793079817668E-8;
constexpr double kPio4c = 2.69515142907905952645E-15;
constexpr double kFourOverPi = 1.27323954473516268615;

WEYLAC_AVX2 inline __m256d horner6(__m256d x, double c0, double c1, double c2, double c3, double c4, double c5) {
  __m256d r = _mm256_set1_pd(c0);
  r = _mm256_fmadd_pd(r, x, _mm256_set1_pd(c1));
  r = _mm256_fmadd_pd(r, x, _mm256_set1_pd(c2));
  r = _mm256_fmadd_pd(r, x, _mm256_set1_pd(c3));
  r = _mm256_fmadd_pd(r, x, _mm256_set1_pd(c4));
  return _mm256_fmadd_pd(r, x, _mm256_set1_pd(c5));
}

WEYLAC_AVX2 inline void sincos4(__m256d x, __m256d& sin_out, __m256d& cos_out) {
  const __m256d sign_bit = _mm256_set1_pd(-0.0);
  const __m256d ax = _mm256_andnot_pd(sign_bit, x);
  const __m256d x_sign = _mm256_and_pd(sign_bit, x);

  // Octant index, rounded up to even.
  __m256d y = _mm256_floor_pd(_mm256_mul_pd(ax, _mm256_set1_pd(kFourOverPi)));
  const __m256d odd = _mm256_sub_pd(y, _mm256_mul_pd(_mm256_set1_pd(2.0), _mm256_floor_pd(_mm256_mul_pd(y, _mm256_set1_pd(0.5)))));
  y = _mm256_add_pd(y, odd);
  const __m256d j = _mm256_sub_pd(y, _mm256_mul_pd(_mm256_set1_pd(8.0), _mm256_floor_pd(_mm256_mul_pd(y, _mm256_set1_pd(0.125)))));

  __m256d z = _mm256_fnmadd_pd(y, _mm256_set1_pd(kPio4a), ax);
  z = _mm256_fnmadd_pd(y, _mm256_set1_pd(kPio4b), z);
  z = _mm256_fnmadd_pd(y, _mm256_set1_pd(kPio4c), z);
  const __m256d zz = _mm256_mul_pd(z, z);

  const __m256d ps = _mm256_fmadd_pd(_mm256_mul_pd(z, zz), horner6(zz, kSin0, kSin1, kSin2, kSin3, kSin4, kSin5), z);
  const __m256d pc = _mm256_fmadd_pd(_mm256_mul_pd(zz, zz), horner6(zz, kCos0, kCos1, kCos2, kCos3, kCos4, kCos5),
                                     _mm256_fnmadd_pd(_mm256_set1_pd(0.5), zz, _mm256_set1_pd(1.0)));

  const __m256d upper = _mm256_cmp_pd(j, _mm256_set1_pd(4.0), _CMP_GE_OQ);
  const __m256d jr = _mm256_sub_pd(j, _mm256_and_pd(upper, _mm256_set1_pd(4.0)));
  const __m256d swap = _mm256_cmp_pd(jr, _mm256_set1_pd(2.0), _CMP_EQ_OQ);

  __m256d s = _mm256_blendv_pd(ps, pc, swap);
  s = _mm256_xor_pd(s, _mm256_and_pd(upper, sign_bit));
  sin_out = _mm256_xor_pd(s, x_sign);

  __m256d c = _mm256_blendv_pd(pc, ps, swap);
  cos_out = _mm256_xor_pd(c, _mm256_and_pd(_mm256_xor_pd(upper, swap), sign_bit));
}

WEYLAC_AVX2 inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

WEYLAC_AVX2 void accumulate_phasors_avx2(cplx* out, cplx coeff, const double* phase, std::size_t n) {
  const __m256d cr = _mm256_set1_pd(coeff.real());
  const __m256d ci = _mm256_set1_pd(coeff.imag());
  double* o = reinterpret_cast<double*>(out);
  std::size_t p = 0;
  for (; p + 4 <= n; p += 4) {
    __m256d s, c;
    sincos4(_mm256_loadu_pd(phase + p), s, c);
    const __m256d re = _mm256_fmsub_pd(cr, c, _mm256_mul_pd(ci, s));
    const __m256d im = _mm256_fmadd_pd(cr, s, _mm256_mul_pd(ci, c));
    const __m256d lo = _mm256_unpacklo_pd(re, im);  // re0 im0 re2 im2
    const __m256d hi = _mm256_unpackhi_pd(re, im);  // re1 im1 re3 im3
    const __m256d a = _mm256_permute2f128_pd(lo, hi, 0x20);
    const __m256d b = _mm256_permute2f128_pd(lo, hi, 0x31);
    _mm256_storeu_pd(o + 2 * p, _mm256_add_pd(_mm256_loadu_pd(o + 2 * p), a));
    _mm256_storeu_pd(o + 2 * p + 4, _mm256_add_pd(_mm256_loadu_pd(o + 2 * p + 4), b));
  }
  for (; p < n; ++p) {
    const double c = std::cos(phase[p]), s = std::sin(phase[p]);
    out[p] += cplx(coeff.real() * c - coeff.imag() * s, coeff.real() * s + coeff.imag() * c);
  }
}

WEYLAC_AVX2 cplx phasor_dot_avx2(const cplx* samples, const double* phase, std::size_t n) {
  const double* x = reinterpret_cast<const double*>(samples);
  __m256d re_acc = _mm256_setzero_pd();
  __m256d im_acc = _mm256_setzero_pd();
  std::size_t p = 0;
  for (; p + 4 <= n; p += 4) {
    const __m256d v0 = _mm256_loadu_pd(x + 2 * p);
    const __m256d v1 = _mm256_loadu_pd(x + 2 * p + 4);
    const __m256d xr = _mm256_unpacklo_pd(v0, v1);  // lanes hold samples 0 2 1 3
    const __m256d xi = _mm256_unpackhi_pd(v0, v1);
    const __m256d ph = _mm256_permute4x64_pd(_mm256_loadu_pd(phase + p), _MM_SHUFFLE(3, 1, 2, 0));
    __m256d s, c;
    sincos4(ph, s, c);
    re_acc = _mm256_add_pd(re_acc, _mm256_fmadd_pd(xr, c, _mm256_mul_pd(xi, s)));
    im_acc = _mm256_add_pd(im_acc, _mm256_fmsub_pd(xi, c, _mm256_mul_pd(xr, s)));
  }
  double re = hsum(re_acc), im = hsum(im_acc);
  for (; p < n; ++p) {
    const double c = std::cos(phase[p]), s = std::sin(phase[p]);
    re += samples[p].real() * c + samples[p].imag() * s;
    im += samples[p].imag() * c - samples[p].real() * s;
  }
  return {re, im};
}

WEYLAC_AVX2 void axpy_avx2(cplx* y, cplx a, const cplx* x, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  double* yd = reinterpret_cast<double*>(y);
  const double* xd = reinterpret_cast<const double*>(x);
  std::size_t p = 0;
  for (; p + 2 <= n; p += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * p);
    const __m256d xs = _mm256_permute_pd(xv, 0b0101);  // xi xr xi xr
    const __m256d prod = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, xs));
    _mm256_storeu_pd(yd + 2 * p, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * p), prod));
  }
  for (; p < n; ++p) {
    y[p] += cplx(a.real() * x[p].real() - a.imag() * x[p].imag(), a.real() * x[p].imag() + a.imag() * x[p].real());
  }
}

WEYLAC_AVX2 cplx weighted_sum_avx2(const double* w, const cplx* z, std::size_t n) {
  const double* zd = reinterpret_cast<const double*>(z);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t p = 0;
  for (; p + 4 <= n; p += 4) {
    const __m256d wv = _mm256_loadu_pd(w + p);
    const __m256d w01 = _mm256_permute4x64_pd(wv, _MM_SHUFFLE(1, 1, 0, 0));
    const __m256d w23 = _mm256_permute4x64_pd(wv, _MM_SHUFFLE(3, 3, 2, 2));
    acc0 = _mm256_fmadd_pd(w01, _mm256_loadu_pd(zd + 2 * p), acc0);
    acc1 = _mm256_fmadd_pd(w23, _mm256_loadu_pd(zd + 2 * p + 4), acc1);
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double re = lanes[0] + lanes[2], im = lanes[1] + lanes[3];
  for (; p < n; ++p) {
    re += w[p] * z[p].real();
    im += w[p] * z[p].imag();
  }
  return {re, im};
}

WEYLAC_AVX2 void magnitudes_avx2(const cplx* z, double* out, std::size_t n) {
  const double* zd = reinterpret_cast<const double*>(z);
  std::size_t p = 0;
  for (; p + 4 <= n; p += 4) {
    const __m256d a = _mm256_loadu_pd(zd + 2 * p);
    const __m256d b = _mm256_loadu_pd(zd + 2 * p + 4);
    const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));  // |z0|^2 |z2|^2 |z1|^2 |z3|^2
    _mm256_storeu_pd(out + p, _mm256_sqrt_pd(_mm256_permute4x64_pd(h, _MM_SHUFFLE(3, 1, 2, 0))));
  }
  for (; p < n; ++p) out[p] = std::sqrt(z[p].real() * z[p].real() + z[p].imag() * z[p].imag());
}

WEYLAC_AVX2 double max_value_avx2(const double* x, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  std::size_t p = 0;
  if (n >= 4) {
    __m256d acc = _mm256_loadu_pd(x);
    for (p = 4; p + 4 <= n; p += 4) acc = _mm256_max_pd(acc, _mm256_loadu_pd(x + p));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    for (double v : lanes) m = v > m ? v : m;
  }
  for (; p < n; ++p) m = x[p] > m ? x[p] : m;
  return m;
}

WEYLAC_AVX2 void sincos_avx2(const double* x, double* s, double* c, std::size_t n) {
  std::size_t p = 0;
  for (; p + 4 <= n; p += 4) {
    __m256d sv, cv;
    sincos4(_mm256_loadu_pd(x + p), sv, cv);
    _mm256_storeu_pd(s + p, sv);
    _mm256_storeu_pd(c + p, cv);
  }
  for (; p < n; ++p) {
    s[p] = std::sin(x[p]);
    c[p] = std::cos(x[p]);
  }
}

} // namespace

namespace detail {

const KernelTable avx2_table{
    Isa::avx2,       accumulate_phasors_avx2, phasor_dot_avx2, axpy_avx2, weighted_sum_avx2,
    magnitudes_avx2, max_value_avx2,          sincos_avx2,
};

} // namespace detail

} // namespace weylac::kernels

#endif
