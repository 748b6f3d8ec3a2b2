#include "doctest.h"

#include "weylac/error.hpp"
#include "weylac/kernels.hpp"
#include "weylac/torus_fourier.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace weylac;
using namespace weylac::kernels;

namespace {

std::vector<double> random_reals(std::mt19937_64& rng, std::size_t n, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

std::vector<cplx> random_complex(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<cplx> v(n);
  for (auto& z : v) z = {g(rng), g(rng)};
  return v;
}

// Lengths that exercise the vector body and every tail size.
const std::size_t kLengths[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 16, 31, 100, 1027};

} // namespace

TEST_CASE("isa names") {
  CHECK(parse_isa("scalar") == Isa::scalar);
  CHECK(parse_isa("avx2") == Isa::avx2);
  CHECK(to_string(Isa::avx2) == "avx2");
  CHECK_THROWS_AS(parse_isa("sse9"), ParameterError);
  CHECK(supported(Isa::scalar));
  CHECK(supported(best_available()));
}

TEST_CASE("scalar sincos reference") {
  const auto& s = table(Isa::scalar);
  std::mt19937_64 rng(1);
  const auto x = random_reals(rng, 1000, 200.0);
  std::vector<double> sn(x.size()), cs(x.size());
  s.sincos(x.data(), sn.data(), cs.data(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(sn[i] == std::sin(x[i]));
    CHECK(cs[i] == std::cos(x[i]));
  }
}

TEST_CASE("vector kernels agree with the scalar reference") {
  if (!supported(Isa::avx2)) {
    MESSAGE("AVX2 not available; equivalence checks skipped");
    return;
  }
  const auto& s = table(Isa::scalar);
  const auto& v = table(Isa::avx2);
  std::mt19937_64 rng(2);

  SUBCASE("sincos") {
    for (double scale : {1.0, 10.0, 1e3, 1e5}) {
      const auto x = random_reals(rng, 1027, scale);
      std::vector<double> s1(x.size()), c1(x.size()), s2(x.size()), c2(x.size());
      s.sincos(x.data(), s1.data(), c1.data(), x.size());
      v.sincos(x.data(), s2.data(), c2.data(), x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(std::abs(s1[i] - s2[i]) < 1e-15 * std::max(1.0, scale / 1e3));
        CHECK(std::abs(c1[i] - c2[i]) < 1e-15 * std::max(1.0, scale / 1e3));
      }
    }
  }
  SUBCASE("accumulate_phasors") {
    for (auto n : kLengths) {
      const auto phase = random_reals(rng, n, 50.0);
      auto a = random_complex(rng, n);
      auto b = a;
      const cplx coeff(0.3, -1.7);
      s.accumulate_phasors(a.data(), coeff, phase.data(), n);
      v.accumulate_phasors(b.data(), coeff, phase.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-14);
    }
  }
  SUBCASE("phasor_dot") {
    for (auto n : kLengths) {
      const auto phase = random_reals(rng, n, 50.0);
      const auto z = random_complex(rng, n);
      const cplx a = s.phasor_dot(z.data(), phase.data(), n);
      const cplx b = v.phasor_dot(z.data(), phase.data(), n);
      CHECK(std::abs(a - b) < 1e-13 * std::max<double>(1.0, static_cast<double>(n)));
    }
  }
  SUBCASE("axpy") {
    for (auto n : kLengths) {
      const auto x = random_complex(rng, n);
      auto y1 = random_complex(rng, n);
      auto y2 = y1;
      const cplx a(-0.4, 2.5);
      s.axpy(y1.data(), a, x.data(), n);
      v.axpy(y2.data(), a, x.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y1[i] - y2[i]) < 1e-14);
    }
  }
  SUBCASE("weighted_sum") {
    for (auto n : kLengths) {
      const auto w = random_reals(rng, n, 1.0);
      const auto z = random_complex(rng, n);
      CHECK(std::abs(s.weighted_sum(w.data(), z.data(), n) - v.weighted_sum(w.data(), z.data(), n)) <
            1e-13 * std::max<double>(1.0, static_cast<double>(n)));
    }
  }
  SUBCASE("magnitudes") {
    for (auto n : kLengths) {
      const auto z = random_complex(rng, n);
      std::vector<double> m1(n), m2(n);
      s.magnitudes(z.data(), m1.data(), n);
      v.magnitudes(z.data(), m2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(m1[i] == m2[i]);
    }
  }
  SUBCASE("max_value") {
    for (auto n : kLengths) {
      const auto x = random_reals(rng, n, 1e3);
      CHECK(s.max_value(x.data(), n) == v.max_value(x.data(), n));
    }
    CHECK(std::isinf(v.max_value(nullptr, 0)));
  }
}

TEST_CASE("library results do not depend on the selected kernels") {
  if (!supported(Isa::avx2)) return;
  std::mt19937_64 rng(9);
  TorusSeries::Terms t;
  std::normal_distribution<double> g;
  for (int i = -20; i <= 20; i += 3) t[Weight({2 * i, i})] = cplx(g(rng), g(rng));
  const TorusSeries s(2, t);
  const GridSpec grid = GridSpec::uniform(2, 96);

  select(Isa::scalar);
  const auto a = synthesize_grid(s, grid);
  const auto sa = analyze(a, grid, s.max_abs_exponent());
  select(Isa::avx2);
  const auto b = synthesize_grid(s, grid);
  const auto sb = analyze(b, grid, s.max_abs_exponent());
  select(best_available());

  double diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) diff = std::max(diff, std::abs(a[i] - b[i]));
  CHECK(diff < 1e-12);
  CHECK(spectrum(sa) == spectrum(sb));
}
