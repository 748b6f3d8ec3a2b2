#include "doctest.h"

#include "weylac/error.hpp"
#include "weylac/lacunary.hpp"

#include "oracles.hpp"

#include <random>

using namespace weylac;

namespace {

Weight nat(std::initializer_list<std::int64_t> c) { return Weight::from_natural(c); }

} // namespace

TEST_CASE("q-thin examples") {
  CHECK(is_q_thin({1, 2, 4, 8}, Rational(2)));
  CHECK_FALSE(is_q_thin({3, 5}, Rational(2)));
  CHECK(is_q_thin({-1, -3, -9}, Rational(3)));
  CHECK_FALSE(is_q_thin({1, -2}, Rational(2)));
  CHECK(is_q_thin({}, Rational(2)));
  CHECK_FALSE(is_q_thin({0, 1}, Rational(2)));
  CHECK(is_q_thin({2, 3}, Rational(3, 2)));
  CHECK_THROWS_AS(is_q_thin({1}, Rational(1)), ParameterError);
  CHECK_THROWS_AS(is_q_thin({1}, Rational(1, 2)), ParameterError);
}

TEST_CASE("lacunary examples") {
  CHECK(is_lacunary({-32, -16, -8, -4, -2, -1, 1, 2, 4, 8, 16, 32}, Rational(2), 1));
  CHECK(is_lacunary({}, Rational(5), 3));
  CHECK(is_lacunary({1, 2, 3}, Rational(2), 4));
  CHECK(is_lacunary({-3, 0, 1, 2, 3, 8}, Rational(2), 3));
  CHECK_FALSE(is_lacunary({1, 2, 3}, Rational(2), 1));
  CHECK_THROWS_AS(is_lacunary({1}, Rational(2), 0), ParameterError);
  CHECK_THROWS_AS(is_lacunary({1}, Rational(1), 1), ParameterError);
}

TEST_CASE("minimal cover examples") {
  const IntSet a{2, 3, 4, 6, 8, 12, 16, 24};
  const auto cert = min_lacunary_cover(a, Rational(2), 1);
  CHECK(cert.parts.size() == 2);
  CHECK(verify_cert(cert, a));
  CHECK(weylac::testing::brute_force_min_parts(a, Rational(2), 1) == 2);
  CHECK(min_lacunary_cover({1, 2, 3}, Rational(2), 4).parts.size() == 1);
  CHECK(min_lacunary_cover({8}, Rational(7, 3), 2).parts.size() == 1);
  CHECK(min_lacunary_cover({}, Rational(2), 1).parts.empty());
}

TEST_CASE("greedy cover matches the exhaustive minimum") {
  for (const auto& c : weylac::testing::random_corpus(2024, 300)) {
    const auto cert = min_lacunary_cover(c.set, c.q, c.cutoff);
    CHECK(verify_cert(cert, c.set));
    CHECK(cert.parts.size() == weylac::testing::brute_force_min_parts(c.set, c.q, c.cutoff));
  }
}

TEST_CASE("cover size is monotone in q") {
  const Rational qs[3] = {Rational(3, 2), Rational(2), Rational(3)};
  for (const auto& c : weylac::testing::random_corpus(7, 150)) {
    std::size_t prev = 0;
    for (const auto& q : qs) {
      const auto k = min_lacunary_cover(c.set, q, c.cutoff).parts.size();
      CHECK(k >= prev);
      prev = k;
    }
  }
}

TEST_CASE("verify_cert rejects bad certificates") {
  const IntSet a{1, 2, 4, 8};
  LacunaryCert cert{Rational(2), 1, {IntSet{1, 2, 4}}};
  CHECK_FALSE(verify_cert(cert, a));
  cert.parts = {IntSet{1, 2, 4}, IntSet{4, 8}};
  CHECK_FALSE(verify_cert(cert, a));
  cert.parts = {IntSet{1, 4}, IntSet{2, 8}};
  CHECK(verify_cert(cert, a));
  cert.parts = {IntSet{1, 2, 3, 4, 8}};
  CHECK_FALSE(verify_cert(cert, IntSet{1, 2, 3, 4, 8}));
}

TEST_CASE("condition on Weyl orbits") {
  const auto u2 = build_root_system(GroupId::u2);
  const SpectrumSet e(2, {nat({1, 2}), nat({2, 4}), nat({4, 8})});
  const auto rep = check_orbit_lacunarity(u2, e, Rational(2), 1, 1);
  CHECK(rep.holds);
  CHECK(rep.orbit.size() == 6);
  REQUIRE(rep.projections.size() == 2);
  CHECK(rep.projections[0] == IntSet{1, 2, 4, 8});
  CHECK(rep.projections[1] == IntSet{1, 2, 4, 8});
  CHECK(rep.certs[0].parts.size() == 1);

  const auto su2 = build_root_system(GroupId::su2);
  SpectrumSet six(1);
  for (std::int64_t n = 1; n <= 6; ++n) six.insert(nat({n}));
  const auto bad = check_orbit_lacunarity(su2, six, Rational(2), 1, 1);
  CHECK_FALSE(bad.holds);
  CHECK(bad.projections[0] == IntSet{-6, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6});
  CHECK(bad.certs[0].parts.size() >= 2);
  CHECK_FALSE(bad.failures[0].empty());
  CHECK(check_orbit_lacunarity(su2, six, Rational(2), 1, 3).holds);

  CHECK(check_orbit_lacunarity(u2, SpectrumSet(2), Rational(2), 1, 1).holds);
  CHECK_THROWS_AS(check_orbit_lacunarity(u2, SpectrumSet(2, {Weight({1, -1})}), Rational(2), 1, 1), DomainError);
}

TEST_CASE("condition is W-invariant and closed under subsets") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> coord(-20, 20);
  const auto u3 = build_root_system(GroupId::u3);
  for (int trial = 0; trial < 40; ++trial) {
    SpectrumSet e(3);
    for (int i = 0; i < 3; ++i) e.insert(nat({coord(rng), coord(rng), coord(rng)}));
    const auto r = static_cast<std::size_t>(1 + trial % 3);
    const auto base = check_orbit_lacunarity(u3, e, Rational(2), 1, r);
    const auto via_orbit = check_orbit_lacunarity(u3, orbit_of_set(u3, e), Rational(2), 1, r);
    CHECK(base.holds == via_orbit.holds);
    CHECK(base.projections == via_orbit.projections);
    if (!base.holds) continue;
    for (const auto& drop : e) {
      SpectrumSet sub(3);
      for (const auto& w : e)
        if (w != drop) sub.insert(w);
      CHECK(check_orbit_lacunarity(u3, sub, Rational(2), 1, r).holds);
    }
  }
}
