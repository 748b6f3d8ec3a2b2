#pragma once

// Test-side reference implementations shared by unit and acceptance tests.

#include "weylac/lacunary.hpp"
#include "weylac/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

namespace weylac::testing {

// Two elements conflict when they sit in the same tail and their ratio is below q.
inline bool conflict(std::int64_t a, std::int64_t b, const Rational& q, std::int64_t cutoff) {
  if (std::abs(a) < cutoff || std::abs(b) < cutoff) return false;
  if ((a > 0) != (b > 0)) return false;
  const auto lo = std::min(std::abs(a), std::abs(b));
  const auto hi = std::max(std::abs(a), std::abs(b));
  return hi * q.den() < q.num() * lo;
}

inline bool assign(const std::vector<std::int64_t>& xs, std::size_t i, std::vector<std::vector<std::int64_t>>& parts,
                   std::size_t k, const Rational& q, std::int64_t cutoff) {
  if (i == xs.size()) return true;
  for (std::size_t p = 0; p < k; ++p) {
    bool ok = true;
    for (auto y : parts[p]) {
      if (conflict(xs[i], y, q, cutoff)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    parts[p].push_back(xs[i]);
    if (assign(xs, i + 1, parts, k, q, cutoff)) return true;
    parts[p].pop_back();
    if (parts[p].empty()) break;  // the remaining empty parts are interchangeable
  }
  return false;
}

// Fewest parts over all partitions, by exhaustive backtracking.
inline std::size_t brute_force_min_parts(const IntSet& set, const Rational& q, std::int64_t cutoff) {
  if (set.empty()) return 0;
  for (std::size_t k = 1;; ++k) {
    std::vector<std::vector<std::int64_t>> parts(k);
    if (assign(set.elements(), 0, parts, k, q, cutoff)) return k;
  }
}

struct Case {
  IntSet set;
  Rational q;
  std::int64_t cutoff;
};

inline std::vector<Case> random_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(0, 12);
  std::uniform_int_distribution<std::int64_t> value(-64, 64);
  const Rational qs[3] = {Rational(3, 2), Rational(2), Rational(3)};
  const std::int64_t ns[2] = {1, 4};
  std::vector<Case> out;
  for (int i = 0; i < count; ++i) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(size(rng)));
    for (auto& x : v) x = value(rng);
    out.push_back({IntSet(v), qs[rng() % 3], ns[rng() % 2]});
  }
  return out;
}

} // namespace weylac::testing
