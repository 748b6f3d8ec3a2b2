#pragma once

// Hadamard lacunarity on finite integer sets.
//
// A set is Q-thin if it lies in the positive or the negative integers and any two
// elements with |n| > |m| satisfy |n| / |m| >= Q. It is lacunary with cutoff N if
// both tails A n [N, inf) and A n (-inf, -N] are Q-thin; elements strictly inside
// (-N, N) are unconstrained. Zero belongs to neither sign class.
//
// Every finite set is trivially a finite union of lacunary sets, so the useful
// finite question is how many parts are needed at fixed (Q, N). All ratio tests
// are exact integer cross-multiplications.

#include "weylac/rational.hpp"
#include "weylac/root_system.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace weylac {

/// Sorted set of integers without duplicates.
class IntSet {
public:
  IntSet() = default;
  IntSet(std::initializer_list<std::int64_t> values) : IntSet(std::vector<std::int64_t>(values)) {}
  explicit IntSet(std::vector<std::int64_t> values);

  const std::vector<std::int64_t>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(std::int64_t v) const;
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  std::string str() const;

  friend bool operator==(const IntSet&, const IntSet&) = default;

private:
  std::vector<std::int64_t> elements_;
};

struct LacunaryCert {
  Rational q;
  std::int64_t cutoff = 1;
  std::vector<IntSet> parts;
};

/// Throws ParameterError for q <= 1.
bool is_q_thin(const IntSet& set, const Rational& q);

/// Throws ParameterError for q <= 1 or cutoff < 1.
bool is_lacunary(const IntSet& set, const Rational& q, std::int64_t cutoff);

/// A partition of `set` into the fewest parts that are each lacunary at (q, cutoff).
///
/// Each tail is covered by greedy chains: elements are taken in increasing |.|
/// and appended to the first chain whose last element m has |n| >= q |m|. When a
/// new chain opens, the last elements of all existing chains lie in (|n|/q, |n|),
/// so together with n they form a set with pairwise ratios below q, which no two
/// chains can share. The chain count is therefore optimal per tail, and a part
/// can hold one chain from each tail, so the part count is the larger of the two.
/// Elements strictly inside (-cutoff, cutoff) join the first part.
LacunaryCert min_lacunary_cover(const IntSet& set, const Rational& q, std::int64_t cutoff);

/// Parts are disjoint, reassemble `set`, and each passes is_lacunary.
bool verify_cert(const LacunaryCert& cert, const IntSet& set);

struct ConditionReport {
  bool holds = false;
  Rational q;
  std::int64_t cutoff = 1;
  std::size_t max_parts = 0;
  SpectrumSet orbit{0};
  std::vector<IntSet> projections;      // one per axis, natural coordinates
  std::vector<LacunaryCert> certs;      // minimal cover of each projection
  std::vector<std::string> failures;    // empty string for axes within max_parts
};

/// Tests whether the Weyl orbit of E lies in a product E_1 x ... x E_k of sets that
/// are each a union of at most `max_parts` lacunary sets at (q, cutoff). The E_j
/// are taken to be the coordinate projections of the orbit; any admissible box
/// contains them, so the test is exact. Throws DomainError if some element of E is
/// not a character of the torus.
ConditionReport check_orbit_lacunarity(const RootSystem& rs, const SpectrumSet& e, const Rational& q,
                                       std::int64_t cutoff, std::size_t max_parts);

} // namespace weylac
