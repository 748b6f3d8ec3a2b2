#pragma once

// Root systems, weight lattices and Weyl groups for the cataloged groups
// SU(2) and U(n), n = 2, 3, 4.
//
// Weights are stored in doubled coordinates: the stored integer vector is 2*lambda
// in the natural character coordinates of the maximal torus. The half sum of
// positive roots of U(n) has half-integer entries, and doubling keeps every
// computation in exact integer arithmetic. A weight is a character of the torus
// iff every doubled coordinate is even.

#include "weylac/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weylac {

enum class GroupId { su2, u2, u3, u4 };

std::string_view to_string(GroupId id);

/// Parses "su2", "u2", "u3" or "u4". Throws CatalogError otherwise.
GroupId parse_group_id(std::string_view tag);

class Weight {
public:
  Weight() = default;
  explicit Weight(std::vector<std::int64_t> doubled) : doubled_(std::move(doubled)) {}

  static Weight from_natural(std::span<const std::int64_t> coords);
  static Weight from_natural(std::initializer_list<std::int64_t> coords);
  static Weight zero(std::size_t rank) { return Weight(std::vector<std::int64_t>(rank, 0)); }

  std::size_t rank() const noexcept { return doubled_.size(); }
  std::span<const std::int64_t> doubled() const noexcept { return doubled_; }
  std::int64_t operator[](std::size_t i) const { return doubled_[i]; }

  bool is_character() const noexcept;
  bool is_zero() const noexcept;

  /// Natural coordinates; throws DomainError for weights with an odd doubled coordinate.
  std::vector<std::int64_t> natural() const;
  Rational natural(std::size_t axis) const { return Rational(doubled_[axis], 2); }

  /// Natural coordinates as text, e.g. "(3/2,-1/2)".
  std::string str() const;

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  Weight operator-() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

private:
  std::vector<std::int64_t> doubled_;
};

/// Standard inner product of doubled coordinates.
std::int64_t dot(const Weight& a, const Weight& b);

/// A Weyl group element as a signed permutation matrix on weight coordinates,
/// together with its determinant.
class WeylElement {
public:
  /// `action` is row-major rank x rank. The sign is computed, not supplied.
  WeylElement(std::size_t rank, std::vector<int> action);

  std::size_t rank() const noexcept { return rank_; }
  int sign() const noexcept { return sign_; }
  int entry(std::size_t row, std::size_t col) const { return action_[row * rank_ + col]; }

  Weight apply(const Weight& w) const;

  /// The element acting as `*this` after `rhs`.
  WeylElement compose(const WeylElement& rhs) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.rank_ == b.rank_ && a.action_ == b.action_;
  }

private:
  std::size_t rank_;
  std::vector<int> action_;
  int sign_;
};

/// A finite set of weights sharing one rank, ordered lexicographically.
class SpectrumSet {
public:
  explicit SpectrumSet(std::size_t rank) : rank_(rank) {}
  SpectrumSet(std::size_t rank, std::initializer_list<Weight> elements);

  /// Throws DomainError on rank mismatch.
  void insert(const Weight& w);
  bool contains(const Weight& w) const { return elements_.contains(w); }
  bool includes(const SpectrumSet& other) const;

  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const std::set<Weight>& elements() const noexcept { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  friend bool operator==(const SpectrumSet&, const SpectrumSet&) = default;

private:
  std::size_t rank_;
  std::set<Weight> elements_;
};

struct RootSystem {
  GroupId group;
  std::size_t rank;
  std::vector<Weight> positive_roots;
  Weight rho;
  std::vector<WeylElement> weyl;
};

RootSystem build_root_system(GroupId id);
RootSystem build_root_system(std::string_view tag);

/// 2<lam, alpha>/<alpha, alpha>. Throws DomainError unless alpha is a positive root of rs.
Rational cartan_pairing(const RootSystem& rs, const Weight& lam, const Weight& alpha);

struct Admissibility {
  enum class Failure {
    none,
    positivity_integrality,  // some Cartan pairing is negative or non-integral
    not_a_character,         // an odd doubled coordinate
  };

  bool admissible = false;
  Failure failure = Failure::none;
  std::optional<std::size_t> root_index;  // offending positive root, for positivity_integrality
  std::string reason;

  explicit operator bool() const noexcept { return admissible; }
};

/// Highest-weight admissibility: every Cartan pairing with a positive root is a
/// nonnegative integer, and the weight is a character of the torus. Zero pairings
/// are accepted so that the trivial representation is admissible.
Admissibility is_dominant_integral(const RootSystem& rs, const Weight& lam);

/// Every Cartan pairing is nonnegative (no integrality requirement).
bool is_dominant(const RootSystem& rs, const Weight& lam);

SpectrumSet weyl_orbit(const RootSystem& rs, const Weight& lam);
SpectrumSet orbit_of_set(const RootSystem& rs, const SpectrumSet& set);

/// The first `count` dominant integral weights in a fixed order: by the sum of
/// absolute natural coordinates, then lexicographically descending.
std::vector<Weight> dominant_weights(const RootSystem& rs, std::size_t count);

void check_rank(const RootSystem& rs, const Weight& w);

} // namespace weylac
