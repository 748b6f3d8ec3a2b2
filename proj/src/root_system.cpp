#include "weylac/root_system.hpp"

#include "weylac/error.hpp"

#include <algorithm>
#include <numeric>

namespace weylac {

std::string_view to_string(GroupId id) {
  switch (id) {
  case GroupId::su2: return "su2";
  case GroupId::u2: return "u2";
  case GroupId::u3: return "u3";
  case GroupId::u4: return "u4";
  }
  return "?";
}

GroupId parse_group_id(std::string_view tag) {
  if (tag == "su2") return GroupId::su2;
  if (tag == "u2") return GroupId::u2;
  if (tag == "u3") return GroupId::u3;
  if (tag == "u4") return GroupId::u4;
  throw CatalogError("unknown group '" + std::string(tag) + "' (expected su2, u2, u3 or u4)");
}

// ---------------------------------------------------------------------------
// Weight
// ---------------------------------------------------------------------------

Weight Weight::from_natural(std::span<const std::int64_t> coords) {
  std::vector<std::int64_t> d(coords.begin(), coords.end());
  for (auto& x : d) x *= 2;
  return Weight(std::move(d));
}

Weight Weight::from_natural(std::initializer_list<std::int64_t> coords) {
  return from_natural(std::span<const std::int64_t>(coords.begin(), coords.size()));
}

bool Weight::is_character() const noexcept {
  return std::all_of(doubled_.begin(), doubled_.end(), [](std::int64_t x) { return x % 2 == 0; });
}

bool Weight::is_zero() const noexcept {
  return std::all_of(doubled_.begin(), doubled_.end(), [](std::int64_t x) { return x == 0; });
}

std::vector<std::int64_t> Weight::natural() const {
  if (!is_character()) throw DomainError("weight " + str() + " is not a character of the torus");
  std::vector<std::int64_t> out(doubled_);
  for (auto& x : out) x /= 2;
  return out;
}

std::string Weight::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < doubled_.size(); ++i) {
    if (i) s += ",";
    s += natural(i).str();
  }
  return s + ")";
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw DomainError("weight rank mismatch");
  std::vector<std::int64_t> d(a.rank());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.doubled_[i] + b.doubled_[i];
  return Weight(std::move(d));
}

Weight operator-(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw DomainError("weight rank mismatch");
  std::vector<std::int64_t> d(a.rank());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.doubled_[i] - b.doubled_[i];
  return Weight(std::move(d));
}

Weight Weight::operator-() const {
  std::vector<std::int64_t> d(doubled_);
  for (auto& x : d) x = -x;
  return Weight(std::move(d));
}

std::int64_t dot(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw DomainError("weight rank mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------------------
// WeylElement
// ---------------------------------------------------------------------------

namespace {

std::int64_t determinant(std::vector<std::int64_t> m, std::size_t n) {
  // Bareiss fraction-free elimination; exact for integer matrices.
  int swaps = 0;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
      ++swaps;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
      }
    }
    prev = m[k * n + k];
  }
  const std::int64_t det = m[n * n - 1];
  return swaps % 2 ? -det : det;
}

} // namespace

WeylElement::WeylElement(std::size_t rank, std::vector<int> action) : rank_(rank), action_(std::move(action)) {
  if (action_.size() != rank_ * rank_) throw DomainError("Weyl element action has wrong size");
  const auto det = determinant(std::vector<std::int64_t>(action_.begin(), action_.end()), rank_);
  if (det != 1 && det != -1) throw DomainError("Weyl element action is not invertible over the integers");
  sign_ = static_cast<int>(det);
}

Weight WeylElement::apply(const Weight& w) const {
  if (w.rank() != rank_) throw DomainError("weight rank does not match Weyl element");
  std::vector<std::int64_t> out(rank_, 0);
  for (std::size_t r = 0; r < rank_; ++r) {
    for (std::size_t c = 0; c < rank_; ++c) out[r] += action_[r * rank_ + c] * w[c];
  }
  return Weight(std::move(out));
}

WeylElement WeylElement::compose(const WeylElement& rhs) const {
  if (rhs.rank_ != rank_) throw DomainError("Weyl element rank mismatch");
  std::vector<int> out(rank_ * rank_, 0);
  for (std::size_t r = 0; r < rank_; ++r)
    for (std::size_t k = 0; k < rank_; ++k)
      for (std::size_t c = 0; c < rank_; ++c) out[r * rank_ + c] += action_[r * rank_ + k] * rhs.action_[k * rank_ + c];
  return WeylElement(rank_, std::move(out));
}

// ---------------------------------------------------------------------------
// SpectrumSet
// ---------------------------------------------------------------------------

SpectrumSet::SpectrumSet(std::size_t rank, std::initializer_list<Weight> elements) : rank_(rank) {
  for (const auto& w : elements) insert(w);
}

void SpectrumSet::insert(const Weight& w) {
  if (w.rank() != rank_) {
    throw DomainError("weight " + w.str() + " has rank " + std::to_string(w.rank()) + ", set has rank " +
                      std::to_string(rank_));
  }
  elements_.insert(w);
}

bool SpectrumSet::includes(const SpectrumSet& other) const {
  return std::includes(elements_.begin(), elements_.end(), other.elements_.begin(), other.elements_.end());
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

namespace {

RootSystem build_su2() {
  RootSystem rs{GroupId::su2, 1, {}, Weight({2}), {}};
  rs.positive_roots.push_back(Weight({4}));  // alpha = 2 on T = diag(e^{i t}, e^{-i t})
  rs.weyl.emplace_back(1, std::vector<int>{1});
  rs.weyl.emplace_back(1, std::vector<int>{-1});
  return rs;
}

RootSystem build_un(GroupId id, std::size_t n) {
  RootSystem rs{id, n, {}, Weight::zero(n), {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::int64_t> d(n, 0);
      d[i] = 2;
      d[j] = -2;
      rs.positive_roots.emplace_back(std::move(d));
    }
  }
  Weight twice_rho = Weight::zero(n);
  for (const auto& a : rs.positive_roots) twice_rho = twice_rho + a;
  std::vector<std::int64_t> rho(n);
  for (std::size_t i = 0; i < n; ++i) rho[i] = twice_rho[i] / 2;
  rs.rho = Weight(std::move(rho));

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) m[perm[i] * n + i] = 1;  // e_i -> e_perm(i)
    rs.weyl.emplace_back(n, std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return rs;
}

} // namespace

RootSystem build_root_system(GroupId id) {
  switch (id) {
  case GroupId::su2: return build_su2();
  case GroupId::u2: return build_un(id, 2);
  case GroupId::u3: return build_un(id, 3);
  case GroupId::u4: return build_un(id, 4);
  }
  throw CatalogError("group id outside the catalog");
}

RootSystem build_root_system(std::string_view tag) { return build_root_system(parse_group_id(tag)); }

void check_rank(const RootSystem& rs, const Weight& w) {
  if (w.rank() != rs.rank) {
    throw DomainError("weight " + w.str() + " has rank " + std::to_string(w.rank()) + " but " +
                      std::string(to_string(rs.group)) + " has rank " + std::to_string(rs.rank));
  }
}

Rational cartan_pairing(const RootSystem& rs, const Weight& lam, const Weight& alpha) {
  check_rank(rs, lam);
  if (std::find(rs.positive_roots.begin(), rs.positive_roots.end(), alpha) == rs.positive_roots.end()) {
    throw DomainError(alpha.str() + " is not a positive root of " + std::string(to_string(rs.group)));
  }
  return Rational(2 * dot(lam, alpha), dot(alpha, alpha));
}

Admissibility is_dominant_integral(const RootSystem& rs, const Weight& lam) {
  check_rank(rs, lam);
  Admissibility out;
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
    const auto& alpha = rs.positive_roots[i];
    const Rational p = cartan_pairing(rs, lam, alpha);
    if (!p.is_integer() || p.num() < 0) {
      out.failure = Admissibility::Failure::positivity_integrality;
      out.root_index = i;
      out.reason = "condition (I) fails at root " + alpha.str() + ": pairing " + p.str() +
                   " is not a nonnegative integer";
      return out;
    }
  }
  if (!lam.is_character()) {
    out.failure = Admissibility::Failure::not_a_character;
    out.reason = "condition (II) fails: " + lam.str() + " is not a character of the maximal torus";
    return out;
  }
  out.admissible = true;
  return out;
}

bool is_dominant(const RootSystem& rs, const Weight& lam) {
  check_rank(rs, lam);
  return std::all_of(rs.positive_roots.begin(), rs.positive_roots.end(),
                     [&](const Weight& a) { return dot(lam, a) >= 0; });
}

SpectrumSet weyl_orbit(const RootSystem& rs, const Weight& lam) {
  check_rank(rs, lam);
  SpectrumSet out(rs.rank);
  for (const auto& w : rs.weyl) out.insert(w.apply(lam));
  return out;
}

SpectrumSet orbit_of_set(const RootSystem& rs, const SpectrumSet& set) {
  if (set.rank() != rs.rank) throw DomainError("spectrum set rank does not match the root system");
  SpectrumSet out(rs.rank);
  for (const auto& lam : set)
    for (const auto& w : rs.weyl) out.insert(w.apply(lam));
  return out;
}

namespace {

void non_increasing_tuples(std::size_t n, std::int64_t level, std::int64_t upper, std::int64_t remaining,
                           std::vector<std::int64_t>& prefix, std::vector<std::vector<std::int64_t>>& out) {
  if (prefix.size() == n) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  for (std::int64_t v = std::min(upper, level); v >= -level; --v) {
    const std::int64_t cost = v < 0 ? -v : v;
    if (cost > remaining) continue;
    prefix.push_back(v);
    non_increasing_tuples(n, level, v, remaining - cost, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<Weight> dominant_weights(const RootSystem& rs, std::size_t count) {
  std::vector<Weight> out;
  if (rs.group == GroupId::su2) {
    for (std::size_t n = 0; n < count; ++n) out.push_back(Weight::from_natural({static_cast<std::int64_t>(n)}));
    return out;
  }
  for (std::int64_t level = 0; out.size() < count; ++level) {
    std::vector<std::vector<std::int64_t>> tuples;
    std::vector<std::int64_t> prefix;
    non_increasing_tuples(rs.rank, level, level, level, prefix, tuples);
    for (const auto& t : tuples) {
      if (out.size() == count) break;
      out.push_back(Weight::from_natural(t));
    }
  }
  return out;
}

} // namespace weylac
