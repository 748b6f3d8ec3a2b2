#include "weylac/lacunary.hpp"

#include "weylac/error.hpp"

#include <algorithm>

namespace weylac {

IntSet::IntSet(std::vector<std::int64_t> values) : elements_(std::move(values)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool IntSet::contains(std::int64_t v) const { return std::binary_search(elements_.begin(), elements_.end(), v); }

std::string IntSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(elements_[i]);
  }
  return s + "}";
}

namespace {

void check_params(const Rational& q, std::int64_t cutoff) {
  if (q <= Rational(1)) throw ParameterError("lacunarity ratio Q must exceed 1, got " + q.str());
  if (cutoff < 1) throw ParameterError("lacunarity cutoff N must be at least 1, got " + std::to_string(cutoff));
}

std::int64_t magnitude(std::int64_t v) { return v < 0 ? -v : v; }

// |n| / |m| >= q with |n| > |m| > 0.
bool ratio_at_least(std::int64_t n, std::int64_t m, const Rational& q) {
  return static_cast<__int128>(magnitude(n)) * q.den() >= static_cast<__int128>(magnitude(m)) * q.num();
}

bool thin_by_magnitude(const std::vector<std::int64_t>& mags, const Rational& q) {
  // Ascending magnitudes; consecutive ratios >= q imply all pairwise ratios >= q.
  for (std::size_t i = 1; i < mags.size(); ++i) {
    if (!ratio_at_least(mags[i], mags[i - 1], q)) return false;
  }
  return true;
}

std::vector<std::vector<std::int64_t>> greedy_chains(const std::vector<std::int64_t>& ascending_mags, const Rational& q) {
  std::vector<std::vector<std::int64_t>> chains;
  for (auto n : ascending_mags) {
    auto it = std::find_if(chains.begin(), chains.end(),
                           [&](const std::vector<std::int64_t>& c) { return ratio_at_least(n, c.back(), q); });
    if (it == chains.end()) {
      chains.push_back({n});
    } else {
      it->push_back(n);
    }
  }
  return chains;
}

} // namespace

bool is_q_thin(const IntSet& set, const Rational& q) {
  if (q <= Rational(1)) throw ParameterError("lacunarity ratio Q must exceed 1, got " + q.str());
  if (set.empty()) return true;
  const bool positive = set.elements().front() > 0;
  const bool negative = set.elements().back() < 0;
  if (!positive && !negative) return false;
  std::vector<std::int64_t> mags;
  for (auto v : set) mags.push_back(magnitude(v));
  std::sort(mags.begin(), mags.end());
  return thin_by_magnitude(mags, q);
}

bool is_lacunary(const IntSet& set, const Rational& q, std::int64_t cutoff) {
  check_params(q, cutoff);
  if (set.empty()) return true;
  std::vector<std::int64_t> upper, lower;
  for (auto v : set) {
    if (v >= cutoff) upper.push_back(v);
    if (v <= -cutoff) lower.push_back(v);
  }
  return is_q_thin(IntSet(std::move(upper)), q) && is_q_thin(IntSet(std::move(lower)), q);
}

LacunaryCert min_lacunary_cover(const IntSet& set, const Rational& q, std::int64_t cutoff) {
  check_params(q, cutoff);
  LacunaryCert cert{q, cutoff, {}};
  if (set.empty()) return cert;

  std::vector<std::int64_t> upper, lower, middle;
  for (auto v : set) {
    if (v >= cutoff) upper.push_back(v);
    else if (v <= -cutoff) lower.push_back(-v);
    else middle.push_back(v);
  }
  std::reverse(lower.begin(), lower.end());  // ascending magnitudes

  const auto up = greedy_chains(upper, q);
  const auto down = greedy_chains(lower, q);
  const std::size_t count = std::max<std::size_t>({up.size(), down.size(), 1});

  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::int64_t> part;
    if (i < up.size()) part.insert(part.end(), up[i].begin(), up[i].end());
    if (i < down.size())
      for (auto m : down[i]) part.push_back(-m);
    if (i == 0) part.insert(part.end(), middle.begin(), middle.end());
    cert.parts.emplace_back(std::move(part));
  }
  return cert;
}

bool verify_cert(const LacunaryCert& cert, const IntSet& set) {
  std::vector<std::int64_t> all;
  for (const auto& part : cert.parts) {
    if (!is_lacunary(part, cert.q, cert.cutoff)) return false;
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  return all == set.elements();
}

ConditionReport check_orbit_lacunarity(const RootSystem& rs, const SpectrumSet& e, const Rational& q,
                                       std::int64_t cutoff, std::size_t max_parts) {
  check_params(q, cutoff);
  for (const auto& w : e) {
    if (!w.is_character()) throw DomainError("spectrum element " + w.str() + " is not a character of the torus");
  }
  ConditionReport report;
  report.q = q;
  report.cutoff = cutoff;
  report.max_parts = max_parts;
  report.orbit = orbit_of_set(rs, e);

  std::vector<std::vector<std::int64_t>> axes(rs.rank);
  for (const auto& w : report.orbit) {
    const auto nat = w.natural();
    for (std::size_t j = 0; j < rs.rank; ++j) axes[j].push_back(nat[j]);
  }
  report.holds = true;
  for (std::size_t j = 0; j < rs.rank; ++j) {
    report.projections.emplace_back(std::move(axes[j]));
    report.certs.push_back(min_lacunary_cover(report.projections.back(), q, cutoff));
    const auto parts = report.certs.back().parts.size();
    if (parts > max_parts) {
      report.holds = false;
      report.failures.push_back("axis " + std::to_string(j) + " projection " + report.projections.back().str() +
                                " needs " + std::to_string(parts) + " lacunary parts, more than " +
                                std::to_string(max_parts));
    } else {
      report.failures.emplace_back();
    }
  }
  return report;
}

} // namespace weylac
