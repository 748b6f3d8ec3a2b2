#include "weylac/serialize.hpp"

#include "weylac/error.hpp"

#include <chrono>
#include <ctime>

namespace weylac {

namespace {

Json vec_json(std::span<const double> v) {
  Json j = Json::array();
  for (double x : v) j.push_back(x);
  return j;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::int64_t parse_half_integer(const Json& c) {
  if (c.is_number_integer()) return 2 * c.get<std::int64_t>();
  if (c.is_string()) {
    const Rational r = Rational::parse(c.get<std::string>());
    if (r.den() == 1) return 2 * r.num();
    if (r.den() == 2) return r.num();
  }
  throw DomainError("weight coordinate must be an integer or a \"p/2\" string: " + c.dump());
}

Json cplx_pair(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

} // namespace

Json to_json(const Weight& w) {
  Json j = Json::array();
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (w[i] % 2 == 0) j.push_back(w[i] / 2);
    else j.push_back(std::to_string(w[i]) + "/2");
  }
  return j;
}

Weight weight_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("weight must be an array");
  std::vector<std::int64_t> d;
  for (const auto& c : j) d.push_back(parse_half_integer(c));
  return Weight(std::move(d));
}

Json to_json(const SpectrumSet& s) {
  Json j = Json::array();
  for (const auto& w : s) j.push_back(to_json(w));
  return j;
}

Json to_json(const IntSet& s) { return Json(s.elements()); }

Json to_json(const TorusSeries& s) {
  Json j = Json::array();
  for (const auto& [e, c] : s) {
    Json term;
    term["exponent"] = std::vector<std::int64_t>(e.doubled().begin(), e.doubled().end());
    term["re"] = c.real();
    term["im"] = c.imag();
    j.push_back(std::move(term));
  }
  return j;
}

TorusSeries series_from_json(const Json& j, std::size_t rank) {
  TorusSeries::Terms terms;
  for (const auto& term : j) {
    Weight e(term.at("exponent").get<std::vector<std::int64_t>>());
    if (e.rank() != rank) throw DomainError("series exponent has the wrong rank");
    terms[e] += std::complex<double>(term.at("re").get<double>(), term.at("im").get<double>());
  }
  return TorusSeries(rank, std::move(terms), 0.0);
}

Json to_json(const LacunaryCert& c) {
  Json j;
  j["q"] = c.q.str();
  j["n"] = c.cutoff;
  j["parts"] = Json::array();
  for (const auto& p : c.parts) j["parts"].push_back(to_json(p));
  return j;
}

Json to_json(const ConditionReport& r) {
  Json j;
  j["holds"] = r.holds;
  j["q"] = r.q.str();
  j["n"] = r.cutoff;
  j["r"] = r.max_parts;
  j["orbit"] = to_json(r.orbit);
  j["projections"] = Json::array();
  for (const auto& p : r.projections) j["projections"].push_back(to_json(p));
  j["covers"] = Json::array();
  for (const auto& c : r.certs) j["covers"].push_back(to_json(c));
  j["failures"] = r.failures;
  return j;
}

Json to_json(const ScanReport& r) {
  Json j;
  j["box_side"] = r.box_side;
  j["threshold"] = r.threshold;
  j["samples_per_side"] = r.samples_per_side;
  j["boxes_scanned"] = r.boxes_scanned;
  j["worst_box_center"] = vec_json(r.worst_box_center);
  j["worst_box_max"] = r.worst_box_max;
  j["worst_box_min"] = r.worst_box_min;
  j["vanishing_count"] = r.vanishing_boxes.size();
  j["vanishing_boxes"] = Json::array();
  for (const auto& c : r.vanishing_boxes) j["vanishing_boxes"].push_back(vec_json(c));
  return j;
}

Json to_json(const GroupScanReport& r) {
  Json j;
  j["box_side"] = r.box_side;
  j["threshold"] = r.threshold;
  j["centers"] = r.centers;
  j["samples_per_side"] = r.samples_per_side;
  j["boxes_scanned"] = r.boxes_scanned;
  j["worst_box_center"] = r.worst_box_center;
  j["worst_box_max"] = r.worst_box_max;
  j["worst_box_min"] = r.worst_box_min;
  j["vanishing_count"] = r.vanishing_boxes.size();
  j["vanishing_boxes"] = r.vanishing_boxes;
  return j;
}

Json to_json(const su2::BandlimitedFunction& f) {
  Json j = Json::object();
  for (const auto& [n, a] : f.coefficients()) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      for (Eigen::Index c = 0; c < a.cols(); ++c) rows.push_back(cplx_pair(a(r, c)));
    j[std::to_string(n)] = std::move(rows);
  }
  return j;
}

su2::BandlimitedFunction bandlimited_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("band-limited function must be an object keyed by n");
  su2::BandlimitedFunction f;
  for (const auto& [key, entries] : j.items()) {
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size()) throw DomainError("bad weight key '" + key + "'");
    if (n < 0) throw DomainError("highest weight must be nonnegative");
    const auto d = static_cast<std::size_t>(n) + 1;
    if (!entries.is_array() || entries.size() != d * d) {
      throw DomainError("coefficient for n = " + key + " needs " + std::to_string(d * d) + " entries");
    }
    su2::Matrix a(n + 1, n + 1);
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const auto& e = entries[k];
      a(static_cast<Eigen::Index>(k / d), static_cast<Eigen::Index>(k % d)) =
          std::complex<double>(e.at(0).get<double>(), e.at(1).get<double>());
    }
    f.set(n, std::move(a));
  }
  return f;
}

Json to_json(const ExperimentReport& r) {
  Json j;
  j["group"] = std::string(to_string(r.config.group));
  Json cfg;
  cfg["text"] = r.config.serialize();
  cfg["spectrum"] = r.config.spectrum;
  cfg["q"] = r.config.q.str();
  cfg["n"] = r.config.cutoff;
  cfg["r"] = r.config.max_parts;
  j["config"] = std::move(cfg);

  Json fn;
  fn["support"] = r.support;
  fn["is_zero"] = r.f_is_zero;
  fn["l2_norm"] = r.f_norm;
  j["function"] = std::move(fn);

  Json steps;
  {
    Json orbit;
    orbit["highest_weights"] = to_json(r.condition);
    orbit["torus_exponents"] = to_json(r.exponent_condition);
    steps["orbit"] = std::move(orbit);
  }
  {
    Json ff;
    Json traces = Json::array();
    for (const auto& [n, t] : r.traces) traces.push_back({{"n", n}, {"re", t.real()}, {"im", t.imag()}});
    ff["traces"] = std::move(traces);
    ff["series"] = to_json(r.central_series);
    ff["quadrature_max_deviation"] = r.central_paths_max_error;
    ff["check_points"] = r.config.check_points;
    steps["F_f"] = std::move(ff);
  }
  {
    Json dp;
    dp["series"] = to_json(r.delta_product);
    dp["spectrum"] = to_json(r.product_spectrum);
    dp["shifted_orbit"] = to_json(r.expected_orbit);
    dp["contained"] = r.containment;
    steps["Delta+ product"] = std::move(dp);
  }
  {
    Json scan;
    scan["F_f"] = to_json(r.central_scan);
    scan["Delta+ product"] = to_json(r.product_scan);
    scan["f on G"] = to_json(r.group_scan);
    steps["scan"] = std::move(scan);
  }
  j["steps"] = std::move(steps);

  Json as = Json::array();
  for (const auto& a : r.assertions) as.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
  j["assertions"] = std::move(as);
  j["passed"] = r.passed();
  j["timestamp"] = utc_timestamp();
  return j;
}

void write_grid_samples_csv(std::ostream& out, const GridSpec& grid, std::span<const std::complex<double>> samples) {
  if (samples.size() != grid.total()) throw ParameterError("sample count does not match the grid");
  for (std::size_t a = 0; a < grid.rank(); ++a) out << "theta" << a << ',';
  out << "re,im\n";
  const auto old = out.precision(17);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (double x : grid.point(i)) out << x << ',';
    out << samples[i].real() << ',' << samples[i].imag() << '\n';
  }
  out.precision(old);
}

void write_magnitude_tsv(std::ostream& out, const GridSpec& grid, std::span<const std::complex<double>> samples) {
  if (samples.size() != grid.total()) throw ParameterError("sample count does not match the grid");
  for (std::size_t a = 0; a < grid.rank(); ++a) out << "theta" << a << '\t';
  out << "abs\n";
  const auto old = out.precision(17);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (double x : grid.point(i)) out << x << '\t';
    out << std::abs(samples[i]) << '\n';
  }
  out.precision(old);
}

} // namespace weylac
