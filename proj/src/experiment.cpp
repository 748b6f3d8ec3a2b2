#include "weylac/experiment.hpp"

#include "weylac/character.hpp"
#include "weylac/error.hpp"
#include "weylac/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace weylac {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParameterError("config key '" + std::string(key) + "': cannot parse '" + std::string(text) + "'");
  }
  return value;
}

template <class T>
std::vector<T> parse_list(std::string_view key, std::string_view text) {
  text = trim(text);
  if (!text.empty() && (text.front() == '{' || text.front() == '[')) text.remove_prefix(1);
  if (!text.empty() && (text.back() == '}' || text.back() == ']')) text.remove_suffix(1);
  std::vector<T> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_number<T>(key, trim(text.substr(start, comma - start))));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

template <class Range>
std::string join(const Range& r) {
  std::string out;
  for (const auto& v : r) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string_view to_string(CoefficientMode m) {
  switch (m) {
    case CoefficientMode::identity: return "identity";
    case CoefficientMode::random: return "random";
    case CoefficientMode::file: return "file";
  }
  return "identity";
}

std::array<int, 3> parse_triple(std::string_view key, std::string_view value) {
  const auto v = parse_list<int>(key, value);
  if (v.size() != 3) throw ParameterError("config key '" + std::string(key) + "' needs three integers");
  return {v[0], v[1], v[2]};
}

} // namespace

ExperimentConfig ExperimentConfig::parse(std::string_view text) {
  ExperimentConfig c;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParameterError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));

    if (key == "group") {
      c.group = parse_group_id(value);
    } else if (key == "spectrum") {
      c.spectrum = parse_list<std::int64_t>(key, value);
    } else if (key == "q") {
      try {
        c.q = Rational::parse(value);
      } catch (const Error& e) {
        throw ParameterError(std::string("config key 'q': ") + e.what());
      }
    } else if (key == "n") {
      c.cutoff = parse_number<std::int64_t>(key, value);
    } else if (key == "r") {
      c.max_parts = parse_number<std::size_t>(key, value);
    } else if (key == "coefficients") {
      if (value == "identity") c.coefficients = CoefficientMode::identity;
      else if (value == "random") c.coefficients = CoefficientMode::random;
      else if (value == "file") c.coefficients = CoefficientMode::file;
      else throw ParameterError("config key 'coefficients' must be identity, random or file");
    } else if (key == "coefficients_file") {
      c.coefficients_file = std::string(value);
    } else if (key == "seed") {
      c.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "haar_grid") {
      if (value == "auto") c.haar_grid.reset();
      else c.haar_grid = parse_triple(key, value);
    } else if (key == "check_points") {
      c.check_points = parse_number<std::size_t>(key, value);
    } else if (key == "torus_points") {
      c.scan.torus_points = parse_number<std::size_t>(key, value);
    } else if (key == "box_side") {
      c.scan.box_side = parse_number<double>(key, value);
    } else if (key == "delta_rel") {
      c.scan.delta_rel = parse_number<double>(key, value);
    } else if (key == "group_centers") {
      c.scan.group_centers = parse_triple(key, value);
    } else if (key == "group_samples") {
      c.scan.group_samples = parse_number<int>(key, value);
    } else if (key == "output_dir") {
      c.output_dir = std::string(value);
    } else {
      throw ParameterError("config line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  c.validate();
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot read config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string ExperimentConfig::serialize() const {
  std::ostringstream out;
  out << "group = " << to_string(group) << '\n';
  out << "spectrum = " << join(spectrum) << '\n';
  out << "q = " << q.str() << '\n';
  out << "n = " << cutoff << '\n';
  out << "r = " << max_parts << '\n';
  out << "coefficients = " << to_string(coefficients) << '\n';
  if (!coefficients_file.empty()) out << "coefficients_file = " << coefficients_file << '\n';
  out << "seed = " << seed << '\n';
  out << "haar_grid = " << (haar_grid ? join(*haar_grid) : std::string("auto")) << '\n';
  out << "check_points = " << check_points << '\n';
  out << "torus_points = " << scan.torus_points << '\n';
  out << "box_side = " << format_double(scan.box_side) << '\n';
  out << "delta_rel = " << format_double(scan.delta_rel) << '\n';
  out << "group_centers = " << join(scan.group_centers) << '\n';
  out << "group_samples = " << scan.group_samples << '\n';
  if (!output_dir.empty()) out << "output_dir = " << output_dir << '\n';
  return out.str();
}

void ExperimentConfig::validate() const {
  if (q <= Rational(1)) throw ParameterError("q must exceed 1, got " + q.str());
  if (cutoff < 1) throw ParameterError("n must be at least 1");
  if (max_parts < 1) throw ParameterError("r must be at least 1");
  for (auto n : spectrum) {
    if (n < 0) throw ParameterError("spectrum entries must be nonnegative highest weights");
    if (n > 64) throw ParameterError("spectrum entries above 64 are not supported");
  }
  if (coefficients == CoefficientMode::file && coefficients_file.empty()) {
    throw ParameterError("coefficients = file needs coefficients_file");
  }
  if (haar_grid && std::ranges::any_of(*haar_grid, [](int v) { return v < 2; })) {
    throw ParameterError("haar_grid counts must be at least 2");
  }
  if (check_points < 1) throw ParameterError("check_points must be positive");
  if (!(scan.box_side > 0.0) || !(scan.delta_rel > 0.0)) {
    throw ParameterError("box_side and delta_rel must be positive");
  }
  if (std::ranges::any_of(scan.group_centers, [](int v) { return v < 1; }) || scan.group_samples < 2) {
    throw ParameterError("group_centers must be positive and group_samples at least 2");
  }
}

bool ExperimentReport::passed() const {
  return std::ranges::all_of(assertions, [](const Assertion& a) { return a.passed; });
}

GroupScanReport scan_group(const su2::GroupFunction& f, const ScanParams& params, double delta) {
  constexpr double kPi = std::numbers::pi;
  GroupScanReport r;
  r.box_side = params.box_side;
  r.threshold = delta;
  r.centers = params.group_centers;
  r.samples_per_side = params.group_samples;
  r.worst_box_max = std::numeric_limits<double>::infinity();

  const std::array<double, 3> period{2 * kPi, kPi, 4 * kPi};
  const int m = params.group_samples;
  std::vector<double> offsets(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) offsets[static_cast<std::size_t>(k)] = params.box_side * (k / double(m - 1) - 0.5);

  for (int i = 0; i < params.group_centers[0]; ++i) {
    for (int j = 0; j < params.group_centers[1]; ++j) {
      for (int l = 0; l < params.group_centers[2]; ++l) {
        const std::array<double, 3> c{period[0] * (i + 0.5) / params.group_centers[0],
                                      period[1] * (j + 0.5) / params.group_centers[1],
                                      period[2] * (l + 0.5) / params.group_centers[2]};
        double mx = 0.0;
        double mn = std::numeric_limits<double>::infinity();
        for (double a : offsets)
          for (double b : offsets)
            for (double d : offsets) {
              const double v = std::abs(f(su2::GroupElement::euler(c[0] + a, c[1] + b, c[2] + d)));
              mx = std::max(mx, v);
              mn = std::min(mn, v);
            }
        const double at_center = std::abs(f(su2::GroupElement::euler(c[0], c[1], c[2])));
        r.boxes.push_back({c, at_center, mx, mn});
        if (mx < delta) r.vanishing_boxes.push_back(c);
        if (mx < r.worst_box_max) {
          r.worst_box_max = mx;
          r.worst_box_min = mn;
          r.worst_box_center = c;
        }
      }
    }
  }
  r.boxes_scanned = r.boxes.size();
  return r;
}

su2::BandlimitedFunction coefficients_for(const ExperimentConfig& config) {
  std::vector<int> support(config.spectrum.begin(), config.spectrum.end());
  std::ranges::sort(support);
  support.erase(std::unique(support.begin(), support.end()), support.end());

  switch (config.coefficients) {
    case CoefficientMode::identity: {
      su2::BandlimitedFunction f;
      for (int n : support) f.set(n, su2::Matrix::Identity(n + 1, n + 1) / static_cast<double>(n + 1));
      return f;
    }
    case CoefficientMode::random: {
      std::mt19937_64 rng(config.seed);
      return su2::BandlimitedFunction::random(support, rng);
    }
    case CoefficientMode::file: {
      std::ifstream in(config.coefficients_file);
      if (!in) throw ParameterError("cannot read coefficients_file " + config.coefficients_file);
      su2::BandlimitedFunction f;
      try {
        f = bandlimited_from_json(Json::parse(in));
      } catch (const Json::exception& e) {
        throw ParameterError(std::string("coefficients_file: ") + e.what());
      }
      for (int n : f.support()) {
        if (!std::ranges::binary_search(support, n)) {
          throw ParameterError("coefficients_file has weight " + std::to_string(n) + " outside the spectrum");
        }
      }
      return f;
    }
  }
  return {};
}

ExperimentReport run_uncertainty_experiment(const ExperimentConfig& config) {
  config.validate();
  return run_uncertainty_experiment(config, coefficients_for(config));
}

ExperimentReport run_uncertainty_experiment(const ExperimentConfig& config, const su2::BandlimitedFunction& f) {
  config.validate();
  if (config.group != GroupId::su2) {
    throw ParameterError("experiments are implemented for su2 only, got " + std::string(to_string(config.group)));
  }
  const RootSystem rs = build_root_system(GroupId::su2);
  constexpr double kContainmentThreshold = 1e-9;
  constexpr double kPathTolerance = 1e-6;

  ExperimentReport rep;
  rep.config = config;
  rep.support = f.support();
  rep.f_is_zero = rep.support.empty();
  rep.f_norm = f.l2_norm();
  const int band = std::max(f.band_limit(), 0);

  // orbit
  SpectrumSet highest(1), exponents(1);
  for (auto n : config.spectrum) {
    highest.insert(Weight::from_natural({n}));
    exponents.insert(Weight::from_natural({n + 1}));
  }
  rep.condition = check_orbit_lacunarity(rs, highest, config.q, config.cutoff, config.max_parts);
  rep.exponent_condition = check_orbit_lacunarity(rs, exponents, config.q, config.cutoff, config.max_parts);
  rep.expected_orbit = orbit_of_set(rs, exponents);

  // F_f
  const su2::HaarGrid haar = config.haar_grid
                                 ? su2::haar_grid((*config.haar_grid)[0], (*config.haar_grid)[1], (*config.haar_grid)[2])
                                 : su2::haar_grid_for_band_limit(band);
  rep.traces = su2::character_traces(f, haar);
  rep.central_series = su2::char_expansion(f, haar);

  std::vector<double> thetas(config.check_points);
  for (std::size_t k = 0; k < thetas.size(); ++k) {
    thetas[k] = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(thetas.size());
  }
  const auto direct =
      su2::central_average(f.as_function(), band, thetas, su2::conjugation_grid_for_band_limit(band));
  for (std::size_t k = 0; k < thetas.size(); ++k) {
    const double t[1] = {thetas[k]};
    rep.central_paths_max_error = std::max(rep.central_paths_max_error, std::abs(direct[k] - evaluate(rep.central_series, t)));
  }

  // Delta+ product
  rep.delta_product = product(weyl_denominator_product(rs).to_series(), rep.central_series);
  rep.product_spectrum = spectrum(rep.delta_product, kContainmentThreshold);
  rep.containment = rep.expected_orbit.includes(rep.product_spectrum);

  // scan
  const GridSpec torus = GridSpec::uniform(1, config.scan.torus_points);
  const auto delta_for = [&](double norm) { return config.scan.delta_rel * (norm > 0.0 ? norm : 1.0); };
  rep.central_samples = synthesize_grid(rep.central_series, torus);
  rep.product_samples = synthesize_grid(rep.delta_product, torus);
  rep.trace_angles.resize(torus.total());
  for (std::size_t i = 0; i < torus.total(); ++i) rep.trace_angles[i] = torus.angle(0, i);
  rep.central_scan = zero_scan(rep.central_series, torus, config.scan.box_side, delta_for(l2_norm(rep.central_series)));
  rep.product_scan = zero_scan(rep.delta_product, torus, config.scan.box_side, delta_for(l2_norm(rep.delta_product)));
  rep.group_scan = scan_group(f.as_function(), config.scan, delta_for(rep.f_norm));

  // assertions
  {
    std::ostringstream d;
    d << "max deviation " << rep.central_paths_max_error << " over " << thetas.size() << " angles";
    rep.assertions.push_back({"F_f paths agree", rep.central_paths_max_error <= kPathTolerance, d.str()});
  }
  {
    std::ostringstream d;
    d << rep.product_spectrum.size() << " exponents inside an orbit of " << rep.expected_orbit.size();
    rep.assertions.push_back({"Delta+ spectrum in shifted orbit", rep.containment, d.str()});
  }
  const bool central_zero = rep.central_series.empty();
  const auto all_vanish = [](std::size_t vanishing, std::size_t scanned) { return vanishing == scanned; };
  if (rep.f_is_zero) {
    const bool ok = all_vanish(rep.group_scan.vanishing_boxes.size(), rep.group_scan.boxes_scanned) &&
                    all_vanish(rep.central_scan.vanishing_boxes.size(), rep.central_scan.boxes_scanned) &&
                    all_vanish(rep.product_scan.vanishing_boxes.size(), rep.product_scan.boxes_scanned);
    rep.assertions.push_back({"zero function vanishes everywhere", ok, "f has empty spectrum"});
  } else {
    rep.assertions.push_back({"no vanishing box for |f| on G", rep.group_scan.vanishing_boxes.empty(),
                              std::to_string(rep.group_scan.vanishing_boxes.size()) + " of " +
                                  std::to_string(rep.group_scan.boxes_scanned) + " boxes below threshold"});
    if (central_zero) {
      const bool ok = all_vanish(rep.central_scan.vanishing_boxes.size(), rep.central_scan.boxes_scanned);
      rep.assertions.push_back({"F_f identically zero", ok, "all traces vanish"});
    } else {
      rep.assertions.push_back({"no vanishing box for F_f", !rep.central_scan.any_vanishing(),
                                std::to_string(rep.central_scan.vanishing_boxes.size()) + " boxes below threshold"});
      rep.assertions.push_back({"no vanishing box for Delta+ F_f", !rep.product_scan.any_vanishing(),
                                std::to_string(rep.product_scan.vanishing_boxes.size()) + " boxes below threshold"});
    }
  }
  return rep;
}

void write_report_bundle(const ExperimentReport& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto open = [&](const char* name) {
    std::ofstream out(dir / name);
    if (!out) throw ParameterError("cannot write " + (dir / name).string());
    return out;
  };
  {
    auto out = open("report.json");
    out << to_json(report).dump(2) << '\n';
  }
  const GridSpec torus = GridSpec::uniform(1, report.trace_angles.size());
  {
    auto out = open("F_f.csv");
    write_grid_samples_csv(out, torus, report.central_samples);
  }
  {
    auto out = open("delta_F_f.csv");
    write_grid_samples_csv(out, torus, report.product_samples);
  }
  {
    auto out = open("F_f_abs.tsv");
    write_magnitude_tsv(out, torus, report.central_samples);
  }
  {
    auto out = open("traces.csv");
    out << "theta,abs_F_f,abs_delta_F_f\n";
    out.precision(17);
    for (std::size_t i = 0; i < report.trace_angles.size(); ++i) {
      out << report.trace_angles[i] << ',' << std::abs(report.central_samples[i]) << ','
          << std::abs(report.product_samples[i]) << '\n';
    }
  }
  {
    auto out = open("f_group.csv");
    out << "phi,theta,psi,abs_f,box_max,box_min\n";
    out.precision(17);
    for (const auto& b : report.group_scan.boxes) {
      out << b.center[0] << ',' << b.center[1] << ',' << b.center[2] << ',' << b.value_at_center << ',' << b.max
          << ',' << b.min << '\n';
    }
  }
}

} // namespace weylac
