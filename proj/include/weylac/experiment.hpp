#pragma once

// End-to-end uncertainty experiment on SU(2): starting from a band-limited f with
// prescribed spectrum, trace each step of the vanishing argument numerically:
//
//   orbit           Weyl orbit of the spectrum and its lacunary certification
//   F_f             central average by quadrature vs. the character expansion
//   Delta+ product  Delta+ F_f as a torus series and its spectrum
//   scan            sampled search for boxes where F_f, Delta+ F_f or f vanish

#include "weylac/lacunary.hpp"
#include "weylac/rational.hpp"
#include "weylac/root_system.hpp"
#include "weylac/su2_analysis.hpp"
#include "weylac/torus_fourier.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace weylac {

enum class CoefficientMode { identity, random, file };

struct ScanParams {
  double box_side = 0.05;
  double delta_rel = 1e-3;
  std::size_t torus_points = 4096;
  std::array<int, 3> group_centers{12, 6, 12};
  int group_samples = 5;

  friend bool operator==(const ScanParams&, const ScanParams&) = default;
};

/// Plain-text `key = value` configuration; `#` starts a comment.
struct ExperimentConfig {
  GroupId group = GroupId::su2;
  std::vector<std::int64_t> spectrum;
  Rational q{2};
  std::int64_t cutoff = 1;
  std::size_t max_parts = 1;
  CoefficientMode coefficients = CoefficientMode::identity;
  std::string coefficients_file;
  std::uint64_t seed = 1;
  std::optional<std::array<int, 3>> haar_grid;  // defaults to the band-limit rule
  std::size_t check_points = 64;
  ScanParams scan;
  std::string output_dir;

  /// Throws ParameterError on unknown keys, malformed values or violated preconditions.
  static ExperimentConfig parse(std::string_view text);
  static ExperimentConfig load(const std::filesystem::path& path);
  std::string serialize() const;
  void validate() const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

struct GroupScanReport {
  double box_side = 0.0;
  double threshold = 0.0;
  std::array<int, 3> centers{};
  int samples_per_side = 0;
  std::size_t boxes_scanned = 0;
  std::array<double, 3> worst_box_center{};
  double worst_box_max = 0.0;
  double worst_box_min = 0.0;
  std::vector<std::array<double, 3>> vanishing_boxes;

  struct Box {
    std::array<double, 3> center;
    double value_at_center;
    double max;
    double min;
  };
  std::vector<Box> boxes;
};

/// Samples |f| on Euler-angle boxes of side `box_side` centred on a regular grid of
/// centres (phi, theta, psi); a box vanishes when its sampled maximum is below delta.
GroupScanReport scan_group(const su2::GroupFunction& f, const ScanParams& params, double delta);

struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<int> support;
  bool f_is_zero = true;
  double f_norm = 0.0;

  ConditionReport condition;           // highest weights n
  ConditionReport exponent_condition;  // torus exponents n + 1

  std::map<int, std::complex<double>> traces;
  TorusSeries central_series{1};
  double central_paths_max_error = 0.0;

  TorusSeries delta_product{1};
  SpectrumSet product_spectrum{1};
  SpectrumSet expected_orbit{1};
  bool containment = false;

  ScanReport central_scan;
  ScanReport product_scan;
  GroupScanReport group_scan;

  std::vector<double> trace_angles;
  std::vector<std::complex<double>> central_samples;
  std::vector<std::complex<double>> product_samples;

  std::vector<Assertion> assertions;
  bool passed() const;
};

/// Coefficients named by the config: A_n = I/(n+1), seeded Gaussian, or a JSON file.
su2::BandlimitedFunction coefficients_for(const ExperimentConfig& config);

ExperimentReport run_uncertainty_experiment(const ExperimentConfig& config);
ExperimentReport run_uncertainty_experiment(const ExperimentConfig& config, const su2::BandlimitedFunction& f);

/// Writes report.json and the CSV/TSV traces into `dir`.
void write_report_bundle(const ExperimentReport& report, const std::filesystem::path& dir);

} // namespace weylac
