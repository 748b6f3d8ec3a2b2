#pragma once

#include "weylac/root_system.hpp"
#include "weylac/torus_series.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace weylac {

/// Regular product grid on the torus. Axis j carries points_per_axis[j] nodes at
/// the natural angles 4*pi*i/P, i.e. the grid spans two natural periods. With
/// that spacing DFT bin b on an axis is the doubled exponent b, so half-integer
/// exponents (the Weyl denominator of U(n)) are resolved exactly.
///
/// Samples on a grid are stored row-major with the last axis fastest.
struct GridSpec {
  std::vector<std::size_t> points_per_axis;

  static GridSpec uniform(std::size_t rank, std::size_t points);

  std::size_t rank() const noexcept { return points_per_axis.size(); }
  std::size_t total() const noexcept;
  double step(std::size_t axis) const;
  double angle(std::size_t axis, std::size_t index) const { return step(axis) * static_cast<double>(index); }
  std::vector<double> point(std::size_t flat_index) const;

  /// True iff every axis has more than 2 * max_abs_doubled points, the condition
  /// under which analysis of a series with that exponent bound is exact.
  bool resolves(std::int64_t max_abs_doubled) const noexcept;
};

/// g(theta) = sum_m c_m exp(i <m, theta>), m in natural coordinates (doubled / 2).
std::vector<std::complex<double>> synthesize(const TorusSeries& series, std::span<const std::vector<double>> points);
std::complex<double> evaluate(const TorusSeries& series, std::span<const double> angles);

/// Synthesis on every node of `grid`, in grid order.
std::vector<std::complex<double>> synthesize_grid(const TorusSeries& series, const GridSpec& grid);

/// Discrete Fourier coefficients of grid samples, pruned below `threshold`.
/// When `max_abs_doubled` is given, a grid that cannot resolve it raises ParameterError.
TorusSeries analyze(std::span<const std::complex<double>> samples, const GridSpec& grid,
                    std::optional<std::int64_t> max_abs_doubled = std::nullopt, double threshold = kZeroThreshold);

/// Exponent-wise convolution.
TorusSeries product(const TorusSeries& a, const TorusSeries& b);

/// Exponents whose coefficient magnitude is at least `threshold`.
SpectrumSet spectrum(const TorusSeries& series, double threshold = kZeroThreshold);

/// sqrt(sum |c_m|^2), the L2 norm of the function on the torus.
double l2_norm(const TorusSeries& series);

struct ScanReport {
  double box_side = 0.0;
  double threshold = 0.0;
  std::vector<std::size_t> samples_per_side;
  std::size_t boxes_scanned = 0;
  std::vector<double> worst_box_center;
  double worst_box_max = 0.0;  // smallest per-box maximum of |g|
  double worst_box_min = 0.0;  // minimum of |g| over the samples of that box
  std::vector<std::vector<double>> vanishing_boxes;

  bool any_vanishing() const noexcept { return !vanishing_boxes.empty(); }
};

/// Slides axis-aligned boxes of side `box_side` over the grid with a stride of
/// half the side (boxes wrap around the torus). A box vanishes when the maximum
/// of |g| over its samples is below `delta`. Requires grid step <= box_side / 8.
ScanReport zero_scan(const TorusSeries& series, const GridSpec& grid, double box_side, double delta);

/// Same scan over precomputed magnitudes |g| in grid order.
ScanReport zero_scan_magnitudes(std::span<const double> magnitudes, const GridSpec& grid, double box_side, double delta);

} // namespace weylac
