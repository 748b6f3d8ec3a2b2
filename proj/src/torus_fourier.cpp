#include "weylac/torus_fourier.hpp"

#include "weylac/error.hpp"
#include "weylac/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace weylac {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDomain = 4.0 * std::numbers::pi;

using cplx = std::complex<double>;

} // namespace

GridSpec GridSpec::uniform(std::size_t rank, std::size_t points) {
  return GridSpec{std::vector<std::size_t>(rank, points)};
}

std::size_t GridSpec::total() const noexcept {
  std::size_t t = 1;
  for (auto p : points_per_axis) t *= p;
  return points_per_axis.empty() ? 0 : t;
}

double GridSpec::step(std::size_t axis) const { return kDomain / static_cast<double>(points_per_axis.at(axis)); }

std::vector<double> GridSpec::point(std::size_t flat_index) const {
  std::vector<double> out(rank());
  for (std::size_t j = rank(); j-- > 0;) {
    const auto p = points_per_axis[j];
    out[j] = angle(j, flat_index % p);
    flat_index /= p;
  }
  return out;
}

bool GridSpec::resolves(std::int64_t max_abs_doubled) const noexcept {
  return !points_per_axis.empty() &&
         std::all_of(points_per_axis.begin(), points_per_axis.end(),
                     [&](std::size_t p) { return static_cast<std::int64_t>(p) > 2 * max_abs_doubled; });
}

// ---------------------------------------------------------------------------
// Synthesis
// ---------------------------------------------------------------------------

std::vector<cplx> synthesize(const TorusSeries& series, std::span<const std::vector<double>> points) {
  const std::size_t n = points.size();
  for (const auto& pt : points) {
    if (pt.size() != series.rank()) throw DomainError("point rank does not match series rank");
  }
  std::vector<cplx> out(n);
  std::vector<double> phase(n);
  for (const auto& [e, c] : series) {
    for (std::size_t p = 0; p < n; ++p) {
      double ph = 0.0;
      for (std::size_t j = 0; j < e.rank(); ++j) ph += static_cast<double>(e[j]) * points[p][j];
      phase[p] = 0.5 * ph;
    }
    kernels::accumulate_phasors(out, c, phase);
  }
  return out;
}

cplx evaluate(const TorusSeries& series, std::span<const double> angles) {
  if (angles.size() != series.rank()) throw DomainError("point rank does not match series rank");
  cplx sum{};
  for (const auto& [e, c] : series) {
    double ph = 0.0;
    for (std::size_t j = 0; j < e.rank(); ++j) ph += static_cast<double>(e[j]) * angles[j];
    sum += c * std::polar(1.0, 0.5 * ph);
  }
  return sum;
}

std::vector<cplx> synthesize_grid(const TorusSeries& series, const GridSpec& grid) {
  if (grid.rank() != series.rank()) throw DomainError("grid rank does not match series rank");
  const std::size_t total = grid.total();
  std::vector<cplx> out(total);
  std::vector<double> phase(total);
  std::vector<std::size_t> idx(grid.rank());
  for (const auto& [e, c] : series) {
    std::fill(idx.begin(), idx.end(), 0);
    for (std::size_t f = 0; f < total; ++f) {
      // Reduce each axis product modulo the grid period before scaling to keep the
      // phase small: e * 4*pi*i/P / 2 = 2*pi * (e*i mod P) / P.
      double ph = 0.0;
      for (std::size_t j = 0; j < idx.size(); ++j) {
        const auto p = static_cast<std::int64_t>(grid.points_per_axis[j]);
        std::int64_t r = (e[j] * static_cast<std::int64_t>(idx[j])) % p;
        ph += kTwoPi * static_cast<double>(r) / static_cast<double>(p);
      }
      phase[f] = ph;
      for (std::size_t j = idx.size(); j-- > 0;) {
        if (++idx[j] < grid.points_per_axis[j]) break;
        idx[j] = 0;
      }
    }
    kernels::accumulate_phasors(out, c, phase);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Analysis
// ---------------------------------------------------------------------------

TorusSeries analyze(std::span<const cplx> samples, const GridSpec& grid, std::optional<std::int64_t> max_abs_doubled,
                    double threshold) {
  if (grid.rank() == 0) throw ParameterError("grid has no axes");
  if (samples.size() != grid.total()) throw ParameterError("sample count does not match the grid");
  if (max_abs_doubled && !grid.resolves(*max_abs_doubled)) {
    throw ParameterError("grid too small: every axis needs more than " + std::to_string(2 * *max_abs_doubled) +
                         " points for band limit " + std::to_string(*max_abs_doubled));
  }

  std::vector<cplx> data(samples.begin(), samples.end());
  std::vector<cplx> line, next;
  std::vector<double> phase;
  std::size_t inner = data.size();
  for (std::size_t j = 0; j < grid.rank(); ++j) {
    const std::size_t p = grid.points_per_axis[j];
    inner /= p;
    const std::size_t outer = data.size() / (p * inner);
    line.resize(p);
    phase.resize(p);
    next.assign(data.size(), cplx{});
    for (std::size_t b = 0; b < p; ++b) {
      for (std::size_t i = 0; i < p; ++i) {
        phase[i] = kTwoPi * static_cast<double>((b * i) % p) / static_cast<double>(p);
      }
      for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t in = 0; in < inner; ++in) {
          for (std::size_t i = 0; i < p; ++i) line[i] = data[(o * p + i) * inner + in];
          next[(o * p + b) * inner + in] = kernels::phasor_dot(line, phase) / static_cast<double>(p);
        }
      }
    }
    data.swap(next);
  }

  TorusSeries::Terms terms;
  for (std::size_t f = 0; f < data.size(); ++f) {
    if (std::abs(data[f]) < threshold) continue;
    std::vector<std::int64_t> e(grid.rank());
    std::size_t rem = f;
    for (std::size_t j = grid.rank(); j-- > 0;) {
      const auto p = static_cast<std::int64_t>(grid.points_per_axis[j]);
      std::int64_t b = static_cast<std::int64_t>(rem % grid.points_per_axis[j]);
      rem /= grid.points_per_axis[j];
      e[j] = 2 * b > p ? b - p : b;
    }
    terms.emplace(Weight(std::move(e)), data[f]);
  }
  return TorusSeries(grid.rank(), std::move(terms), threshold);
}

// ---------------------------------------------------------------------------
// Algebra
// ---------------------------------------------------------------------------

TorusSeries product(const TorusSeries& a, const TorusSeries& b) {
  if (a.rank() != b.rank()) throw DomainError("series rank mismatch in product");
  TorusSeries::Terms t;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) t[ea + eb] += ca * cb;
  return TorusSeries(a.rank(), std::move(t));
}

SpectrumSet spectrum(const TorusSeries& series, double threshold) {
  SpectrumSet out(series.rank());
  for (const auto& [e, c] : series)
    if (std::abs(c) >= threshold) out.insert(e);
  return out;
}

double l2_norm(const TorusSeries& series) {
  double s = 0.0;
  for (const auto& [e, c] : series) s += std::norm(c);
  return std::sqrt(s);
}

// ---------------------------------------------------------------------------
// Zero-set scanning
// ---------------------------------------------------------------------------

ScanReport zero_scan(const TorusSeries& series, const GridSpec& grid, double box_side, double delta) {
  const auto samples = synthesize_grid(series, grid);
  std::vector<double> mags(samples.size());
  kernels::magnitudes(samples, mags);
  return zero_scan_magnitudes(mags, grid, box_side, delta);
}

ScanReport zero_scan_magnitudes(std::span<const double> magnitudes, const GridSpec& grid, double box_side,
                                double delta) {
  if (grid.rank() == 0) throw ParameterError("grid has no axes");
  if (magnitudes.size() != grid.total()) throw ParameterError("sample count does not match the grid");
  if (!(box_side > 0.0) || box_side >= kDomain) throw ParameterError("box side must lie in (0, 4*pi)");
  if (!(delta > 0.0)) throw ParameterError("vanishing threshold must be positive");

  const std::size_t rank = grid.rank();
  ScanReport report;
  report.box_side = box_side;
  report.threshold = delta;

  std::vector<std::size_t> width(rank), stride(rank), boxes(rank);
  for (std::size_t j = 0; j < rank; ++j) {
    const double h = grid.step(j);
    if (h > box_side / 8.0 * (1.0 + 1e-12)) {
      throw ParameterError("grid step " + std::to_string(h) + " exceeds box_side/8 on axis " + std::to_string(j));
    }
    width[j] = static_cast<std::size_t>(std::floor(box_side / h * (1.0 + 1e-12))) + 1;
    stride[j] = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(0.5 * box_side / h)));
    boxes[j] = (grid.points_per_axis[j] + stride[j] - 1) / stride[j];
  }
  report.samples_per_side = width;

  // Separable sliding maximum: reduce one axis at a time to per-box maxima.
  std::vector<double> data(magnitudes.begin(), magnitudes.end());
  std::vector<std::size_t> dims = grid.points_per_axis;
  std::vector<double> next;
  for (std::size_t j = 0; j < rank; ++j) {
    const std::size_t p = dims[j];
    std::size_t inner = 1;
    for (std::size_t k = j + 1; k < rank; ++k) inner *= dims[k];
    std::size_t outer = 1;
    for (std::size_t k = 0; k < j; ++k) outer *= dims[k];
    next.assign(outer * boxes[j] * inner, 0.0);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t b = 0; b < boxes[j]; ++b) {
        const std::size_t start = b * stride[j];
        for (std::size_t in = 0; in < inner; ++in) {
          double m;
          if (inner == 1) {
            const double* row = data.data() + o * p;
            const std::size_t first = std::min(width[j], p - start);
            m = kernels::max_value({row + start, first});
            if (first < width[j]) m = std::max(m, kernels::max_value({row, width[j] - first}));
          } else {
            m = -std::numeric_limits<double>::infinity();
            for (std::size_t t = 0; t < width[j]; ++t) {
              m = std::max(m, data[(o * p + (start + t) % p) * inner + in]);
            }
          }
          next[(o * boxes[j] + b) * inner + in] = m;
        }
      }
    }
    data.swap(next);
    dims[j] = boxes[j];
  }
  report.boxes_scanned = data.size();

  auto center_of = [&](std::size_t flat) {
    std::vector<double> c(rank);
    for (std::size_t j = rank; j-- > 0;) {
      const std::size_t b = flat % boxes[j];
      flat /= boxes[j];
      c[j] = std::fmod(grid.angle(j, b * stride[j]) + 0.5 * grid.step(j) * static_cast<double>(width[j] - 1), kDomain);
    }
    return c;
  };

  std::size_t worst = 0;
  for (std::size_t f = 0; f < data.size(); ++f) {
    if (data[f] < data[worst]) worst = f;
    if (data[f] < delta) report.vanishing_boxes.push_back(center_of(f));
  }
  report.worst_box_center = center_of(worst);
  report.worst_box_max = data[worst];

  // Minimum of |g| over the samples of the worst box.
  std::vector<std::size_t> start(rank);
  {
    std::size_t rem = worst;
    for (std::size_t j = rank; j-- > 0;) {
      start[j] = (rem % boxes[j]) * stride[j];
      rem /= boxes[j];
    }
  }
  std::size_t box_total = 1;
  for (auto w : width) box_total *= w;
  double mn = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> off(rank, 0);
  for (std::size_t k = 0; k < box_total; ++k) {
    std::size_t flat = 0;
    for (std::size_t j = 0; j < rank; ++j) {
      flat = flat * grid.points_per_axis[j] + (start[j] + off[j]) % grid.points_per_axis[j];
    }
    mn = std::min(mn, magnitudes[flat]);
    for (std::size_t j = rank; j-- > 0;) {
      if (++off[j] < width[j]) break;
      off[j] = 0;
    }
  }
  report.worst_box_min = mn;
  return report;
}

} // namespace weylac
