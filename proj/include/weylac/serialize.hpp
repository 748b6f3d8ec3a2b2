#pragma once

// JSON and delimited-text encodings of the library's data types.

#include "weylac/experiment.hpp"
#include "weylac/lacunary.hpp"
#include "weylac/root_system.hpp"
#include "weylac/su2_analysis.hpp"
#include "weylac/torus_fourier.hpp"
#include "weylac/torus_series.hpp"

#include "json.hpp"

#include <complex>
#include <ostream>
#include <span>

namespace weylac {

using Json = nlohmann::ordered_json;

/// Natural coordinates: integers for characters, "p/2" strings otherwise.
Json to_json(const Weight& w);
Json to_json(const SpectrumSet& s);
Json to_json(const IntSet& s);
/// [{"exponent": [doubled...], "re": x, "im": y}, ...] in lexicographic exponent order.
Json to_json(const TorusSeries& s);
Json to_json(const LacunaryCert& c);
Json to_json(const ConditionReport& r);
Json to_json(const ScanReport& r);
Json to_json(const GroupScanReport& r);
/// {"<n>": [[re, im], ...] row-major}
Json to_json(const su2::BandlimitedFunction& f);
Json to_json(const ExperimentReport& r);

Weight weight_from_json(const Json& j);
TorusSeries series_from_json(const Json& j, std::size_t rank);
su2::BandlimitedFunction bandlimited_from_json(const Json& j);

/// One row per grid node: angle coordinates, re, im.
void write_grid_samples_csv(std::ostream& out, const GridSpec& grid, std::span<const std::complex<double>> samples);
/// One row per grid node: angle coordinates, |g|, tab separated.
void write_magnitude_tsv(std::ostream& out, const GridSpec& grid, std::span<const std::complex<double>> samples);

} // namespace weylac
