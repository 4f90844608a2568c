#pragma once

#include "reldisp/bootstrap.hpp"
#include "reldisp/coefficients.hpp"
#include "reldisp/core_stats.hpp"
#include "reldisp/histogram.hpp"
#include "reldisp/kde.hpp"

#include <json.hpp>

#include <istream>
#include <string>
#include <string_view>

namespace reldisp::io {

/// Reads numbers separated by commas, whitespace or newlines. Blank lines
/// and lines whose first non-blank character is '#' are skipped. Throws
/// ParseError (with 1-based line and column) on a malformed token, and
/// InvalidSampleError when no value is found.
Sample parse_sample(std::istream& in);
Sample parse_sample(std::string_view text);

//! Shortest decimal text that reads back to the same double.
std::string format_number(double v);

nlohmann::json to_json(const SummaryStats& s);
nlohmann::json to_json(const DispersionReport& r);
nlohmann::json to_json(const Histogram& h);
nlohmann::json to_json(const Polyline& p);
nlohmann::json to_json(const DensityEstimate& d);
nlohmann::json to_json(const Band& b);

std::string to_csv(const SummaryStats& s);
std::string to_csv(const DispersionReport& r);
std::string to_csv(const Histogram& h);
//! Columns x,y,kernel,h,n; the last three repeat on every row.
std::string to_csv(const DensityEstimate& d);
std::string to_csv(const Band& b);

/// Inverse of to_csv(DensityEstimate). Throws ParseError.
DensityEstimate density_from_csv(std::string_view csv);

struct SvgOptions
{
  double width = 640;
  double height = 400;
  bool log_y = false; // plot log10(y); nonpositive values are dropped
  std::string title;
};

std::string svg_histogram(const Histogram& h, const SvgOptions& opt = {});
std::string svg_density(const DensityEstimate& d, const SvgOptions& opt = {});
//! Median and original as solid polylines, lower/upper dashed.
std::string svg_band(const Band& b, const SvgOptions& opt = {});

} // namespace reldisp::io
