#include "reldisp/io.hpp"

#include "reldisp/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace reldisp::io {

using nlohmann::json;

namespace {

bool
is_separator(char c)
{
  return c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ';';
}

double
parse_token(std::string_view tok, std::size_t line, std::size_t column)
{
  std::string_view digits = tok;
  if (!digits.empty() && digits.front() == '+')
    digits.remove_prefix(1);
  double v = 0.0;
  auto res = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || res.ec != std::errc() ||
      res.ptr != digits.data() + digits.size())
    throw ParseError("malformed number '" + std::string(tok) + "' at line " +
                       std::to_string(line) + ", column " + std::to_string(column),
                     line, column);
  if (!std::isfinite(v))
    throw ParseError("non-finite value '" + std::string(tok) + "' at line " +
                       std::to_string(line) + ", column " + std::to_string(column),
                     line, column);
  return v;
}

std::vector<std::string_view>
split_csv_line(std::string_view line)
{
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(',', start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return out;
}

json
slot_json(const CoefficientSlot& s)
{
  json j;
  if (s.present()) {
    j["value"] = *s.value;
    if (s.out_of_unit_range)
      j["out_of_unit_range"] = true;
  } else {
    j["value"] = nullptr;
    j["absent_reason"] = s.absent_reason;
  }
  return j;
}

std::string
slot_csv(const CoefficientSlot& s)
{
  return s.present() ? format_number(*s.value) : std::string();
}

std::string
closedness_name(Closedness c)
{
  return c == Closedness::LeftClosed ? "left" : "right";
}

// ---- SVG -------------------------------------------------------------------

struct Frame
{
  double x0, x1, y0, y1;
  const SvgOptions& opt;
  static constexpr double margin = 48.0;

  double px(double x) const
  {
    const double span = x1 > x0 ? x1 - x0 : 1.0;
    return margin + (x - x0) / span * (opt.width - 2 * margin);
  }
  double py(double y) const
  {
    const double span = y1 > y0 ? y1 - y0 : 1.0;
    return opt.height - margin - (y - y0) / span * (opt.height - 2 * margin);
  }
};

std::string
xml_escape(std::string_view s)
{
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string
svg_open(const SvgOptions& opt)
{
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << opt.width << "\" height=\"" << opt.height << "\" viewBox=\"0 0 "
     << opt.width << ' ' << opt.height << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << opt.width << "\" height=\""
     << opt.height << "\" fill=\"white\" class=\"background\"/>\n";
  if (!opt.title.empty())
    os << "<text x=\"" << opt.width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
       << "font-family=\"sans-serif\" font-size=\"14\">" << xml_escape(opt.title)
       << "</text>\n";
  return os.str();
}

std::string
svg_axes(const Frame& f)
{
  std::ostringstream os;
  const double left = Frame::margin;
  const double bottom = f.opt.height - Frame::margin;
  os << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
     << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\""
     << f.opt.width - Frame::margin << "\" y2=\"" << bottom << "\"/>\n"
     << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << left
     << "\" y2=\"" << Frame::margin << "\"/>\n"
     << "</g>\n"
     << "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"10\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = f.x0 + (f.x1 - f.x0) * i / 4.0;
    const double yv = f.y0 + (f.y1 - f.y0) * i / 4.0;
    os << "<text x=\"" << f.px(xv) << "\" y=\"" << bottom + 14
       << "\" text-anchor=\"middle\">" << format_number(std::round(xv * 1e4) / 1e4)
       << "</text>\n"
       << "<text x=\"" << left - 4 << "\" y=\"" << f.py(yv) + 3
       << "\" text-anchor=\"end\">" << format_number(std::round(yv * 1e4) / 1e4)
       << "</text>\n";
  }
  os << "</g>\n";
  return os.str();
}

std::string
svg_polyline(const Frame& f, std::span<const double> x, std::span<const double> y,
             std::string_view cls, std::string_view style)
{
  std::ostringstream os;
  os << "<polyline class=\"" << cls << "\" fill=\"none\" " << style << " points=\"";
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double yv = y[i];
    if (f.opt.log_y) {
      if (!(yv > 0.0))
        continue;
      yv = std::log10(yv);
    }
    if (!first)
      os << ' ';
    first = false;
    os << f.px(x[i]) << ',' << f.py(yv);
  }
  os << "\"/>\n";
  return os.str();
}

std::pair<double, double>
y_limits(const SvgOptions& opt, std::initializer_list<std::span<const double>> series)
{
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (auto s : series)
    for (double v : s) {
      if (opt.log_y) {
        if (!(v > 0.0))
          continue;
        v = std::log10(v);
      }
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  if (!std::isfinite(lo))
    return { 0.0, 1.0 };
  if (!opt.log_y)
    lo = std::min(lo, 0.0);
  if (hi <= lo)
    hi = lo + 1.0;
  return { lo, hi };
}

} // namespace

// ---- parsing ---------------------------------------------------------------

Sample
parse_sample(std::istream& in)
{
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_separator(line[i]))
        ++i;
      if (i >= line.size())
        break;
      std::size_t j = i;
      while (j < line.size() && !is_separator(line[j]))
        ++j;
      values.push_back(
        parse_token(std::string_view(line).substr(i, j - i), lineno, i + 1));
      i = j;
    }
  }
  if (values.empty())
    throw InvalidSampleError("input contains no values");
  return Sample(std::move(values));
}

Sample
parse_sample(std::string_view text)
{
  std::istringstream in{ std::string(text) };
  return parse_sample(in);
}

std::string
format_number(double v)
{
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// ---- JSON ------------------------------------------------------------------

json
to_json(const SummaryStats& s)
{
  return { { "n", s.n },     { "mean", s.mean }, { "sd", s.sd },
           { "min", s.min }, { "max", s.max },   { "range", s.range } };
}

json
to_json(const DispersionReport& r)
{
  return { { "n", r.n },
           { "cv", slot_json(r.cv) },
           { "cv_corrected", slot_json(r.cv_corrected) },
           { "crd", slot_json(r.crd) },
           { "crd_corrected", slot_json(r.crd_corrected) } };
}

json
to_json(const Histogram& h)
{
  return { { "breaks", h.breaks },
           { "counts", h.counts },
           { "relative", h.relative },
           { "density", h.density },
           { "closed", closedness_name(h.closedness) } };
}

json
to_json(const Polyline& p)
{
  return { { "x", p.x }, { "y", p.y } };
}

json
to_json(const DensityEstimate& d)
{
  return { { "kernel", std::string(to_string(d.kernel)) },
           { "h", d.h },
           { "n", d.n },
           { "x", d.x },
           { "y", d.y } };
}

json
to_json(const Band& b)
{
  return { { "x", b.x },
           { "lower", b.lower },
           { "median", b.median },
           { "upper", b.upper },
           { "original", b.original } };
}

// ---- CSV -------------------------------------------------------------------

std::string
to_csv(const SummaryStats& s)
{
  return "n,mean,sd,min,max,range\n" + std::to_string(s.n) + ',' +
         format_number(s.mean) + ',' + format_number(s.sd) + ',' +
         format_number(s.min) + ',' + format_number(s.max) + ',' +
         format_number(s.range) + '\n';
}

std::string
to_csv(const DispersionReport& r)
{
  std::string out = "coefficient,value,absent_reason\n";
  const std::pair<const char*, const CoefficientSlot*> rows[] = {
    { "cv", &r.cv },
    { "cv_corrected", &r.cv_corrected },
    { "crd", &r.crd },
    { "crd_corrected", &r.crd_corrected }
  };
  for (const auto& [name, slot] : rows)
    out += std::string(name) + ',' + slot_csv(*slot) + ',' + slot->absent_reason + '\n';
  return out;
}

std::string
to_csv(const Histogram& h)
{
  std::string out = "lower,upper,count,relative,density\n";
  for (std::size_t i = 0; i < h.bins(); ++i)
    out += format_number(h.breaks[i]) + ',' + format_number(h.breaks[i + 1]) + ',' +
           std::to_string(h.counts[i]) + ',' + format_number(h.relative[i]) + ',' +
           format_number(h.density[i]) + '\n';
  return out;
}

std::string
to_csv(const DensityEstimate& d)
{
  std::string out = "x,y,kernel,h,n\n";
  const std::string tail = ',' + std::string(to_string(d.kernel)) + ',' +
                           format_number(d.h) + ',' + std::to_string(d.n) + '\n';
  for (std::size_t i = 0; i < d.x.size(); ++i)
    out += format_number(d.x[i]) + ',' + format_number(d.y[i]) + tail;
  return out;
}

std::string
to_csv(const Band& b)
{
  std::string out = "x,lower,median,upper,original\n";
  for (std::size_t i = 0; i < b.x.size(); ++i)
    out += format_number(b.x[i]) + ',' + format_number(b.lower[i]) + ',' +
           format_number(b.median[i]) + ',' + format_number(b.upper[i]) + ',' +
           format_number(b.original[i]) + '\n';
  return out;
}

DensityEstimate
density_from_csv(std::string_view csv)
{
  std::istringstream in{ std::string(csv) };
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line) || line != "x,y,kernel,h,n")
    throw ParseError("density CSV must start with the header x,y,kernel,h,n", 1, 1);

  DensityEstimate d;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty())
      continue;
    const auto cols = split_csv_line(line);
    if (cols.size() != 5)
      throw ParseError("expected 5 columns at line " + std::to_string(lineno),
                       lineno, 1);
    d.x.push_back(parse_token(cols[0], lineno, 1));
    d.y.push_back(parse_token(cols[1], lineno, 2));
    if (first) {
      try {
        d.kernel = kernel_from_name(cols[2]);
      } catch (const DomainError& e) {
        throw ParseError(std::string(e.what()) + " at line " + std::to_string(lineno),
                         lineno, 3);
      }
      d.h = parse_token(cols[3], lineno, 4);
      d.n = static_cast<std::size_t>(parse_token(cols[4], lineno, 5));
      first = false;
    }
  }
  if (first)
    throw ParseError("density CSV has no rows", lineno, 1);
  return d;
}

// ---- SVG -------------------------------------------------------------------

std::string
svg_histogram(const Histogram& h, const SvgOptions& opt)
{
  SvgOptions o = opt;
  o.log_y = false;
  const double top = h.density.empty()
                       ? 1.0
                       : *std::max_element(h.density.begin(), h.density.end());
  const Frame f{ h.breaks.front(), h.breaks.back(), 0.0, top > 0 ? top : 1.0, o };
  std::ostringstream os;
  os << svg_open(o) << svg_axes(f) << "<g class=\"bars\" fill=\"#bbbbbb\" stroke=\"black\">\n";
  for (std::size_t i = 0; i < h.bins(); ++i) {
    const double x = f.px(h.breaks[i]);
    const double w = f.px(h.breaks[i + 1]) - x;
    const double y = f.py(h.density[i]);
    os << "<rect class=\"bar\" x=\"" << x << "\" y=\"" << y << "\" width=\"" << w
       << "\" height=\"" << f.py(0.0) - y << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string
svg_density(const DensityEstimate& d, const SvgOptions& opt)
{
  const auto [y0, y1] = y_limits(opt, { d.y });
  const Frame f{ d.x.front(), d.x.back(), y0, y1, opt };
  std::ostringstream os;
  os << svg_open(opt) << svg_axes(f)
     << svg_polyline(f, d.x, d.y, "density", "stroke=\"black\" stroke-width=\"2\"")
     << "</svg>\n";
  return os.str();
}

std::string
svg_band(const Band& b, const SvgOptions& opt)
{
  const auto [y0, y1] = y_limits(opt, { b.lower, b.upper, b.original });
  const Frame f{ b.x.front(), b.x.back(), y0, y1, opt };
  const char* dashed = "stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"6,4\"";
  std::ostringstream os;
  os << svg_open(opt) << svg_axes(f)
     << svg_polyline(f, b.x, b.lower, "lower", dashed)
     << svg_polyline(f, b.x, b.upper, "upper", dashed)
     << svg_polyline(f, b.x, b.median, "median", "stroke=\"#888888\" stroke-width=\"1\"")
     << svg_polyline(f, b.x, b.original, "original", "stroke=\"black\" stroke-width=\"2.5\"")
     << "</svg>\n";
  return os.str();
}

} // namespace reldisp::io
