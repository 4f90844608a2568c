#include "reldisp/histogram.hpp"

#include "reldisp/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace reldisp {

namespace {

// A width m * 10^j evaluated so that i * w lands on the decimal value when
// j < 0 (dividing by an exact power of ten instead of multiplying by 0.1).
struct NiceWidth
{
  double mantissa;
  int exponent;

  double width() const { return at(1); }
  double at(long long i) const
  {
    const double scaled = static_cast<double>(i) * mantissa;
    return exponent >= 0 ? scaled * std::pow(10.0, exponent)
                         : scaled / std::pow(10.0, -exponent);
  }
};

struct NiceGrid
{
  NiceWidth w;
  long long first;
  long long last;

  long long bins() const { return last - first; }
};

NiceGrid
cover(const NiceWidth& w, double lo, double hi)
{
  const double width = w.width();
  auto first = static_cast<long long>(std::floor(lo / width));
  auto last = static_cast<long long>(std::ceil(hi / width));
  while (w.at(first) > lo)
    --first;
  while (w.at(first + 1) <= lo)
    ++first;
  while (w.at(last) < hi)
    ++last;
  while (last - 1 > first && w.at(last - 1) >= hi)
    --last;
  return { w, first, last };
}

std::string
describe(double v)
{
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

} // namespace

std::vector<double>
BinSpec::breaks() const
{
  std::vector<double> b(count + 1);
  for (std::size_t i = 0; i <= count; ++i)
    b[i] = origin + static_cast<double>(i) * width;
  return b;
}

BinSpec
BinSpec::covering(const Sample& sample, double origin, double width,
                  Closedness closedness)
{
  if (!(width > 0.0) || !std::isfinite(width))
    throw DomainError("bin width must be positive and finite");
  const SummaryStats s = summarize(sample);
  if (origin > s.min)
    throw CoverageError("bin origin " + describe(origin) +
                          " lies above the smallest value " + describe(s.min),
                        s.min);
  auto count = static_cast<std::size_t>(
    std::max(1.0, std::ceil((s.max - origin) / width)));
  while (origin + static_cast<double>(count) * width < s.max)
    ++count;
  while (count > 1 && origin + static_cast<double>(count - 1) * width >= s.max)
    --count;
  return { origin, width, count, closedness };
}

BinSpec
BinSpec::nice(const Sample& sample, std::size_t k, Closedness closedness)
{
  const SummaryStats s = summarize(sample);
  if (s.range == 0.0)
    return { s.min, 1.0, 1, closedness };
  const auto b = nice_breaks(s.min, s.max, k);
  const std::size_t count = b.size() - 1;
  // b[1] - b[0] can lose the last bit; derive the width from the whole span
  // and make sure rounding does not leave the maximum uncovered
  double width = (b.back() - b.front()) / static_cast<double>(count);
  while (b.front() + static_cast<double>(count) * width < s.max)
    width = std::nextafter(width, std::numeric_limits<double>::infinity());
  return { b.front(), width, count, closedness };
}

std::size_t
Histogram::total() const noexcept
{
  std::size_t t = 0;
  for (auto c : counts)
    t += c;
  return t;
}

std::size_t
sturges_k(std::size_t n)
{
  if (n == 0)
    throw DomainError("Sturges' rule requires n >= 1");
  // ceil(log2 n) without floating point: bit length of n - 1
  std::size_t bits = 0;
  for (std::size_t m = n - 1; m > 0; m >>= 1)
    ++bits;
  return bits + 1;
}

std::vector<double>
nice_breaks(double lo, double hi, std::size_t k)
{
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
    throw DomainError("nice_breaks requires finite lo < hi");
  if (k == 0)
    throw DomainError("nice_breaks requires k >= 1");

  static constexpr std::array<double, 4> mantissas{ 1.0, 2.0, 2.5, 5.0 };
  const int centre =
    static_cast<int>(std::floor(std::log10((hi - lo) / static_cast<double>(k))));

  bool found = false;
  NiceGrid best{ { 1.0, 0 }, 0, 0 };
  long long best_diff = 0;
  double best_span = 0.0;
  for (int j = centre + 2; j >= centre - 2; --j) {
    for (auto m = mantissas.rbegin(); m != mantissas.rend(); ++m) {
      const NiceGrid g = cover({ *m, j }, lo, hi);
      const long long diff =
        std::llabs(g.bins() - static_cast<long long>(k));
      const double span = g.w.at(g.last) - g.w.at(g.first);
      // candidates arrive from widest to narrowest; strict < keeps the wider
      if (!found || diff < best_diff ||
          (diff == best_diff && span < best_span)) {
        best = g;
        best_diff = diff;
        best_span = span;
        found = true;
      }
    }
  }

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(best.bins() + 1));
  for (long long i = best.first; i <= best.last; ++i)
    out.push_back(best.w.at(i));
  return out;
}

Histogram
build_histogram(std::span<const double> values, const std::vector<double>& breaks,
                Closedness closedness)
{
  if (breaks.size() < 2)
    throw DomainError("a histogram needs at least two breaks");
  if (!std::is_sorted(breaks.begin(), breaks.end()))
    throw DomainError("histogram breaks must be sorted");
  if (values.empty())
    throw InvalidSampleError("histogram of an empty sequence");

  const std::size_t bins = breaks.size() - 1;
  Histogram h;
  h.breaks = breaks;
  h.closedness = closedness;
  h.counts.assign(bins, 0);

  for (double v : values) {
    if (v < breaks.front() || v > breaks.back())
      throw CoverageError("value " + describe(v) + " lies outside the bins [" +
                            describe(breaks.front()) + ", " +
                            describe(breaks.back()) + "]",
                          v);
    std::size_t idx;
    if (closedness == Closedness::LeftClosed) {
      auto it = std::upper_bound(breaks.begin(), breaks.end(), v);
      idx = static_cast<std::size_t>(it - breaks.begin());
      idx = idx == 0 ? 0 : idx - 1;
      idx = std::min(idx, bins - 1); // v == last break
    } else {
      auto it = std::lower_bound(breaks.begin(), breaks.end(), v);
      idx = static_cast<std::size_t>(it - breaks.begin());
      idx = idx == 0 ? 0 : idx - 1; // v == first break
    }
    ++h.counts[idx];
  }

  const double n = static_cast<double>(values.size());
  h.relative.resize(bins);
  h.density.resize(bins);
  for (std::size_t i = 0; i < bins; ++i) {
    h.relative[i] = static_cast<double>(h.counts[i]) / n;
    h.density[i] = h.relative[i] / (breaks[i + 1] - breaks[i]);
  }
  return h;
}

Histogram
build_histogram(const Sample& sample, const BinSpec& spec)
{
  if (!(spec.width > 0.0) || !std::isfinite(spec.width))
    throw DomainError("bin width must be positive and finite");
  if (spec.count == 0)
    throw DomainError("bin count must be positive");
  return build_histogram(sample.values(), spec.breaks(), spec.closedness);
}

Polyline
frequency_polygon(const Histogram& hist)
{
  Polyline p;
  p.x.reserve(hist.bins());
  p.y.reserve(hist.bins());
  for (std::size_t i = 0; i < hist.bins(); ++i) {
    p.x.push_back(0.5 * (hist.breaks[i] + hist.breaks[i + 1]));
    p.y.push_back(hist.density[i]);
  }
  return p;
}

} // namespace reldisp
