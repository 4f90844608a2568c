// Python bindings. Samples cross the boundary as sequences of floats and
// results come back as plain dicts and lists.

#include "reldisp/bootstrap.hpp"
#include "reldisp/coefficients.hpp"
#include "reldisp/datasets.hpp"
#include "reldisp/errors.hpp"
#include "reldisp/histogram.hpp"
#include "reldisp/kde.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

namespace py = pybind11;
using namespace reldisp;

namespace {

Sample
to_sample(const std::vector<double>& values)
{
  return Sample(values);
}

Closedness
closedness_from(bool right_closed)
{
  return right_closed ? Closedness::RightClosed : Closedness::LeftClosed;
}

py::dict
slot_dict(const CoefficientSlot& s)
{
  py::dict d;
  d["value"] = s.value ? py::cast(*s.value) : py::none();
  d["absent_reason"] = s.absent_reason.empty() ? py::none() : py::cast(s.absent_reason);
  d["out_of_unit_range"] = s.out_of_unit_range;
  return d;
}

py::dict
histogram_dict(const Histogram& h)
{
  py::dict d;
  d["breaks"] = h.breaks;
  d["counts"] = h.counts;
  d["relative"] = h.relative;
  d["density"] = h.density;
  d["closed"] = h.closedness == Closedness::LeftClosed ? "left" : "right";
  return d;
}

BinSpec
bin_spec(const Sample& x, std::optional<std::size_t> bins, std::optional<double> origin,
         std::optional<double> width, bool right_closed)
{
  const Closedness c = closedness_from(right_closed);
  if (origin.has_value() != width.has_value())
    throw ConfigError("origin and width must be given together");
  if (origin) {
    if (bins)
      throw ConfigError("bins cannot be combined with origin and width");
    return BinSpec::covering(x, *origin, *width, c);
  }
  return BinSpec::nice(x, bins.value_or(sturges_k(x.size())), c);
}

// A rule name such as "sj", or a fixed bandwidth.
BandwidthRule
rule_from(const py::object& bw)
{
  if (py::isinstance<py::str>(bw))
    return bandwidth_rule_from_name(bw.cast<std::string>());
  return BandwidthRule::fixed(bw.cast<double>());
}

} // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Relative dispersion coefficients, histograms, kernel densities and bootstrap bands";

  // Errors surface as ReldispError (a ValueError) carrying the library's code.
  static py::handle error = py::exception<Error>(m, "ReldispError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p)
        std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error(e.what());
      exc.attr("code") = e.code();
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def(
    "summarize",
    [](const std::vector<double>& v) {
      const auto s = summarize(to_sample(v));
      py::dict d;
      d["n"] = s.n;
      d["mean"] = s.mean;
      d["sd"] = s.sd;
      d["min"] = s.min;
      d["max"] = s.max;
      d["range"] = s.range;
      return d;
    },
    py::arg("values"));

  m.def("cv", [](const std::vector<double>& v) { return cv(summarize(to_sample(v))); },
        py::arg("values"));
  m.def("cv_corrected",
        [](const std::vector<double>& v) { return cv_corrected(summarize(to_sample(v))); },
        py::arg("values"));
  m.def("crd", [](const std::vector<double>& v) { return crd(summarize(to_sample(v))); },
        py::arg("values"));
  m.def("crd_corrected",
        [](const std::vector<double>& v) { return crd_corrected(summarize(to_sample(v))); },
        py::arg("values"));
  m.def(
    "crd_bounds",
    [](std::size_t n) {
      const auto b = crd_bounds(n);
      return py::make_tuple(b.lower, b.upper);
    },
    py::arg("n"));

  m.def(
    "dispersion_report",
    [](const std::vector<double>& v) {
      const auto r = dispersion_report(to_sample(v));
      py::dict d;
      d["n"] = r.n;
      d["cv"] = slot_dict(r.cv);
      d["cv_corrected"] = slot_dict(r.cv_corrected);
      d["crd"] = slot_dict(r.crd);
      d["crd_corrected"] = slot_dict(r.crd_corrected);
      return d;
    },
    py::arg("values"));

  m.def("sturges_k", &sturges_k, py::arg("n"));
  m.def("nice_breaks", &nice_breaks, py::arg("lo"), py::arg("hi"), py::arg("k"));

  m.def(
    "histogram",
    [](const std::vector<double>& v, std::optional<std::size_t> bins, std::optional<double> origin,
       std::optional<double> width, bool right_closed) {
      const Sample x = to_sample(v);
      return histogram_dict(build_histogram(x, bin_spec(x, bins, origin, width, right_closed)));
    },
    py::arg("values"), py::kw_only(), py::arg("bins") = py::none(),
    py::arg("origin") = py::none(), py::arg("width") = py::none(),
    py::arg("right_closed") = false);

  m.def(
    "density",
    [](const std::vector<double>& v, const std::string& kernel, py::object bw,
       std::size_t grid_points, double cut) {
      const auto est =
        estimate_density(to_sample(v), kernel_from_name(kernel), rule_from(bw), { grid_points, cut });
      py::dict d;
      d["x"] = est.x;
      d["y"] = est.y;
      d["h"] = est.h;
      d["n"] = est.n;
      d["kernel"] = std::string(to_string(est.kernel));
      return d;
    },
    py::arg("values"), py::kw_only(), py::arg("kernel") = "gaussian",
    py::arg("bw") = py::str("nrd0"), py::arg("grid_points") = 512, py::arg("cut") = 3.0);

  m.def(
    "band",
    [](const std::vector<double>& v, const std::string& curve, std::size_t replicates,
       double confidence, std::uint64_t seed, const std::string& kernel, py::object bw,
       bool reuse_bandwidth, std::size_t grid_points, std::optional<std::size_t> bins,
       unsigned threads) {
      const Sample x = to_sample(v);
      BootstrapConfig c;
      c.replicates = replicates;
      c.confidence = confidence;
      c.seed = seed;
      c.grid_points = grid_points;
      c.threads = threads;
      if (curve == "density")
        c.curve = DensityCurve{ kernel_from_name(kernel), rule_from(bw),
                                !reuse_bandwidth };
      else if (curve == "polygon")
        c.curve = PolygonCurve{ BinSpec::nice(x, bins.value_or(sturges_k(x.size()))) };
      else
        throw ConfigError("unknown curve '" + curve + "'");
      Band b;
      {
        py::gil_scoped_release release;
        b = band(x, c);
      }
      py::dict d;
      d["x"] = b.x;
      d["lower"] = b.lower;
      d["median"] = b.median;
      d["upper"] = b.upper;
      d["original"] = b.original;
      return d;
    },
    py::arg("values"), py::kw_only(), py::arg("curve") = "density",
    py::arg("replicates") = 2000, py::arg("confidence") = 0.95, py::arg("seed") = datasets::default_bootstrap_seed,
    py::arg("kernel") = "gaussian", py::arg("bw") = py::str("nrd0"), py::arg("reuse_bandwidth") = false,
    py::arg("grid_points") = 512, py::arg("bins") = py::none(), py::arg("threads") = 0);
}
