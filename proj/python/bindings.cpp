#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "foliage/cli/commands.hpp"
#include "foliage/cli/emit.hpp"
#include "foliage/cli/expression.hpp"
#include "foliage/errors.hpp"
#include "foliage/invariants/report.hpp"
#include "foliage/localring/local_ring.hpp"

namespace py = pybind11;
using namespace foliage;

namespace {

std::optional<long> finite(const QuotientDim& d) {
  if (!d.is_finite()) return std::nullopt;
  return d.value();
}

CommandOptions command_options(std::optional<std::string> mode, std::optional<std::uint64_t> seed,
                               std::optional<int> max_depth, std::optional<std::string> checks) {
  CommandOptions o;
  if (mode) o.mode = parse_mode(*mode);
  if (seed) o.seed = *seed;
  if (max_depth) {
    if (*max_depth < 0) throw InputError("max_depth must be nonnegative");
    o.max_depth = *max_depth;
  }
  if (checks) o.checks = parse_checks(*checks);
  return o;
}

OneForm form(const std::string& p, const std::string& q) { return OneForm(parse_poly(p), parse_poly(q)); }

}  // namespace

PYBIND11_MODULE(_foliage, m) {
  m.doc() = "Local invariants of plane holomorphic foliations";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<InconsistencyError> inconsistency(m, "InconsistencyError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      py::set_error(input_error, e.what());
    } catch (const InconsistencyError& e) {
      py::set_error(inconsistency, e.what());
    }
  });

  m.def("normalize", [](const std::string& f) { return parse_poly(f).to_string(); }, py::arg("f"),
        "Canonical text of a polynomial in x and y.");
  m.def(
      "intersection",
      [](const std::string& f, const std::string& g, std::uint64_t seed) {
        const Poly2 pf = parse_poly(f), pg = parse_poly(g);
        return finite(intersection_number(pf, pg, seed));
      },
      py::arg("f"), py::arg("g"), py::arg("seed") = 0, "Intersection number at the origin; None when infinite.");
  m.def(
      "milnor_number", [](const std::string& f) { return finite(milnor_curve(parse_poly(f))); }, py::arg("f"));
  m.def(
      "tjurina_number", [](const std::string& f) { return finite(tjurina_curve(parse_poly(f))); }, py::arg("f"));
  m.def(
      "foliation_milnor_number", [](const std::string& p, const std::string& q) { return milnor_foliation(form(p, q)); },
      py::arg("P"), py::arg("Q"), "Milnor number of P dx + Q dy.");
  m.def(
      "gsv_index",
      [](const std::string& p, const std::string& q, const std::string& curve, std::uint64_t seed) {
        const GsvValue v = gsv(form(p, q), parse_poly(curve), seed);
        return py::make_tuple(v.polar, v.tjurina);
      },
      py::arg("P"), py::arg("Q"), py::arg("curve"), py::arg("seed") = 0,
      "GSV index along an invariant curve by polar curves and by Tjurina numbers.");

  m.def(
      "analyze_json",
      [](const std::string& case_json, std::optional<std::string> mode, std::optional<std::uint64_t> seed,
         std::optional<int> max_depth, std::optional<std::string> checks) {
        std::ostringstream out;
        cmd_analyze(parse_case(case_json), command_options(mode, seed, max_depth, checks), out);
        return out.str();
      },
      py::arg("case_json"), py::arg("mode") = py::none(), py::arg("seed") = py::none(),
      py::arg("max_depth") = py::none(), py::arg("checks") = py::none());
  m.def(
      "reduce_json",
      [](const std::string& case_json, std::optional<std::uint64_t> seed, std::optional<int> max_depth) {
        std::ostringstream out;
        cmd_reduce(parse_case(case_json), command_options(std::nullopt, seed, max_depth, std::nullopt), out);
        return out.str();
      },
      py::arg("case_json"), py::arg("seed") = py::none(), py::arg("max_depth") = py::none());
  m.def(
      "reduce_dot",
      [](const std::string& case_json, std::optional<std::uint64_t> seed, std::optional<int> max_depth) {
        const CaseFile c = parse_case(case_json);
        const AnalyzeOptions o = effective_options(c, command_options(std::nullopt, seed, max_depth, std::nullopt));
        ReduceOptions ro;
        ro.seed = o.seed;
        ro.max_depth = o.max_depth;
        for (const auto& t : c.divisor.terms()) ro.tracked.push_back(t.equation);
        for (const auto& t : c.probes) ro.tracked.push_back(t.equation);
        return tree_dot(reduce(c.form, ro));
      },
      py::arg("case_json"), py::arg("seed") = py::none(), py::arg("max_depth") = py::none());
  m.def(
      "check_json",
      [](const std::string& case_json, std::optional<std::string> mode, std::optional<std::uint64_t> seed,
         std::optional<int> max_depth, std::optional<std::string> checks) {
        CommandOptions o = command_options(mode, seed, max_depth, checks);
        o.json = true;
        std::ostringstream out;
        cmd_check(parse_case(case_json), o, out);
        return out.str();
      },
      py::arg("case_json"), py::arg("mode") = py::none(), py::arg("seed") = py::none(),
      py::arg("max_depth") = py::none(), py::arg("checks") = py::none());
}
