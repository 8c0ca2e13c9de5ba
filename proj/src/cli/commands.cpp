#include "foliage/cli/commands.hpp"

#include <fstream>
#include <ostream>

#include "foliage/cli/emit.hpp"
#include "foliage/cli/expression.hpp"
#include "json.hpp"

namespace foliage {

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

ReductionTree reduce_case(const CaseFile& c, const AnalyzeOptions& o) {
  ReduceOptions ro;
  ro.max_depth = o.max_depth;
  ro.seed = o.seed;
  for (const auto& t : c.divisor.terms()) ro.tracked.push_back(t.equation);
  for (const auto& p : c.probes) ro.tracked.push_back(p.equation);
  return reduce(c.form, ro);
}

}  // namespace

AnalyzeOptions effective_options(const CaseFile& c, const CommandOptions& opts) {
  AnalyzeOptions o = c.options;
  if (opts.mode) o.mode = *opts.mode;
  if (opts.seed) o.seed = *opts.seed;
  if (opts.max_depth) o.max_depth = *opts.max_depth;
  if (opts.checks) o.checks = *opts.checks;
  return o;
}

int cmd_analyze(const CaseFile& c, const CommandOptions& opts, std::ostream& out) {
  const InvariantReport r = analyze(c.form, c.divisor, c.probes, effective_options(c, opts));
  if (!opts.dot_path.empty()) write_file(opts.dot_path, tree_dot(*r.tree));
  out << report_json(r);
  return ExitOk;
}

int cmd_reduce(const CaseFile& c, const CommandOptions& opts, std::ostream& out) {
  const ReductionTree t = reduce_case(c, effective_options(c, opts));
  if (!opts.dot_path.empty()) write_file(opts.dot_path, tree_dot(t));
  out << tree_json(t);
  return ExitOk;
}

int cmd_intersect(const std::string& f, const std::string& g, const CommandOptions& opts, std::ostream& out) {
  const Poly2 pf = parse_poly(f), pg = parse_poly(g);
  long value = 0;
  if (pf.vanishes_at_origin() && pg.vanishes_at_origin()) {
    const QuotientDim d = intersection_number(pf, pg, opts.seed.value_or(0));
    if (!d.is_finite()) throw InputError("the curves share a component through the origin");
    value = d.value();
  }
  if (opts.json) {
    nlohmann::ordered_json j = {{"f", pf.to_string()}, {"g", pg.to_string()}, {"intersection", value}};
    out << j.dump(2) << "\n";
  } else {
    out << value << "\n";
  }
  return ExitOk;
}

int cmd_check(const CaseFile& c, const CommandOptions& opts, std::ostream& out) {
  const InvariantReport r = analyze(c.form, c.divisor, c.probes, effective_options(c, opts));
  if (!opts.dot_path.empty()) write_file(opts.dot_path, tree_dot(*r.tree));
  out << (opts.json ? rows_json(r.rows) : rows_table(r.rows));
  return r.all_pass() ? ExitOk : ExitIdentity;
}

int run_command(const Invocation& inv, std::ostream& out, std::ostream& err) {
  try {
    if (inv.command == "intersect") return cmd_intersect(inv.f, inv.g, inv.options, out);
    const CaseFile c = load_case(inv.case_path);
    if (inv.command == "analyze") return cmd_analyze(c, inv.options, out);
    if (inv.command == "reduce") return cmd_reduce(c, inv.options, out);
    if (inv.command == "check") return cmd_check(c, inv.options, out);
    throw InputError("unknown command '" + inv.command + "'");
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return ExitInput;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return ExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return ExitInternal;
  }
}

}  // namespace foliage
