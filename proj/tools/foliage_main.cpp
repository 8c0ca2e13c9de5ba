#include <iostream>

#include "CLI11.hpp"
#include "foliage/cli/commands.hpp"

using namespace foliage;

int main(int argc, char** argv) {
  CLI::App app{"Local invariants of plane holomorphic foliations"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string mode, checks;
  std::uint64_t seed = 0;
  int max_depth = 64;
  Invocation inv;

  auto* mode_opt = app.add_option("--mode", mode, "chi-number mode: literal or polar (default polar)")
                       ->check(CLI::IsMember({"literal", "polar"}));
  auto* seed_opt = app.add_option("--seed", seed, "seed for generic polar samples (default 0)");
  auto* depth_opt =
      app.add_option("--max-depth", max_depth, "blow-up depth guard (default 64)")->check(CLI::NonNegativeNumber);
  auto* checks_opt = app.add_option("--checks", checks, "comma separated identity rows, or all");
  app.add_flag("--json", inv.options.json, "JSON output");
  app.add_option("--dot", inv.options.dot_path, "write the reduction tree as DOT");

  auto* analyze = app.add_subcommand("analyze", "invariant report as JSON");
  analyze->add_option("case", inv.case_path, "case file, - for stdin")->required();
  auto* reduce = app.add_subcommand("reduce", "reduction tree as JSON, DOT with --dot");
  reduce->add_option("case", inv.case_path, "case file, - for stdin")->required();
  auto* check = app.add_subcommand("check", "identity table; exit 2 on a failing row");
  check->add_option("case", inv.case_path, "case file, - for stdin")->required();
  auto* intersect = app.add_subcommand("intersect", "intersection number of two curves at the origin");
  intersect->add_option("f", inv.f)->required();
  intersect->add_option("g", inv.g)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ExitOk : ExitInput;
  }

  for (auto* sub : {analyze, reduce, check, intersect})
    if (*sub) inv.command = sub->get_name();
  try {
    if (*mode_opt) inv.options.mode = parse_mode(mode);
    if (*seed_opt) inv.options.seed = seed;
    if (*depth_opt) inv.options.max_depth = max_depth;
    if (*checks_opt) inv.options.checks = parse_checks(checks);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return ExitInput;
  }
  return run_command(inv, std::cout, std::cerr);
}
