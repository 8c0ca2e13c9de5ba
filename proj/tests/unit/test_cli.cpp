#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "foliage/cli/commands.hpp"
#include "foliage/cli/emit.hpp"
#include "foliage/cli/expression.hpp"
#include "foliage/invariants/identities.hpp"
#include "json.hpp"

using namespace foliage;
using nlohmann::json;

namespace {

const char* kRadial = R"js({
  "name": "radial",
  "form": {"P": "-y", "Q": "x"},
  "curves": [{"name": "L1", "equation": "y"}, {"name": "L2", "equation": "x"}]
})js";

const char* kFourXY = R"js({
  "form": {"P": "4xy", "Q": "y - 2x^2"},
  "curves": [{"name": "C", "equation": "y"}],
  "probes": [{"name": "B", "equation": "y - x^3"}]
})js";

const char* kF3 = R"js({
  "form": {"P": "y(2x^4 + 2x^2 y - y^2)", "Q": "x(y^2 - x^2 y - x^4)"},
  "curves": [{"name": "B1", "equation": "y"}, {"equation": "x"}]
})js";

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("foliage_test_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = temp_path(name);
  std::ofstream(path) << text;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + needle.size())) ++n;
  return n;
}

}  // namespace

TEST_CASE("parse_mode and mode_name") {
  CHECK(parse_mode("polar") == ChiMode::Polar);
  CHECK(parse_mode("literal") == ChiMode::Literal);
  CHECK(mode_name(ChiMode::Polar) == "polar");
  CHECK(mode_name(ChiMode::Literal) == "literal");
  CHECK_THROWS_AS(parse_mode("Polar"), InputError);
  CHECK_THROWS_AS(parse_mode(""), InputError);
}

TEST_CASE("parse_checks") {
  CHECK(parse_checks("all").empty());
  CHECK(parse_checks("").empty());
  CHECK(parse_checks(" , ").empty());
  const auto two = parse_checks("multiplicity_balance, tjurina_gsv");
  REQUIRE(two.size() == 2);
  CHECK(two[0] == "multiplicity_balance");
  CHECK(two[1] == "tjurina_gsv");
  CHECK(parse_checks("tjurina_gsv,all").empty());
  CHECK_THROWS_AS(parse_checks("tjurina_gsv,bogus"), InputError);
  for (const auto& n : identity_names()) CHECK(parse_checks(n) == std::vector<std::string>{n});
}

TEST_CASE("parse_case reads every field") {
  const CaseFile c = parse_case(R"js({
    "name": "demo",
    "form": {"P": "-y", "Q": "x"},
    "curves": [{"name": "L", "equation": "y", "weight": -2}, {"equation": "x"}],
    "probes": [{"name": "B", "equation": "y - x"}],
    "options": {"mode": "literal", "seed": 7, "max_depth": 5, "checks": ["tjurina_gsv", "multiplicity_balance"]}
  })js");
  CHECK(c.name == "demo");
  CHECK(c.p_text == "-y");
  CHECK(c.q_text == "x");
  CHECK(c.form.P() == parse_poly("-y"));
  CHECK(c.form.Q() == parse_poly("x"));
  REQUIRE(c.divisor.terms().size() == 2);
  CHECK(c.divisor.terms()[0].name == "L");
  CHECK(c.divisor.terms()[0].weight == -2);
  CHECK(c.divisor.terms()[1].name == "x");
  CHECK(c.divisor.terms()[1].weight == 1);
  REQUIRE(c.probes.size() == 1);
  CHECK(c.probes[0].equation == parse_poly("y - x"));
  CHECK(c.options.mode == ChiMode::Literal);
  CHECK(c.options.seed == 7);
  CHECK(c.options.max_depth == 5);
  CHECK(c.options.checks == std::vector<std::string>{"tjurina_gsv", "multiplicity_balance"});
}

TEST_CASE("parse_case defaults") {
  const CaseFile c = parse_case(R"js({"form": {"P": "-y", "Q": "x"}})js");
  CHECK(c.name.empty());
  CHECK(c.divisor.terms().empty());
  CHECK(c.probes.empty());
  const AnalyzeOptions d;
  CHECK(c.options.mode == ChiMode::Polar);
  CHECK(c.options.mode == d.mode);
  CHECK(c.options.seed == 0);
  CHECK(c.options.max_depth == 64);
  CHECK(c.options.checks.empty());
}

TEST_CASE("parse_case rejects malformed input") {
  const std::vector<std::string> bad = {
      "",
      "{",
      "[]",
      R"js({"name": "x"})js",
      R"js({"form": {"P": "-y"}})js",
      R"js({"form": {"P": 1, "Q": "x"}})js",
      R"js({"form": {"P": "-y +", "Q": "x"}})js",
      R"js({"form": {"P": "-y", "Q": "x/0"}})js",
      R"js({"form": {"P": "-y", "Q": "z"}})js",
      R"js({"form": {"P": "-y", "Q": "x"}, "curves": {}})js",
      R"js({"form": {"P": "-y", "Q": "x"}, "curves": [{"name": "L"}]})js",
      R"js({"form": {"P": "-y", "Q": "x"}, "curves": [{"equation": "y", "weight": 0}]})js",
      R"js({"form": {"P": "-y", "Q": "x"}, "curves": [{"equation": "y", "weight": 1.5}]})js",
      R"js({"form": {"P": "-y", "Q": "x"}, "probes": [{"equation": 3}]})js",
      R"js({"form": {"P": "-y", "Q": "x"}, "options": []})js",
      R"js({"form": {"P": "-y", "Q": "x"}, "options": {"mode": "sideways"}})js",
      R"js({"form": {"P": "-y", "Q": "x"}, "options": {"seed": -1}})js",
      R"js({"form": {"P": "-y", "Q": "x"}, "options": {"max_depth": -1}})js",
      R"js({"form": {"P": "-y", "Q": "x"}, "options": {"checks": 3}})js",
      R"js({"form": {"P": "-y", "Q": "x"}, "options": {"checks": ["nope"]}})js",
  };
  for (const auto& text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_case(text), InputError);
  }
}

TEST_CASE("load_case reads files and reports missing ones") {
  const CaseFile c = load_case(write_temp("radial.json", kRadial));
  CHECK(c.name == "radial");
  CHECK_THROWS_AS(load_case(temp_path("does_not_exist.json")), InputError);
}

TEST_CASE("effective_options lets command line settings win") {
  const CaseFile c = parse_case(R"js({"form": {"P": "-y", "Q": "x"},
    "options": {"mode": "literal", "seed": 4, "max_depth": 9, "checks": "tjurina_gsv"}})js");
  CommandOptions none;
  AnalyzeOptions o = effective_options(c, none);
  CHECK(o.mode == ChiMode::Literal);
  CHECK(o.seed == 4);
  CHECK(o.max_depth == 9);
  CHECK(o.checks == std::vector<std::string>{"tjurina_gsv"});

  CommandOptions all;
  all.mode = ChiMode::Polar;
  all.seed = 11;
  all.max_depth = 3;
  all.checks = std::vector<std::string>{};
  o = effective_options(c, all);
  CHECK(o.mode == ChiMode::Polar);
  CHECK(o.seed == 11);
  CHECK(o.max_depth == 3);
  CHECK(o.checks.empty());
}

TEST_CASE("intersect") {
  CommandOptions o;
  auto run = [&](const std::string& f, const std::string& g) {
    std::ostringstream out;
    CHECK(cmd_intersect(f, g, o, out) == ExitOk);
    return out.str();
  };
  CHECK(run("x", "y") == "1\n");
  CHECK(run("y^2 - x^3", "y^2 - x^2") == "4\n");
  CHECK(run("y^2 - x^3", "y") == "3\n");
  CHECK(run("y^2 - x^3", "2y^2 - 3x^3") == "6\n");
  CHECK(run("1 + x", "y") == "0\n");
  CHECK(run("y", "x - 1") == "0\n");
  std::ostringstream sink;
  CHECK_THROWS_AS(cmd_intersect("x", "x(1 + y)", o, sink), InputError);
  CHECK_THROWS_AS(cmd_intersect("x +", "y", o, sink), InputError);

  o.json = true;
  const json j = json::parse(run("y^2 - x^3", "y"));
  CHECK(j.at("intersection") == 3);
  CHECK(parse_poly(j.at("f").get<std::string>()) == parse_poly("y^2 - x^3"));
  CHECK(parse_poly(j.at("g").get<std::string>()) == parse_poly("y"));
}

TEST_CASE("analyze report for the radial foliation") {
  std::ostringstream out;
  CHECK(cmd_analyze(parse_case(kRadial), {}, out) == ExitOk);
  const std::string text = out.str();
  CHECK(text.find("\"mu_F\": 1,") != std::string::npos);
  CHECK(text.find("\"delta_B0\": 0,") != std::string::npos);
  const json j = json::parse(text);
  CHECK(j.at("mode") == "polar");
  CHECK(j.at("nu_F") == 1);
  CHECK(j.at("dicritical") == true);
  CHECK(j.at("balanced") == true);
  CHECK(j.at("tree").at("depth") == 1);
  CHECK(j.at("curves").size() == 2);
  CHECK(j.at("rows").size() >= identity_names().size());
  std::vector<std::string> keys;
  const auto ordered = nlohmann::ordered_json::parse(text);
  for (const auto& [k, v] : ordered.items()) keys.push_back(k);
  CHECK(keys.front() == "form");
  CHECK(keys.back() == "tree");
}

TEST_CASE("analyze output is byte stable") {
  const CaseFile c = parse_case(kF3);
  CommandOptions o;
  o.seed = 5;
  std::ostringstream a, b;
  cmd_analyze(c, o, a);
  cmd_analyze(c, o, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("case parse, render, parse round trip") {
  const CaseFile c = parse_case(kF3);
  json j = {{"form", {{"P", c.form.P().to_string()}, {"Q", c.form.Q().to_string()}}}};
  json curves = json::array();
  for (const auto& t : c.divisor.terms())
    curves.push_back({{"name", t.name}, {"equation", t.equation.to_string()}, {"weight", t.weight}});
  j["curves"] = curves;
  const CaseFile d = parse_case(j.dump());
  CHECK(d.form.P() == c.form.P());
  CHECK(d.form.Q() == c.form.Q());
  REQUIRE(d.divisor.terms().size() == c.divisor.terms().size());
  for (std::size_t i = 0; i < d.divisor.terms().size(); ++i) {
    CHECK(d.divisor.terms()[i].equation == c.divisor.terms()[i].equation);
    CHECK(d.divisor.terms()[i].weight == c.divisor.terms()[i].weight);
    CHECK(d.divisor.terms()[i].name == c.divisor.terms()[i].name);
  }
  std::ostringstream a, b;
  cmd_analyze(c, {}, a);
  cmd_analyze(d, {}, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("check exit codes") {
  std::ostringstream out;
  CHECK(cmd_check(parse_case(kF3), {}, out) == ExitOk);
  CHECK(out.str().rfind("name", 0) == 0);
  CommandOptions as_json;
  as_json.json = true;
  std::ostringstream js;
  CHECK(cmd_check(parse_case(kF3), as_json, js) == ExitOk);
  for (const auto& row : json::parse(js.str())) CHECK(row.at("status") != "fail");

  CommandOptions literal;
  literal.mode = ChiMode::Literal;
  std::ostringstream lit;
  CHECK(cmd_check(parse_case(kFourXY), literal, lit) == ExitIdentity);
  CHECK(lit.str().find("gsv_milnor_gap") != std::string::npos);

  CommandOptions polar;
  std::ostringstream pol;
  CHECK(cmd_check(parse_case(kFourXY), polar, pol) == ExitOk);

  CommandOptions selected;
  selected.mode = ChiMode::Literal;
  selected.checks = std::vector<std::string>{"multiplicity_balance"};
  selected.json = true;
  std::ostringstream sel;
  CHECK(cmd_check(parse_case(kFourXY), selected, sel) == ExitOk);
  const json rows = json::parse(sel.str());
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].at("name") == "multiplicity_balance");
  CHECK(rows[0].at("status") == "pass");
}

TEST_CASE("reduce emits the tree and DOT") {
  const CaseFile c = parse_case(R"js({"form": {"P": "2y + x^2", "Q": "-x"}, "curves": [{"equation": "x"}]})js");
  CommandOptions o;
  o.dot_path = temp_path("dulac2.dot");
  std::filesystem::remove(o.dot_path);
  std::ostringstream out;
  CHECK(cmd_reduce(c, o, out) == ExitOk);
  const json tree = json::parse(out.str());
  CHECK(tree.at("depth") == 2);
  CHECK(tree.at("second_type") == false);
  const std::string dot = slurp(o.dot_path);
  CHECK(dot.rfind("digraph reduction {", 0) == 0);
  CHECK(count(dot, "shape=box") == tree.at("components").size());
  std::size_t point_nodes = 0;
  for (const auto& p : tree.at("points")) {
    ++point_nodes;
    CHECK(dot.find("  p" + std::to_string(p.at("id").get<int>()) + " [label=") != std::string::npos);
  }
  CHECK(point_nodes == tree.at("points").size());
  CHECK(count(dot, "style=dashed") == tree.at("components").size());
  std::size_t edges = 0;
  for (const auto& p : tree.at("points")) edges += p.at("children").size();
  CHECK(count(dot, " -> p") == edges);
}

TEST_CASE("tree_dot marks dicritical components and tangent saddle-nodes") {
  const std::string radial = tree_dot(reduce(OneForm(parse_poly("-y"), parse_poly("x"))));
  CHECK(count(radial, "lightsalmon") == 1);
  CHECK(count(radial, "dicritical\"") == 1);
  const std::string sn = tree_dot(reduce(OneForm(parse_poly("-y(1 + x^2)"), parse_poly("x^3"))));
  CHECK(count(sn, "lightsalmon") == 0);
  CHECK(sn.find("(Ind ") != std::string::npos);
}

TEST_CASE("rows_table has one line per row") {
  AnalyzeOptions o;
  const InvariantReport r = analyze(parse_case(kF3).form, parse_case(kF3).divisor, {}, o);
  const std::string table = rows_table(r.rows);
  CHECK(count(table, "\n") == r.rows.size() + 1);
  const json j = json::parse(rows_json(r.rows));
  CHECK(j.size() == r.rows.size());
}

TEST_CASE("run_command maps errors to exit codes") {
  std::ostringstream out, err;
  Invocation inv;
  inv.command = "analyze";
  inv.case_path = temp_path("does_not_exist.json");
  CHECK(run_command(inv, out, err) == ExitInput);
  CHECK(err.str().rfind("input error:", 0) == 0);

  inv.case_path = write_temp("bad.json", "{\"form\": 3}");
  CHECK(run_command(inv, out, err) == ExitInput);

  inv.case_path = write_temp("four_xy.json", kFourXY);
  inv.command = "launch";
  CHECK(run_command(inv, out, err) == ExitInput);

  inv.command = "check";
  inv.options.mode = ChiMode::Literal;
  CHECK(run_command(inv, out, err) == ExitIdentity);
  inv.options.mode = ChiMode::Polar;
  CHECK(run_command(inv, out, err) == ExitOk);

  inv.command = "analyze";
  inv.case_path = write_temp("dulac2.json", R"js({"form": {"P": "2y + x^2", "Q": "-x"}})js");
  inv.options.max_depth = 0;
  err.str("");
  CHECK(run_command(inv, out, err) == ExitInternal);
  CHECK(err.str().find("internal") != std::string::npos);

  Invocation meet;
  meet.command = "intersect";
  meet.f = "x";
  meet.g = "y";
  std::ostringstream o2;
  CHECK(run_command(meet, o2, err) == ExitOk);
  CHECK(o2.str() == "1\n");
  meet.g = "2x";
  CHECK(run_command(meet, o2, err) == ExitInput);
}
