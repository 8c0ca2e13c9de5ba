#include "foliage/cli/case_file.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "foliage/cli/expression.hpp"
#include "foliage/invariants/identities.hpp"
#include "json.hpp"

namespace foliage {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string string_at(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_string()) throw InputError(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

Poly2 parse_field(const std::string& text, const std::string& where) {
  try {
    return parse_poly(text);
  } catch (const ParseError& e) {
    throw InputError(where + ": " + e.what());
  }
}

std::vector<DivisorTerm> read_terms(const json& list, const char* what, bool weighted) {
  if (!list.is_array()) throw InputError(std::string("\"") + what + "\" must be an array");
  std::vector<DivisorTerm> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& item = list[i];
    const std::string where = std::string(what) + "[" + std::to_string(i) + "]";
    DivisorTerm t;
    t.equation = parse_field(string_at(item, "equation", where), where);
    t.name = item.contains("name") ? string_at(item, "name", where) : t.equation.to_string();
    if (weighted && item.contains("weight")) {
      const json& w = item.at("weight");
      if (!w.is_number_integer()) throw InputError(where + ": weight must be an integer");
      t.weight = w.get<long>();
      if (t.weight == 0) throw InputError(where + ": weight must be nonzero");
    }
    out.push_back(std::move(t));
  }
  return out;
}

void read_options(const json& o, AnalyzeOptions& opts) {
  if (!o.is_object()) throw InputError("\"options\" must be an object");
  if (o.contains("mode")) opts.mode = parse_mode(string_at(o, "mode", "options"));
  if (o.contains("seed")) {
    const json& s = o.at("seed");
    if (!s.is_number_unsigned()) throw InputError("options: seed must be a nonnegative integer");
    opts.seed = s.get<std::uint64_t>();
  }
  if (o.contains("max_depth")) {
    const json& d = o.at("max_depth");
    if (!d.is_number_integer() || d.get<long>() < 0) throw InputError("options: max_depth must be a nonnegative integer");
    opts.max_depth = d.get<int>();
  }
  if (o.contains("checks")) {
    const json& c = o.at("checks");
    if (c.is_string()) {
      opts.checks = parse_checks(c.get<std::string>());
    } else if (c.is_array()) {
      std::string joined;
      for (const auto& v : c) {
        if (!v.is_string()) throw InputError("options: checks must be strings");
        joined += (joined.empty() ? "" : ",") + v.get<std::string>();
      }
      opts.checks = parse_checks(joined);
    } else {
      throw InputError("options: checks must be a string or an array");
    }
  }
}

}  // namespace

ChiMode parse_mode(const std::string& text) {
  if (text == "polar") return ChiMode::Polar;
  if (text == "literal") return ChiMode::Literal;
  throw InputError("unknown mode '" + text + "' (expected literal or polar)");
}

std::string mode_name(ChiMode mode) { return mode == ChiMode::Polar ? "polar" : "literal"; }

std::vector<std::string> parse_checks(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    item = item.substr(b, e - b + 1);
    if (item == "all") return {};
    const auto& names = identity_names();
    if (std::find(names.begin(), names.end(), item) == names.end())
      throw InputError("unknown identity check '" + item + "'");
    out.push_back(item);
  }
  return out;
}

CaseFile parse_case(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("case file: ") + e.what());
  }
  if (!j.is_object()) throw InputError("case file must be a JSON object");

  CaseFile c;
  if (j.contains("name")) c.name = string_at(j, "name", "case file");
  const json& form = require(j, "form", "case file");
  c.p_text = string_at(form, "P", "form");
  c.q_text = string_at(form, "Q", "form");
  c.form = OneForm(parse_field(c.p_text, "form.P"), parse_field(c.q_text, "form.Q"));
  if (j.contains("curves")) c.divisor = SeparatrixDivisor(read_terms(j.at("curves"), "curves", true));
  if (j.contains("probes")) c.probes = read_terms(j.at("probes"), "probes", false);
  if (j.contains("options")) read_options(j.at("options"), c.options);
  return c;
}

CaseFile load_case(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open case file '" + path + "'");
    buffer << in.rdbuf();
  }
  return parse_case(buffer.str());
}

}  // namespace foliage
