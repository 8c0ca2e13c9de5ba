#include "foliage/cli/emit.hpp"

#include <algorithm>
#include <sstream>

#include "foliage/cli/case_file.hpp"
#include "json.hpp"

namespace foliage {

namespace {

using json = nlohmann::ordered_json;

template <class T>
json optional_value(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json form_json(const OneForm& w) { return {{"P", w.P().to_string()}, {"Q", w.Q().to_string()}}; }

json class_json(const SingularityClass& c) {
  json j = {{"kind", to_string(c.kind)}, {"trace", c.trace.to_string()}, {"det", c.det.to_string()}};
  j["rho"] = c.rho ? json(c.rho->get_str()) : json(nullptr);
  j["ratio_in_q_plus"] = c.ratio_in_q_plus;
  if (c.kind == SingularityKind::SaddleNode) {
    j["weak_axis"] = c.weak_axis;
    j["weak_component"] = c.weak_component;
    j["weak_index"] = c.weak_index;
  }
  return j;
}

json tree_value(const ReductionTree& t) {
  json points = json::array();
  for (const auto& p : t.points()) {
    json q = {{"id", p.id},       {"parent", p.parent},   {"depth", p.depth},
              {"weight", p.weight}, {"chart", p.chart},   {"coordinate", p.coordinate.to_string()},
              {"orbit", p.orbit_minpoly.to_string()},     {"nu", p.nu},
              {"polar_nu", p.polar_nu}};
    q["class"] = class_json(p.cls);
    q["xi"] = t.tangency_excess(p.id);
    q["axis_components"] = {p.axis_component[0], p.axis_component[1]};
    q["created_component"] = p.created_component;
    q["children"] = p.children;
    q["tracked_multiplicity"] = p.tracked_multiplicity;
    q["form"] = form_json(p.form);
    points.push_back(std::move(q));
  }
  json components = json::array();
  for (const auto& d : t.components())
    components.push_back({{"id", d.id},
                          {"created_at", d.created_at},
                          {"dicritical", d.dicritical},
                          {"weight", d.weight},
                          {"valence", d.valence},
                          {"curvette_multiplicity", d.curvette_multiplicity},
                          {"incident", d.incident}});
  return {{"depth", t.depth()},
          {"dicritical", t.is_dicritical()},
          {"second_type", t.is_second_type()},
          {"generalized_curve", t.is_generalized_curve()},
          {"xi", t.tangency_excess()},
          {"chi_literal", t.chi(ChiMode::Literal)},
          {"chi_polar", t.chi(ChiMode::Polar)},
          {"tangent_saddle_nodes", t.tangent_saddle_nodes()},
          {"points", std::move(points)},
          {"components", std::move(components)}};
}

json rows_value(const std::vector<IdentityRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"name", r.name},
                   {"subject", r.subject},
                   {"status", to_string(r.status)},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"mode", r.mode},
                   {"note", r.note}});
  return out;
}

json certificate_json(const BalancedCertificate& c) {
  json attachments = json::array();
  for (const auto& a : c.attachments)
    attachments.push_back({{"term", a.term}, {"node", a.node}, {"component", a.component}, {"count", a.count}});
  json sums = json::array();
  for (const auto& [d, s] : c.dicritical_sum)
    sums.push_back({{"component", d}, {"sum", s}, {"target", c.dicritical_target.at(d)}});
  return {{"balanced", c.balanced},
          {"isolated_required", c.isolated_required},
          {"isolated_supplied", c.isolated_supplied},
          {"dicritical", std::move(sums)},
          {"attachments", std::move(attachments)},
          {"problems", c.problems}};
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string report_json(const InvariantReport& r) {
  const auto& ag = r.aggregates;
  json j;
  j["form"] = form_json(r.form);
  j["mode"] = mode_name(r.mode);
  j["nu_F"] = r.nu_F;
  j["mu_F"] = r.mu_F;
  j["xi"] = r.xi;
  j["chi"] = r.chi();
  j["chi_literal"] = r.chi_literal;
  j["chi_polar"] = r.chi_polar;
  j["excess_literal"] = r.excess_literal;
  j["excess_polar"] = r.excess_polar;
  j["dicritical"] = r.dicritical;
  j["second_type"] = r.second_type;
  j["generalized_curve"] = r.generalized_curve;
  j["balanced"] = r.balanced();
  j["degree"] = ag.degree;
  j["nu_B"] = ag.nu_weighted;
  j["nu_B_unweighted"] = ag.nu_unweighted;
  j["polar_B"] = ag.polar_B;
  j["delta_B"] = optional_value(ag.delta_B);
  j["T"] = optional_value(ag.T);
  j["nu_B0"] = ag.nu_B0;
  j["mu_B0"] = ag.mu_B0;
  j["tau_B0"] = ag.tau_B0;
  j["tau_F_B0"] = ag.tau_F_B0;
  j["polar_B0"] = ag.polar_B0;
  j["delta_B0"] = ag.delta_B0;
  j["gsv_B0_polar"] = ag.gsv_B0_polar;
  j["gsv_B0_tjurina"] = ag.gsv_B0_tjurina;
  j["i_B0_Binf"] = ag.i_B0_Binf;

  json curves = json::array();
  for (const auto& c : r.curves) {
    json k = {{"name", c.name},
              {"equation", c.equation.to_string()},
              {"weight", c.weight},
              {"branches", c.branches},
              {"nu", c.nu},
              {"mu_C", c.mu_C},
              {"tau_C", c.tau_C},
              {"polar_intersection", c.polar_intersection},
              {"mu_F_C", c.mu_F_C},
              {"gsv_polar", c.gsv_polar},
              {"gsv_tjurina", c.gsv_tjurina},
              {"tau_F_C", c.tau_F_C}};
    k["ind"] = optional_value(c.ind);
    k["polar_dFB"] = optional_value(c.polar_dFB);
    k["mu_dFB"] = optional_value(c.mu_dFB);
    k["delta"] = optional_value(c.delta);
    k["adjacency"] = optional_value(c.adjacency);
    k["mu_df0"] = optional_value(c.mu_df0);
    if (!c.note.empty()) k["note"] = c.note;
    curves.push_back(std::move(k));
  }
  j["curves"] = std::move(curves);
  j["intersections"] = r.intersections;
  j["union_gsv"] = r.union_gsv;

  json probes = json::array();
  for (const auto& p : r.probes)
    probes.push_back({{"name", p.name},
                      {"equation", p.equation.to_string()},
                      {"branches", p.branches},
                      {"invariant", p.invariant},
                      {"tang", optional_value(p.tang)},
                      {"excess_sum", p.excess_sum},
                      {"divisor_intersection", p.divisor_intersection}});
  j["probes"] = std::move(probes);
  j["certificate"] = r.certificate ? certificate_json(*r.certificate) : json(nullptr);
  j["rows"] = rows_value(r.rows);
  j["tree"] = r.tree ? tree_value(*r.tree) : json(nullptr);
  return j.dump(2) + "\n";
}

std::string tree_json(const ReductionTree& tree) { return tree_value(tree).dump(2) + "\n"; }

std::string rows_json(const std::vector<IdentityRow>& rows) { return rows_value(rows).dump(2) + "\n"; }

std::string tree_dot(const ReductionTree& t) {
  std::ostringstream out;
  out << "digraph reduction {\n";
  out << "  node [shape=ellipse, fontname=\"Helvetica\"];\n";
  for (const auto& p : t.points()) {
    out << "  p" << p.id << " [label=\"p" << p.id << "\\nnu=" << p.nu << "\\n" << to_string(p.cls.kind);
    if (p.cls.kind == SingularityKind::SaddleNode) out << " (Ind " << p.cls.weak_index << ")";
    out << "\\nw=" << p.weight << "\"";
    if (p.cls.is_tangent_saddle_node()) out << ", color=red";
    out << "];\n";
  }
  for (const auto& d : t.components()) {
    out << "  D" << d.id << " [shape=box, style=filled, fillcolor=" << (d.dicritical ? "lightsalmon" : "lightblue")
        << ", label=\"D" << d.id << "\\nnu(D)=" << d.curvette_multiplicity << "\\nVal=" << d.valence
        << (d.dicritical ? "\\ndicritical" : "") << "\"];\n";
  }
  for (const auto& p : t.points())
    for (int c : p.children) {
      const auto& q = t.points()[c];
      const std::string label = q.chart == 2 ? "chart 2" : "t=" + q.coordinate.to_string();
      out << "  p" << p.id << " -> p" << c << " [label=\"" << dot_escape(label) << "\"];\n";
    }
  for (const auto& d : t.components()) out << "  p" << d.created_at << " -> D" << d.id << " [style=dashed];\n";
  out << "}\n";
  return out.str();
}

std::string rows_table(const std::vector<IdentityRow>& rows) {
  std::size_t wn = 4, ws = 7;
  for (const auto& r : rows) {
    wn = std::max(wn, r.name.size());
    ws = std::max(ws, r.subject.size());
  }
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  std::ostringstream out;
  out << pad("name", wn) << "  " << pad("subject", ws) << "  " << pad("status", 6) << "  " << pad("lhs", 6) << "  "
      << pad("rhs", 6) << "  " << pad("mode", 7) << "  note\n";
  for (const auto& r : rows)
    out << pad(r.name, wn) << "  " << pad(r.subject, ws) << "  " << pad(to_string(r.status), 6) << "  "
        << pad(std::to_string(r.lhs), 6) << "  " << pad(std::to_string(r.rhs), 6) << "  " << pad(r.mode, 7) << "  "
        << r.note << "\n";
  return out.str();
}

}  // namespace foliage
