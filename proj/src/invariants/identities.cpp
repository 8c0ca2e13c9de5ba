#include "foliage/invariants/identities.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace foliage {

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "multiplicity_balance",
      "zero_part_polar_excess",
      "polar_intersection_sum",
      "milnor_multiplicity_sum",
      "curve_milnor_formula",
      "polar_excess_formula",
      "excess_as_multiplicity_gap",
      "generalized_curve_by_multiplicities",
      "gsv_polar_excess",
      "zero_part_gsv",
      "gsv_milnor_gap",
      "tjurina_gsv",
      "milnor_tjurina_gap",
      "milnor_tjurina_sum",
      "tjurina_sum_without_chi",
      "tjurina_total_union",
      "tjurina_union_gap",
      "tangency_balance_probe",
      "generalized_curve_criterion",
      "chi_sign_rules",
      "gsv_equals_multiplicity_smooth",
      "gsv_adjunction",
      "polar_excess_nonnegative",
      "gsv_equals_excess_effective",
  };
  return names;
}

namespace {

std::string mode_name(ChiMode m) { return m == ChiMode::Polar ? "polar" : "literal"; }

class Rows {
 public:
  Rows(const InvariantReport& r, const std::vector<std::string>& checks) : r_(r) {
    for (const auto& c : checks) {
      if (std::find(identity_names().begin(), identity_names().end(), c) == identity_names().end())
        throw InputError("unknown identity check '" + c + "'");
      selected_.insert(c);
    }
  }

  bool wants(const std::string& name) const { return selected_.empty() || selected_.count(name); }

  void compare(const std::string& name, const std::string& subject, long lhs, long rhs, std::string note = "",
               std::string mode = "") {
    rows_.push_back({name, subject, lhs == rhs ? RowStatus::Pass : RowStatus::Fail, lhs, rhs, std::move(mode),
                     std::move(note)});
  }

  // Inequality rows: pass when lhs >= rhs.
  void at_least(const std::string& name, const std::string& subject, long lhs, long rhs) {
    rows_.push_back({name, subject, lhs >= rhs ? RowStatus::Pass : RowStatus::Fail, lhs, rhs, "", "lhs >= rhs"});
  }

  void skip(const std::string& name, const std::string& subject, std::string note, long lhs = 0, long rhs = 0) {
    rows_.push_back({name, subject, RowStatus::NotApplicable, lhs, rhs, "", std::move(note)});
  }

  // rhs evaluated in the selected mode; the other mode goes in the note.
  void compare_modes(const std::string& name, const std::string& subject, long lhs,
                     const std::function<long(ChiMode)>& rhs, std::string note = "") {
    const ChiMode other = r_.mode == ChiMode::Polar ? ChiMode::Literal : ChiMode::Polar;
    const long here = rhs(r_.mode), there = rhs(other);
    std::string extra = mode_name(other) + " mode rhs " + std::to_string(there);
    if (here != there) extra += " (modes disagree)";
    note = note.empty() ? extra : note + "; " + extra;
    compare(name, subject, lhs, here, std::move(note), mode_name(r_.mode));
  }

  std::vector<IdentityRow> take() { return std::move(rows_); }

 private:
  const InvariantReport& r_;
  std::set<std::string> selected_;
  std::vector<IdentityRow> rows_;
};

}  // namespace

std::vector<IdentityRow> verify_identities(const InvariantReport& r, const std::vector<std::string>& checks) {
  Rows rows(r, checks);
  const auto& ag = r.aggregates;
  const auto& curves = r.curves;
  const std::size_t n = curves.size();
  const bool has_divisor = n > 0;
  const bool balanced = r.balanced();
  const bool reduced = r.divisor.is_reduced();
  const bool has_zero = std::any_of(curves.begin(), curves.end(), [](const auto& c) { return c.weight > 0; });
  const bool all_single = std::all_of(curves.begin(), curves.end(), [](const auto& c) { return c.branches == 1; });
  const bool all_mu_dFB = std::all_of(curves.begin(), curves.end(), [](const auto& c) { return c.mu_dFB.has_value(); });
  auto chi_of = [&](ChiMode m) { return m == ChiMode::Polar ? r.chi_polar : r.chi_literal; };
  auto excess_of = [&](ChiMode m) { return m == ChiMode::Polar ? r.excess_polar : r.excess_literal; };

  // Applicability of rows that need a validated divisor.
  std::string divisor_gap;
  if (!has_divisor)
    divisor_gap = "no divisor";
  else if (!balanced)
    divisor_gap = "divisor is not balanced";
  std::string union_gap = divisor_gap;
  if (union_gap.empty() && r.dicritical) union_gap = "foliation is dicritical";
  if (union_gap.empty() && !has_zero) union_gap = "empty zero part";
  std::string zero_gap = divisor_gap;
  if (zero_gap.empty() && !reduced) zero_gap = "divisor is not reduced";
  if (zero_gap.empty() && !has_zero) zero_gap = "empty zero part";

  long sum_branches_B0 = 0;
  for (const auto& c : curves)
    if (c.weight > 0) sum_branches_B0 += c.branches;

  if (rows.wants("multiplicity_balance")) {
    if (!divisor_gap.empty()) {
      rows.skip("multiplicity_balance", "", divisor_gap);
    } else {
      std::string note;
      if (ag.nu_weighted != ag.nu_unweighted)
        note = "unweighted multiplicity " + std::to_string(ag.nu_unweighted) + " gives rhs " +
               std::to_string(ag.nu_unweighted - 1 + r.xi);
      rows.compare("multiplicity_balance", "", r.nu_F, ag.nu_weighted - 1 + r.xi, note);
    }
  }

  if (rows.wants("zero_part_polar_excess")) {
    if (!zero_gap.empty())
      rows.skip("zero_part_polar_excess", "B0", zero_gap);
    else
      rows.compare("zero_part_polar_excess", "B0", ag.delta_B0,
                   ag.polar_B0 + ag.i_B0_Binf - ag.mu_B0 - ag.nu_B0 + 1);
  }

  if (rows.wants("polar_intersection_sum")) {
    if (!divisor_gap.empty())
      rows.skip("polar_intersection_sum", "", divisor_gap);
    else
      rows.compare_modes("polar_intersection_sum", "", ag.polar_B,
                         [&](ChiMode m) { return r.mu_F + r.nu_F - excess_of(m); });
  }

  if (rows.wants("milnor_multiplicity_sum")) {
    if (!divisor_gap.empty()) {
      rows.skip("milnor_multiplicity_sum", "", divisor_gap);
    } else {
      long s = 0;
      for (const auto& c : curves) s += c.weight * c.mu_F_C;
      rows.compare_modes("milnor_multiplicity_sum", "", r.mu_F,
                         [&](ChiMode m) { return s + chi_of(m) - ag.degree + 1; });
    }
  }

  if (rows.wants("curve_milnor_formula")) {
    if (!zero_gap.empty()) {
      rows.skip("curve_milnor_formula", "B0", zero_gap);
    } else {
      long rhs = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (curves[i].weight <= 0) continue;
        rhs += curves[i].mu_C + curves[i].branches - 1;
        for (std::size_t j = i + 1; j < n; ++j)
          if (curves[j].weight > 0) rhs += 2 * r.intersections[i][j];
      }
      rows.compare("curve_milnor_formula", "B0", ag.mu_B0 + sum_branches_B0 - 1, rhs);
    }
  }

  const std::string mu_dFB_gap = !divisor_gap.empty() ? divisor_gap
                                 : !all_mu_dFB        ? "adapted equation unavailable for some term"
                                                      : "";

  if (rows.wants("polar_excess_formula")) {
    if (!mu_dFB_gap.empty()) {
      rows.skip("polar_excess_formula", "", mu_dFB_gap);
    } else {
      long s = 0;
      for (const auto& c : curves) s += c.weight * *c.mu_dFB;
      rows.compare_modes("polar_excess_formula", "", *ag.delta_B,
                         [&](ChiMode m) { return r.mu_F - s + ag.degree - 1 - chi_of(m); });
    }
  }

  if (rows.wants("excess_as_multiplicity_gap")) {
    if (!mu_dFB_gap.empty()) {
      rows.skip("excess_as_multiplicity_gap", "", mu_dFB_gap);
    } else {
      long s = 0;
      for (const auto& c : curves) {
        const long mu_F_B = c.ind && c.branches == 1 ? *c.ind : c.mu_F_C;
        s += c.weight * (mu_F_B - *c.mu_dFB);
      }
      rows.compare("excess_as_multiplicity_gap", "", *ag.delta_B, s,
                   "smooth terms use the tangency index for mu(F, B)");
    }
  }

  if (rows.wants("generalized_curve_by_multiplicities")) {
    std::string gap = union_gap;
    if (gap.empty() && !reduced) gap = "divisor is not reduced";
    if (!gap.empty()) {
      rows.skip("generalized_curve_by_multiplicities", "", gap);
    } else {
      bool equal = true;
      for (const auto& c : curves)
        if (c.weight > 0 && c.mu_df0 && c.mu_F_C != *c.mu_df0) equal = false;
      rows.compare("generalized_curve_by_multiplicities", "", r.generalized_curve ? 1 : 0, equal ? 1 : 0,
                   "1 = generalized curve; 1 = mu(F, C_j) = mu(df, C_j) for every j");
    }
  }

  if (rows.wants("gsv_polar_excess")) {
    if (!zero_gap.empty()) {
      rows.skip("gsv_polar_excess", "B0", zero_gap);
    } else {
      for (const auto& c : curves)
        if (c.weight > 0 && c.delta && c.adjacency)
          rows.compare("gsv_polar_excess", c.name, c.gsv_polar, *c.delta + *c.adjacency);
      rows.compare("gsv_polar_excess", "B0", ag.gsv_B0_polar, ag.delta_B0 - ag.i_B0_Binf);
    }
  }

  if (rows.wants("zero_part_gsv")) {
    if (!zero_gap.empty())
      rows.skip("zero_part_gsv", "B0", zero_gap);
    else
      rows.compare("zero_part_gsv", "B0", ag.gsv_B0_tjurina, ag.polar_B0 - ag.mu_B0 - ag.nu_B0 + 1,
                   "lhs by the Tjurina route");
  }

  if (rows.wants("gsv_milnor_gap")) {
    std::string gap = union_gap;
    if (gap.empty() && !reduced) gap = "divisor is not reduced";
    if (!gap.empty())
      rows.skip("gsv_milnor_gap", "B0", gap);
    else
      rows.compare_modes("gsv_milnor_gap", "B0", ag.gsv_B0_polar,
                         [&](ChiMode m) { return r.mu_F - ag.mu_B0 - chi_of(m); });
  }

  if (rows.wants("tjurina_gsv")) {
    for (const auto& c : curves) rows.compare("tjurina_gsv", c.name, c.gsv_tjurina, c.gsv_polar);
    if (has_zero && reduced) rows.compare("tjurina_gsv", "B0", ag.gsv_B0_tjurina, ag.gsv_B0_polar);
    if (!has_divisor) rows.skip("tjurina_gsv", "", "no divisor");
  }

  if (rows.wants("milnor_tjurina_gap")) {
    std::string gap = union_gap;
    if (gap.empty() && !reduced) gap = "divisor is not reduced";
    if (!gap.empty())
      rows.skip("milnor_tjurina_gap", "B0", gap);
    else
      rows.compare_modes("milnor_tjurina_gap", "B0", r.mu_F - ag.tau_F_B0,
                         [&](ChiMode m) { return ag.mu_B0 - ag.tau_B0 + chi_of(m); });
  }

  std::string tjurina_gap = mu_dFB_gap;
  if (tjurina_gap.empty() && !all_single) tjurina_gap = "Tjurina sums need single-branch terms";
  long tjurina_rhs_base = 0;
  if (tjurina_gap.empty()) {
    for (const auto& c : curves) tjurina_rhs_base += c.weight * (*c.mu_dFB - c.tau_C - *c.adjacency);
    tjurina_rhs_base += -ag.degree + 1;
  }

  if (rows.wants("milnor_tjurina_sum")) {
    if (!tjurina_gap.empty())
      rows.skip("milnor_tjurina_sum", "", tjurina_gap);
    else
      rows.compare_modes("milnor_tjurina_sum", "", r.mu_F - *ag.T,
                         [&](ChiMode m) { return tjurina_rhs_base + chi_of(m); });
  }

  if (rows.wants("tjurina_sum_without_chi")) {
    if (!tjurina_gap.empty()) {
      rows.skip("tjurina_sum_without_chi", "", tjurina_gap);
    } else if (!r.second_type) {
      const long lhs = r.mu_F - *ag.T;
      rows.skip("tjurina_sum_without_chi", "", std::string("not of second type; equality ") +
                                                  (lhs == tjurina_rhs_base ? "holds" : "fails"),
                lhs, tjurina_rhs_base);
    } else {
      rows.compare("tjurina_sum_without_chi", "", r.mu_F - *ag.T, tjurina_rhs_base);
    }
  }

  const bool grouped = std::any_of(curves.begin(), curves.end(), [](const auto& c) { return c.branches > 1; });
  const std::string grouped_note = grouped ? "terms with several branches taken as one component" : "";

  if (rows.wants("tjurina_total_union")) {
    std::string gap = union_gap;
    if (gap.empty() && !reduced) gap = "divisor is not reduced";
    if (!gap.empty()) {
      rows.skip("tjurina_total_union", "", gap);
    } else {
      long T = 0, tau = 0, adj = 0;
      for (std::size_t i = 0; i < n; ++i) {
        T += curves[i].tau_F_C;
        tau += curves[i].tau_C;
        for (std::size_t j = 0; j < n; ++j)
          if (j != i) adj += r.intersections[i][j];
      }
      rows.compare_modes("tjurina_total_union", "", r.mu_F - T,
                         [&](ChiMode m) { return ag.mu_B0 - tau + chi_of(m) - adj; }, grouped_note);
    }
  }

  if (rows.wants("tjurina_union_gap")) {
    std::string gap = union_gap;
    if (gap.empty() && !reduced) gap = "divisor is not reduced";
    if (!gap.empty()) {
      rows.skip("tjurina_union_gap", "", gap);
    } else {
      long T = 0, tau = 0, pairs = 0;
      for (std::size_t i = 0; i < n; ++i) {
        T += curves[i].tau_F_C;
        tau += curves[i].tau_C;
        for (std::size_t j = i + 1; j < n; ++j) pairs += r.intersections[i][j];
      }
      rows.compare("tjurina_union_gap", "", T - ag.tau_F_B0, tau - ag.tau_B0 + 2 * pairs, grouped_note);
    }
  }

  if (rows.wants("tangency_balance_probe")) {
    for (const auto& p : r.probes) {
      if (!divisor_gap.empty())
        rows.skip("tangency_balance_probe", p.name, divisor_gap);
      else if (p.invariant)
        rows.skip("tangency_balance_probe", p.name, "probe is invariant");
      else if (!p.tang)
        rows.skip("tangency_balance_probe", p.name, "probe is not a single branch");
      else
        rows.compare("tangency_balance_probe", p.name, p.divisor_intersection, *p.tang - p.excess_sum + 1, "",
                     "literal");
    }
  }

  if (rows.wants("generalized_curve_criterion")) {
    if (!zero_gap.empty())
      rows.skip("generalized_curve_criterion", "B0", zero_gap);
    else
      rows.compare("generalized_curve_criterion", "B0", ag.delta_B0 == 0 ? 1 : 0, r.generalized_curve ? 1 : 0,
                   "1 = zero polar excess of B0; 1 = generalized curve");
  }

  if (rows.wants("chi_sign_rules")) {
    auto rules = [&](ChiMode m) {
      const long chi = chi_of(m);
      long held = 0;
      held += chi >= 0;
      held += !r.second_type || chi == 0;
      held += chi != 0 || r.nu_F == 1 || r.second_type;
      held += r.nu_F <= 1 || ((chi == 0) == r.second_type);
      return held;
    };
    const long here = rules(r.mode);
    const ChiMode other = r.mode == ChiMode::Polar ? ChiMode::Literal : ChiMode::Polar;
    rows.compare("chi_sign_rules", "", here, 4,
                 "rules holding out of 4; " + mode_name(other) + " mode " + std::to_string(rules(other)),
                 mode_name(r.mode));
  }

  if (rows.wants("gsv_equals_multiplicity_smooth")) {
    for (const auto& c : curves)
      if (c.ind) rows.compare("gsv_equals_multiplicity_smooth", c.name, *c.ind, c.gsv_tjurina);
  }

  if (rows.wants("gsv_adjunction")) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        rows.compare("gsv_adjunction", curves[i].name + "+" + curves[j].name, r.union_gsv[i][j],
                     curves[i].gsv_polar + curves[j].gsv_polar - 2 * r.intersections[i][j]);
  }

  if (rows.wants("polar_excess_nonnegative")) {
    for (const auto& c : curves)
      if (c.weight > 0 && c.delta)
        rows.at_least("polar_excess_nonnegative", c.name, *c.delta, 0);
  }

  if (rows.wants("gsv_equals_excess_effective")) {
    if (!zero_gap.empty())
      rows.skip("gsv_equals_excess_effective", "B0", zero_gap);
    else if (!r.divisor.is_effective())
      rows.skip("gsv_equals_excess_effective", "B0", "divisor has poles");
    else if (!ag.delta_B)
      rows.skip("gsv_equals_excess_effective", "B0", "polar excess unavailable");
    else
      rows.compare("gsv_equals_excess_effective", "B0", ag.gsv_B0_polar, *ag.delta_B);
  }

  return rows.take();
}

}  // namespace foliage
