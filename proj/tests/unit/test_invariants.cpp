#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "foliage/cli/expression.hpp"
#include "foliage/errors.hpp"
#include "foliage/invariants/identities.hpp"
#include "foliage/invariants/report.hpp"

using namespace foliage;

namespace {

Poly2 P(const std::string& s) { return parse_poly(s); }
OneForm form(const std::string& p, const std::string& q) { return OneForm(P(p), P(q)); }

OneForm radial() { return form("-y", "x"); }
OneForm dulac(int n) { return form(std::to_string(n) + "y + x^" + std::to_string(n), "-x"); }
OneForm four_xy() { return form("4xy", "y - 2x^2"); }
OneForm saddle_node(int k) { return form("-y(1 + x^" + std::to_string(k) + ")", "x^" + std::to_string(k + 1)); }
OneForm f_k(int k) {
  const std::string e = std::to_string(2 * k - 2), m = std::to_string(k - 2), n = std::to_string(k - 1);
  return form("y(2x^" + e + " + 2x^2 y^" + m + " - y^" + n + ")", "x(y^" + n + " - x^2 y^" + m + " - x^" + e + ")");
}

struct T {
  std::string name;
  std::string eq;
  long weight = 1;
};

SeparatrixDivisor divisor(const std::vector<T>& terms) {
  std::vector<DivisorTerm> out;
  for (const auto& t : terms) out.push_back({t.name, P(t.eq), t.weight});
  return SeparatrixDivisor(out);
}

InvariantReport run(const OneForm& w, const std::vector<T>& terms, const std::vector<T>& probes = {},
                    ChiMode mode = ChiMode::Polar) {
  std::vector<DivisorTerm> p;
  for (const auto& t : probes) p.push_back({t.name, P(t.eq), 1});
  AnalyzeOptions o;
  o.mode = mode;
  return analyze(w, divisor(terms), p, o);
}

void check_no_failures(const InvariantReport& r) {
  for (const auto& row : r.rows) {
    CAPTURE(row.name);
    CAPTURE(row.subject);
    CAPTURE(row.lhs);
    CAPTURE(row.rhs);
    CAPTURE(row.note);
    CHECK(row.status != RowStatus::Fail);
  }
}

RowStatus status(const InvariantReport& r, const std::string& name, const std::string& subject = "") {
  const IdentityRow* row = r.row(name, subject);
  REQUIRE(row != nullptr);
  return row->status;
}

}  // namespace

TEST_CASE("row status names") {
  CHECK(to_string(RowStatus::Pass) == "pass");
  CHECK(to_string(RowStatus::Fail) == "fail");
  CHECK(to_string(RowStatus::NotApplicable) == "n/a");
  CHECK(identity_names().size() == 24);
}

TEST_CASE("radial foliation with a pole") {
  const InvariantReport r = run(radial(), {{"x", "x"}, {"y", "y"}, {"xy", "x - y"}, {"pole", "x + y", -1}});
  CHECK(r.balanced());
  CHECK(r.mu_F == 1);
  CHECK(r.nu_F == 1);
  CHECK(r.dicritical);
  CHECK(r.generalized_curve);
  CHECK(r.aggregates.delta_B0 == 0);
  CHECK(r.aggregates.mu_B0 == 4);
  CHECK(r.aggregates.i_B0_Binf == 3);
  REQUIRE(r.aggregates.T);
  CHECK(*r.aggregates.T == 2);
  CHECK(r.aggregates.nu_weighted == 2);
  CHECK(r.aggregates.nu_unweighted == 4);
  CHECK(status(r, "multiplicity_balance") == RowStatus::Pass);
  CHECK(r.row("multiplicity_balance")->note.find("unweighted multiplicity 4 gives rhs 3") != std::string::npos);
  CHECK(status(r, "zero_part_polar_excess", "B0") == RowStatus::Pass);
  CHECK(status(r, "tjurina_total_union") == RowStatus::NotApplicable);
  check_no_failures(r);

  const InvariantReport plain = run(radial(), {{"x", "x"}, {"y", "y"}});
  CHECK(plain.balanced());
  check_no_failures(plain);
}

TEST_CASE("saddle-node normal form") {
  const InvariantReport r = run(saddle_node(2), {{"x", "x"}, {"y", "y"}});
  CHECK(r.balanced());
  CHECK(r.mu_F == 3);
  CHECK(r.second_type);
  CHECK_FALSE(r.generalized_curve);
  CHECK(r.curve("x")->gsv_polar == 1);
  CHECK(r.curve("y")->gsv_polar == 3);
  CHECK(r.aggregates.gsv_B0_polar == 2);
  CHECK(r.curve("y")->ind == 3);
  CHECK(status(r, "generalized_curve_by_multiplicities") == RowStatus::Pass);
  check_no_failures(r);
}

TEST_CASE("the 4xy example") {
  const InvariantReport r = run(four_xy(), {{"C", "y"}}, {{"B", "y - x^3"}});
  CHECK(r.balanced());
  CHECK(r.mu_F == 3);
  CHECK(r.xi == 1);
  CHECK(r.chi_literal == 2);
  CHECK(r.chi_polar == 1);
  CHECK(r.chi() == 1);
  CHECK(r.curve("C")->tau_F_C == 2);
  CHECK(r.curve("C")->tau_C == 0);
  CHECK(r.curve("C")->gsv_tjurina == 2);
  CHECK(r.curve("C")->gsv_polar == 2);
  REQUIRE(r.aggregates.T);
  CHECK(*r.aggregates.T == 2);

  const IdentityRow* probe = r.row("tangency_balance_probe", "B");
  REQUIRE(probe);
  CHECK(probe->status == RowStatus::Pass);
  CHECK(probe->lhs == 3);
  CHECK(probe->rhs == 3);
  CHECK(r.probes[0].tang == 4);
  CHECK(r.probes[0].excess_sum == 2);

  const IdentityRow* modes = r.row("milnor_multiplicity_sum");
  REQUIRE(modes);
  CHECK(modes->mode == "polar");
  CHECK(modes->note.find("modes disagree") != std::string::npos);

  const IdentityRow* cor = r.row("tjurina_sum_without_chi");
  REQUIRE(cor);
  CHECK(cor->status == RowStatus::NotApplicable);
  CHECK(cor->note.find("fails") != std::string::npos);
  check_no_failures(r);
}

TEST_CASE("the Dulac foliation") {
  for (int n : {2, 3}) {
    CAPTURE(n);
    const InvariantReport r = run(dulac(n), {{"C", "x"}}, {{"B", "y"}});
    CHECK(r.balanced());
    CHECK(r.mu_F == 1);
    CHECK(r.xi == 1);
    CHECK(r.chi_polar == 0);
    CHECK_FALSE(r.second_type);
    CHECK(r.curve("C")->tau_F_C == 1);
    CHECK(r.curve("C")->tau_C == 0);
    CHECK(r.curve("C")->mu_dFB == 0);
    REQUIRE(r.aggregates.T);
    CHECK(*r.aggregates.T == 1);
    const IdentityRow* cor = r.row("tjurina_sum_without_chi");
    REQUIRE(cor);
    CHECK(cor->status == RowStatus::NotApplicable);
    CHECK(cor->note.find("holds") != std::string::npos);
    CHECK(cor->lhs == cor->rhs);
    const IdentityRow* probe = r.row("tangency_balance_probe", "B");
    REQUIRE(probe);
    CHECK(probe->status == RowStatus::Pass);
    CHECK(probe->lhs == 1);
    check_no_failures(r);
  }
}

TEST_CASE("the family F_k") {
  for (int k : {3, 4}) {
    CAPTURE(k);
    const InvariantReport r = run(f_k(k), {{"B1", "y"}, {"B2", "x"}});
    CHECK(r.balanced());
    CHECK(r.mu_F == (k - 2) * (2 * k - 2) + 5 * k - 4);
    REQUIRE(r.aggregates.T);
    CHECK(*r.aggregates.T == 3 * k - 1);
    CHECK(r.curve("B1")->tau_C == 0);
    CHECK(r.curve("B2")->tau_C == 0);
    CHECK(*r.curve("B1")->mu_dFB + *r.curve("B2")->mu_dFB == 2);
    CHECK(r.chi_polar == 2 * (k - 1) * (k - 1));
    CHECK(status(r, "polar_excess_formula") == RowStatus::Pass);
    CHECK(status(r, "milnor_tjurina_sum") == RowStatus::Pass);
    check_no_failures(r);
  }
}

TEST_CASE("a dicritical example where the polar excess and the GSV index differ") {
  const InvariantReport r =
      run(form("-3y", "2x"), {{"C", "y^2 - x^3"}, {"x", "x"}, {"y", "y"}, {"D", "y^2 - 2x^3", -1}});
  CHECK(r.balanced());
  const CurveInvariants* c = r.curve("C");
  REQUIRE(c->delta);
  CHECK(*c->delta == 0);
  CHECK(c->gsv_polar == -1);
  CHECK(c->gsv_tjurina == -1);
  check_no_failures(r);
}

TEST_CASE("hamiltonian foliations satisfy every identity") {
  const InvariantReport r = run(hamiltonian(P("(y^2 - x^3)(y - x^2 + x y)")), {{"A", "y^2 - x^3"}, {"B", "y - x^2 + x y"}});
  CHECK(r.balanced());
  CHECK(r.generalized_curve);
  CHECK(r.chi_polar == 0);
  CHECK(r.aggregates.delta_B0 == 0);
  for (const auto& row : r.rows) {
    CAPTURE(row.name);
    CAPTURE(row.subject);
    CHECK(row.status == RowStatus::Pass);
  }
  CHECK(r.aggregates.gsv_B0_polar == 0);
  CHECK(r.aggregates.gsv_B0_tjurina == 0);
  for (std::size_t i = 0; i < r.curves.size(); ++i) {
    const auto& c = r.curves[i];
    const long others = r.intersections[i][1 - i];
    CHECK(c.gsv_polar == others);
    CHECK(c.gsv_tjurina == others);
    CHECK(*c.delta == 0);
  }
}

TEST_CASE("random hamiltonian products") {
  const std::vector<std::string> factors = {"y - x^2", "y + 2x", "y^2 - x^3", "x - y^2", "y - 3x + x^2", "y^2 - x^5"};
  std::mt19937 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<std::string> chosen = factors;
    std::shuffle(chosen.begin(), chosen.end(), rng);
    chosen.resize(2 + trial % 2);
    std::vector<T> terms;
    Poly2 f = P("1");
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      terms.push_back({"C" + std::to_string(i), chosen[i]});
      f *= P(chosen[i]);
    }
    CAPTURE(f.to_string());
    const InvariantReport r = run(hamiltonian(f), terms);
    CHECK(r.balanced());
    CHECK(r.generalized_curve);
    CHECK(r.all_pass());
    CHECK(r.aggregates.gsv_B0_polar == 0);
    for (std::size_t i = 0; i < r.curves.size(); ++i) {
      long others = 0;
      for (std::size_t j = 0; j < r.curves.size(); ++j) others += r.intersections[i][j];
      CHECK(r.curves[i].gsv_polar == others);
    }
  }
}

TEST_CASE("GSV adjunction on unions") {
  const InvariantReport r = run(saddle_node(1), {{"x", "x"}, {"y", "y"}});
  const IdentityRow* row = r.row("gsv_adjunction", "x+y");
  REQUIRE(row);
  CHECK(row->status == RowStatus::Pass);
  CHECK(r.union_gsv[0][1] == r.curve("x")->gsv_polar + r.curve("y")->gsv_polar - 2);
}

TEST_CASE("free functions") {
  const OneForm w = four_xy();
  const GsvValue g = gsv(w, P("y"));
  CHECK(g.polar == 2);
  CHECK(g.agree());
  CHECK_THROWS_AS(gsv(w, P("x")), InputError);
  CHECK(tjurina_foliation(w, P("y")) == 2);
  CHECK_THROWS_AS(tjurina_foliation(w, P("x")), InputError);
  CHECK(branch_tangency(w, P("y - x^3")) == 4);
  CHECK(branch_tangency(dulac(2), P("y")) == 2);
  CHECK(branch_tangency(w, P("x")) == 1);

  const SeparatrixDivisor d = divisor({{"x", "x"}, {"y", "y"}});
  CHECK(polar_excess(f_k(3), d, "y") == *run(f_k(3), {{"x", "x"}, {"y", "y"}}).curve("y")->delta);
  CHECK(tjurina_sum(f_k(3), d) == 8);
  CHECK_THROWS_AS(tjurina_sum(hamiltonian(P("x y (x + y)")), divisor({{"c", "x y (x + y)"}})), InputError);
}

TEST_CASE("check selection and modes") {
  AnalyzeOptions o;
  o.checks = {"multiplicity_balance", "chi_sign_rules"};
  const InvariantReport r = analyze(four_xy(), divisor({{"C", "y"}}), {}, o);
  CHECK(r.rows.size() == 2);
  o.checks = {"no_such_row"};
  CHECK_THROWS_AS(analyze(four_xy(), divisor({{"C", "y"}}), {}, o), InputError);

  const InvariantReport lit = run(four_xy(), {{"C", "y"}}, {}, ChiMode::Literal);
  CHECK(lit.chi() == 2);
  CHECK(lit.row("milnor_multiplicity_sum")->mode == "literal");
  CHECK(lit.row("chi_sign_rules")->status == RowStatus::Pass);
}

TEST_CASE("unbalanced and missing divisors mark rows not applicable") {
  const InvariantReport r = run(radial(), {{"x", "x"}});
  CHECK_FALSE(r.balanced());
  CHECK(status(r, "multiplicity_balance") == RowStatus::NotApplicable);
  CHECK(r.row("multiplicity_balance")->note == "divisor is not balanced");

  const InvariantReport empty = analyze(dulac(2), SeparatrixDivisor());
  CHECK(empty.curves.empty());
  CHECK(status(empty, "multiplicity_balance") == RowStatus::NotApplicable);
  CHECK(empty.row("chi_sign_rules")->status == RowStatus::Pass);
}

TEST_CASE("non-invariant terms are rejected") {
  CHECK_THROWS_AS(run(dulac(2), {{"y", "y"}}), InputError);
  CHECK_THROWS_AS(run(four_xy(), {{"C", "y"}}, {{"B", "x + 1"}}), InputError);
}
