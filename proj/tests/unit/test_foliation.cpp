#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "foliage/cli/expression.hpp"
#include "foliage/errors.hpp"
#include "foliage/foliation/one_form.hpp"
#include "oracles.hpp"

using namespace foliage;

namespace {

Poly2 P(const std::string& s) { return parse_poly(s); }
OneForm form(const std::string& p, const std::string& q) { return OneForm(P(p), P(q)); }

OneForm radial() { return form("-y", "x"); }
OneForm dulac(int n) { return form(std::to_string(n) + "y + x^" + std::to_string(n), "-x"); }
OneForm four_xy() { return form("4xy", "y - 2x^2"); }
OneForm saddle_node(int k, int lambda) {
  return form("-y(1 + " + std::to_string(lambda) + "x^" + std::to_string(k) + ")", "x^" + std::to_string(k + 1));
}
OneForm f3() { return form("y(2x^4 + 2x^2 y - y^2)", "x(y^2 - x^2 y - x^4)"); }

// P dx + Q dy pulled back by x = a u + b v, y = c u + d v.
OneForm linear_pullback(const OneForm& w, long a, long b, long c, long d) {
  auto change = [&](const Poly2& f) { return linear_change(f, a, b, c, d); };
  const Poly2 p = change(w.P()), q = change(w.Q());
  return OneForm(p * FieldElement(a) + q * FieldElement(c), p * FieldElement(b) + q * FieldElement(d));
}

// mu(F, B) from the order of the transported vector field along a smooth
// parametrization.
long theta_order(const OneForm& w, const Poly2& branch) {
  const int precision = 24;
  const auto gamma = oracle::parametrize_smooth(branch, precision);
  const auto ord = oracle::order_along(gamma.swapped ? w.P() : w.Q(), gamma, precision);
  REQUIRE(ord.has_value());
  return *ord;
}

}  // namespace

TEST_CASE("one-forms reject common factors and the zero form") {
  CHECK_THROWS_AS(OneForm(P("x y"), P("x^2")), InputError);
  CHECK_THROWS_AS(OneForm(Poly2(), Poly2()), InputError);
  CHECK_NOTHROW(OneForm(P("x(1 + y)"), P("1 + y")));
  CHECK_FALSE(form("1", "x").is_singular());
  CHECK(radial().is_singular());
}

TEST_CASE("algebraic multiplicity") {
  CHECK(algebraic_multiplicity(radial()) == 1);
  CHECK(algebraic_multiplicity(f3()) == 3);
  CHECK(algebraic_multiplicity(dulac(2)) == 1);
  CHECK(algebraic_multiplicity(hamiltonian(P("y^2 - x^3"))) == 1);
  CHECK(algebraic_multiplicity(hamiltonian(P("y^3 - x^4"))) == 2);
}

TEST_CASE("invariance") {
  CHECK(is_invariant(radial(), P("x")));
  CHECK(is_invariant(radial(), P("x - 3y")));
  CHECK(is_invariant(dulac(2), P("x")));
  CHECK_FALSE(is_invariant(dulac(2), P("y")));
  CHECK(is_invariant(form("-3y", "2x"), P("y^2 - x^3")));
  CHECK(is_invariant(hamiltonian(P("y^2 - x^3 + x^2 y")), P("y^2 - x^3 + x^2 y")));
  CHECK_FALSE(is_invariant(four_xy(), P("x")));
}

TEST_CASE("Milnor number of a foliation") {
  CHECK(milnor_foliation(dulac(2)) == 1);
  CHECK(milnor_foliation(dulac(3)) == 1);
  CHECK(milnor_foliation(four_xy()) == 3);
  CHECK(milnor_foliation(saddle_node(2, 1)) == 3);
  CHECK(milnor_foliation(radial()) == 1);
  CHECK(milnor_foliation(f3()) == 15);
  for (int k = 1; k <= 3; ++k)
    for (int lambda = 0; lambda <= 1; ++lambda) CHECK(milnor_foliation(saddle_node(k, lambda)) == k + 1);
}

TEST_CASE("polar curves") {
  const PolarCurve p = polar(radial(), FieldElement(1), FieldElement(0));
  CHECK(p.numerator == P("-y"));
  CHECK(p.denominator == P("1"));
  CHECK_THROWS_AS(polar(radial(), FieldElement(0), FieldElement(0)), InputError);

  const FieldElement a(3), b(-5);
  const PolarCurve h = polar_of_differential({P("x^3 y^2"), P("1")}, a, b);
  CHECK(h.numerator == P("9x^2 y^2 - 10x^3 y"));

  const Poly2 f = P("x y (x - y)"), g = P("x + y");
  const PolarCurve m = polar_of_differential({f, g}, a, b);
  const Poly2 expected = g * (f.derivative(0) * a + f.derivative(1) * b) - f * (g.derivative(0) * a + g.derivative(1) * b);
  CHECK(m.numerator == expected);
  CHECK(m.denominator == g * g);
}

TEST_CASE("polar sampler is deterministic") {
  PolarSampler s1(7), s2(7), s0(0);
  const auto first = s0.next();
  CHECK(first.first == FieldElement(3));
  CHECK(first.second == FieldElement(7));
  for (int i = 0; i < 20; ++i) {
    const auto u = s1.next(), v = s2.next();
    CHECK(u.first == v.first);
    CHECK(u.second == v.second);
    CHECK_FALSE((u.first.is_zero() && u.second.is_zero()));
  }
}

TEST_CASE("generic polar intersections") {
  CHECK(generic_polar_intersection(radial(), P("x y (x - y)")) == 3);
  CHECK(generic_polar_intersection(hamiltonian(P("y^2 - x^3")), P("y^2 - x^3")) == 3);
  CHECK(generic_polar_intersection(dulac(2), P("x")) == 1);
  CHECK(generic_polar_intersection(Meromorphic{P("x y"), P("1")}, P("y")) == 1);
  // d(xy(x-y)/(x+y)) along x: the pole contributes -2 i(x+y, x)
  const Meromorphic F{P("x y (x - y)"), P("x + y")};
  CHECK(generic_polar_intersection(F, P("x")) == 1);
}

TEST_CASE("Teissier's formula on hamiltonian forms") {
  std::mt19937_64 rng(11);
  const std::vector<std::string> curves = {"y^2 - x^3",      "y^2 - x^5",      "x y (x + y)", "y^3 - x^4",
                                           "(y - x^2)(y + x^3)", "y^2 - x^2 + x^3", "x^2 y + y^4"};
  for (const auto& s : curves) {
    const Poly2 f = P(s);
    CAPTURE(s);
    const long mu = milnor_curve(f).value();
    CHECK(generic_polar_intersection(hamiltonian(f), f, rng()) == mu + f.order() - 1);
  }
}

TEST_CASE("tangency order") {
  CHECK(tangency_order(dulac(2), P("y")) == 2);
  CHECK(tangency_order(four_xy(), P("x")) == 1);
  CHECK(tangency_order(four_xy(), P("y - x^3")) == 4);
  CHECK_THROWS_AS(tangency_order(radial(), P("y")), InputError);
}

TEST_CASE("tangency index") {
  for (int k = 1; k <= 3; ++k) CHECK(tangency_index(saddle_node(k, 1), P("y")) == k + 1);
  CHECK(tangency_index(radial(), P("y")) == 1);
  CHECK(tangency_index(dulac(2), P("x")) == 1);
  CHECK(tangency_index(dulac(3), P("x")) == 1);
  CHECK_THROWS_AS(tangency_index(hamiltonian(P("y^2 - x^3")), P("y^2 - x^3")), InputError);
}

TEST_CASE("multiplicity along a separatrix") {
  const Meromorphic xy{P("x y"), P("1")};
  CHECK(multiplicity_along(xy, P("y")) + multiplicity_along(xy, P("x")) == 2);
  CHECK(multiplicity_along(Meromorphic{P("x"), P("1")}, P("x")) == 0);
  CHECK(multiplicity_along(radial(), P("x")) == 1);
  CHECK_THROWS_AS(multiplicity_along(dulac(2), P("y")), InputError);
  CHECK_THROWS_AS(multiplicity_along(xy, P("x - y")), InputError);
}

TEST_CASE("multiplicity along smooth separatrices matches the transported vector field") {
  struct Case {
    OneForm w;
    std::string branch;
  };
  const std::vector<Case> cases = {
      {saddle_node(1, 0), "y"}, {saddle_node(2, 1), "y"}, {saddle_node(3, 1), "x"}, {radial(), "y - 2x"},
      {dulac(2), "x"},          {four_xy(), "y"},         {f3(), "y"},            {f3(), "x"},
      {form("-3y", "2x"), "x"}, {form("-3y", "2x"), "y"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.branch);
    const Poly2 b = P(c.branch);
    REQUIRE(is_invariant(c.w, b));
    CHECK(multiplicity_along(c.w, b) == theta_order(c.w, b));
    CHECK(tangency_index(c.w, b) == theta_order(c.w, b));
  }
}

TEST_CASE("multiplicity along a separatrix dominates the balanced differential") {
  const Meromorphic xy{P("x y"), P("1")};
  CHECK(multiplicity_along(f3(), P("y")) >= multiplicity_along(xy, P("y")));
  CHECK(multiplicity_along(f3(), P("x")) >= multiplicity_along(xy, P("x")));
  const Meromorphic x{P("x"), P("1")};
  CHECK(multiplicity_along(dulac(2), P("x")) >= multiplicity_along(x, P("x")));
  const Meromorphic sn{P("x y"), P("1")};
  for (int k = 1; k <= 3; ++k) {
    CHECK(multiplicity_along(saddle_node(k, 1), P("y")) >= multiplicity_along(sn, P("y")));
    CHECK(multiplicity_along(saddle_node(k, 1), P("x")) >= multiplicity_along(sn, P("x")));
  }
}

TEST_CASE("generic polar intersection is invariant under linear changes") {
  struct Case {
    OneForm w;
    std::string curve;
  };
  const std::vector<Case> cases = {
      {four_xy(), "y"}, {dulac(2), "x"}, {f3(), "x y"}, {radial(), "x y (x - y)"}, {saddle_node(2, 1), "x y"},
  };
  const long changes[][4] = {{1, 2, 0, 1}, {2, 1, 1, 1}, {1, 0, -3, 1}, {0, 1, 1, 0}};
  for (const auto& c : cases)
    for (const auto& m : changes) {
      const Poly2 f = P(c.curve);
      const long base = generic_polar_intersection(c.w, f);
      const OneForm w2 = linear_pullback(c.w, m[0], m[1], m[2], m[3]);
      const Poly2 f2 = linear_change(f, m[0], m[1], m[2], m[3]);
      CAPTURE(c.curve);
      CHECK(is_invariant(w2, f2));
      CHECK(generic_polar_intersection(w2, f2) == base);
      CHECK(milnor_foliation(w2) == milnor_foliation(c.w));
    }
}
