#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "foliage/algebra/field.hpp"
#include "foliage/algebra/poly1.hpp"

namespace foliage {

// Sparse polynomial in two named variables. Key (i, j) is var0^i var1^j.
// No stored coefficient is representation-zero.
class Poly2 {
 public:
  using Exponent = std::pair<int, int>;
  using Terms = std::map<Exponent, FieldElement>;
  using Vars = std::array<std::string, 2>;

  Poly2() : vars_{"x", "y"} {}
  explicit Poly2(Vars vars) : vars_(std::move(vars)) {}
  Poly2(Vars vars, const FieldElement& constant);

  static Poly2 monomial(const Vars& vars, const FieldElement& c, int i, int j);
  static Poly2 variable(const Vars& vars, int k);

  const Vars& vars() const noexcept { return vars_; }
  const Terms& terms() const noexcept { return terms_; }
  Poly2 renamed(const Vars& vars) const;

  bool is_zero() const noexcept { return terms_.empty(); }
  FieldElement coeff(int i, int j) const;
  FieldElement constant_term() const { return coeff(0, 0); }
  void set_coeff(int i, int j, const FieldElement& c);
  // Semantic: constant term is zero.
  bool vanishes_at_origin() const;
  bool is_rational() const;

  // Lowest total degree of a nonzero term.
  int order() const;
  int total_degree() const;
  int degree_in(int k) const;
  // Lowest exponent of var k over all terms.
  int valuation_in(int k) const;
  Poly2 homogeneous_part(int d) const;
  Poly2 initial_form() const;

  Poly2 derivative(int k) const;
  // Substitute var0 -> g0 and var1 -> g1; the result uses g0's variables.
  Poly2 compose(const Poly2& g0, const Poly2& g1) const;
  // var k -> var k + c
  Poly2 translate(int k, const FieldElement& c) const;
  Poly2 divide_by_var_power(int k, int e) const;
  // Set var k to zero; polynomial in the other variable.
  Poly1 restrict_axis(int k) const;
  // Coefficients of powers of var k, each a polynomial in the other variable.
  std::vector<Poly1> coefficients_in(int k) const;
  static Poly2 from_coefficients_in(const Vars& vars, int k, const std::vector<Poly1>& coeffs);

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Poly2& o);
  Poly2& operator*=(const FieldElement& s);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(Poly2 a, const Poly2& b) { return a *= b; }
  friend Poly2 operator*(Poly2 a, const FieldElement& s) { return a *= s; }
  friend Poly2 operator*(const FieldElement& s, Poly2 a) { return a *= s; }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

  // Canonical text: terms by descending total degree, then descending
  // exponent of var0. Non-integer rationals are parenthesized.
  std::string to_string() const;

 private:
  void check_vars(const Poly2& o) const;
  Vars vars_;
  Terms terms_;
};

Poly2 pow(const Poly2& f, int e);

// Normalized so the term with the largest (exponent of var1, exponent of
// var0) has coefficient 1. gcd(0, g) = normalized g.
Poly2 gcd(const Poly2& f, const Poly2& g);
Poly2 exact_div(const Poly2& f, const Poly2& g);
bool divides(const Poly2& g, const Poly2& f);
// f / gcd(f, f_x, f_y), normalized.
Poly2 squarefree_part(const Poly2& f);
Poly2 normalize(const Poly2& f);

// Sylvester resultant eliminating var k; a polynomial in the other variable.
Poly1 resultant(const Poly2& f, const Poly2& g, int k);

// f(a*x + b*y, c*x + d*y) for an invertible rational matrix.
Poly2 linear_change(const Poly2& f, const mpq_class& a, const mpq_class& b, const mpq_class& c,
                    const mpq_class& d);

}  // namespace foliage
