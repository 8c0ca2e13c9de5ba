#pragma once

#include <string>
#include <vector>

#include "foliage/algebra/field.hpp"

namespace foliage {

// Dense univariate polynomial, coefficients low to high.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<FieldElement> coeffs);
  Poly1(const FieldElement& constant);
  static Poly1 monomial(const FieldElement& c, int k);
  static Poly1 variable() { return monomial(FieldElement(1), 1); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<FieldElement>& coeffs() const noexcept { return c_; }
  FieldElement coeff(int k) const;
  const FieldElement& lc() const;
  // Lowest k with a semantically nonzero coefficient.
  int order() const;

  Poly1 operator-() const;
  Poly1& operator+=(const Poly1& o);
  Poly1& operator-=(const Poly1& o);
  Poly1& operator*=(const Poly1& o);
  Poly1& operator*=(const FieldElement& s);
  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(Poly1 a, const Poly1& b) { return a *= b; }
  friend Poly1 operator*(Poly1 a, const FieldElement& s) { return a *= s; }
  friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

  Poly1 derivative() const;
  Poly1 monic() const;
  FieldElement eval(const FieldElement& t) const;
  // p(t + shift)
  Poly1 translate(const FieldElement& shift) const;
  bool is_rational() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<FieldElement> c_;
};

// a = q*b + r with deg r < deg b.
void divmod(const Poly1& a, const Poly1& b, Poly1& q, Poly1& r);
Poly1 exact_div(const Poly1& a, const Poly1& b);
// Monic gcd; gcd(0,0) = 0.
Poly1 gcd(const Poly1& a, const Poly1& b);
Poly1 squarefree_part(const Poly1& p);
Poly1 pow(const Poly1& p, int e);

struct RootOrbit {
  FieldElement value;   // representative root
  Poly1 minpoly;        // monic squarefree factor it is a root of
  int weight = 1;       // number of conjugate roots represented
  TowerPtr tower;       // tower holding value (null: rationals)
};

// One representative per factor of the squarefree part of p over `base`.
// Rational roots (over Q) and the root 0 (over extensions) are peeled off as
// linear factors; the remaining factor becomes a new tower level. Factors of
// `hints` (rational polynomials) are separated first; tests use this to force
// splits.
std::vector<RootOrbit> split_extension(const Poly1& p, const TowerPtr& base,
                                       const std::vector<Poly1>& hints = {},
                                       const std::string& name = "");

}  // namespace foliage
