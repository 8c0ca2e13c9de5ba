#include "foliage/algebra/poly1.hpp"

#include <stdexcept>

#include "foliage/algebra/rational_roots.hpp"
#include "foliage/errors.hpp"

namespace foliage {

Poly1::Poly1(std::vector<FieldElement> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly1::Poly1(const FieldElement& constant) {
  if (!constant.is_rep_zero()) c_.push_back(constant);
}

Poly1 Poly1::monomial(const FieldElement& c, int k) {
  if (c.is_rep_zero()) return {};
  std::vector<FieldElement> v(k + 1);
  v[k] = c;
  return Poly1(std::move(v));
}

void Poly1::trim() {
  while (!c_.empty() && c_.back().is_rep_zero()) c_.pop_back();
}

FieldElement Poly1::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return {};
  return c_[k];
}

const FieldElement& Poly1::lc() const {
  if (c_.empty()) throw ZeroPolynomialError();
  return c_.back();
}

int Poly1::order() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  throw ZeroPolynomialError();
}

Poly1 Poly1::operator-() const {
  Poly1 r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly1& Poly1::operator+=(const Poly1& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly1& Poly1::operator*=(const Poly1& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<FieldElement> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_rep_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly1& Poly1::operator*=(const FieldElement& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

Poly1 Poly1::derivative() const {
  std::vector<FieldElement> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * FieldElement(static_cast<long>(k)));
  return Poly1(std::move(d));
}

Poly1 Poly1::monic() const {
  if (c_.empty()) return {};
  return *this * lc().inverse();
}

FieldElement Poly1::eval(const FieldElement& t) const {
  FieldElement acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
  return acc;
}

Poly1 Poly1::translate(const FieldElement& shift) const {
  // Horner in the shifted variable.
  Poly1 acc;
  const Poly1 lin(std::vector<FieldElement>{shift, FieldElement(1)});
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * lin + Poly1(c_[k]);
  return acc;
}

bool Poly1::is_rational() const {
  for (const auto& c : c_)
    if (!c.is_rational()) return false;
  return true;
}

std::string Poly1::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_rep_zero()) continue;
    std::string cs = c_[k].to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (neg) cs.erase(0, 1);
    if (k == 0) out += cs;
    else {
      if (cs != "1") out += cs + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

void divmod(const Poly1& a, const Poly1& b, Poly1& q, Poly1& r) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<FieldElement> rem = a.coeffs();
  const int db = b.degree();
  const auto& bc = b.coeffs();
  if (a.degree() < db) {
    q = Poly1();
    r = a;
    return;
  }
  const FieldElement inv = b.lc().inverse();
  std::vector<FieldElement> quo(a.degree() - db + 1);
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k].is_rep_zero()) continue;
    FieldElement c = rem[k] * inv;
    quo[k - db] = c;
    for (int i = 0; i <= db; ++i) rem[k - db + i] -= c * bc[i];
    rem[k] = FieldElement();
  }
  q = Poly1(std::move(quo));
  r = Poly1(std::move(rem));
}

Poly1 exact_div(const Poly1& a, const Poly1& b) {
  Poly1 q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

Poly1 gcd(const Poly1& a, const Poly1& b) {
  Poly1 r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Poly1 q, r;
    divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  return r0.monic();
}

Poly1 squarefree_part(const Poly1& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  if (p.degree() <= 0) return Poly1(FieldElement(1));
  return exact_div(p, gcd(p, p.derivative())).monic();
}

Poly1 pow(const Poly1& p, int e) {
  Poly1 r(FieldElement(1)), b = p;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::vector<RootOrbit> split_extension(const Poly1& p, const TowerPtr& base, const std::vector<Poly1>& hints,
                                       const std::string& name) {
  if (p.is_zero()) throw ZeroPolynomialError();
  std::vector<RootOrbit> out;
  if (p.degree() <= 0) return out;
  const Poly1 t = Poly1::variable();

  std::vector<Poly1> factors{squarefree_part(p)};
  for (const auto& h : hints) {
    std::vector<Poly1> next;
    for (const auto& f : factors) {
      Poly1 g = gcd(f, h);
      if (g.degree() > 0 && g.degree() < f.degree()) {
        next.push_back(g);
        next.push_back(exact_div(f, g).monic());
      } else {
        next.push_back(f);
      }
    }
    factors = std::move(next);
  }

  int extensions = 0;
  for (Poly1 f : factors) {
    if (!base && f.is_rational()) {
      std::vector<mpq_class> q;
      for (const auto& c : f.coeffs()) q.push_back(c.rational());
      for (const auto& r : rational_roots(q)) {
        out.push_back({FieldElement(r), t - Poly1(FieldElement(r)), 1, nullptr});
        f = exact_div(f, t - Poly1(FieldElement(r)));
      }
    } else if (f.degree() > 1 && f.coeff(0).is_zero()) {
      out.push_back({FieldElement(), t, 1, base});
      f = exact_div(f, t);
    }
    if (f.degree() == 1) {
      FieldElement root = -(f.coeff(0) / f.coeff(1));
      out.push_back({root, f.monic(), 1, base});
    } else if (f.degree() >= 2) {
      std::string level_name = name;
      if (!level_name.empty() && extensions > 0) level_name += "_" + std::to_string(extensions);
      ++extensions;
      Poly1 m = f.monic();
      TowerPtr tower = Tower::extend(base, m.coeffs(), level_name);
      out.push_back({FieldElement::generator(tower), m, m.degree(), tower});
    }
  }
  return out;
}

}  // namespace foliage
