#include "foliage/algebra/poly2.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "foliage/errors.hpp"

namespace foliage {

Poly2::Poly2(Vars vars, const FieldElement& constant) : vars_(std::move(vars)) {
  if (!constant.is_rep_zero()) terms_[{0, 0}] = constant;
}

Poly2 Poly2::monomial(const Vars& vars, const FieldElement& c, int i, int j) {
  Poly2 p(vars);
  if (!c.is_rep_zero()) p.terms_[{i, j}] = c;
  return p;
}

Poly2 Poly2::variable(const Vars& vars, int k) {
  return k == 0 ? monomial(vars, FieldElement(1), 1, 0) : monomial(vars, FieldElement(1), 0, 1);
}

Poly2 Poly2::renamed(const Vars& vars) const {
  Poly2 p = *this;
  p.vars_ = vars;
  return p;
}

FieldElement Poly2::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? FieldElement() : it->second;
}

void Poly2::set_coeff(int i, int j, const FieldElement& c) {
  if (c.is_rep_zero()) terms_.erase({i, j});
  else terms_[{i, j}] = c;
}

bool Poly2::vanishes_at_origin() const { return constant_term().is_zero(); }

bool Poly2::is_rational() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_rational()) return false;
  return true;
}

int Poly2::order() const {
  if (terms_.empty()) throw ZeroPolynomialError();
  // Check candidate degrees in increasing order so zero tests only touch
  // the terms that matter.
  std::map<int, std::vector<const FieldElement*>> by_degree;
  for (const auto& [e, c] : terms_) by_degree[e.first + e.second].push_back(&c);
  for (const auto& [d, cs] : by_degree)
    for (const auto* c : cs)
      if (!c->is_zero()) return d;
  throw ZeroPolynomialError();
}

int Poly2::total_degree() const {
  if (terms_.empty()) throw ZeroPolynomialError();
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

int Poly2::degree_in(int k) const {
  if (terms_.empty()) throw ZeroPolynomialError();
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, k == 0 ? e.first : e.second);
  return d;
}

int Poly2::valuation_in(int k) const {
  if (terms_.empty()) throw ZeroPolynomialError();
  int d = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) d = std::min(d, k == 0 ? e.first : e.second);
  return d;
}

Poly2 Poly2::homogeneous_part(int d) const {
  Poly2 p(vars_);
  for (const auto& [e, c] : terms_)
    if (e.first + e.second == d) p.terms_.emplace(e, c);
  return p;
}

Poly2 Poly2::initial_form() const { return homogeneous_part(order()); }

Poly2 Poly2::derivative(int k) const {
  Poly2 p(vars_);
  for (const auto& [e, c] : terms_) {
    const int n = k == 0 ? e.first : e.second;
    if (n == 0) continue;
    Exponent ne = k == 0 ? Exponent{e.first - 1, e.second} : Exponent{e.first, e.second - 1};
    p.set_coeff(ne.first, ne.second, c * FieldElement(n));
  }
  return p;
}

Poly2 Poly2::compose(const Poly2& g0, const Poly2& g1) const {
  g0.check_vars(g1);
  Poly2 out(g0.vars_);
  if (terms_.empty()) return out;
  std::vector<Poly2> p0{Poly2(g0.vars_, FieldElement(1))}, p1{Poly2(g0.vars_, FieldElement(1))};
  const int d0 = degree_in(0), d1 = degree_in(1);
  for (int i = 1; i <= d0; ++i) p0.push_back(p0.back() * g0);
  for (int j = 1; j <= d1; ++j) p1.push_back(p1.back() * g1);
  // Group by exponent of var0 to share the multiplication by p0[i].
  std::map<int, Poly2> inner;
  for (const auto& [e, c] : terms_) {
    auto it = inner.try_emplace(e.first, Poly2(g0.vars_)).first;
    it->second += p1[e.second] * c;
  }
  for (const auto& [i, q] : inner) out += p0[i] * q;
  return out;
}

Poly2 Poly2::translate(int k, const FieldElement& c) const {
  Poly2 v0 = variable(vars_, 0), v1 = variable(vars_, 1);
  if (k == 0) v0 += Poly2(vars_, c);
  else v1 += Poly2(vars_, c);
  return compose(v0, v1);
}

Poly2 Poly2::divide_by_var_power(int k, int e) const {
  Poly2 p(vars_);
  for (const auto& [ex, c] : terms_) {
    const int n = k == 0 ? ex.first : ex.second;
    if (n < e) throw std::logic_error("divide_by_var_power: not divisible");
    if (k == 0) p.terms_.emplace(Exponent{ex.first - e, ex.second}, c);
    else p.terms_.emplace(Exponent{ex.first, ex.second - e}, c);
  }
  return p;
}

Poly1 Poly2::restrict_axis(int k) const {
  std::vector<FieldElement> c;
  for (const auto& [e, v] : terms_) {
    if ((k == 0 ? e.first : e.second) != 0) continue;
    const int n = k == 0 ? e.second : e.first;
    if (static_cast<int>(c.size()) <= n) c.resize(n + 1);
    c[n] = v;
  }
  return Poly1(std::move(c));
}

std::vector<Poly1> Poly2::coefficients_in(int k) const {
  if (terms_.empty()) return {};
  std::vector<std::vector<FieldElement>> raw(degree_in(k) + 1);
  for (const auto& [e, v] : terms_) {
    const int n = k == 0 ? e.first : e.second;
    const int m = k == 0 ? e.second : e.first;
    auto& row = raw[n];
    if (static_cast<int>(row.size()) <= m) row.resize(m + 1);
    row[m] = v;
  }
  std::vector<Poly1> out;
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

Poly2 Poly2::from_coefficients_in(const Vars& vars, int k, const std::vector<Poly1>& coeffs) {
  Poly2 p(vars);
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    const auto& cs = coeffs[n].coeffs();
    for (std::size_t m = 0; m < cs.size(); ++m) {
      if (cs[m].is_rep_zero()) continue;
      if (k == 0) p.terms_.emplace(Exponent{static_cast<int>(n), static_cast<int>(m)}, cs[m]);
      else p.terms_.emplace(Exponent{static_cast<int>(m), static_cast<int>(n)}, cs[m]);
    }
  }
  return p;
}

Poly2 Poly2::operator-() const {
  Poly2 p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

void Poly2::check_vars(const Poly2& o) const {
  if (vars_ != o.vars_)
    throw std::logic_error("Poly2: mixing variables (" + vars_[0] + "," + vars_[1] + ") and (" + o.vars_[0] +
                           "," + o.vars_[1] + ")");
}

Poly2& Poly2::operator+=(const Poly2& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) terms_.emplace(e, c);
    else {
      it->second += c;
      if (it->second.is_rep_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) { return *this += -o; }

Poly2& Poly2::operator*=(const Poly2& o) {
  check_vars(o);
  Terms r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e{e1.first + e2.first, e1.second + e2.second};
      auto it = r.find(e);
      if (it == r.end()) r.emplace(e, c1 * c2);
      else it->second += c1 * c2;
    }
  for (auto it = r.begin(); it != r.end();) {
    if (it->second.is_rep_zero()) it = r.erase(it);
    else ++it;
  }
  terms_ = std::move(r);
  return *this;
}

Poly2& Poly2::operator*=(const FieldElement& s) {
  if (s.is_rep_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    if (it->second.is_rep_zero()) it = terms_.erase(it);
    else ++it;
  }
  return *this;
}

std::string Poly2::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, FieldElement>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::string out;
  for (const auto& [e, c] : ts) {
    bool neg = false;
    std::string cs;
    if (c.is_rational()) {
      mpq_class q = c.rational();
      neg = sgn(q) < 0;
      if (neg) q = -q;
      cs = q.get_den() == 1 ? q.get_str() : "(" + q.get_str() + ")";
    } else {
      cs = c.to_string();
    }
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    std::string mono;
    auto power = [](const std::string& v, int n) { return n == 1 ? v : v + "^" + std::to_string(n); };
    if (e.first > 0) mono = power(vars_[0], e.first);
    if (e.second > 0) mono += (mono.empty() ? "" : "*") + power(vars_[1], e.second);
    if (mono.empty()) out += cs;
    else if (cs == "1") out += mono;
    else out += cs + "*" + mono;
  }
  return out;
}

Poly2 pow(const Poly2& f, int e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  Poly2 r(f.vars(), FieldElement(1)), b = f;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

namespace {

using RPoly = std::vector<Poly1>;  // coefficients of var1^j over K[var0]

void rtrim(RPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly1 content(const RPoly& p) {
  Poly1 g;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

RPoly primitive_part(const RPoly& p) {
  const Poly1 c = content(p);
  RPoly out;
  for (const auto& a : p) out.push_back(exact_div(a, c));
  return out;
}

// Pseudo-remainder of a by b in var1.
RPoly prem(RPoly a, const RPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const Poly1& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    const Poly1 la = a.back();
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
    rtrim(a);
  }
  return a;
}

}  // namespace

Poly2 normalize(const Poly2& f) {
  if (f.is_zero()) return f;
  const auto& ts = f.terms();
  auto best = ts.begin();
  for (auto it = ts.begin(); it != ts.end(); ++it) {
    const auto& e = it->first;
    const auto& b = best->first;
    if (e.second > b.second || (e.second == b.second && e.first > b.first)) best = it;
  }
  return f * best->second.inverse();
}

Poly2 gcd(const Poly2& f, const Poly2& g) {
  if (f.is_zero()) return normalize(g);
  if (g.is_zero()) return normalize(f);
  const auto& vars = f.vars();
  RPoly a = f.coefficients_in(1), b = g.coefficients_in(1);
  rtrim(a);
  rtrim(b);
  const Poly1 cont = gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (true) {
    if (b.size() == 1) {
      // b is a primitive constant in var1, hence a unit of K[var0].
      a = RPoly{Poly1(FieldElement(1))};
      break;
    }
    RPoly r = prem(a, b);
    if (r.empty()) {
      a = b;
      break;
    }
    a = std::move(b);
    b = primitive_part(r);
  }
  RPoly result = primitive_part(a);
  for (auto& c : result) c *= cont;
  return normalize(Poly2::from_coefficients_in(vars, 1, result));
}

Poly2 exact_div(const Poly2& f, const Poly2& g) {
  if (g.is_zero()) throw DivisionByZero();
  const auto& vars = f.vars();
  RPoly a = f.coefficients_in(1), b = g.coefficients_in(1);
  rtrim(a);
  rtrim(b);
  if (a.empty()) return Poly2(vars);
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) throw std::logic_error("exact_div: not divisible");
  RPoly q(a.size() - db);
  while (!a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    if (da < db) throw std::logic_error("exact_div: not divisible");
    Poly1 quo, rem;
    divmod(a.back(), b.back(), quo, rem);
    if (!rem.is_zero()) throw std::logic_error("exact_div: not divisible");
    q[da - db] = quo;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= quo * b[i];
    if (!a.back().is_zero()) throw std::logic_error("exact_div: cancellation failed");
    rtrim(a);
  }
  return Poly2::from_coefficients_in(vars, 1, q);
}

bool divides(const Poly2& g, const Poly2& f) {
  if (f.is_zero()) return true;
  if (g.is_zero()) return false;
  try {
    Poly2 q = exact_div(f, g);
    return q * g == f;
  } catch (const std::logic_error&) {
    return false;
  }
}

Poly2 squarefree_part(const Poly2& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  const Poly2 g = gcd(f, gcd(f.derivative(0), f.derivative(1)));
  return normalize(exact_div(f, g));
}

Poly1 resultant(const Poly2& f, const Poly2& g, int k) {
  if (f.is_zero() || g.is_zero()) return Poly1();
  RPoly a = f.coefficients_in(k), b = g.coefficients_in(k);
  rtrim(a);
  rtrim(b);
  const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  if (m == 0 && n == 0) return Poly1(FieldElement(1));
  if (m == 0) return pow(a[0], n);
  if (n == 0) return pow(b[0], m);
  const int size = m + n;
  std::vector<std::vector<Poly1>> s(size, std::vector<Poly1>(size));
  // Rows of a: coefficients from the top degree down.
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = a[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = b[n - i];
  // Fraction-free Bareiss elimination.
  auto poly_nonzero = [](const Poly1& p) {
    for (const auto& c : p.coeffs())
      if (!c.is_zero()) return true;
    return false;
  };
  bool negate = false;
  Poly1 prev(FieldElement(1));
  for (int k2 = 0; k2 < size - 1; ++k2) {
    int piv = -1;
    for (int r = k2; r < size; ++r)
      if (poly_nonzero(s[r][k2])) {
        piv = r;
        break;
      }
    if (piv < 0) return Poly1();
    if (piv != k2) {
      std::swap(s[piv], s[k2]);
      negate = !negate;
    }
    for (int i = k2 + 1; i < size; ++i) {
      for (int j = k2 + 1; j < size; ++j) s[i][j] = exact_div(s[i][j] * s[k2][k2] - s[i][k2] * s[k2][j], prev);
      s[i][k2] = Poly1();
    }
    prev = s[k2][k2];
  }
  Poly1 det = s[size - 1][size - 1];
  return negate ? -det : det;
}

Poly2 linear_change(const Poly2& f, const mpq_class& a, const mpq_class& b, const mpq_class& c,
                    const mpq_class& d) {
  if (a * d - b * c == 0) throw InputError("linear_change: singular matrix");
  const auto& vars = f.vars();
  const Poly2 x = Poly2::variable(vars, 0), y = Poly2::variable(vars, 1);
  return f.compose(x * FieldElement(a) + y * FieldElement(b), x * FieldElement(c) + y * FieldElement(d));
}

}  // namespace foliage
