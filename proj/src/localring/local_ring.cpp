#include "foliage/localring/local_ring.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>

#include "foliage/errors.hpp"

namespace foliage {

long QuotientDim::value() const {
  if (!value_) throw std::logic_error("QuotientDim::value on an infinite dimension");
  return *value_;
}

bool local_greater(const Poly2::Exponent& a, const Poly2::Exponent& b) {
  const int da = a.first + a.second, db = b.first + b.second;
  if (da != db) return da < db;
  return a.first > b.first;
}

Poly2::Exponent local_leading_exponent(const Poly2& f) {
  std::vector<Poly2::Exponent> es;
  for (const auto& [e, c] : f.terms()) es.push_back(e);
  std::sort(es.begin(), es.end(), local_greater);
  for (const auto& e : es)
    if (!f.coeff(e.first, e.second).is_zero()) return e;
  throw ZeroPolynomialError();
}

namespace {

struct Element {
  Poly2 poly;
  Poly2::Exponent lead;
  int ecart = 0;
};

Element make_element(Poly2 p) {
  Element e;
  e.lead = local_leading_exponent(p);
  e.ecart = p.total_degree() - (e.lead.first + e.lead.second);
  e.poly = p * p.coeff(e.lead.first, e.lead.second).inverse();
  return e;
}

bool exp_divides(const Poly2::Exponent& a, const Poly2::Exponent& b) {
  return a.first <= b.first && a.second <= b.second;
}

// h - (lc h / lc g) * m * g where m * lead(g) = lead(h). g is monic.
Poly2 reduce_step(const Element& h, const Element& g) {
  const FieldElement c = h.poly.coeff(h.lead.first, h.lead.second);
  const Poly2 m = Poly2::monomial(h.poly.vars(), c, h.lead.first - g.lead.first, h.lead.second - g.lead.second);
  return h.poly - m * g.poly;
}

// Drops the terms of total degree >= cap.
Poly2 truncate(const Poly2& f, int cap) {
  Poly2 out(f.vars());
  for (const auto& [e, c] : f.terms())
    if (e.first + e.second < cap) out.set_coeff(e.first, e.second, c);
  return out;
}

// Mora normal form modulo T and m^cap; returns zero or a polynomial whose
// leading exponent is outside the monomial ideal of T's leaders.
Poly2 mora_normal_form(const Poly2& f, std::vector<Element> t, int cap) {
  const Poly2 f0 = truncate(f, cap);
  if (f0.is_zero()) return f0;
  Element h = make_element(f0);
  while (true) {
    const Element* best = nullptr;
    for (const auto& g : t)
      if (exp_divides(g.lead, h.lead) && (!best || g.ecart < best->ecart)) best = &g;
    if (!best) return h.poly;
    const Element g = *best;
    if (g.ecart > h.ecart) t.push_back(h);
    Poly2 r = truncate(reduce_step(h, g), cap);
    if (r.is_zero()) return r;
    h = make_element(r);
  }
}

Poly2 s_poly(const Element& a, const Element& b) {
  const int i = std::max(a.lead.first, b.lead.first), j = std::max(a.lead.second, b.lead.second);
  const auto& vars = a.poly.vars();
  const FieldElement one(1);
  return Poly2::monomial(vars, one, i - a.lead.first, j - a.lead.second) * a.poly -
         Poly2::monomial(vars, one, i - b.lead.first, j - b.lead.second) * b.poly;
}

// Number of monomials outside the ideal generated by x^e for e in leads.
std::optional<long> staircase_size(const std::vector<Poly2::Exponent>& leads) {
  const int inf = std::numeric_limits<int>::max();
  int a = inf, b = inf;
  for (const auto& e : leads) {
    if (e.second == 0) a = std::min(a, e.first);
    if (e.first == 0) b = std::min(b, e.second);
  }
  if (a == inf || b == inf) return std::nullopt;
  long count = 0;
  for (int i = 0; i < a; ++i) {
    int height = b;
    for (const auto& e : leads)
      if (e.first <= i) height = std::min(height, e.second);
    count += height;
  }
  return count;
}

}  // namespace

std::vector<Poly2> local_std_basis(const LocalIdeal& ideal) {
  if (ideal.generators.empty()) throw std::invalid_argument("local_std_basis: no generators");
  std::vector<Element> s;
  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    Element e = make_element(g);
    bool dup = false;
    for (const auto& o : s) dup = dup || o.poly == e.poly;
    if (!dup) s.push_back(std::move(e));
  }
  if (s.empty()) throw ZeroPolynomialError();
  for (const auto& e : s)
    if (e.lead == Poly2::Exponent{0, 0}) return {e.poly};

  // Once the leaders bound the colength by d, m^d lies in the ideal and
  // every term of degree >= cap = d can be dropped.
  int cap = std::numeric_limits<int>::max();
  std::vector<bool> alive(s.size(), true);
  auto tighten = [&] {
    std::vector<Poly2::Exponent> leads;
    for (std::size_t k = 0; k < s.size(); ++k)
      if (alive[k]) leads.push_back(s[k].lead);
    const auto d = staircase_size(leads);
    if (!d || *d >= cap) return;
    cap = static_cast<int>(*d);
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (!alive[k]) continue;
      if (s[k].lead.first + s[k].lead.second >= cap) alive[k] = false;
      else s[k] = make_element(truncate(s[k].poly, cap));
    }
  };
  auto live = [&] {
    std::vector<Element> t;
    for (std::size_t k = 0; k < s.size(); ++k)
      if (alive[k]) t.push_back(s[k]);
    return t;
  };
  tighten();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < s.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    if (!alive[i] || !alive[j]) continue;
    const auto& a = s[i].lead;
    const auto& b = s[j].lead;
    // Coprime leaders: the s-polynomial reduces to zero.
    if (std::min(a.first, b.first) == 0 && std::min(a.second, b.second) == 0) continue;
    Poly2 h = mora_normal_form(s_poly(s[i], s[j]), live(), cap);
    if (h.is_zero()) continue;
    Element e = make_element(h);
    if (e.lead == Poly2::Exponent{0, 0}) return {e.poly};
    for (std::size_t k = 0; k < s.size(); ++k) pairs.emplace_back(k, s.size());
    s.push_back(std::move(e));
    alive.push_back(true);
    tighten();
  }
  std::vector<Poly2> out;
  for (std::size_t k = 0; k < s.size(); ++k)
    if (alive[k]) out.push_back(std::move(s[k].poly));
  if (cap != std::numeric_limits<int>::max()) {
    const auto& vars = s.front().poly.vars();
    for (int i = 0; i <= cap; ++i) out.push_back(Poly2::monomial(vars, FieldElement(1), i, cap - i));
  }
  return out;
}

QuotientDim quotient_dim(const LocalIdeal& ideal) {
  std::vector<Poly2::Exponent> leads;
  for (const auto& g : local_std_basis(ideal)) leads.push_back(local_leading_exponent(g));
  const auto d = staircase_size(leads);
  return d ? QuotientDim(*d) : QuotientDim::infinite();
}

QuotientDim intersection_by_staircase(const Poly2& f, const Poly2& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomialError();
  return quotient_dim(LocalIdeal{{f, g}});
}

namespace {

bool y_regular(const Poly2& f) {
  const auto cs = f.coefficients_in(1);
  return !cs.empty() && cs.back().degree() == 0;
}

bool is_power_of_variable(const Poly1& p) {
  if (p.is_zero()) return false;
  for (int k = 0; k < p.degree(); ++k)
    if (!p.coeff(k).is_zero()) return false;
  return true;
}

}  // namespace

QuotientDim intersection_by_resultant(const Poly2& f0, const Poly2& g0, std::uint64_t seed) {
  if (f0.is_zero() || g0.is_zero()) throw ZeroPolynomialError();
  if (!f0.vanishes_at_origin() || !g0.vanishes_at_origin()) return QuotientDim(0);
  Poly2 f = f0, g = g0;
  const Poly2 h = gcd(f, g);
  if (h.total_degree() > 0) {
    if (h.vanishes_at_origin()) return QuotientDim::infinite();
    f = exact_div(f, h);
    g = exact_div(g, h);
  }
  std::vector<mpq_class> shears;
  for (long c : {0L, 1L, -1L, 2L, -2L, 3L, -3L}) shears.emplace_back(c);
  shears.emplace_back(1, 2);
  shears.emplace_back(-1, 2);
  shears.emplace_back(1, 3);
  shears.emplace_back(5);
  shears.emplace_back(-5);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-97, 97), den(1, 13);
  for (int attempt = 0; attempt < 512; ++attempt) {
    mpq_class c;
    if (attempt < static_cast<int>(shears.size())) c = shears[attempt];
    else {
      c = mpq_class(num(rng), den(rng));
      c.canonicalize();
    }
    const Poly2 fs = linear_change(f, 1, c, 0, 1), gs = linear_change(g, 1, c, 0, 1);
    if (!y_regular(fs) || !y_regular(gs)) continue;
    const Poly1 common = gcd(fs.restrict_axis(0), gs.restrict_axis(0));
    if (!is_power_of_variable(common)) continue;
    const Poly1 r = resultant(fs, gs, 1);
    if (r.is_zero()) throw InconsistencyError("resultant vanished for coprime curves");
    return QuotientDim(r.order());
  }
  throw InconsistencyError("no admissible shear found");
}

QuotientDim intersection_number(const Poly2& f, const Poly2& g, std::uint64_t seed) {
  const QuotientDim b = intersection_by_resultant(f, g, seed);
  // Shared components leave the standard basis without a degree bound.
  if (!b.is_finite()) return b;
  const QuotientDim a = intersection_by_staircase(f, g);
  if (a != b)
    throw InconsistencyError("intersection number disagreement for (" + f.to_string() + ", " + g.to_string() +
                             "): staircase " + a.to_string() + ", resultant " + b.to_string());
  return a;
}

QuotientDim milnor_curve(const Poly2& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  if (!f.vanishes_at_origin()) throw InputError("milnor_curve: curve does not pass through the origin");
  const Poly2 fx = f.derivative(0), fy = f.derivative(1);
  if (fx.is_zero() || fy.is_zero()) return quotient_dim(LocalIdeal{{fx, fy}});
  return intersection_number(fx, fy);
}

QuotientDim tjurina_curve(const Poly2& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  if (!f.vanishes_at_origin()) throw InputError("tjurina_curve: curve does not pass through the origin");
  const Poly2 fx = f.derivative(0), fy = f.derivative(1);
  const Poly2 g = gcd(f, gcd(fx, fy));
  if (g.total_degree() > 0 && g.vanishes_at_origin()) throw InputError("tjurina_curve: curve is not reduced");
  return quotient_dim(LocalIdeal{{f, fx, fy}});
}

}  // namespace foliage
