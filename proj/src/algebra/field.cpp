#include "foliage/algebra/field.hpp"

#include <stdexcept>
#include <utility>

#include "foliage/algebra/rational_roots.hpp"
#include "foliage/errors.hpp"

namespace foliage {

using Coeffs = std::vector<FieldElement>;

namespace {

void trim(Coeffs& p) {
  while (!p.empty() && p.back().is_rep_zero()) p.pop_back();
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_rep_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Coeffs poly_sub(Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Coeffs poly_scale(Coeffs a, const FieldElement& s) {
  for (auto& c : a) c *= s;
  trim(a);
  return a;
}

// a = q*b + r. b is trimmed and nonzero; its leading coefficient is
// inverted semantically.
void poly_divmod(Coeffs a, const Coeffs& b, Coeffs& q, Coeffs& r) {
  trim(a);
  const std::size_t db = b.size() - 1;
  q.clear();
  if (a.size() < b.size()) {
    r = std::move(a);
    return;
  }
  const FieldElement inv = b.back().inverse();
  q.assign(a.size() - db, FieldElement());
  for (std::size_t k = a.size(); k-- > db;) {
    if (a[k].is_rep_zero()) continue;
    FieldElement c = a[k] * inv;
    q[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
    a[k] = FieldElement();
  }
  trim(q);
  trim(a);
  r = std::move(a);
}

// Remainder modulo a monic polynomial; no inversion needed.
Coeffs reduce_monic(Coeffs p, const Coeffs& m) {
  const std::size_t d = m.size() - 1;
  for (std::size_t k = p.size(); k-- > d;) {
    if (p[k].is_rep_zero()) continue;
    FieldElement c = p[k];
    for (std::size_t i = 0; i < d; ++i) p[k - d + i] -= c * m[i];
    p[k] = FieldElement();
  }
  trim(p);
  return p;
}

[[noreturn]] void throw_split(const TowerPtr& tower, const Coeffs& gcd) {
  Coeffs g = poly_scale(gcd, gcd.back().inverse());
  Coeffs q, r;
  poly_divmod(tower->minpoly(), g, q, r);
  if (!r.empty()) throw std::logic_error("field split: factor does not divide minimal polynomial");
  throw FieldSplit(tower, std::move(g), std::move(q));
}

// Euclid of e against the minimal polynomial of `tower`. Returns the
// inverse coefficients when e is a unit; throws FieldSplit when the gcd is
// a proper factor.
Coeffs invert_mod_minpoly(const Coeffs& e, const TowerPtr& tower, bool want_inverse) {
  const Coeffs& m = tower->minpoly();
  Coeffs r0 = m, r1 = e, s0, s1{FieldElement(1)};
  trim(r1);
  while (true) {
    if (r1.size() == 1) {
      if (!want_inverse) return {};
      FieldElement inv = r1[0].inverse();
      return reduce_monic(poly_scale(s1, inv), m);
    }
    Coeffs q, r;
    poly_divmod(r0, r1, q, r);
    if (r.empty()) throw_split(tower, r1);
    Coeffs s = want_inverse ? poly_sub(s0, poly_mul(q, s1)) : Coeffs{};
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
}

}  // namespace

struct FieldOps {
  static FieldElement make(const TowerPtr& tower, Coeffs c) {
    trim(c);
    if (c.empty()) return FieldElement();
    if (c.size() == 1) return c[0];
    FieldElement e;
    e.level_ = tower->depth();
    e.tower_ = tower;
    e.coeffs_ = std::move(c);
    return e;
  }

  static TowerPtr common(const FieldElement& a, const FieldElement& b) {
    const FieldElement& hi = a.level_ >= b.level_ ? a : b;
    const FieldElement& lo = a.level_ >= b.level_ ? b : a;
    if (lo.level_ > 0) {
      const bool ok = lo.level_ == hi.level_ ? lo.tower_ == hi.tower_
                                             : hi.tower_->prefix(lo.level_) == lo.tower_;
      if (!ok) throw std::logic_error("field elements from incompatible towers");
    }
    return hi.tower_;
  }

  static FieldElement add(const FieldElement& a, const FieldElement& b, bool negate_b) {
    if (a.level_ == 0 && b.level_ == 0) return FieldElement(negate_b ? mpq_class(a.q_ - b.q_) : mpq_class(a.q_ + b.q_));
    const TowerPtr tower = common(a, b);
    const int level = tower->depth();
    Coeffs ca = a.level_ == level ? a.coeffs_ : Coeffs{a};
    const Coeffs cb = b.level_ == level ? b.coeffs_ : Coeffs{b};
    if (ca.size() < cb.size()) ca.resize(cb.size());
    for (std::size_t i = 0; i < cb.size(); ++i) {
      if (negate_b) ca[i] -= cb[i];
      else ca[i] += cb[i];
    }
    return make(tower, std::move(ca));
  }

  static FieldElement mul(const FieldElement& a, const FieldElement& b) {
    if (a.level_ == 0 && b.level_ == 0) return FieldElement(a.q_ * b.q_);
    if (a.is_rep_zero() || b.is_rep_zero()) return FieldElement();
    const TowerPtr tower = common(a, b);
    const int level = tower->depth();
    if (a.level_ < level) return make(tower, poly_scale(b.coeffs_, a));
    if (b.level_ < level) return make(tower, poly_scale(a.coeffs_, b));
    return make(tower, reduce_monic(poly_mul(a.coeffs_, b.coeffs_), tower->minpoly()));
  }

  static FieldElement negate(const FieldElement& a) {
    if (a.level_ == 0) return FieldElement(mpq_class(-a.q_));
    Coeffs c = a.coeffs_;
    for (auto& x : c) x = negate(x);
    return make(a.tower_, std::move(c));
  }

  static void flatten(const FieldElement& e, const Tower* tower, mpq_class* out) {
    if (tower == nullptr) {
      out[0] = e.q_;
      return;
    }
    const long block = tower->total_degree() / tower->degree();
    if (e.level_ < tower->depth()) {
      flatten(e, tower->base().get(), out);
      return;
    }
    for (std::size_t i = 0; i < e.coeffs_.size(); ++i) flatten(e.coeffs_[i], tower->base().get(), out + i * block);
  }

  static FieldElement unflatten(const mpq_class* v, const TowerPtr& tower) {
    if (!tower) return FieldElement(v[0]);
    const long block = tower->total_degree() / tower->degree();
    Coeffs c;
    for (int i = 0; i < tower->degree(); ++i) c.push_back(unflatten(v + i * block, tower->base()));
    return make(tower, std::move(c));
  }
};

FieldElement::FieldElement(const mpq_class& value) : q_(value) { q_.canonicalize(); }

FieldElement::FieldElement(long num, long den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

FieldElement FieldElement::generator(const TowerPtr& tower) {
  return FieldOps::make(tower, Coeffs{FieldElement(), FieldElement(1)});
}

const mpq_class& FieldElement::rational() const {
  if (level_ != 0) throw std::logic_error("FieldElement::rational on an algebraic element");
  return q_;
}

bool FieldElement::is_zero() const {
  if (level_ == 0) return sgn(q_) == 0;
  invert_mod_minpoly(coeffs_, tower_, false);
  return false;
}

FieldElement FieldElement::inverse() const {
  if (level_ == 0) {
    if (sgn(q_) == 0) throw DivisionByZero();
    return FieldElement(mpq_class(1 / q_));
  }
  return FieldOps::make(tower_, invert_mod_minpoly(coeffs_, tower_, true));
}

std::optional<mpq_class> FieldElement::rational_value() const {
  if (level_ == 0) return q_;
  // Roots of the characteristic polynomial of multiplication by this
  // element are the only rational candidates.
  const long n = tower_->total_degree();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  std::vector<mpq_class> unit(n), col(n);
  for (long j = 0; j < n; ++j) {
    std::fill(unit.begin(), unit.end(), mpq_class(0));
    unit[j] = 1;
    FieldElement prod = *this * FieldOps::unflatten(unit.data(), tower_);
    std::fill(col.begin(), col.end(), mpq_class(0));
    FieldOps::flatten(prod, tower_.get(), col.data());
    for (long i = 0; i < n; ++i) a[i][j] = col[i];
  }
  // Faddeev-LeVerrier.
  std::vector<mpq_class> charpoly(n + 1);
  charpoly[n] = 1;
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n)), am(n, std::vector<mpq_class>(n));
  for (long k = 1; k <= n; ++k) {
    for (long i = 0; i < n; ++i) m[i][i] += charpoly[n - k + 1];
    mpq_class trace = 0;
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        mpq_class s = 0;
        for (long l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        am[i][j] = s;
      }
    for (long i = 0; i < n; ++i) trace += am[i][i];
    charpoly[n - k] = -trace / k;
    m = am;
  }
  for (const auto& c : rational_roots(charpoly)) {
    // Nonconstant representation: either a unit everywhere or a split.
    (*this - FieldElement(c)).is_zero();
  }
  return std::nullopt;
}

std::string FieldElement::to_string() const {
  if (level_ == 0) return q_.get_str();
  const std::string& name = tower_->name();
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const FieldElement& c = coeffs_[i];
    if (c.is_rep_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = c.to_string();
    if (c.level_ > 0) cs = "(" + cs + ")";
    if (i == 0) out += cs;
    else {
      if (!c.is_rep_one()) out += cs + "*";
      out += name;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return "(" + out + ")";
}

FieldElement FieldElement::operator-() const { return FieldOps::negate(*this); }

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (level_ == 0 && o.level_ == 0) q_ += o.q_;
  else *this = FieldOps::add(*this, o, false);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  if (level_ == 0 && o.level_ == 0) q_ -= o.q_;
  else *this = FieldOps::add(*this, o, true);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (level_ == 0 && o.level_ == 0) q_ *= o.q_;
  else *this = FieldOps::mul(*this, o);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.level_ != b.level_) return false;
  if (a.level_ == 0) return a.q_ == b.q_;
  return a.tower_ == b.tower_ && a.coeffs_ == b.coeffs_;
}

TowerPtr Tower::extend(const TowerPtr& base, std::vector<FieldElement> minpoly, std::string name) {
  trim(minpoly);
  if (minpoly.size() < 3) throw std::invalid_argument("Tower::extend: degree must be at least 2");
  if (!minpoly.back().is_rep_one()) throw std::invalid_argument("Tower::extend: minimal polynomial must be monic");
  const int base_depth = base ? base->depth() : 0;
  for (const auto& c : minpoly) {
    if (c.level() > base_depth) throw std::invalid_argument("Tower::extend: coefficient outside the base field");
    if (c.level() > 0 && base->prefix(c.level()) != c.tower())
      throw std::invalid_argument("Tower::extend: coefficient from another tower");
  }
  auto t = std::shared_ptr<Tower>(new Tower());
  t->base_ = base;
  t->depth_ = base_depth + 1;
  t->minpoly_ = std::move(minpoly);
  t->total_degree_ = (base ? base->total_degree() : 1) * t->degree();
  t->name_ = name.empty() ? "a" + std::to_string(t->depth_) : std::move(name);
  return t;
}

TowerPtr Tower::prefix(int d) const {
  if (d < 1 || d > depth_) throw std::out_of_range("Tower::prefix");
  const Tower* t = this;
  while (t->depth_ > d) t = t->base_.get();
  return t->shared_from_this();
}

FieldSplit::FieldSplit(TowerPtr tower, std::vector<FieldElement> factor, std::vector<FieldElement> cofactor)
    : tower_(std::move(tower)), factor_(std::move(factor)), cofactor_(std::move(cofactor)) {}

}  // namespace foliage
