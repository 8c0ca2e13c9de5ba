#include "foliage/foliation/one_form.hpp"

#include <algorithm>
#include <limits>

#include "foliage/errors.hpp"

namespace foliage {

OneForm::OneForm(Poly2 p, Poly2 q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_.is_zero() && q_.is_zero()) throw InputError("1-form: P and Q are both zero");
  if (p_.is_zero()) p_ = Poly2(q_.vars());
  if (q_.is_zero()) q_ = Poly2(p_.vars());
  if (p_.vars() != q_.vars()) throw InputError("1-form: P and Q use different variables");
  const Poly2 g = gcd(p_, q_);
  if (g.total_degree() > 0 && g.vanishes_at_origin())
    throw InputError("1-form: P and Q share the factor " + g.to_string() + " through the origin");
}

OneForm OneForm::trusted(Poly2 p, Poly2 q) {
  OneForm f;
  f.p_ = std::move(p);
  f.q_ = std::move(q);
  return f;
}

bool OneForm::is_singular() const {
  return (p_.is_zero() || p_.vanishes_at_origin()) && (q_.is_zero() || q_.vanishes_at_origin());
}

OneForm hamiltonian(const Poly2& f) { return OneForm(f.derivative(0), f.derivative(1)); }

int algebraic_multiplicity(const OneForm& form) {
  int nu = std::numeric_limits<int>::max();
  if (!form.P().is_zero()) nu = std::min(nu, form.P().order());
  if (!form.Q().is_zero()) nu = std::min(nu, form.Q().order());
  return nu;
}

bool is_invariant(const OneForm& form, const Poly2& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  const Poly2 h = form.P() * f.derivative(1) - form.Q() * f.derivative(0);
  if (h.is_zero()) return true;
  // The part of f not dividing h must be a unit at the origin.
  const Poly2 rest = exact_div(f, gcd(f, h));
  return !rest.vanishes_at_origin();
}

long milnor_foliation(const OneForm& form) {
  if (form.P().is_zero() || form.Q().is_zero()) {
    const Poly2& other = form.P().is_zero() ? form.Q() : form.P();
    if (!other.vanishes_at_origin()) return 0;
    throw InputError("Milnor number of a non-isolated singularity");
  }
  const QuotientDim mu = intersection_number(form.P(), form.Q());
  if (!mu.is_finite()) throw InputError("Milnor number of a non-isolated singularity");
  return mu.value();
}

PolarCurve polar(const OneForm& form, const FieldElement& a, const FieldElement& b) {
  if (a.is_zero() && b.is_zero()) throw InputError("polar: (a:b) = (0:0)");
  Poly2 num = form.P() * a + form.Q() * b;
  if (num.is_zero()) throw InputError("polar: degenerate combination");
  return {a, b, std::move(num), Poly2(form.vars(), FieldElement(1))};
}

PolarCurve polar_of_differential(const Meromorphic& F, const FieldElement& a, const FieldElement& b) {
  if (a.is_zero() && b.is_zero()) throw InputError("polar: (a:b) = (0:0)");
  const Poly2& f = F.numerator;
  const Poly2& g = F.denominator;
  Poly2 num = g * (f.derivative(0) * a + f.derivative(1) * b) - f * (g.derivative(0) * a + g.derivative(1) * b);
  if (num.is_zero()) throw InputError("polar: degenerate combination");
  return {a, b, std::move(num), g * g};
}

std::pair<FieldElement, FieldElement> PolarSampler::next() {
  static const long fixed[][2] = {{3, 7}, {5, -2}, {1, 11}, {-4, 9}, {7, 3}, {2, -13}};
  const int n = index_++;
  if (n < 6) return {FieldElement(fixed[n][0]), FieldElement(fixed[n][1])};
  // splitmix64
  auto draw = [this]() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  const long a = static_cast<long>(draw() % 199) - 99;
  const long b = static_cast<long>(draw() % 199) - 99;
  if (a == 0 && b == 0) return {FieldElement(1), FieldElement(static_cast<long>(seed_ % 97 + 1))};
  return {FieldElement(a), FieldElement(b)};
}

namespace {

template <class Eval>
long minimum_over_samples(Eval eval, std::uint64_t seed) {
  PolarSampler sampler(seed);
  long best = std::numeric_limits<long>::max();
  int taken = 0, hits = 0;
  for (int n = 0; n < 48; ++n) {
    const auto [a, b] = sampler.next();
    const QuotientDim v = eval(a, b);
    if (!v.is_finite()) continue;
    ++taken;
    if (v.value() < best) {
      best = v.value();
      hits = 1;
    } else if (v.value() == best) {
      ++hits;
    }
    if (taken >= 4 && hits >= 2) return best;
  }
  if (taken == 0) throw InputError("every sampled polar contains the curve");
  return best;
}

}  // namespace

long generic_polar_intersection(const OneForm& form, const Poly2& curve, std::uint64_t seed) {
  return minimum_over_samples(
      [&](const FieldElement& a, const FieldElement& b) {
        const Poly2 num = form.P() * a + form.Q() * b;
        if (num.is_zero()) return QuotientDim::infinite();
        return intersection_number(num, curve, seed);
      },
      seed);
}

long generic_polar_intersection(const Meromorphic& F, const Poly2& curve, std::uint64_t seed) {
  const QuotientDim den = F.denominator.vanishes_at_origin() ? intersection_number(F.denominator, curve, seed)
                                                             : QuotientDim(0);
  if (!den.is_finite()) throw InputError("curve is a component of the polar denominator");
  const long base = minimum_over_samples(
      [&](const FieldElement& a, const FieldElement& b) {
        const PolarCurve pc = polar_of_differential(F, a, b);
        return intersection_number(pc.numerator, curve, seed);
      },
      seed);
  return base - 2 * den.value();
}

long tangency_order(const OneForm& form, const Poly2& curve) {
  if (is_invariant(form, curve)) throw InputError("tangency order of an invariant curve");
  const Poly2 v = form.P() * curve.derivative(1) - form.Q() * curve.derivative(0);
  return intersection_number(curve, v).value();
}

long tangency_index(const OneForm& form, const Poly2& branch) {
  if (branch.order() != 1) throw InputError("tangency index: only smooth branches are supported");
  // Tangent alpha x + beta y = 0. The differential transverse to it is dy
  // unless the tangent is vertical.
  const FieldElement beta = branch.coeff(0, 1);
  const Poly2& coefficient = beta.is_zero() ? form.P() : form.Q();
  if (coefficient.is_zero()) throw InputError("tangency index: coefficient vanishes identically");
  const QuotientDim ind = intersection_number(coefficient, branch);
  if (!ind.is_finite()) throw InputError("tangency index: coefficient vanishes along the branch");
  return ind.value();
}

long multiplicity_along(const OneForm& form, const Poly2& branch, std::uint64_t seed) {
  if (!is_invariant(form, branch)) throw InputError("multiplicity along a non-invariant curve");
  return generic_polar_intersection(form, branch, seed) - branch.order() + 1;
}

long multiplicity_along(const Meromorphic& F, const Poly2& branch, std::uint64_t seed) {
  if (!divides(branch, F.numerator * F.denominator))
    throw InputError("multiplicity along a curve that is not a component of the differential");
  return generic_polar_intersection(F, branch, seed) - branch.order() + 1;
}

}  // namespace foliage
