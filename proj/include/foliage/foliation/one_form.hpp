#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "foliage/algebra/poly2.hpp"
#include "foliage/localring/local_ring.hpp"

namespace foliage {

// The germ of the foliation P dx + Q dy at the origin. P and Q have no
// common factor through the origin.
class OneForm {
 public:
  OneForm(Poly2 p, Poly2 q);
  // Skips validation; for transforms whose coprimality is known.
  static OneForm trusted(Poly2 p, Poly2 q);
  OneForm() = default;  // the zero form; placeholder only

  const Poly2& P() const noexcept { return p_; }
  const Poly2& Q() const noexcept { return q_; }
  const Poly2::Vars& vars() const noexcept { return p_.vars(); }
  bool is_singular() const;

 private:
  Poly2 p_, q_;
};

// df for a polynomial f.
OneForm hamiltonian(const Poly2& f);

// F = numerator / denominator; stands for the differential dF.
struct Meromorphic {
  Poly2 numerator;
  Poly2 denominator;
};

struct PolarCurve {
  FieldElement a, b;
  Poly2 numerator;
  Poly2 denominator;  // 1 for a 1-form, g^2 for d(f/g)
};

int algebraic_multiplicity(const OneForm& form);
// Local divisibility of P f_y - Q f_x by f.
bool is_invariant(const OneForm& form, const Poly2& f);
long milnor_foliation(const OneForm& form);

PolarCurve polar(const OneForm& form, const FieldElement& a, const FieldElement& b);
PolarCurve polar_of_differential(const Meromorphic& F, const FieldElement& a, const FieldElement& b);

// Seeded (a:b) samples: a fixed list first, then pseudo-random integers.
class PolarSampler {
 public:
  explicit PolarSampler(std::uint64_t seed) : seed_(seed), state_(seed) {}
  std::pair<FieldElement, FieldElement> next();

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
  int index_ = 0;
};

// Minimum over samples of i(polar, C), confirmed by a repeat and at least
// four samples.
long generic_polar_intersection(const OneForm& form, const Poly2& curve, std::uint64_t seed = 0);
long generic_polar_intersection(const Meromorphic& F, const Poly2& curve, std::uint64_t seed = 0);

// i(f, P f_y - Q f_x) for a non-invariant curve.
long tangency_order(const OneForm& form, const Poly2& curve);
// Order along a smooth branch of the coefficient of the transverse
// differential.
long tangency_index(const OneForm& form, const Poly2& branch);
// i(generic polar, B) - order(B) + 1 for an invariant B.
long multiplicity_along(const OneForm& form, const Poly2& branch, std::uint64_t seed = 0);
long multiplicity_along(const Meromorphic& F, const Poly2& branch, std::uint64_t seed = 0);

}  // namespace foliage
