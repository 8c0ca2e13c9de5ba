#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "foliage/algebra/poly2.hpp"

namespace foliage {

// Dimension of a quotient of the local ring: a natural number or infinite.
class QuotientDim {
 public:
  QuotientDim(long value) : value_(value) {}
  static QuotientDim infinite() { return QuotientDim(); }

  bool is_finite() const noexcept { return value_.has_value(); }
  long value() const;
  std::string to_string() const { return value_ ? std::to_string(*value_) : "infinite"; }

  friend bool operator==(const QuotientDim& a, const QuotientDim& b) { return a.value_ == b.value_; }
  friend bool operator!=(const QuotientDim& a, const QuotientDim& b) { return !(a == b); }

 private:
  QuotientDim() = default;
  std::optional<long> value_;
};

// Local degree order: lower total degree is larger; ties broken by the
// larger exponent of var0.
bool local_greater(const Poly2::Exponent& a, const Poly2::Exponent& b);
// Leading exponent under the local order (semantic nonzero coefficient).
Poly2::Exponent local_leading_exponent(const Poly2& f);

struct LocalIdeal {
  std::vector<Poly2> generators;
};

// Mora tangent-cone standard basis.
std::vector<Poly2> local_std_basis(const LocalIdeal& ideal);
QuotientDim quotient_dim(const LocalIdeal& ideal);

QuotientDim intersection_by_staircase(const Poly2& f, const Poly2& g);
// Order of Res_y after a shear making both curves y-regular with no other
// common point on the line x = 0.
QuotientDim intersection_by_resultant(const Poly2& f, const Poly2& g, std::uint64_t seed = 0);
// Both routes; throws InconsistencyError if they disagree.
QuotientDim intersection_number(const Poly2& f, const Poly2& g, std::uint64_t seed = 0);

QuotientDim milnor_curve(const Poly2& f);
QuotientDim tjurina_curve(const Poly2& f);

}  // namespace foliage
