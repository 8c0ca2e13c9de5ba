#pragma once

#include <gmpxx.h>

#include <exception>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace foliage {

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

// Exact scalar: a rational, or a residue class in a tower of simple
// extensions Q(a1)(a2)...(an). Each generator is a root of a monic
// squarefree polynomial over the previous level, which need not be
// irreducible. A zero test that meets a zero divisor throws FieldSplit.
//
// Representation: level 0 is a plain rational. At level L > 0 the value is
// sum c_i a_L^i with coefficients of level < L and 2 <= #coeffs <= deg m_L.
// Constant representations are always demoted, so equal values over a field
// have equal representations.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(int value) : q_(value) {}
  FieldElement(long value) : q_(value) {}
  FieldElement(const mpq_class& value);
  FieldElement(long num, long den);

  // The top generator of `tower`.
  static FieldElement generator(const TowerPtr& tower);

  int level() const noexcept { return level_; }
  const TowerPtr& tower() const noexcept { return tower_; }
  bool is_rational() const noexcept { return level_ == 0; }
  const mpq_class& rational() const;
  const std::vector<FieldElement>& coefficients() const noexcept { return coeffs_; }

  bool is_rep_zero() const noexcept { return level_ == 0 && sgn(q_) == 0; }
  bool is_rep_one() const noexcept { return level_ == 0 && q_ == 1; }

  // Semantic tests; may throw FieldSplit.
  bool is_zero() const;
  FieldElement inverse() const;
  // The rational value if this element is rational on every component.
  std::optional<mpq_class> rational_value() const;

  std::string to_string() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  // Representation equality.
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

 private:
  friend struct FieldOps;
  int level_ = 0;
  mpq_class q_;
  std::vector<FieldElement> coeffs_;
  TowerPtr tower_;
};

class Tower : public std::enable_shared_from_this<Tower> {
 public:
  // `minpoly` is monic, of degree >= 2, coefficients low to high, defined
  // over `base` (null base means the rationals).
  static TowerPtr extend(const TowerPtr& base, std::vector<FieldElement> minpoly,
                         std::string name = "");

  int depth() const noexcept { return depth_; }
  int degree() const noexcept { return static_cast<int>(minpoly_.size()) - 1; }
  long total_degree() const noexcept { return total_degree_; }
  const TowerPtr& base() const noexcept { return base_; }
  const std::vector<FieldElement>& minpoly() const noexcept { return minpoly_; }
  const std::string& name() const noexcept { return name_; }

  // Ancestor of depth d (1 <= d <= depth()).
  TowerPtr prefix(int d) const;

 private:
  Tower() = default;
  TowerPtr base_;
  std::vector<FieldElement> minpoly_;
  std::string name_;
  int depth_ = 0;
  long total_degree_ = 1;
};

// Thrown when a zero test at some level finds that the minimal polynomial
// factors as factor * cofactor. Both are monic over the level below.
class FieldSplit : public std::exception {
 public:
  FieldSplit(TowerPtr tower, std::vector<FieldElement> factor,
             std::vector<FieldElement> cofactor);
  const TowerPtr& tower() const noexcept { return tower_; }
  const std::vector<FieldElement>& factor() const noexcept { return factor_; }
  const std::vector<FieldElement>& cofactor() const noexcept { return cofactor_; }
  const char* what() const noexcept override { return "field split"; }

 private:
  TowerPtr tower_;
  std::vector<FieldElement> factor_;
  std::vector<FieldElement> cofactor_;
};

}  // namespace foliage
