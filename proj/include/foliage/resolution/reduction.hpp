#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "foliage/errors.hpp"
#include "foliage/foliation/one_form.hpp"

namespace foliage {

enum class SingularityKind { Regular, NonDegenerate, SaddleNode, NonReduced };

std::string to_string(SingularityKind kind);

struct SingularityClass {
  SingularityKind kind = SingularityKind::Regular;
  FieldElement trace, det;          // linear part of the dual vector field
  std::optional<mpq_class> rho;     // trace^2 / det when det != 0 and rational
  bool ratio_in_q_plus = false;
  // Saddle-nodes: weak direction along the axis {first = 0} (0) or
  // {second = 0} (1), -1 when neither axis carries it.
  int weak_axis = -1;
  int weak_component = -1;          // divisor component on the weak axis
  long weak_index = 0;              // tangency index along it

  bool is_reduced() const {
    return kind == SingularityKind::NonDegenerate || kind == SingularityKind::SaddleNode;
  }
  bool is_tangent_saddle_node() const { return kind == SingularityKind::SaddleNode && weak_component >= 0; }
};

// Classification at the origin; `axis_components` are the divisor
// components along {first = 0} and {second = 0} (-1 for none).
SingularityClass classify(const OneForm& form, const std::array<int, 2>& axis_components = {-1, -1});

// x P_nu + y Q_nu == 0 for the initial forms of degree nu.
bool is_dicritical(const OneForm& form);

enum class Chart { First = 1, Second = 2 };

struct BlowupResult {
  OneForm form;
  bool dicritical = false;
  int exponent = 0;  // power of the exceptional coordinate divided out
};

// Chart First: y = t x, coordinates (x, t), exceptional {x = 0}.
// Chart Second: x = u y, coordinates (u, y), exceptional {y = 0}.
BlowupResult blowup(const OneForm& form, Chart chart, const Poly2::Vars& vars, bool allow_regular = false);

// Strict transform of a curve of multiplicity m > 0 at the origin.
Poly2 strict_transform(const Poly2& curve, Chart chart, const Poly2::Vars& vars);

struct DivisorComponent {
  int id = 0;
  int created_at = 0;     // point whose blow-up created it
  bool dicritical = false;
  long weight = 1;        // number of conjugate components represented
  long valence = 0;       // components meeting one conjugate of it
  long curvette_multiplicity = 1;  // relative to the root
  std::vector<int> incident;
};

struct InfNearPoint {
  int id = 0;
  int parent = -1;
  int depth = 0;
  long weight = 1;                 // conjugate points represented
  TowerPtr tower;
  int chart = 0;                   // 0 at the root
  FieldElement coordinate;         // position on the parent's new component (chart 1)
  Poly1 orbit_minpoly;             // the coordinate's minimal polynomial over the parent field
  OneForm form;
  std::array<int, 2> axis_component{-1, -1};
  int nu = 0;
  SingularityClass cls;
  int created_component = -1;      // set when blown up
  std::vector<int> children;

  std::vector<int> polar_multiplicity;  // per polar sample
  int polar_nu = 0;                     // generic polar strict transform multiplicity

  std::vector<Poly2> tracked_local;                 // strict transforms here (zero when absent)
  std::vector<int> tracked_multiplicity;
  std::vector<long> tracked_divisor_intersection;   // with the parent's new component
  std::vector<long> tracked_residual;               // meetings with the new component off the children

  bool is_leaf() const { return created_component < 0; }
};

enum class ChiMode { Literal, Polar };

struct ReduceOptions {
  int max_depth = 64;
  std::uint64_t seed = 0;
  int polar_samples = 4;
  std::vector<Poly2> tracked;        // curves whose strict transforms are followed
  std::vector<Poly1> factor_hints;   // rational factors forced apart when locating points
};

class ReductionTree {
 public:
  const std::vector<InfNearPoint>& points() const noexcept { return points_; }
  const std::vector<DivisorComponent>& components() const noexcept { return components_; }
  const InfNearPoint& root() const { return points_.at(0); }
  const std::vector<Poly2>& tracked() const noexcept { return tracked_; }
  const std::vector<std::pair<FieldElement, FieldElement>>& polar_samples() const noexcept { return polar_samples_; }

  int depth() const;  // number of blow-up levels
  std::vector<int> subtree(int node) const;  // pre-order, node first
  bool is_descendant(int node, int ancestor) const;
  std::vector<int> tangent_saddle_nodes() const;

  // Multiplicity at `relative_to` of a curvette of `component`.
  long curvette_multiplicity(int component, int relative_to = 0) const;
  long tangency_excess(int node = 0) const;
  long chi(ChiMode mode) const;
  long node_multiplicity(int node, ChiMode mode) const;

  bool is_dicritical() const;
  bool is_second_type() const;
  bool is_generalized_curve() const;
  std::vector<int> infinitely_near_points() const { return subtree(0); }

 private:
  friend class Reducer;
  std::vector<InfNearPoint> points_;
  std::vector<DivisorComponent> components_;
  std::vector<Poly2> tracked_;
  std::vector<std::pair<FieldElement, FieldElement>> polar_samples_;
};

class MaxDepthExceeded : public InconsistencyError {
 public:
  MaxDepthExceeded(int depth, std::shared_ptr<const ReductionTree> partial)
      : InconsistencyError("reduction exceeded max depth " + std::to_string(depth)), partial_(std::move(partial)) {}
  const std::shared_ptr<const ReductionTree>& partial() const noexcept { return partial_; }

 private:
  std::shared_ptr<const ReductionTree> partial_;
};

ReductionTree reduce(const OneForm& form, const ReduceOptions& options = {});

}  // namespace foliage
