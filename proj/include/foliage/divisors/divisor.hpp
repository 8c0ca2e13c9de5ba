#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "foliage/foliation/one_form.hpp"
#include "foliage/resolution/reduction.hpp"

namespace foliage {

struct DivisorTerm {
  std::string name;
  Poly2 equation;  // reduced, through the origin
  long weight = 1;
  long branches = 1;  // analytic branches, filled in by SeparatrixDivisor
};

// Integer combination of pairwise coprime reduced curves. A term may hold
// several branches; they all carry the term's weight.
class SeparatrixDivisor {
 public:
  SeparatrixDivisor() = default;
  explicit SeparatrixDivisor(std::vector<DivisorTerm> terms);

  const std::vector<DivisorTerm>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  int index_of(const std::string& name) const;

  long degree() const;
  // sum of weight * order over the terms
  long weighted_multiplicity() const;
  // sum of orders over the support, weights ignored
  long unweighted_multiplicity() const;
  bool is_reduced() const;
  bool is_effective() const;

  Poly2 zero_equation() const;
  Poly2 pole_equation() const;
  bool is_adapted(const Poly2& curve) const;
  // The divisor's own equation; the term must lie in the zero part.
  Meromorphic adapted_equation(const std::string& name) const;

 private:
  std::vector<DivisorTerm> terms_;
};

// Isolated separatrices through a leaf of the reduction, counted on one
// representative of its orbit.
int isolated_slots(const ReductionTree& tree, int leaf);
long isolated_separatrix_count(const ReductionTree& tree);

// Number of branches over the algebraic closure of a reduced curve through
// the origin: the isolated separatrices of its hamiltonian foliation.
long branch_count(const Poly2& f, std::uint64_t seed = 0);

struct BranchAttachment {
  int term = 0;
  int node = 0;          // where the branch leaves the tree
  int component = -1;    // dicritical component it crosses, -1 when isolated
  long count = 0;        // branches, including conjugates
};

struct BalancedCertificate {
  std::vector<BranchAttachment> attachments;
  std::vector<long> isolated_branches;    // per term
  std::vector<long> dicritical_branches;  // per term
  std::map<int, long> dicritical_sum;     // component -> sum of weights
  std::map<int, long> dicritical_target;  // component -> 2 - Val
  long isolated_required = 0;
  long isolated_supplied = 0;
  std::vector<std::string> problems;
  bool balanced = false;
};

// The tree must track every term's equation. Throws InputError for
// non-invariant terms or strict transforms that cannot be separatrices.
BalancedCertificate attach_branches(const ReductionTree& tree, const SeparatrixDivisor& divisor);

// Noether sum over the points shared by the term's strict transform and a
// generic curvette of `component`.
long curvette_intersection(const ReductionTree& tree, int tracked_index, int component);

}  // namespace foliage
