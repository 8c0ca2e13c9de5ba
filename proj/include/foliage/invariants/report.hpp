#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "foliage/divisors/divisor.hpp"
#include "foliage/foliation/one_form.hpp"
#include "foliage/resolution/reduction.hpp"

namespace foliage {

// Invariants of one divisor term C. Sums over its branches where the
// quantity is defined per branch.
struct CurveInvariants {
  std::string name;
  Poly2 equation;
  long weight = 1;
  long branches = 1;
  long nu = 0;
  long mu_C = 0;
  long tau_C = 0;
  long polar_intersection = 0;  // i(P^F, C)
  long mu_F_C = 0;              // sum of mu(F, B)
  long gsv_polar = 0;           // i(P^F, C) - i(P^{df}, C)
  long gsv_tjurina = 0;         // tau(F, C) - tau(C)
  long tau_F_C = 0;
  std::optional<long> ind;        // tangency index, smooth curves only
  std::optional<long> polar_dFB;  // i(P^{dF_C}, C) for an adapted balanced F_C
  std::optional<long> mu_dFB;     // sum of mu(dF_C, B)
  std::optional<long> delta;      // polar excess
  std::optional<long> adjacency;  // i(C, (F_C)_0 \ C) - i(C, (F_C)_inf)
  std::optional<long> mu_df0;     // sum of mu(df_0, B), f_0 the zero part
  std::string note;
};

struct ProbeInvariants {
  std::string name;
  Poly2 equation;
  long branches = 1;
  bool invariant = false;
  std::optional<long> tang;
  long excess_sum = 0;           // sum over points of w nu_q(B) xi_q
  long divisor_intersection = 0;  // i(divisor, B), weighted
};

struct DivisorAggregates {
  long degree = 0;
  long nu_weighted = 0;
  long nu_unweighted = 0;
  long polar_B = 0;  // weighted sum of i(P^F, C)
  std::optional<long> delta_B;
  std::optional<long> T;
  // zero part
  long nu_B0 = 0;
  long mu_B0 = 0;
  long tau_B0 = 0;
  long tau_F_B0 = 0;
  long polar_B0 = 0;
  long delta_B0 = 0;
  long gsv_B0_polar = 0;
  long gsv_B0_tjurina = 0;
  long i_B0_Binf = 0;
};

enum class RowStatus { Pass, Fail, NotApplicable };
std::string to_string(RowStatus status);

struct IdentityRow {
  std::string name;
  std::string subject;  // divisor term, "B0", or empty for the whole form
  RowStatus status = RowStatus::NotApplicable;
  long lhs = 0;
  long rhs = 0;
  std::string mode;  // "polar" or "literal" for rows that depend on it
  std::string note;
};

struct AnalyzeOptions {
  ChiMode mode = ChiMode::Polar;
  std::uint64_t seed = 0;
  int max_depth = 64;
  std::vector<std::string> checks;  // empty selects every row
};

struct InvariantReport {
  OneForm form;
  SeparatrixDivisor divisor;
  std::shared_ptr<const ReductionTree> tree;
  ChiMode mode = ChiMode::Polar;

  long nu_F = 0;
  long mu_F = 0;
  long xi = 0;
  long chi_literal = 0;
  long chi_polar = 0;
  long excess_literal = 0;  // sum of w nu_q xi_q, literal multiplicities
  long excess_polar = 0;
  bool dicritical = false;
  bool second_type = false;
  bool generalized_curve = false;

  std::vector<CurveInvariants> curves;
  std::vector<ProbeInvariants> probes;
  std::vector<std::vector<long>> intersections;  // i(C_i, C_j) between terms
  std::vector<std::vector<long>> union_gsv;      // polar GSV of C_i C_j, i < j
  std::optional<BalancedCertificate> certificate;
  DivisorAggregates aggregates;
  std::vector<IdentityRow> rows;

  long chi() const { return mode == ChiMode::Polar ? chi_polar : chi_literal; }
  bool balanced() const { return certificate && certificate->balanced; }
  const CurveInvariants* curve(const std::string& name) const;
  const IdentityRow* row(const std::string& name, const std::string& subject = "") const;
  bool all_pass() const;
};

// Reduces the form tracking every term and probe, fills the report and
// evaluates the selected identity rows.
InvariantReport analyze(const OneForm& form, const SeparatrixDivisor& divisor,
                        const std::vector<DivisorTerm>& probes = {}, const AnalyzeOptions& options = {});

// i(P^F, B) - i(P^{dF_B}, B) with F_B the divisor's own equation; B must be
// a term of positive weight.
long polar_excess(const OneForm& form, const SeparatrixDivisor& divisor, const std::string& term,
                  std::uint64_t seed = 0);

struct GsvValue {
  long polar = 0;
  long tjurina = 0;
  bool agree() const { return polar == tjurina; }
};
GsvValue gsv(const OneForm& form, const Poly2& curve, std::uint64_t seed = 0);

long tjurina_foliation(const OneForm& form, const Poly2& curve);
// Weighted sum of tau(F, B); every term must be a single branch.
long tjurina_sum(const OneForm& form, const SeparatrixDivisor& divisor);

// tang(F, B) for a non-invariant branch, from i(f, P f_y - Q f_x).
long branch_tangency(const OneForm& form, const Poly2& branch);

}  // namespace foliage
