#include "foliage/invariants/report.hpp"

#include "foliage/invariants/identities.hpp"

namespace foliage {

std::string to_string(RowStatus status) {
  switch (status) {
    case RowStatus::Pass: return "pass";
    case RowStatus::Fail: return "fail";
    case RowStatus::NotApplicable: return "n/a";
  }
  return "n/a";
}

const CurveInvariants* InvariantReport::curve(const std::string& name) const {
  for (const auto& c : curves)
    if (c.name == name) return &c;
  return nullptr;
}

const IdentityRow* InvariantReport::row(const std::string& name, const std::string& subject) const {
  for (const auto& r : rows)
    if (r.name == name && r.subject == subject) return &r;
  return nullptr;
}

bool InvariantReport::all_pass() const {
  for (const auto& r : rows)
    if (r.status == RowStatus::Fail) return false;
  return true;
}

namespace {

long meet(const Poly2& f, const Poly2& g, std::uint64_t seed) {
  if (!f.vanishes_at_origin() || !g.vanishes_at_origin()) return 0;
  const QuotientDim v = intersection_number(f, g, seed);
  if (!v.is_finite()) throw InputError("curves " + f.to_string() + " and " + g.to_string() + " share a component");
  return v.value();
}

long finite(const QuotientDim& d, const std::string& what) {
  if (!d.is_finite()) throw InputError(what + " is infinite");
  return d.value();
}

long hamiltonian_polar(const Poly2& f, std::uint64_t seed) {
  return generic_polar_intersection(hamiltonian(f), f, seed);
}

}  // namespace

long tjurina_foliation(const OneForm& form, const Poly2& curve) {
  if (!is_invariant(form, curve)) throw InputError("Tjurina number along a non-invariant curve");
  if (!curve.vanishes_at_origin()) return 0;
  return finite(quotient_dim({{curve, form.P(), form.Q()}}), "Tjurina number of the foliation along the curve");
}

GsvValue gsv(const OneForm& form, const Poly2& curve, std::uint64_t seed) {
  if (!is_invariant(form, curve)) throw InputError("GSV index along a non-invariant curve");
  GsvValue v;
  v.polar = generic_polar_intersection(form, curve, seed) - hamiltonian_polar(curve, seed);
  v.tjurina = tjurina_foliation(form, curve) - finite(tjurina_curve(curve), "Tjurina number of the curve");
  return v;
}

long polar_excess(const OneForm& form, const SeparatrixDivisor& divisor, const std::string& term, std::uint64_t seed) {
  const Meromorphic F = divisor.adapted_equation(term);
  const Poly2& c = divisor.terms()[divisor.index_of(term)].equation;
  return generic_polar_intersection(form, c, seed) - generic_polar_intersection(F, c, seed);
}

long tjurina_sum(const OneForm& form, const SeparatrixDivisor& divisor) {
  long total = 0;
  for (const auto& t : divisor.terms()) {
    if (t.branches != 1) throw InputError("Tjurina sum needs single-branch terms; '" + t.name + "' has " +
                                          std::to_string(t.branches) + " branches");
    total += t.weight * tjurina_foliation(form, t.equation);
  }
  return total;
}

long branch_tangency(const OneForm& form, const Poly2& branch) {
  // gamma' is proportional to (f_y, -f_x) along the branch; correct the
  // order of P f_y - Q f_x by the order of the factor.
  const Poly2 fx = branch.derivative(0), fy = branch.derivative(1);
  const long base = tangency_order(form, branch);
  const Poly2 x = Poly2::variable(branch.vars(), 0), y = Poly2::variable(branch.vars(), 1);
  const QuotientDim iy = fy.is_zero() ? QuotientDim::infinite() : intersection_number(branch, fy);
  if (iy.is_finite()) return base + finite(intersection_number(branch, x), "i(B, x)") - 1 - iy.value();
  const QuotientDim ix = intersection_number(branch, fx);
  if (!ix.is_finite()) throw InputError("tangency: branch is not reduced");
  return base + finite(intersection_number(branch, y), "i(B, y)") - 1 - ix.value();
}

InvariantReport analyze(const OneForm& form, const SeparatrixDivisor& divisor, const std::vector<DivisorTerm>& probes,
                        const AnalyzeOptions& options) {
  const std::uint64_t seed = options.seed;
  const auto& terms = divisor.terms();
  for (const auto& t : terms)
    if (t.equation.vars() != form.vars()) throw InputError("divisor term '" + t.name + "' uses other variables");

  InvariantReport r;
  r.form = form;
  r.divisor = divisor;
  r.mode = options.mode;

  ReduceOptions ro;
  ro.max_depth = options.max_depth;
  ro.seed = seed;
  for (const auto& t : terms) ro.tracked.push_back(t.equation);
  for (const auto& p : probes) {
    if (p.equation.vars() != form.vars()) throw InputError("probe '" + p.name + "' uses other variables");
    if (!p.equation.vanishes_at_origin()) throw InputError("probe '" + p.name + "' does not pass through the origin");
    ro.tracked.push_back(p.equation);
  }
  auto tree = std::make_shared<ReductionTree>(reduce(form, ro));
  r.tree = tree;

  r.nu_F = algebraic_multiplicity(form);
  r.mu_F = milnor_foliation(form);
  r.xi = tree->tangency_excess(0);
  r.chi_literal = tree->chi(ChiMode::Literal);
  r.chi_polar = tree->chi(ChiMode::Polar);
  for (const auto& p : tree->points()) {
    if (p.is_leaf()) continue;
    const long xi = tree->tangency_excess(p.id);
    r.excess_literal += p.weight * tree->node_multiplicity(p.id, ChiMode::Literal) * xi;
    r.excess_polar += p.weight * tree->node_multiplicity(p.id, ChiMode::Polar) * xi;
  }
  r.dicritical = tree->is_dicritical();
  r.second_type = tree->is_second_type();
  r.generalized_curve = tree->is_generalized_curve();

  if (!terms.empty()) r.certificate = attach_branches(*tree, divisor);
  const bool balanced = r.balanced();
  const std::size_t n = terms.size();

  r.intersections.assign(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      r.intersections[i][j] = r.intersections[j][i] = meet(terms[i].equation, terms[j].equation, seed);

  const Poly2 f0 = divisor.zero_equation();
  const Poly2 finf = divisor.pole_equation();
  const bool has_zero_part = f0.vanishes_at_origin();
  const bool zero_part_reduced = has_zero_part && divisor.is_reduced();
  const Meromorphic F{f0, finf};

  for (std::size_t k = 0; k < n; ++k) {
    const auto& t = terms[k];
    CurveInvariants c;
    c.name = t.name;
    c.equation = t.equation;
    c.weight = t.weight;
    c.branches = t.branches;
    c.nu = t.equation.order();
    c.mu_C = finite(milnor_curve(t.equation), "Milnor number of '" + t.name + "'");
    c.tau_C = finite(tjurina_curve(t.equation), "Tjurina number of '" + t.name + "'");
    c.polar_intersection = generic_polar_intersection(form, t.equation, seed);
    c.mu_F_C = c.polar_intersection - c.nu + c.branches;
    const long dc_polar = hamiltonian_polar(t.equation, seed);
    c.gsv_polar = c.polar_intersection - dc_polar;
    c.tau_F_C = tjurina_foliation(form, t.equation);
    c.gsv_tjurina = c.tau_F_C - c.tau_C;
    if (c.nu == 1) c.ind = tangency_index(form, t.equation);

    long others = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != k) others += terms[j].weight * r.intersections[k][j];

    if (balanced && t.weight == 1) {
      c.polar_dFB = generic_polar_intersection(F, t.equation, seed);
      c.adjacency = others;
    } else if (balanced && t.weight > 1) {
      c.note = "the polar of dF contains a term of weight above one";
    } else if (balanced && t.weight < 0) {
      // Swap the weight against a generic curvette of the dicritical
      // component the branch crosses.
      int component = -1;
      for (const auto& a : r.certificate->attachments)
        if (a.term == static_cast<int>(k)) component = a.component;
      if (t.branches == 1 && t.weight == -1 && component >= 0) {
        const long with_curvette = curvette_intersection(*tree, static_cast<int>(k), component);
        c.adjacency = others - 2 * with_curvette;
        c.polar_dFB = dc_polar + *c.adjacency;
      } else {
        c.note = "pole term needs a single branch of weight -1";
      }
    }
    if (c.polar_dFB) {
      c.mu_dFB = *c.polar_dFB - c.nu + c.branches;
      c.delta = c.polar_intersection - *c.polar_dFB;
    }
    if (zero_part_reduced && t.weight > 0)
      c.mu_df0 = generic_polar_intersection(hamiltonian(f0), t.equation, seed) - c.nu + c.branches;
    r.curves.push_back(std::move(c));
  }

  auto& ag = r.aggregates;
  ag.degree = divisor.degree();
  ag.nu_weighted = divisor.weighted_multiplicity();
  ag.nu_unweighted = divisor.unweighted_multiplicity();
  bool all_delta = balanced, all_single = true;
  long delta_B = 0, T = 0;
  for (const auto& c : r.curves) {
    ag.polar_B += c.weight * c.polar_intersection;
    if (c.delta)
      delta_B += c.weight * *c.delta;
    else
      all_delta = false;
    if (c.weight > 0 && c.delta) ag.delta_B0 += c.weight * *c.delta;
    if (c.branches != 1) all_single = false;
    T += c.weight * c.tau_F_C;
  }
  if (all_delta && !r.curves.empty()) ag.delta_B = delta_B;
  if (all_single && !r.curves.empty()) ag.T = T;

  if (zero_part_reduced) {
    ag.nu_B0 = f0.order();
    ag.mu_B0 = finite(milnor_curve(f0), "Milnor number of the zero part");
    ag.tau_B0 = finite(tjurina_curve(f0), "Tjurina number of the zero part");
    ag.tau_F_B0 = tjurina_foliation(form, f0);
    ag.polar_B0 = generic_polar_intersection(form, f0, seed);
    ag.gsv_B0_polar = ag.polar_B0 - hamiltonian_polar(f0, seed);
    ag.gsv_B0_tjurina = ag.tau_F_B0 - ag.tau_B0;
    ag.i_B0_Binf = meet(f0, finf, seed);
  }

  r.union_gsv.assign(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Poly2 u = terms[i].equation * terms[j].equation;
      r.union_gsv[i][j] = r.union_gsv[j][i] =
          generic_polar_intersection(form, u, seed) - hamiltonian_polar(u, seed);
    }

  for (const auto& p : probes) {
    ProbeInvariants pi;
    pi.name = p.name;
    pi.equation = p.equation;
    pi.invariant = is_invariant(form, p.equation);
    pi.branches = branch_count(p.equation, seed);
    int idx = -1;
    for (std::size_t k = 0; k < tree->tracked().size(); ++k)
      if (tree->tracked()[k] == p.equation) idx = static_cast<int>(k);
    for (const auto& q : tree->points())
      if (!q.is_leaf()) pi.excess_sum += q.weight * q.tracked_multiplicity[idx] * tree->tangency_excess(q.id);
    for (const auto& t : terms) pi.divisor_intersection += t.weight * meet(t.equation, p.equation, seed);
    if (!pi.invariant && pi.branches == 1) pi.tang = branch_tangency(form, p.equation);
    r.probes.push_back(std::move(pi));
  }

  r.rows = verify_identities(r, options.checks);
  return r;
}

}  // namespace foliage
