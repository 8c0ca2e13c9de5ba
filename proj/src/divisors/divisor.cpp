#include "foliage/divisors/divisor.hpp"

#include <set>

namespace foliage {

SeparatrixDivisor::SeparatrixDivisor(std::vector<DivisorTerm> terms) : terms_(std::move(terms)) {
  std::set<std::string> names;
  for (auto& t : terms_) {
    if (t.name.empty()) throw InputError("divisor term without a name");
    if (!names.insert(t.name).second) throw InputError("duplicate divisor term name '" + t.name + "'");
    if (t.weight == 0) throw InputError("divisor term '" + t.name + "' has weight 0");
    if (t.equation.is_zero()) throw InputError("divisor term '" + t.name + "' is the zero polynomial");
    if (!t.equation.vanishes_at_origin()) throw InputError("divisor term '" + t.name + "' does not pass through the origin");
    if (!milnor_curve(t.equation).is_finite()) throw InputError("divisor term '" + t.name + "' is not reduced");
  }
  for (std::size_t i = 0; i < terms_.size(); ++i)
    for (std::size_t j = i + 1; j < terms_.size(); ++j)
      if (gcd(terms_[i].equation, terms_[j].equation).vanishes_at_origin())
        throw InputError("divisor terms '" + terms_[i].name + "' and '" + terms_[j].name + "' share a branch");
  for (auto& t : terms_) t.branches = branch_count(t.equation);
}

int SeparatrixDivisor::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].name == name) return static_cast<int>(i);
  return -1;
}

long SeparatrixDivisor::degree() const {
  long d = 0;
  for (const auto& t : terms_) d += t.weight * t.branches;
  return d;
}

long SeparatrixDivisor::weighted_multiplicity() const {
  long n = 0;
  for (const auto& t : terms_) n += t.weight * t.equation.order();
  return n;
}

long SeparatrixDivisor::unweighted_multiplicity() const {
  long n = 0;
  for (const auto& t : terms_) n += t.equation.order();
  return n;
}

bool SeparatrixDivisor::is_reduced() const {
  for (const auto& t : terms_)
    if (t.weight != 1 && t.weight != -1) return false;
  return true;
}

bool SeparatrixDivisor::is_effective() const {
  for (const auto& t : terms_)
    if (t.weight < 0) return false;
  return true;
}

Poly2 SeparatrixDivisor::zero_equation() const {
  Poly2 f(Poly2::Vars{"x", "y"}, FieldElement(1));
  if (!terms_.empty()) f = Poly2(terms_[0].equation.vars(), FieldElement(1));
  for (const auto& t : terms_)
    if (t.weight > 0) f = f * pow(t.equation, static_cast<int>(t.weight));
  return f;
}

Poly2 SeparatrixDivisor::pole_equation() const {
  Poly2 f(Poly2::Vars{"x", "y"}, FieldElement(1));
  if (!terms_.empty()) f = Poly2(terms_[0].equation.vars(), FieldElement(1));
  for (const auto& t : terms_)
    if (t.weight < 0) f = f * pow(t.equation, static_cast<int>(-t.weight));
  return f;
}

bool SeparatrixDivisor::is_adapted(const Poly2& curve) const { return divides(curve, zero_equation()); }

Meromorphic SeparatrixDivisor::adapted_equation(const std::string& name) const {
  const int k = index_of(name);
  if (k < 0) throw InputError("no divisor term named '" + name + "'");
  if (terms_[k].weight <= 0) throw InputError("divisor is not adapted to '" + name + "'");
  return {zero_equation(), pole_equation()};
}

namespace {

struct LeafAxes {
  int invariant = 0;
  int dicritical = 0;
  int dicritical_component = -1;
};

LeafAxes leaf_axes(const ReductionTree& tree, const InfNearPoint& p) {
  LeafAxes a;
  for (int c : p.axis_component) {
    if (c < 0) continue;
    if (tree.components()[c].dicritical) {
      ++a.dicritical;
      a.dicritical_component = c;
    } else {
      ++a.invariant;
    }
  }
  return a;
}

}  // namespace

int isolated_slots(const ReductionTree& tree, int leaf) {
  const auto& p = tree.points().at(leaf);
  if (!p.is_leaf()) return 0;
  const LeafAxes a = leaf_axes(tree, p);
  if (p.cls.kind == SingularityKind::Regular) return a.dicritical > 0 ? 0 : 1 - a.invariant;
  return 2 - a.invariant - a.dicritical;
}

long isolated_separatrix_count(const ReductionTree& tree) {
  long n = 0;
  for (const auto& p : tree.points())
    if (p.is_leaf()) n += p.weight * isolated_slots(tree, p.id);
  return n;
}

long branch_count(const Poly2& f, std::uint64_t seed) {
  if (f.is_zero()) throw ZeroPolynomialError();
  if (!f.vanishes_at_origin()) return 0;
  if (!milnor_curve(f).is_finite()) throw InputError("branch count of a non-reduced curve");
  ReduceOptions opt;
  opt.seed = seed;
  opt.polar_samples = 0;
  return isolated_separatrix_count(reduce(hamiltonian(f), opt));
}

BalancedCertificate attach_branches(const ReductionTree& tree, const SeparatrixDivisor& divisor) {
  BalancedCertificate cert;
  const auto& terms = divisor.terms();
  const auto& root = tree.root();
  std::vector<int> tracked_index;
  for (const auto& t : terms) {
    int idx = -1;
    for (std::size_t k = 0; k < tree.tracked().size(); ++k)
      if (tree.tracked()[k] == t.equation) idx = static_cast<int>(k);
    if (idx < 0) throw InputError("reduction does not track divisor term '" + t.name + "'");
    if (!is_invariant(root.form, t.equation)) throw InputError("divisor term '" + t.name + "' is not invariant");
    tracked_index.push_back(idx);
  }
  cert.isolated_branches.assign(terms.size(), 0);
  cert.dicritical_branches.assign(terms.size(), 0);
  std::map<int, long> used_slots;

  for (std::size_t k = 0; k < terms.size(); ++k) {
    const int tk = tracked_index[k];
    const long a = terms[k].weight;
    for (const auto& p : tree.points()) {
      const int m = p.tracked_multiplicity[tk];
      if (!p.is_leaf()) {
        const long r = p.tracked_residual[tk];
        if (r == 0) continue;
        const auto& comp = tree.components()[p.created_component];
        if (!comp.dicritical || r < 0)
          throw InputError("divisor term '" + terms[k].name + "' meets an invariant component at a regular point");
        cert.attachments.push_back({static_cast<int>(k), p.id, comp.id, r * p.weight});
        cert.dicritical_branches[k] += r * p.weight;
        cert.dicritical_sum[comp.id] += a * r;
        continue;
      }
      if (m == 0) continue;
      const LeafAxes ax = leaf_axes(tree, p);
      if (p.cls.kind == SingularityKind::Regular && ax.dicritical > 0 && ax.invariant == 0) {
        if (m != 1) throw InputError("divisor term '" + terms[k].name + "' is singular where the foliation is regular");
        const auto& comp = tree.components()[ax.dicritical_component];
        cert.attachments.push_back({static_cast<int>(k), p.id, comp.id, p.weight});
        cert.dicritical_branches[k] += p.weight;
        cert.dicritical_sum[comp.id] += a * (p.weight / comp.weight);
        continue;
      }
      used_slots[p.id] += m;
      if (used_slots[p.id] > isolated_slots(tree, p.id))
        throw InputError("divisor term '" + terms[k].name + "' passes through a reduced point along no free separatrix");
      cert.attachments.push_back({static_cast<int>(k), p.id, -1, m * p.weight});
      cert.isolated_branches[k] += m * p.weight;
    }
    if (cert.isolated_branches[k] + cert.dicritical_branches[k] != terms[k].branches)
      throw InconsistencyError("branch attachments of '" + terms[k].name + "' do not match its branch count");
    if (cert.isolated_branches[k] > 0 && a != 1)
      cert.problems.push_back("isolated separatrices in '" + terms[k].name + "' carry weight " + std::to_string(a));
    cert.isolated_supplied += cert.isolated_branches[k];
  }

  cert.isolated_required = isolated_separatrix_count(tree);
  if (cert.isolated_supplied != cert.isolated_required)
    cert.problems.push_back(std::to_string(cert.isolated_required) + " isolated separatrices expected, " +
                            std::to_string(cert.isolated_supplied) + " supplied");
  for (const auto& c : tree.components()) {
    if (!c.dicritical) continue;
    cert.dicritical_target[c.id] = 2 - c.valence;
    const long sum = cert.dicritical_sum.count(c.id) ? cert.dicritical_sum[c.id] : 0;
    cert.dicritical_sum[c.id] = sum;
    if (sum != 2 - c.valence)
      cert.problems.push_back("dicritical component " + std::to_string(c.id) + ": weights sum to " +
                              std::to_string(sum) + ", expected " + std::to_string(2 - c.valence));
  }
  cert.balanced = cert.problems.empty();
  return cert;
}

long curvette_intersection(const ReductionTree& tree, int tracked_index, int component) {
  long total = 0;
  for (int n = tree.components().at(component).created_at; n >= 0; n = tree.points()[n].parent)
    total += tree.points()[n].tracked_multiplicity[tracked_index] * tree.curvette_multiplicity(component, n);
  return total;
}

}  // namespace foliage
