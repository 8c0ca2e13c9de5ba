#include "foliage/resolution/reduction.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace foliage {

std::string to_string(SingularityKind kind) {
  switch (kind) {
    case SingularityKind::Regular: return "regular";
    case SingularityKind::NonDegenerate: return "non-degenerate";
    case SingularityKind::SaddleNode: return "saddle-node";
    case SingularityKind::NonReduced: return "non-reduced";
  }
  return "?";
}

namespace {

bool is_rational_square(const mpq_class& q) {
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

// Divide by var_k^e. Low terms left over must vanish; a zero test on them
// surfaces a field split instead of a wrong answer.
Poly2 divide_exceptional(const Poly2& f, int k, int e) {
  Poly2 cleaned(f.vars());
  for (const auto& [ex, c] : f.terms()) {
    const int n = k == 0 ? ex.first : ex.second;
    if (n < e) {
      if (c.is_zero()) continue;
      throw InconsistencyError("blow-up: transform not divisible by the exceptional divisor");
    }
    cleaned.set_coeff(ex.first, ex.second, c);
  }
  return cleaned.divide_by_var_power(k, e);
}

Poly2 chart_compose(const Poly2& f, Chart chart, const Poly2::Vars& vars) {
  const Poly2 s = Poly2::variable(vars, 0), t = Poly2::variable(vars, 1);
  return chart == Chart::First ? f.compose(s, t * s) : f.compose(s * t, t);
}

Poly2::Vars child_vars(int depth) { return {"x" + std::to_string(depth), "y" + std::to_string(depth)}; }

}  // namespace

bool is_dicritical(const OneForm& form) {
  const int nu = algebraic_multiplicity(form);
  if (nu == 0) return false;
  const Poly2 x = Poly2::variable(form.vars(), 0), y = Poly2::variable(form.vars(), 1);
  const Poly2 r = x * form.P().homogeneous_part(nu) + y * form.Q().homogeneous_part(nu);
  for (const auto& [e, c] : r.terms())
    if (!c.is_zero()) return false;
  return true;
}

SingularityClass classify(const OneForm& form, const std::array<int, 2>& axis_components) {
  SingularityClass cls;
  if (!form.is_singular()) return cls;
  const FieldElement pa = form.P().coeff(1, 0), pb = form.P().coeff(0, 1);
  const FieldElement qa = form.Q().coeff(1, 0), qb = form.Q().coeff(0, 1);
  // Dual vector field -Q d/da + P d/db; its linear part.
  cls.trace = pb - qa;
  cls.det = pa * qb - qa * pb;
  if (cls.det.is_zero()) {
    if (cls.trace.is_zero()) {
      cls.kind = SingularityKind::NonReduced;
      return cls;
    }
    cls.kind = SingularityKind::SaddleNode;
    if (qb.is_zero() && pb.is_zero()) cls.weak_axis = 0;
    else if (qa.is_zero() && pa.is_zero()) cls.weak_axis = 1;
    if (cls.weak_axis >= 0) cls.weak_component = axis_components[cls.weak_axis];
    if (cls.weak_component >= 0) {
      cls.weak_index = cls.weak_axis == 0 ? form.P().restrict_axis(0).order() : form.Q().restrict_axis(1).order();
    } else {
      // Ind along the weak separatrix equals the Milnor number k + 1.
      cls.weak_index = milnor_foliation(form);
    }
    return cls;
  }
  const FieldElement rho = cls.trace * cls.trace / cls.det;
  cls.rho = rho.rational_value();
  if (cls.rho) {
    const mpq_class r = *cls.rho;
    cls.ratio_in_q_plus = r >= 4 && is_rational_square(r * r - 4 * r);
  }
  cls.kind = cls.ratio_in_q_plus ? SingularityKind::NonReduced : SingularityKind::NonDegenerate;
  return cls;
}

BlowupResult blowup(const OneForm& form, Chart chart, const Poly2::Vars& vars, bool allow_regular) {
  if (!allow_regular && !form.is_singular()) throw InputError("blow-up of a regular point");
  BlowupResult out;
  const int nu = algebraic_multiplicity(form);
  out.dicritical = is_dicritical(form);
  out.exponent = nu + (out.dicritical ? 1 : 0);
  const Poly2 P = chart_compose(form.P(), chart, vars);
  const Poly2 Q = chart_compose(form.Q(), chart, vars);
  const Poly2 s = Poly2::variable(vars, 0), t = Poly2::variable(vars, 1);
  if (chart == Chart::First) {
    out.form = OneForm::trusted(divide_exceptional(P + t * Q, 0, out.exponent),
                                divide_exceptional(s * Q, 0, out.exponent));
  } else {
    out.form = OneForm::trusted(divide_exceptional(t * P, 1, out.exponent),
                                divide_exceptional(s * P + Q, 1, out.exponent));
  }
  return out;
}

Poly2 strict_transform(const Poly2& curve, Chart chart, const Poly2::Vars& vars) {
  const int m = curve.order();
  return divide_exceptional(chart_compose(curve, chart, vars), chart == Chart::First ? 0 : 1, m);
}

int ReductionTree::depth() const {
  int d = 0;
  for (const auto& p : points_)
    if (!p.is_leaf()) d = std::max(d, p.depth + 1);
  return d;
}

std::vector<int> ReductionTree::subtree(int node) const {
  std::vector<int> out;
  std::function<void(int)> walk = [&](int n) {
    out.push_back(n);
    for (int c : points_.at(n).children) walk(c);
  };
  walk(node);
  return out;
}

bool ReductionTree::is_descendant(int node, int ancestor) const {
  for (int n = node; n >= 0; n = points_.at(n).parent)
    if (n == ancestor) return true;
  return false;
}

std::vector<int> ReductionTree::tangent_saddle_nodes() const {
  std::vector<int> out;
  for (const auto& p : points_)
    if (p.is_leaf() && p.cls.is_tangent_saddle_node()) out.push_back(p.id);
  return out;
}

long ReductionTree::curvette_multiplicity(int component, int relative_to) const {
  const int creator = components_.at(component).created_at;
  if (!is_descendant(creator, relative_to)) return 0;
  std::vector<int> path;
  for (int n = creator;; n = points_[n].parent) {
    path.push_back(n);
    if (n == relative_to) break;
  }
  std::reverse(path.begin(), path.end());
  const int n = static_cast<int>(path.size());
  std::vector<long> nu(n, 0);
  nu[n - 1] = 1;
  for (int i = n - 2; i >= 0; --i) {
    const int e = points_[path[i]].created_component;
    for (int j = i + 1; j < n; ++j) {
      const auto& ax = points_[path[j]].axis_component;
      if (ax[0] == e || ax[1] == e) nu[i] += nu[j];
    }
  }
  return nu[0];
}

long ReductionTree::tangency_excess(int node) const {
  long xi = 0;
  const long wq = points_.at(node).weight;
  for (int sn : tangent_saddle_nodes()) {
    if (!is_descendant(sn, node)) continue;
    const auto& p = points_[sn];
    const int comp = p.cls.weak_component;
    if (!is_descendant(components_[comp].created_at, node)) continue;
    xi += (p.weight / wq) * curvette_multiplicity(comp, node) * (p.cls.weak_index - 1);
  }
  return xi;
}

long ReductionTree::node_multiplicity(int node, ChiMode mode) const {
  const auto& p = points_.at(node);
  return mode == ChiMode::Literal ? p.nu : p.polar_nu;
}

long ReductionTree::chi(ChiMode mode) const {
  long total = 0;
  for (const auto& p : points_) {
    if (p.is_leaf()) continue;
    const long xi = tangency_excess(p.id);
    if (xi != 0) total += p.weight * node_multiplicity(p.id, mode) * xi;
  }
  return total - tangency_excess(0);
}

bool ReductionTree::is_dicritical() const {
  return std::any_of(components_.begin(), components_.end(), [](const auto& c) { return c.dicritical; });
}

bool ReductionTree::is_second_type() const { return tangent_saddle_nodes().empty(); }

bool ReductionTree::is_generalized_curve() const {
  return std::none_of(points_.begin(), points_.end(),
                      [](const auto& p) { return p.is_leaf() && p.cls.kind == SingularityKind::SaddleNode; });
}

class Reducer {
 public:
  explicit Reducer(const ReduceOptions& options) : opt_(options) {}

  ReductionTree run(const OneForm& form) {
    for (const auto& c : opt_.tracked) {
      if (c.is_zero()) throw ZeroPolynomialError();
      if (c.vars() != form.vars()) throw InputError("tracked curve uses different variables");
    }
    tree_.tracked_ = opt_.tracked;
    Spawn root;
    root.form = form;
    root.orbit_minpoly = Poly1::variable();
    for (const auto& c : opt_.tracked) root.tracked.push_back(c.vanishes_at_origin() ? c : Poly2(form.vars()));
    PolarSampler sampler(opt_.seed);
    for (int n = 0; n < 64 && static_cast<int>(root.polars.size()) < opt_.polar_samples; ++n) {
      const auto [a, b] = sampler.next();
      Poly2 num = form.P() * a + form.Q() * b;
      if (num.is_zero()) continue;
      tree_.polar_samples_.emplace_back(a, b);
      root.polars.push_back(num.vanishes_at_origin() ? num : Poly2(form.vars()));
    }
    process(root);
    for (auto& c : tree_.components_) c.curvette_multiplicity = tree_.curvette_multiplicity(c.id, 0);
    return std::move(tree_);
  }

 private:
  struct Spawn {
    int parent = -1;
    int depth = 0;
    long weight = 1;
    TowerPtr tower;
    int chart = 0;
    FieldElement coordinate;
    Poly1 orbit_minpoly;
    OneForm form;
    std::array<int, 2> axis{-1, -1};
    std::vector<Poly2> tracked;
    std::vector<Poly2> polars;
  };

  static int local_multiplicity(const Poly2& f) { return f.is_zero() ? 0 : f.order(); }

  static long divisor_meeting(const Poly2& f, int chart) {
    if (f.is_zero() || chart == 0) return 0;
    return f.restrict_axis(chart == 1 ? 0 : 1).order();
  }

  bool tangent_to_dicritical(const OneForm& form, const std::array<int, 2>& axis) const {
    if (form.is_singular()) return true;
    if (axis[0] >= 0 && tree_.components_[axis[0]].dicritical && form.Q().constant_term().is_zero()) return true;
    if (axis[1] >= 0 && tree_.components_[axis[1]].dicritical && form.P().constant_term().is_zero()) return true;
    return false;
  }

  int process(const Spawn& s) {
    if (s.depth > opt_.max_depth)
      throw MaxDepthExceeded(opt_.max_depth, std::make_shared<const ReductionTree>(tree_));
    const int id = static_cast<int>(tree_.points_.size());
    {
      InfNearPoint p;
      p.id = id;
      p.parent = s.parent;
      p.depth = s.depth;
      p.weight = s.weight;
      p.tower = s.tower;
      p.chart = s.chart;
      p.coordinate = s.coordinate;
      p.orbit_minpoly = s.orbit_minpoly;
      p.form = s.form;
      p.axis_component = s.axis;
      p.nu = algebraic_multiplicity(s.form);
      p.cls = classify(s.form, s.axis);
      p.polar_nu = std::numeric_limits<int>::max();
      for (const auto& g : s.polars) {
        p.polar_multiplicity.push_back(local_multiplicity(g));
        p.polar_nu = std::min(p.polar_nu, p.polar_multiplicity.back());
      }
      if (s.polars.empty()) p.polar_nu = p.nu;
      p.tracked_local = s.tracked;
      for (const auto& g : s.tracked) {
        p.tracked_multiplicity.push_back(local_multiplicity(g));
        p.tracked_divisor_intersection.push_back(divisor_meeting(g, s.chart));
      }
      p.tracked_residual.assign(s.tracked.size(), 0);
      tree_.points_.push_back(std::move(p));
      if (s.parent >= 0) tree_.points_[s.parent].children.push_back(id);
    }

    const auto& cls = tree_.points_[id].cls;
    bool all_invariant = true;
    for (int c : s.axis)
      if (c >= 0 && tree_.components_[c].dicritical) all_invariant = false;
    const bool leaf = cls.kind == SingularityKind::Regular ? !tangent_to_dicritical(s.form, s.axis)
                                                           : cls.is_reduced() && all_invariant;
    if (leaf) {
      if (cls.is_tangent_saddle_node() && cls.weak_index < 2)
        throw InconsistencyError("tangent saddle-node with weak index below 2");
      return id;
    }
    blow_up(id, s);
    return id;
  }

  void blow_up(int id, const Spawn& s) {
    const int D = static_cast<int>(tree_.components_.size());
    const Poly2::Vars vars = child_vars(s.depth + 1);
    const BlowupResult b1 = blowup(s.form, Chart::First, vars, true);
    const BlowupResult b2 = blowup(s.form, Chart::Second, vars, true);
    const bool dicritical = b1.dicritical;

    DivisorComponent comp;
    comp.id = D;
    comp.created_at = id;
    comp.dicritical = dicritical;
    comp.weight = s.weight;
    std::vector<int> through;
    for (int c : s.axis)
      if (c >= 0) through.push_back(c);
    comp.valence = static_cast<long>(through.size());
    comp.incident = through;
    if (through.size() == 1) {
      auto& old = tree_.components_[through[0]];
      old.valence += s.weight / old.weight;
      old.incident.push_back(D);
    } else if (through.size() == 2) {
      for (int k = 0; k < 2; ++k) {
        auto& inc = tree_.components_[through[k]].incident;
        std::replace(inc.begin(), inc.end(), through[1 - k], D);
      }
    }
    tree_.components_.push_back(comp);
    tree_.points_[id].created_component = D;

    // Strict transforms in both charts.
    std::vector<Poly2> tracked1, tracked2, polars1, polars2;
    auto transform = [&](const std::vector<Poly2>& in, std::vector<Poly2>& out1, std::vector<Poly2>& out2) {
      for (const auto& g : in) {
        if (local_multiplicity(g) == 0) {
          out1.emplace_back(vars);
          out2.emplace_back(vars);
        } else {
          out1.push_back(strict_transform(g, Chart::First, vars));
          out2.push_back(strict_transform(g, Chart::Second, vars));
        }
      }
    };
    transform(s.tracked, tracked1, tracked2);
    transform(s.polars, polars1, polars2);

    // Points of the first chart to visit: roots of R on {x = 0}.
    const Poly1 p0 = b1.form.P().restrict_axis(0), q0 = b1.form.Q().restrict_axis(0);
    Poly1 R = dicritical ? q0 : gcd(p0, q0);
    if (s.axis[1] >= 0 && tree_.components_[s.axis[1]].dicritical && b1.form.P().constant_term().is_zero() &&
        !R.eval(FieldElement()).is_zero())
      R = R * Poly1::variable();
    std::vector<RootOrbit> orbits;
    if (!R.is_zero() && R.degree() > 0) orbits = split_extension(R, s.tower, opt_.factor_hints);

    auto restrict_to = [](const std::vector<Poly2>& in, const FieldElement& t0) {
      std::vector<Poly2> out;
      for (const auto& g : in) {
        if (g.is_zero()) {
          out.push_back(g);
          continue;
        }
        Poly2 h = t0.is_rep_zero() ? g : g.translate(1, t0);
        out.push_back(h.vanishes_at_origin() ? h : Poly2(g.vars()));
      }
      return out;
    };

    std::function<void(const RootOrbit&)> spawn_orbit = [&](const RootOrbit& orbit) {
      auto visit_orbit = [&] {
        Spawn c;
        c.parent = id;
        c.depth = s.depth + 1;
        c.weight = s.weight * orbit.weight;
        c.tower = orbit.tower;
        c.chart = 1;
        c.coordinate = orbit.value;
        c.orbit_minpoly = orbit.minpoly;
        const FieldElement& t0 = orbit.value;
        c.form = OneForm::trusted(t0.is_rep_zero() ? b1.form.P() : b1.form.P().translate(1, t0),
                                  t0.is_rep_zero() ? b1.form.Q() : b1.form.Q().translate(1, t0));
        c.axis = {D, t0.is_rep_zero() ? s.axis[1] : -1};
        c.tracked = restrict_to(tracked1, t0);
        c.polars = restrict_to(polars1, t0);
        process(c);
      };
      if (orbit.tower == s.tower) {
        visit_orbit();
        return;
      }
      const std::size_t points_before = tree_.points_.size();
      const std::size_t children_before = tree_.points_[id].children.size();
      const auto components_before = tree_.components_;
      try {
        visit_orbit();
      } catch (const FieldSplit& split) {
        if (split.tower() != orbit.tower) throw;
        tree_.points_.resize(points_before);
        tree_.points_[id].children.resize(children_before);
        tree_.components_ = components_before;
        for (const auto* part : {&split.factor(), &split.cofactor()}) {
          const Poly1 m = Poly1(*part).monic();
          if (m.degree() == 1) {
            spawn_orbit({-m.coeff(0), m, 1, s.tower});
          } else {
            TowerPtr tower = Tower::extend(s.tower, m.coeffs());
            spawn_orbit({FieldElement::generator(tower), m, m.degree(), tower});
          }
        }
      }
    };
    for (const auto& orbit : orbits) spawn_orbit(orbit);

    // The origin of the second chart.
    const OneForm& f2 = b2.form;
    const bool p_zero = f2.P().constant_term().is_zero(), q_zero = f2.Q().constant_term().is_zero();
    bool visit = dicritical ? p_zero : (p_zero && q_zero);
    if (s.axis[0] >= 0 && tree_.components_[s.axis[0]].dicritical && q_zero) visit = true;
    if (visit) {
      Spawn c;
      c.parent = id;
      c.depth = s.depth + 1;
      c.weight = s.weight;
      c.tower = s.tower;
      c.chart = 2;
      c.orbit_minpoly = Poly1::variable();
      c.form = f2;
      c.axis = {s.axis[0], D};
      c.tracked = restrict_to(tracked2, FieldElement());
      c.polars = restrict_to(polars2, FieldElement());
      process(c);
    }

    auto& node = tree_.points_[id];
    for (std::size_t k = 0; k < node.tracked_multiplicity.size(); ++k) {
      long r = node.tracked_multiplicity[k];
      for (int ch : node.children) {
        const auto& c = tree_.points_[ch];
        r -= (c.weight / node.weight) * c.tracked_divisor_intersection[k];
      }
      node.tracked_residual[k] = r;
    }
  }

  ReduceOptions opt_;
  ReductionTree tree_;
};

ReductionTree reduce(const OneForm& form, const ReduceOptions& options) {
  if (options.max_depth < 0) throw InputError("max depth must be non-negative");
  return Reducer(options).run(form);
}

}  // namespace foliage
