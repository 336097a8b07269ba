#include "lpfb/glstructure.hpp"

#include "lpfb/generators.hpp"

namespace lpfb {

bool FilterGroupSpec::contains(const LaurentPoly& s) const {
  if (s.is_zero()) return true;
  if (dyadic_only && !s.all_dyadic()) return false;
  if (kind == FilterGroupKind::unrestricted) return true;
  const SymmetryTag tag = classify_symmetry(s);
  switch (kind) {
    case FilterGroupKind::hs_about_plus_half:
      return tag.kind == SymmetryKind::hs && *tag.axis == Coefficient(1, 2);
    case FilterGroupKind::hs_about_minus_half:
      return tag.kind == SymmetryKind::hs && *tag.axis == Coefficient(-1, 2);
    case FilterGroupKind::wa_about_zero:
      return tag.kind == SymmetryKind::wa && *tag.axis == 0;
    case FilterGroupKind::unrestricted:
      break;
  }
  return true;
}

GroupLiftingStructure GroupLiftingStructure::ws() {
  GroupLiftingStructure g;
  g.upper = {FilterGroupKind::hs_about_plus_half, false};
  g.lower = {FilterGroupKind::hs_about_minus_half, false};
  return g;
}

GroupLiftingStructure GroupLiftingStructure::ws_reversible() {
  GroupLiftingStructure g = ws();
  g.scaling = ScalingGroup::trivial;
  g.upper.dyadic_only = g.lower.dyadic_only = true;
  return g;
}

GroupLiftingStructure GroupLiftingStructure::hs() {
  GroupLiftingStructure g;
  g.upper = {FilterGroupKind::wa_about_zero, false};
  g.lower = {FilterGroupKind::wa_about_zero, false};
  g.base_class = BaseClass::hs_equal_length_concentric;
  return g;
}

GroupLiftingStructure GroupLiftingStructure::hs_reversible() {
  GroupLiftingStructure g = hs();
  g.scaling = ScalingGroup::trivial;
  g.upper.dyadic_only = g.lower.dyadic_only = true;
  g.dyadic_base = true;
  return g;
}

bool scale_admissible(const GroupLiftingStructure& g, const GainScale& k) {
  return g.scaling == ScalingGroup::full || k.k() == 1;
}

bool step_admissible(const GroupLiftingStructure& g, const LiftingStep& s) {
  return (s.update == Update::lowpass ? g.upper : g.lower).contains(s.filter);
}

namespace {

bool matrix_dyadic(const PolyphaseMatrix& m) {
  for (const auto& row : m.rows) {
    if (!row[0].all_dyadic() || !row[1].all_dyadic()) return false;
  }
  return true;
}

}  // namespace

bool base_admissible(const GroupLiftingStructure& g, const PolyphaseMatrix& b) {
  if (g.dyadic_base && !matrix_dyadic(b)) return false;
  switch (g.base_class) {
    case BaseClass::identity_only:
      return b == PolyphaseMatrix::identity();
    case BaseClass::hs_equal_length_concentric:
      return det_info(b).unimodular() && satisfies_hs_mirror(b) &&
             order(b.filter(0)) == order(b.filter(1)) &&
             suppint(b.rows[0]) == suppint(b.rows[1]);
    case BaseClass::unrestricted:
      return det_info(b).unimodular();
  }
  return false;
}

bool cascade_in_structure(const GroupLiftingStructure& g, const LiftingCascade& c) {
  if (!scale_admissible(g, c.scale)) return false;
  for (const auto& s : c.steps) {
    if (!step_admissible(g, s)) return false;
  }
  return base_admissible(g, c.base);
}

OrderReport check_order_increasing(const LiftingCascade& c) {
  if (!is_irreducible(c)) throw Error(ErrorKind::not_irreducible, "cascade is reducible");
  OrderReport report;
  report.increasing = true;
  for (const auto& e : intermediates(c)) {
    report.orders.push_back(order(e));
    const std::size_t n = report.orders.size();
    if (n > 1 && report.orders[n - 1] <= report.orders[n - 2]) report.increasing = false;
  }
  return report;
}

bool RadiiReport::matches() const {
  for (const auto& e : steps) {
    for (int i = 0; i < 2; ++i) {
      if (e.predicted[i] != e.measured[i] || !e.centered[i]) return false;
    }
  }
  return true;
}

RadiiReport ws_radii(const LiftingCascade& c) {
  if (c.base != PolyphaseMatrix::identity() || !is_irreducible(c) ||
      !cascade_in_structure(GroupLiftingStructure::ws(), c)) {
    throw Error(ErrorKind::not_admissible, "radius recursion needs an irreducible WS cascade over I");
  }
  RadiiReport report;
  const auto partial = intermediates(c);
  long prev_t = 0;
  for (std::size_t n = 0; n < c.steps.size(); ++n) {
    RadiiEntry e;
    e.update = c.steps[n].update;
    e.t = supprad(c.steps[n].filter);
    const int m = channel(e.update);
    e.predicted[1 - m] = n == 0 ? 0 : report.steps.back().predicted[m] + 2 * prev_t - 1;
    e.predicted[m] = e.predicted[1 - m] + 2 * e.t - 1;
    const PolyphaseMatrix& en = partial[n + 1];
    for (int i = 0; i < 2; ++i) {
      const LaurentPoly f = en.filter(i);
      e.measured[i] = supprad(f);
      const auto s = suppint(f);
      e.centered[i] = s->lo + s->hi == -2 * i;
    }
    e.order = order(en);
    prev_t = e.t;
    report.steps.push_back(e);
  }
  return report;
}

const char* to_string(InvarianceResult r) {
  switch (r) {
    case InvarianceResult::holds: return "holds";
    case InvarianceResult::violated: return "violated";
    case InvarianceResult::inapplicable: return "inapplicable";
  }
  return "?";
}

InvarianceResult d_invariance_check(const GroupLiftingStructure& g, int trials,
                                    std::uint64_t seed) {
  if (g.scaling != ScalingGroup::full) return InvarianceResult::inapplicable;
  Rng rng(seed);
  GeneratorConfig cfg;
  for (int i = 0; i < trials; ++i) {
    const Update m = rng.coin() ? Update::lowpass : Update::highpass;
    const FilterGroupSpec& spec = m == Update::lowpass ? g.upper : g.lower;
    const long radius = rng.uniform(cfg.min_radius, cfg.max_radius);
    const LiftingStep s{m, random_group_filter(rng, spec.kind, radius, cfg)};
    const GainScale k(random_scale(rng));
    const auto image = as_lifting_step(gamma_conjugate(k, step_to_matrix(s)));
    if (!image || image->update != m || !step_admissible(g, *image)) {
      return InvarianceResult::violated;
    }
  }
  return InvarianceResult::holds;
}

}  // namespace lpfb
