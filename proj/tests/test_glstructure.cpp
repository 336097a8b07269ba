#include <doctest.h>

#include "lpfb/generators.hpp"
#include "lpfb/glstructure.hpp"

using namespace lpfb;

namespace {

const Coefficient half(1, 2);
const LaurentPoly wa1 = LaurentPoly::z_power(1) - LaurentPoly::z_power(-1);

// Equal-length concentric HS bank with scalar orders 5 and 5.
PolyphaseMatrix haar_times_m() {
  const Coefficient a(5, 4), b(3, 4);
  return haar_bank() *
         PolyphaseMatrix(a, LaurentPoly::z_power(1, b), LaurentPoly::z_power(-1, b), a);
}

// Concentric HS bank with scalar orders 5 and 9.
PolyphaseMatrix six_ten() { return step_to_matrix(lower(wa1)) * haar_times_m(); }

}  // namespace

TEST_CASE("predefined structures") {
  const auto w = GroupLiftingStructure::ws();
  CHECK(w.scaling == ScalingGroup::full);
  CHECK(w.upper.kind == FilterGroupKind::hs_about_plus_half);
  CHECK(w.lower.kind == FilterGroupKind::hs_about_minus_half);
  CHECK(w.base_class == BaseClass::identity_only);
  const auto wr = GroupLiftingStructure::ws_reversible();
  CHECK(wr.scaling == ScalingGroup::trivial);
  CHECK(wr.upper.dyadic_only);
  const auto h = GroupLiftingStructure::hs();
  CHECK(h.upper.kind == FilterGroupKind::wa_about_zero);
  CHECK(h.base_class == BaseClass::hs_equal_length_concentric);
  const auto hr = GroupLiftingStructure::hs_reversible();
  CHECK(hr.dyadic_base);
  CHECK(hr.lower.dyadic_only);
}

TEST_CASE("step_admissible") {
  const auto w = GroupLiftingStructure::ws();
  CHECK(step_admissible(w, upper(LaurentPoly{{0, half}, {1, half}})));
  CHECK_FALSE(step_admissible(w, upper(LaurentPoly{{-1, half}, {0, half}})));
  CHECK(step_admissible(w, lower(LaurentPoly{{-1, half}, {0, half}})));
  CHECK(step_admissible(GroupLiftingStructure::hs(), upper(wa1)));
  CHECK_FALSE(step_admissible(GroupLiftingStructure::hs(), upper(LaurentPoly(1))));
  CHECK_FALSE(step_admissible(GroupLiftingStructure::ws_reversible(),
                              upper(LaurentPoly{{0, Coefficient(1, 3)}, {1, Coefficient(1, 3)}})));
  CHECK(step_admissible(w, upper(LaurentPoly())));
}

TEST_CASE("base_admissible") {
  CHECK(base_admissible(GroupLiftingStructure::ws(), PolyphaseMatrix::identity()));
  CHECK_FALSE(base_admissible(GroupLiftingStructure::ws(), haar_bank()));
  const auto h = GroupLiftingStructure::hs();
  CHECK(base_admissible(h, haar_bank()));
  CHECK(base_admissible(h, haar_times_m()));
  const PolyphaseMatrix st = six_ten();
  CHECK(classify_bank(st).kind == BankKind::hs_concentric);
  CHECK(order(st.filter(0)) == 5);
  CHECK(order(st.filter(1)) == 9);
  CHECK_FALSE(base_admissible(h, st));
  CHECK_FALSE(base_admissible(GroupLiftingStructure::hs_reversible(),
                              GainScale(3).matrix() * haar_bank()));
}

TEST_CASE("cascade_in_structure") {
  LiftingCascade haar;
  haar.scale = GainScale(2);
  haar.steps = {upper(1), lower(-half)};
  CHECK_FALSE(cascade_in_structure(GroupLiftingStructure::ws(), haar));
  CHECK(cascade_in_structure(GroupLiftingStructure::ws(), LiftingCascade{}));
  LiftingCascade wa;
  wa.steps = {lower(wa1), upper(wa1 * Coefficient(3, 8))};
  wa.base = haar_bank();
  CHECK(cascade_in_structure(GroupLiftingStructure::hs(), wa));
  CHECK_FALSE(cascade_in_structure(GroupLiftingStructure::ws(), wa));
  LiftingCascade scaled;
  scaled.scale = GainScale(3);
  CHECK_FALSE(cascade_in_structure(GroupLiftingStructure::ws_reversible(), scaled));
}

TEST_CASE("check_order_increasing") {
  LiftingCascade one;
  one.steps = {lower(LaurentPoly{{-2, 1}, {0, 3}})};
  CHECK(check_order_increasing(one).increasing);
  LiftingCascade id;
  id.steps = {upper(-half), lower(1), upper(1), lower(-half),
              upper(2),     lower(half), upper(-1), lower(-1)};
  const OrderReport r = check_order_increasing(id);
  CHECK_FALSE(r.increasing);
  CHECK(r.orders.size() == 9);
  CHECK(r.orders.back() == 0);
  LiftingCascade bad;
  bad.steps = {upper(1), upper(2)};
  try {
    check_order_increasing(bad);
    FAIL("expected NotIrreducible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_irreducible);
  }
}

TEST_CASE("ws_radii examples") {
  const LaurentPoly p0{{0, 1}, {1, 1}};   // HS about 1/2, t = 1
  const LaurentPoly p1{{-1, 1}, {0, 1}};  // HS about -1/2, t = 1
  LiftingCascade one;
  one.steps = {upper(p0)};
  const RadiiReport a = ws_radii(one);
  REQUIRE(a.steps.size() == 1);
  CHECK(a.steps[0].predicted[0] == 1);
  CHECK(a.steps[0].predicted[1] == 0);
  CHECK(a.matches());
  LiftingCascade two;
  two.steps = {upper(p0), lower(p1)};
  const RadiiReport b = ws_radii(two);
  REQUIRE(b.steps.size() == 2);
  CHECK(b.steps[1].predicted[0] == 1);  // 1 - m_1
  CHECK(b.steps[1].predicted[1] == 2);  // m_1
  CHECK(b.matches());
  LiftingCascade haar;
  haar.steps = {upper(1)};
  CHECK_THROWS_AS(ws_radii(haar), Error);
}

TEST_CASE("d_invariance_check") {
  CHECK(d_invariance_check(GroupLiftingStructure::ws()) == InvarianceResult::holds);
  CHECK(d_invariance_check(GroupLiftingStructure::hs(), 64, 3) == InvarianceResult::holds);
  CHECK(d_invariance_check(GroupLiftingStructure::ws_reversible()) ==
        InvarianceResult::inapplicable);
  const auto w = GroupLiftingStructure::ws();
  const LaurentPoly p0{{0, 1}, {1, 1}};
  const auto image = as_lifting_step(gamma_conjugate(GainScale(2), step_to_matrix(upper(p0))));
  REQUIRE(image);
  CHECK(step_admissible(w, *image));
  CHECK(image->filter == p0 * Coefficient(1, 4));
}

TEST_CASE("property: filter groups are additive groups") {
  Rng rng(501);
  GeneratorConfig cfg;
  for (auto kind : {FilterGroupKind::hs_about_plus_half, FilterGroupKind::hs_about_minus_half,
                    FilterGroupKind::wa_about_zero}) {
    const FilterGroupSpec spec{kind, true};
    for (int i = 0; i < 100; ++i) {
      const LaurentPoly s = random_group_filter(rng, kind, rng.uniform(1, 3), cfg);
      const LaurentPoly t = random_group_filter(rng, kind, rng.uniform(1, 3), cfg);
      CHECK(spec.contains(s));
      CHECK(spec.contains(s + t));
      CHECK(spec.contains(-s));
      CHECK(spec.contains(s - s));
    }
  }
}

TEST_CASE("property: random cascades are order-increasing and match the radius recursion") {
  Rng rng(502);
  GeneratorConfig cfg;
  for (int i = 0; i < 150; ++i) {
    const LiftingCascade w = random_ws_cascade(rng, cfg);
    CHECK(cascade_in_structure(GroupLiftingStructure::ws(), w));
    CHECK(check_order_increasing(w).increasing);
    CHECK(ws_radii(w).matches());
    const LiftingCascade h = random_hs_cascade(rng, cfg);
    CHECK(cascade_in_structure(GroupLiftingStructure::hs(), h));
    CHECK(check_order_increasing(h).increasing);
  }
}

TEST_CASE("property: right lifting never preserves HS concentricity") {
  Rng rng(503);
  GeneratorConfig cfg;
  for (int i = 0; i < 100; ++i) {
    const PolyphaseMatrix h = cascade_product(random_hs_cascade(rng, cfg));
    REQUIRE(classify_bank(h).kind == BankKind::hs_concentric);
    const LaurentPoly s = random_group_filter(rng, FilterGroupKind::unrestricted, rng.uniform(1, 3), cfg);
    const LiftingStep step = rng.coin() ? upper(s) : lower(s);
    CHECK(classify_bank(h * step_to_matrix(step)).kind != BankKind::hs_concentric);
  }
}

TEST_CASE("property: equal-length bases have equal polyphase supports") {
  Rng rng(504);
  GeneratorConfig cfg;
  for (int i = 0; i < 100; ++i) {
    const PolyphaseMatrix b = random_hs_base(rng, cfg);
    CHECK(suppint(b.rows[0]) == suppint(b.rows[1]));
    CHECK(base_admissible(GroupLiftingStructure::hs(), b));
  }
}
