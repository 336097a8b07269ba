#include <doctest.h>

#include "lpfb/generators.hpp"
#include "lpfb/laurent.hpp"
#include "oracle.hpp"

using namespace lpfb;

namespace {

LaurentPoly random_poly(Rng& rng, long lo, long hi) {
  GeneratorConfig cfg;
  LaurentPoly::TapMap taps;
  for (long n = lo; n <= hi; ++n) {
    const Coefficient c = random_dyadic(rng, cfg, n == lo || n == hi);
    if (!c.is_zero()) taps.emplace(n, c);
  }
  return LaurentPoly(std::move(taps));
}

// z^-n written as a tap at n.
LaurentPoly z(long k) { return LaurentPoly::z_power(k); }

}  // namespace

TEST_CASE("coefficient canonical form") {
  CHECK(Coefficient(2, 4) == Coefficient(1, 2));
  CHECK(Coefficient(3, -6).str() == "-1/2");
  CHECK(Coefficient(-4, 2).str() == "-2");
  CHECK(Coefficient(3, 8).is_dyadic());
  CHECK(Coefficient(5).is_dyadic());
  CHECK_FALSE(Coefficient(1, 3).is_dyadic());
  CHECK(Coefficient::parse("-7/14") == Coefficient(-1, 2));
  CHECK(Coefficient::parse("12") == Coefficient(12));
  CHECK_FALSE(Coefficient::parse("1/0"));
  CHECK_FALSE(Coefficient::parse("1/"));
  CHECK_FALSE(Coefficient::parse("x"));
  CHECK_THROWS_AS(Coefficient(0).inverse(), Error);
}

TEST_CASE("round half up") {
  CHECK(Coefficient(-1, 2).round_half_up() == 0);
  CHECK(Coefficient(1, 2).round_half_up() == 1);
  CHECK(Coefficient(-3, 2).round_half_up() == -1);
  CHECK(Coefficient(7, 4).round_half_up() == 2);
  CHECK(Coefficient(-7, 4).round_half_up() == -2);
}

TEST_CASE("ring operations") {
  CHECK((LaurentPoly(1) + z(-1)) + (-z(-1)) == LaurentPoly(1));
  CHECK((LaurentPoly(1) + z(1)) * (LaurentPoly(1) - z(1)) == LaurentPoly(1) - z(2));
  Rng rng(11);
  const LaurentPoly f = random_poly(rng, -3, 4);
  CHECK((LaurentPoly() * f).is_zero());
  CHECK((Coefficient(0) * f).is_zero());
  CHECK(f.delayed(2)[3] == f[1]);
}

TEST_CASE("support, order and radius") {
  const LaurentPoly f{{0, 1}, {3, 1}};
  CHECK(suppint(f) == Interval{0, 3});
  CHECK(order(f) == 3);
  CHECK(order(LaurentPoly(5)) == 0);
  const LaurentPoly h0{{-1, Coefficient(1, 2)}, {0, Coefficient(1, 2)}};
  const LaurentPoly h1{{-1, 1}, {0, -1}};
  CHECK(suppint(h0) == Interval{-1, 0});
  CHECK(order(h1) == 1);
  CHECK(supprad(LaurentPoly{{-1, 1}, {2, 1}}) == 2);
  CHECK(supprad(LaurentPoly(3)) == 0);
  CHECK(supprad(LaurentPoly{{-2, 1}, {1, 1}}) == 2);
  CHECK_FALSE(suppint(LaurentPoly()).has_value());
  try {
    order(LaurentPoly());
    FAIL("expected EmptySupport");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::empty_support);
  }
  CHECK_THROWS_AS(supprad(LaurentPoly()), Error);
}

TEST_CASE("evaluate") {
  const LaurentPoly h0{{-1, Coefficient(1, 2)}, {0, Coefficient(1, 2)}};
  const LaurentPoly h1{{-1, 1}, {0, -1}};
  CHECK(evaluate(h0, 1) == 1);
  CHECK(evaluate(h1, 1) == 0);
  CHECK(evaluate(z(1) - z(-1), 2) == Coefficient(3, 2));
  try {
    evaluate(h0, 0);
    FAIL("expected ZeroEvaluationPoint");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::zero_evaluation_point);
  }
}

TEST_CASE("reflect") {
  CHECK(reflect(LaurentPoly(1) + z(-1)) == LaurentPoly(1) + z(1));
  CHECK(reflect(LaurentPoly(7)) == LaurentPoly(7));
  CHECK(reflect(z(1) - z(-1)) == z(-1) - z(1));
}

TEST_CASE("classify_symmetry examples") {
  const LaurentPoly h0{{-1, Coefficient(1, 2)}, {0, Coefficient(1, 2)}};
  const LaurentPoly h1{{-1, 1}, {0, -1}};
  CHECK(classify_symmetry(h0) == SymmetryTag{SymmetryKind::hs, Coefficient(-1, 2)});
  CHECK(classify_symmetry(h1) == SymmetryTag{SymmetryKind::ha, Coefficient(-1, 2)});
  CHECK(classify_symmetry(z(1) - z(-1)) == SymmetryTag{SymmetryKind::wa, Coefficient(0)});
  CHECK(classify_symmetry(LaurentPoly{{0, 1}, {1, 2}}).kind == SymmetryKind::none);
  CHECK_THROWS_AS(classify_symmetry(LaurentPoly()), Error);
}

TEST_CASE("property: arithmetic agrees with plain convolution") {
  Rng rng(101);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly f = random_poly(rng, rng.uniform(-5, 0), rng.uniform(0, 5));
    const LaurentPoly g = random_poly(rng, rng.uniform(-5, 0), rng.uniform(0, 5));
    const LaurentPoly p = f * g;
    CHECK(oracle::same(p, oracle::convolve(oracle::from(f), oracle::from(g))));
    CHECK(oracle::same(f + g, oracle::add(oracle::from(f), oracle::from(g))));
    CHECK(oracle::same(f - g, oracle::sub(oracle::from(f), oracle::from(g))));
    for (const auto* h : {&p, &f, &g}) {
      for (const auto& [n, c] : h->taps()) CHECK_FALSE(c.is_zero());
    }
    CHECK(order(p) == order(f) + order(g));
    CHECK(reflect(reflect(f)) == f);
  }
}

TEST_CASE("property: symmetry classification on mirrored half-filters") {
  Rng rng(202);
  GeneratorConfig cfg;
  for (int i = 0; i < 300; ++i) {
    const long twice_axis = rng.uniform(-6, 6);
    const int sign = rng.coin() ? 1 : -1;
    LaurentPoly::TapMap taps;
    const long reach = rng.uniform(1, 4);
    // indices n >= axis, mirrored to twice_axis - n
    const long start = twice_axis >= 0 ? twice_axis / 2 : -((-twice_axis + 1) / 2);
    for (long n = start; n <= start + reach; ++n) {
      if (2 * n < twice_axis) continue;
      const Coefficient c = random_dyadic(rng, cfg, false);
      if (2 * n == twice_axis) {
        if (sign > 0 && !c.is_zero()) taps[n] = c;
        continue;
      }
      if (c.is_zero()) continue;
      taps[n] = c;
      taps[twice_axis - n] = sign > 0 ? c : -c;
    }
    const LaurentPoly f(taps);
    if (f.is_zero()) continue;
    const SymmetryTag tag = classify_symmetry(f);
    long found = 0;
    REQUIRE(oracle::has_any_symmetry(oracle::from(f), sign, &found));
    const bool whole = found % 2 == 0;
    const SymmetryKind expected = sign > 0 ? (whole ? SymmetryKind::ws : SymmetryKind::hs)
                                           : (whole ? SymmetryKind::wa : SymmetryKind::ha);
    CHECK(tag.kind == expected);
    CHECK(*tag.axis == Coefficient(found, 2));
    const SymmetryTag r = classify_symmetry(reflect(f));
    CHECK(r.kind == tag.kind);
    CHECK(*r.axis == -*tag.axis);
  }
}
