#include "lpfb/transform.hpp"

#include "lpfb/generators.hpp"

namespace lpfb {

namespace {

void lift(SignalPair& y, const LiftingStep& s, int sign) {
  const int m = channel(s.update);
  LaurentPoly delta = s.filter * y[1 - m];
  if (sign < 0) delta = -delta;
  y[m] += delta;
}

LaurentPoly rounded(const LaurentPoly& f) {
  LaurentPoly::TapMap taps;
  for (const auto& [n, c] : f.taps()) {
    Coefficient r(mpq_class(c.round_half_up()));
    if (!r.is_zero()) taps.emplace(n, std::move(r));
  }
  return LaurentPoly(std::move(taps));
}

void require_reversible(const LiftingCascade& c) {
  if (c.scale.k() != 1 || c.base != PolyphaseMatrix::identity()) {
    throw Error(ErrorKind::not_reversible, "reversible lifting needs K = 1 and base I");
  }
  for (const auto& s : c.steps) {
    if (!s.filter.all_dyadic()) throw Error(ErrorKind::not_dyadic, "lifting filter is not dyadic");
  }
}

void require_integer(const LaurentPoly& x) {
  if (!x.all_integer()) throw Error(ErrorKind::non_integer_input, "signal has non-integer samples");
}

}  // namespace

SignalPair apply_analysis(const LiftingCascade& c, const Signal& x) {
  SignalPair y = c.base * split_signal(x);
  for (const auto& s : c.steps) lift(y, s, +1);
  y[0] *= c.scale.k().inverse();
  y[1] *= c.scale.k();
  return y;
}

Signal apply_synthesis(const LiftingCascade& c, const SignalPair& y) {
  const PolyphaseMatrix base_inv = unimodular_inverse(c.base);
  SignalPair x = y;
  x[0] *= c.scale.k();
  x[1] *= c.scale.k().inverse();
  for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) lift(x, *it, -1);
  return merge_signal(base_inv * x);
}

SignalPair reversible_analysis(const LiftingCascade& c, const Signal& x) {
  require_reversible(c);
  require_integer(x);
  SignalPair y = split_signal(x);
  for (const auto& s : c.steps) {
    const int m = channel(s.update);
    y[m] += rounded(s.filter * y[1 - m]);
  }
  return y;
}

Signal reversible_synthesis(const LiftingCascade& c, const SignalPair& y) {
  require_reversible(c);
  require_integer(y[0]);
  require_integer(y[1]);
  SignalPair x = y;
  for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) {
    const int m = channel(it->update);
    x[m] -= rounded(it->filter * x[1 - m]);
  }
  return merge_signal(x);
}

PRReport verify_pr(const LiftingCascade& c, int trials, std::uint64_t seed) {
  PRReport report;
  if (!det_info(c.base).unimodular()) {
    const DetInfo d = det_info(cascade_product(c));
    report.amplitude = d.monomial ? d.amplitude : Coefficient(0);
    report.delay = d.delay;
    return report;
  }
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    const Signal x = random_signal(rng, rng.uniform(1, 64), false);
    if (apply_synthesis(c, apply_analysis(c, x)) != x) return report;
  }
  report.ok = true;
  report.amplitude = 1;
  report.delay = 0;
  return report;
}

}  // namespace lpfb
