#include "lpfb/generators.hpp"

namespace lpfb {

Coefficient random_dyadic(Rng& rng, const GeneratorConfig& cfg, bool nonzero) {
  long k = 0;
  do {
    k = rng.uniform(-cfg.max_numerator, cfg.max_numerator);
  } while (nonzero && k == 0);
  const long j = rng.uniform(0, cfg.max_log2_den);
  return Coefficient(k, 1L << j);
}

Coefficient random_scale(Rng& rng) {
  const long p = rng.uniform(1, 9);
  const long q = rng.uniform(1, 9);
  return Coefficient(rng.coin() ? p : -p, q);
}

LaurentPoly random_group_filter(Rng& rng, FilterGroupKind kind, long radius,
                                const GeneratorConfig& cfg) {
  LaurentPoly::TapMap taps;
  auto put = [&](long n, const Coefficient& c) {
    if (!c.is_zero()) taps[n] = c;
  };
  const long t = radius;
  switch (kind) {
    case FilterGroupKind::hs_about_plus_half:
      // s(i) = s(1 - i) on [1 - t, t]
      for (long i = 1; i <= t; ++i) {
        const Coefficient c = random_dyadic(rng, cfg, i == t);
        put(i, c);
        put(1 - i, c);
      }
      break;
    case FilterGroupKind::hs_about_minus_half:
      // s(i) = s(-1 - i) on [-t, t - 1]
      for (long i = 0; i < t; ++i) {
        const Coefficient c = random_dyadic(rng, cfg, i == t - 1);
        put(i, c);
        put(-1 - i, c);
      }
      break;
    case FilterGroupKind::wa_about_zero:
      for (long i = 1; i <= t; ++i) {
        const Coefficient c = random_dyadic(rng, cfg, i == t);
        put(i, c);
        put(-i, -c);
      }
      break;
    case FilterGroupKind::unrestricted:
      for (long i = -t; i <= t; ++i) put(i, random_dyadic(rng, cfg, i == -t || i == t));
      break;
  }
  return LaurentPoly(std::move(taps));
}

namespace {

LiftingCascade alternating_cascade(Rng& rng, const GeneratorConfig& cfg, FilterGroupKind upper_kind,
                                   FilterGroupKind lower_kind) {
  LiftingCascade c;
  const long n = rng.uniform(cfg.min_steps, cfg.max_steps);
  Update m = rng.coin() ? Update::lowpass : Update::highpass;
  for (long i = 0; i < n; ++i) {
    const long t = rng.uniform(cfg.min_radius, cfg.max_radius);
    const FilterGroupKind kind = m == Update::lowpass ? upper_kind : lower_kind;
    c.steps.push_back({m, random_group_filter(rng, kind, t, cfg)});
    m = other(m);
  }
  if (!cfg.unit_scale) c.scale = GainScale(random_scale(rng));
  return c;
}

}  // namespace

LiftingCascade random_ws_cascade(Rng& rng, const GeneratorConfig& cfg) {
  return alternating_cascade(rng, cfg, FilterGroupKind::hs_about_plus_half,
                             FilterGroupKind::hs_about_minus_half);
}

PolyphaseMatrix random_hs_base(Rng& rng, const GeneratorConfig& cfg) {
  const GroupLiftingStructure hs = GroupLiftingStructure::hs();
  for (;;) {
    PolyphaseMatrix b = haar_bank();
    const long factors = rng.uniform(0, 2);
    for (long i = 0; i < factors; ++i) {
      // u = +-2^j gives a = (u + 1/u)/2, b = (u - 1/u)/2 with a^2 - b^2 = 1
      const long j = rng.uniform(1, 2);
      Coefficient u(1L << j);
      if (rng.coin()) u = -u;
      const Coefficient a = (u + u.inverse()) * Coefficient(1, 2);
      const Coefficient s = (u - u.inverse()) * Coefficient(1, 2);
      const long k = rng.uniform(1, 2);
      b = b * PolyphaseMatrix(a, LaurentPoly::z_power(k, s), LaurentPoly::z_power(-k, s), a);
    }
    if (!cfg.unit_scale) b = GainScale(random_scale(rng)).matrix() * b;
    if (base_admissible(hs, b)) return b;
  }
}

LiftingCascade random_hs_cascade(Rng& rng, const GeneratorConfig& cfg) {
  GeneratorConfig unit = cfg;
  unit.unit_scale = true;
  LiftingCascade c = alternating_cascade(rng, unit, FilterGroupKind::wa_about_zero,
                                         FilterGroupKind::wa_about_zero);
  c.base = random_hs_base(rng, cfg);
  return c;
}

LiftingCascade random_generic_cascade(Rng& rng, const GeneratorConfig& cfg) {
  return alternating_cascade(rng, cfg, FilterGroupKind::unrestricted,
                             FilterGroupKind::unrestricted);
}

Signal random_signal(Rng& rng, long length, bool integer, long range) {
  LaurentPoly::TapMap taps;
  for (long k = 0; k < length; ++k) {
    const long p = rng.uniform(-range, range);
    const Coefficient c = integer ? Coefficient(p) : Coefficient(p, rng.uniform(1, 16));
    if (!c.is_zero()) taps.emplace(k, c);
  }
  return LaurentPoly(std::move(taps));
}

}  // namespace lpfb
