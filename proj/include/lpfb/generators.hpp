#pragma once

// Seeded random generators for filters, cascades, bases and signals.

#include <cstdint>
#include <random>

#include "lpfb/glstructure.hpp"

namespace lpfb {

struct GeneratorConfig {
  int min_steps = 1;
  int max_steps = 8;
  long min_radius = 1;  // support radius t of each lifting filter
  long max_radius = 3;
  int max_log2_den = 4;  // dyadic denominators up to 2^4
  long max_numerator = 15;
  bool unit_scale = false;  // K = 1 (reversible cascades)
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// k / 2^j with |k| <= max_numerator, j <= max_log2_den.
Coefficient random_dyadic(Rng& rng, const GeneratorConfig& cfg, bool nonzero);
/// +-p/q with p, q in [1, 9].
Coefficient random_scale(Rng& rng);

/// Random member of the filter group with support radius exactly `radius`.
/// For unrestricted groups the support is [-radius, radius].
LaurentPoly random_group_filter(Rng& rng, FilterGroupKind kind, long radius,
                                const GeneratorConfig& cfg);

/// Irreducible cascade in the WS structure (HS steps about +-1/2, base I).
LiftingCascade random_ws_cascade(Rng& rng, const GeneratorConfig& cfg);

/// Concentric equal-length HS bank in B_H (unimodular, equal scalar orders,
/// equal polyphase supports). Built as D_K * Haar * M_1 ... M_r with
/// M = [[a, b z^k], [b z^-k, a]], a^2 - b^2 = 1.
PolyphaseMatrix random_hs_base(Rng& rng, const GeneratorConfig& cfg);

/// Irreducible WA cascade over a random base from random_hs_base (K = 1).
LiftingCascade random_hs_cascade(Rng& rng, const GeneratorConfig& cfg);

/// Unimodular cascade with unrestricted filters and base I.
LiftingCascade random_generic_cascade(Rng& rng, const GeneratorConfig& cfg);

/// Samples on [0, length) drawn from [-range, range], integer or rational.
Signal random_signal(Rng& rng, long length, bool integer, long range = 255);

}  // namespace lpfb
