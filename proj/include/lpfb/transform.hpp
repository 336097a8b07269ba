#pragma once

// Cascades applied to finitely supported signals: exact rational ladders and
// reversible integer lifting with per-step rounding floor(v + 1/2).

#include <cstdint>

#include "lpfb/lifting.hpp"

namespace lpfb {

/// Split, then base, steps S_0 .. S_{N-1}, then D_K.
SignalPair apply_analysis(const LiftingCascade& c, const Signal& x);
/// Exact inverse of apply_analysis. Throws not_unimodular for a singular base.
Signal apply_synthesis(const LiftingCascade& c, const SignalPair& y);

/// Throws not_reversible unless K = 1 and B = I, not_dyadic for non-dyadic
/// filters, and non_integer_input for non-integer samples.
SignalPair reversible_analysis(const LiftingCascade& c, const Signal& x);
Signal reversible_synthesis(const LiftingCascade& c, const SignalPair& y);

struct PRReport {
  bool ok = false;
  Coefficient amplitude;  // reconstruction = amplitude * x delayed by `delay`
  long delay = 0;
};

/// Round trips `trials` random rational signals through analysis and synthesis.
PRReport verify_pr(const LiftingCascade& c, int trials = 16, std::uint64_t seed = 1);

}  // namespace lpfb
