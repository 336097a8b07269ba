#pragma once

// Lifting factorizations: the WS peel, the HS peel down to an equal-length
// base, a Euclidean oracle with two pivot policies, and comparison of two
// factorizations modulo rescaling.

#include <optional>

#include "lpfb/lifting.hpp"

namespace lpfb {

/// Irreducible WS cascade over I. Throws not_unimodular,
/// not_ws_delay_minimized, or factorization_stuck.
LiftingCascade factor_ws(const PolyphaseMatrix& h);

/// WA cascade over a concentric equal-length HS base, K = 1. With
/// `normalize_dc` the base is rescaled so that B0(1) = 1 and the compensating
/// scaling moves into K. Throws not_unimodular, not_hs_concentric, dc_zero,
/// or factorization_stuck.
LiftingCascade factor_hs(const PolyphaseMatrix& h, bool normalize_dc = false);

/// Policy A zeros the upper-right entry first, policy B the lower-left.
enum class PivotPolicy { upper_right, lower_left };

/// Unstructured factorization over base I. Throws not_unimodular.
LiftingCascade factor_euclidean(const PolyphaseMatrix& h,
                                PivotPolicy policy = PivotPolicy::upper_right);

/// Laurent division f = q g + r choosing, among all remainders of order below
/// order(g), the one of least width; ties go to the smaller top index.
std::pair<LaurentPoly, LaurentPoly> laurent_divide(const LaurentPoly& f, const LaurentPoly& g);

struct RescalingWitness {
  Coefficient alpha;  // K1 / K2
};

/// alpha with N2 = N1, B2 = D_alpha B1 and S2_i = gamma_alpha(S1_i), or
/// nullopt. Throws not_irreducible.
std::optional<RescalingWitness> equivalent_mod_rescaling(const LiftingCascade& c1,
                                                         const LiftingCascade& c2);

/// Rescales a cascade so its base has B0(1) = 1. Throws dc_zero.
LiftingCascade normalize_dc(const LiftingCascade& c);

}  // namespace lpfb
