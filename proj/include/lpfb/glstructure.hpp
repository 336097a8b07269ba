#pragma once

// Group lifting structures (D, U, L, B) and the predicates behind the
// uniqueness results: admissibility, order increase, support radii.

#include <cstdint>
#include <vector>

#include "lpfb/lifting.hpp"

namespace lpfb {

enum class FilterGroupKind {
  hs_about_plus_half,   // P0: upper steps of the WS structure
  hs_about_minus_half,  // P1: lower steps of the WS structure
  wa_about_zero,        // Pa: both triangles of the HS structure
  unrestricted,
};

struct FilterGroupSpec {
  FilterGroupKind kind = FilterGroupKind::unrestricted;
  bool dyadic_only = false;

  /// Membership in the additive group (the zero filter always belongs).
  bool contains(const LaurentPoly& s) const;
};

enum class ScalingGroup { full, trivial };
enum class BaseClass { identity_only, hs_equal_length_concentric, unrestricted };

struct GroupLiftingStructure {
  ScalingGroup scaling = ScalingGroup::full;
  FilterGroupSpec upper;
  FilterGroupSpec lower;
  BaseClass base_class = BaseClass::identity_only;
  bool dyadic_base = false;

  static GroupLiftingStructure ws();
  static GroupLiftingStructure ws_reversible();
  static GroupLiftingStructure hs();
  static GroupLiftingStructure hs_reversible();
};

bool scale_admissible(const GroupLiftingStructure& g, const GainScale& k);
bool step_admissible(const GroupLiftingStructure& g, const LiftingStep& s);
bool base_admissible(const GroupLiftingStructure& g, const PolyphaseMatrix& b);
/// Scale allowed, every step admissible for its triangle, base admissible.
bool cascade_in_structure(const GroupLiftingStructure& g, const LiftingCascade& c);

struct OrderReport {
  bool increasing = false;
  std::vector<long> orders;  // order(E^(n)) for n = -1 .. N-1
};

/// Throws not_irreducible for reducible cascades.
OrderReport check_order_increasing(const LiftingCascade& c);

struct RadiiEntry {
  Update update = Update::lowpass;
  long t = 0;                  // support radius of the lifting filter
  long predicted[2] = {0, 0};  // r_0, r_1 from the radius recursion
  long measured[2] = {0, 0};   // supprad of the scalar filters of E^(n)
  bool centered[2] = {false, false};  // suppint(e_i) centered at -i
  long order = 0;              // polyphase order of E^(n)
};

struct RadiiReport {
  std::vector<RadiiEntry> steps;

  /// Prediction equals measurement and every support is centered at -i.
  bool matches() const;
};

/// Support radii along an irreducible WS cascade over I.
/// Throws not_admissible when the cascade is outside that setting.
RadiiReport ws_radii(const LiftingCascade& c);

enum class InvarianceResult { holds, violated, inapplicable };

const char* to_string(InvarianceResult r);

/// Samples admissible steps and scalings K and checks that gamma_K maps each
/// step matrix to an admissible step matrix of the same triangle.
InvarianceResult d_invariance_check(const GroupLiftingStructure& g, int trials = 256,
                                    std::uint64_t seed = 1);

}  // namespace lpfb
