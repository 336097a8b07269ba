#pragma once

// Lifting steps, gain scaling, cascades D_K * S_{N-1} ... S_0 * B, and the
// reduced-word view of the lifting cascade group.

#include <optional>
#include <ostream>
#include <variant>
#include <vector>

#include "lpfb/polyphase.hpp"

namespace lpfb {

/// Update characteristic m: which polyphase channel a step updates.
/// lowpass (m = 0) is upper triangular, highpass (m = 1) is lower triangular.
enum class Update : int { lowpass = 0, highpass = 1 };

inline Update other(Update m) { return m == Update::lowpass ? Update::highpass : Update::lowpass; }
inline int channel(Update m) { return static_cast<int>(m); }

struct LiftingStep {
  Update update = Update::lowpass;
  LaurentPoly filter;

  bool trivial() const { return filter.is_zero(); }
  friend bool operator==(const LiftingStep&, const LiftingStep&) = default;
};

std::ostream& operator<<(std::ostream& os, const LiftingStep& s);

/// upsilon(S) = [[1, S], [0, 1]].
LiftingStep upper(LaurentPoly s);
/// lambda(S) = [[1, 0], [S, 1]].
LiftingStep lower(LaurentPoly s);

PolyphaseMatrix step_to_matrix(const LiftingStep& s);
LiftingStep inverse(const LiftingStep& s);
/// Recognizes a unit-diagonal triangular matrix; the identity maps to a
/// trivial lowpass step.
std::optional<LiftingStep> as_lifting_step(const PolyphaseMatrix& m);

/// D_K = diag(1/K, K), K != 0.
class GainScale {
 public:
  GainScale() = default;
  explicit GainScale(Coefficient k);

  const Coefficient& k() const { return k_; }
  PolyphaseMatrix matrix() const;
  GainScale inverse() const { return GainScale(k_.inverse()); }

  friend GainScale operator*(const GainScale& a, const GainScale& b) {
    return GainScale(a.k_ * b.k_);
  }
  friend bool operator==(const GainScale&, const GainScale&) = default;

 private:
  Coefficient k_ = 1;
};

struct LiftingCascade {
  GainScale scale;
  std::vector<LiftingStep> steps;  // application order: steps[0] acts first
  PolyphaseMatrix base = PolyphaseMatrix::identity();

  std::size_t size() const { return steps.size(); }
  friend bool operator==(const LiftingCascade&, const LiftingCascade&) = default;
};

std::ostream& operator<<(std::ostream& os, const LiftingCascade& c);

/// Nonzero filters whose update characteristics strictly alternate.
bool is_irreducible(const LiftingCascade& c);

/// D_K * S_{N-1} ... S_0 * B.
PolyphaseMatrix cascade_product(const LiftingCascade& c);
/// E^(-1) = B, E^(n) = S_n E^(n-1); returns all N + 1 partial products (no D_K).
std::vector<PolyphaseMatrix> intermediates(const LiftingCascade& c);

/// Drops trivial steps and merges neighbours with equal characteristic until
/// the step list strictly alternates. The product is unchanged.
LiftingCascade reduce_to_irreducible(LiftingCascade c);

/// gamma_K(M) = D_K M D_K^-1: [[a, K^-2 b], [K^2 c, d]].
PolyphaseMatrix gamma_conjugate(const GainScale& k, const PolyphaseMatrix& m);
LiftingStep gamma_conjugate(const GainScale& k, const LiftingStep& s);

/// Element of a word in the scaled lifting group.
using GroupElement = std::variant<GainScale, LiftingStep>;

/// Multiplies `word` (written in matrix order, left to right) onto `base` and
/// returns the D * C normal form: all scalings pushed to the left via
/// D_K A = gamma_K(A) D_K, then the steps reduced to irreducible form.
LiftingCascade normalize_semidirect(const std::vector<GroupElement>& word,
                                    const PolyphaseMatrix& base = PolyphaseMatrix::identity());
/// Re-normalizes an existing cascade.
LiftingCascade normalize_semidirect(const LiftingCascade& c);
/// The cascade written as a word: [D_K, S_{N-1}, ..., S_0].
std::vector<GroupElement> to_word(const LiftingCascade& c);

/// Inverse in the scaled lifting group. Throws base_not_identity unless B = I.
LiftingCascade invert_cascade(const LiftingCascade& c);

/// Reduced word over the upper and lower alphabets, written in matrix order:
/// letters[0] is the leftmost factor.
struct GroupWord {
  std::vector<LiftingStep> letters;

  bool empty() const { return letters.empty(); }
  friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

bool is_reduced(const GroupWord& w);
/// Group operation of the free product: concatenate, then cancel and merge
/// across the seam until the result is reduced.
GroupWord word_concat(const GroupWord& a, const GroupWord& b);
GroupWord word_inverse(const GroupWord& w);
PolyphaseMatrix word_matrix(const GroupWord& w);

/// Views between GroupWord and cascades with K = 1 and B = I.
GroupWord to_group_word(const LiftingCascade& c);
LiftingCascade from_group_word(const GroupWord& w);

}  // namespace lpfb
