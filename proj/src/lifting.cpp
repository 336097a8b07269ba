#include "lpfb/lifting.hpp"

#include <algorithm>

namespace lpfb {

std::ostream& operator<<(std::ostream& os, const LiftingStep& s) {
  return os << (s.update == Update::lowpass ? "U(" : "L(") << s.filter << ")";
}

LiftingStep upper(LaurentPoly s) { return {Update::lowpass, std::move(s)}; }
LiftingStep lower(LaurentPoly s) { return {Update::highpass, std::move(s)}; }

PolyphaseMatrix step_to_matrix(const LiftingStep& s) {
  PolyphaseMatrix m = PolyphaseMatrix::identity();
  if (s.update == Update::lowpass) {
    m(0, 1) = s.filter;
  } else {
    m(1, 0) = s.filter;
  }
  return m;
}

LiftingStep inverse(const LiftingStep& s) { return {s.update, -s.filter}; }

std::optional<LiftingStep> as_lifting_step(const PolyphaseMatrix& m) {
  if (m(0, 0) != 1 || m(1, 1) != 1) return std::nullopt;
  if (m(1, 0).is_zero()) return upper(m(0, 1));
  if (m(0, 1).is_zero()) return lower(m(1, 0));
  return std::nullopt;
}

GainScale::GainScale(Coefficient k) : k_(std::move(k)) {
  if (k_.is_zero()) throw Error(ErrorKind::zero_scale, "gain scaling factor K must be nonzero");
}

PolyphaseMatrix GainScale::matrix() const { return PolyphaseMatrix::diagonal(k_.inverse(), k_); }

std::ostream& operator<<(std::ostream& os, const LiftingCascade& c) {
  os << "D(" << c.scale.k() << ")";
  for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) os << " " << *it;
  if (c.base != PolyphaseMatrix::identity()) os << " B" << c.base;
  return os;
}

bool is_irreducible(const LiftingCascade& c) {
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    if (c.steps[i].trivial()) return false;
    if (i > 0 && c.steps[i].update == c.steps[i - 1].update) return false;
  }
  return true;
}

PolyphaseMatrix cascade_product(const LiftingCascade& c) {
  PolyphaseMatrix e = c.base;
  for (const auto& s : c.steps) e = step_to_matrix(s) * e;
  return c.scale.matrix() * e;
}

std::vector<PolyphaseMatrix> intermediates(const LiftingCascade& c) {
  std::vector<PolyphaseMatrix> out;
  out.reserve(c.steps.size() + 1);
  out.push_back(c.base);
  for (const auto& s : c.steps) out.push_back(step_to_matrix(s) * out.back());
  return out;
}

namespace {

// Appends a letter to an alternating list, merging with the last letter when
// both share a triangle (upsilon(S) upsilon(T) = upsilon(S + T)).
void push_merged(std::vector<LiftingStep>& list, const LiftingStep& s) {
  if (s.trivial()) return;
  if (!list.empty() && list.back().update == s.update) {
    list.back().filter += s.filter;
    if (list.back().trivial()) list.pop_back();
    return;
  }
  list.push_back(s);
}

}  // namespace

LiftingCascade reduce_to_irreducible(LiftingCascade c) {
  std::vector<LiftingStep> reduced;
  reduced.reserve(c.steps.size());
  for (const auto& s : c.steps) push_merged(reduced, s);
  c.steps = std::move(reduced);
  return c;
}

PolyphaseMatrix gamma_conjugate(const GainScale& k, const PolyphaseMatrix& m) {
  const Coefficient k2 = k.k() * k.k();
  PolyphaseMatrix out = m;
  out(0, 1) *= k2.inverse();
  out(1, 0) *= k2;
  return out;
}

LiftingStep gamma_conjugate(const GainScale& k, const LiftingStep& s) {
  const Coefficient k2 = k.k() * k.k();
  return {s.update, s.filter * (s.update == Update::lowpass ? k2.inverse() : k2)};
}

LiftingCascade normalize_semidirect(const std::vector<GroupElement>& word,
                                    const PolyphaseMatrix& base) {
  GainScale scale;
  std::vector<LiftingStep> matrix_order;  // factors to the right of D_K
  for (const auto& element : word) {
    if (const auto* d = std::get_if<GainScale>(&element)) {
      // D_K A_1 ... A_j D_J = D_{KJ} gamma_{1/J}(A_1) ... gamma_{1/J}(A_j)
      const GainScale inv = d->inverse();
      for (auto& s : matrix_order) s = gamma_conjugate(inv, s);
      scale = scale * *d;
    } else {
      matrix_order.push_back(std::get<LiftingStep>(element));
    }
  }
  LiftingCascade out;
  out.scale = scale;
  out.steps.assign(matrix_order.rbegin(), matrix_order.rend());
  out.base = base;
  return reduce_to_irreducible(std::move(out));
}

std::vector<GroupElement> to_word(const LiftingCascade& c) {
  std::vector<GroupElement> word;
  word.reserve(c.steps.size() + 1);
  word.emplace_back(c.scale);
  for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) word.emplace_back(*it);
  return word;
}

LiftingCascade normalize_semidirect(const LiftingCascade& c) {
  return normalize_semidirect(to_word(c), c.base);
}

LiftingCascade invert_cascade(const LiftingCascade& c) {
  if (c.base != PolyphaseMatrix::identity()) {
    throw Error(ErrorKind::base_not_identity, "only fully factored cascades can be inverted");
  }
  // (D_K S_{N-1} ... S_0)^-1 = D_{1/K} gamma_K(S_0^-1) ... gamma_K(S_{N-1}^-1)
  LiftingCascade out;
  out.scale = c.scale.inverse();
  out.steps.reserve(c.steps.size());
  for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) {
    out.steps.push_back(gamma_conjugate(c.scale, inverse(*it)));
  }
  return out;
}

bool is_reduced(const GroupWord& w) {
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (w.letters[i].trivial()) return false;
    if (i > 0 && w.letters[i].update == w.letters[i - 1].update) return false;
  }
  return true;
}

GroupWord word_concat(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  for (const auto& letter : b.letters) push_merged(out.letters, letter);
  return out;
}

GroupWord word_inverse(const GroupWord& w) {
  GroupWord out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(inverse(*it));
  }
  return out;
}

PolyphaseMatrix word_matrix(const GroupWord& w) {
  PolyphaseMatrix m = PolyphaseMatrix::identity();
  for (const auto& letter : w.letters) m = m * step_to_matrix(letter);
  return m;
}

GroupWord to_group_word(const LiftingCascade& c) {
  if (c.base != PolyphaseMatrix::identity()) {
    throw Error(ErrorKind::base_not_identity, "word view needs base I");
  }
  if (c.scale.k() != 1) throw Error(ErrorKind::not_admissible, "word view needs K = 1");
  GroupWord w;
  w.letters.assign(c.steps.rbegin(), c.steps.rend());
  return w;
}

LiftingCascade from_group_word(const GroupWord& w) {
  LiftingCascade c;
  c.steps.assign(w.letters.rbegin(), w.letters.rend());
  return c;
}

}  // namespace lpfb
