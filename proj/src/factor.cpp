#include "lpfb/factor.hpp"

#include <vector>

namespace lpfb {

namespace {

[[noreturn]] void stuck(const std::string& why) {
  throw Error(ErrorKind::factorization_stuck, why);
}

// Solves A x = b exactly. Returns nullopt unless the system is consistent
// with full column rank.
std::optional<std::vector<Coefficient>> solve_exact(std::vector<std::vector<Coefficient>> a,
                                                    std::vector<Coefficient> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c, ++r) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) return std::nullopt;
    std::swap(a[pivot], a[r]);
    std::swap(b[pivot], b[r]);
    const Coefficient inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Coefficient f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }
  b.resize(cols);
  return b;
}

enum class PeelKind { ws, hs };

// Basis filters of the symmetric lifting-filter group whose members have
// support [p, q], outermost basis element first.
std::vector<LaurentPoly> filter_basis(PeelKind kind, Update m, long p, long q) {
  std::vector<LaurentPoly> basis;
  if (kind == PeelKind::hs) {
    if (p != -q || q < 1) return basis;
    for (long i = q; i >= 1; --i) basis.push_back(LaurentPoly{{i, 1}, {-i, -1}});
  } else if (m == Update::lowpass) {
    if (p + q != 1 || q < 1) return basis;
    for (long i = q; i >= 1; --i) basis.push_back(LaurentPoly{{i, 1}, {1 - i, 1}});
  } else {
    if (p + q != -1 || q < 0) return basis;
    for (long i = q; i >= 0; --i) basis.push_back(LaurentPoly{{i, 1}, {-1 - i, 1}});
  }
  return basis;
}

// Finds the symmetric filter S with row_m - S row_{1-m} supported inside the
// support of row_{1-m}, and returns the lifting step removed from the left.
LiftingStep peel_one(PolyphaseMatrix& rest, PeelKind kind) {
  const auto s0 = suppint(rest.rows[0]);
  const auto s1 = suppint(rest.rows[1]);
  if (!s0 || !s1) stuck("zero row");
  Update m;
  if (s0->properly_contains(*s1)) {
    m = Update::lowpass;
  } else if (s1->properly_contains(*s0)) {
    m = Update::highpass;
  } else {
    stuck("neither row support contains the other");
  }
  const int i = channel(m);
  const Interval big = i == 0 ? *s0 : *s1;
  const Interval small = i == 0 ? *s1 : *s0;
  const auto basis = filter_basis(kind, m, big.lo - small.lo, big.hi - small.hi);
  if (basis.empty()) stuck("support offsets do not fit the lifting filter group");

  const PolyphaseVector& target = rest.rows[i];
  const PolyphaseVector& partner = rest.rows[1 - i];
  std::vector<std::array<LaurentPoly, 2>> images;
  for (const auto& f : basis) images.push_back({f * partner[0], f * partner[1]});

  std::vector<std::vector<Coefficient>> a;
  std::vector<Coefficient> b;
  for (int j = 0; j < 2; ++j) {
    for (long n = big.lo; n <= big.hi; ++n) {
      if (small.lo <= n && n <= small.hi) continue;
      std::vector<Coefficient> row;
      for (const auto& img : images) row.push_back(img[j][n]);
      a.push_back(std::move(row));
      b.push_back(target[j][n]);
    }
  }
  const auto x = solve_exact(std::move(a), std::move(b));
  if (!x) stuck("no lifting filter cancels the outer taps");

  LaurentPoly s;
  for (std::size_t k = 0; k < basis.size(); ++k) s += basis[k] * (*x)[k];
  if (s.is_zero()) stuck("peeled a trivial step");
  rest.rows[i] = {{target[0] - s * partner[0], target[1] - s * partner[1]}};
  return {m, s};
}

void require_unimodular(const PolyphaseMatrix& h) {
  if (!det_info(h).unimodular()) throw Error(ErrorKind::not_unimodular, "det H is not 1");
}

}  // namespace

LiftingCascade factor_ws(const PolyphaseMatrix& h) {
  require_unimodular(h);
  if (classify_bank(h).kind != BankKind::ws_delay_minimized) {
    throw Error(ErrorKind::not_ws_delay_minimized, "H(z^-1) != Lambda(z) H(z) Lambda(z^-1)");
  }
  PolyphaseMatrix rest = h;
  std::vector<GroupElement> word;
  while (order(rest) > 0) word.emplace_back(peel_one(rest, PeelKind::ws));

  if (!rest(0, 1).is_zero() || !rest(1, 0).is_zero()) stuck("constant remainder is not diagonal");
  const GainScale k(rest(1, 1)[0]);
  if (rest != k.matrix()) stuck("constant remainder is not a gain scaling");
  word.emplace_back(k);

  LiftingCascade out = normalize_semidirect(word);
  if (cascade_product(out) != h) stuck("reconstruction mismatch");
  return out;
}

LiftingCascade normalize_dc(const LiftingCascade& c) {
  const Coefficient dc = evaluate(c.base.filter(0), 1);
  if (dc.is_zero()) throw Error(ErrorKind::dc_zero, "B0(1) = 0");
  // C B = C D_{1/a} (D_a B) = D_{1/a} gamma_a(C) (D_a B)
  const GainScale alpha(dc);
  LiftingCascade out;
  out.scale = c.scale * alpha.inverse();
  for (const auto& s : c.steps) out.steps.push_back(gamma_conjugate(alpha, s));
  out.base = alpha.matrix() * c.base;
  return out;
}

LiftingCascade factor_hs(const PolyphaseMatrix& h, bool dc) {
  require_unimodular(h);
  if (classify_bank(h).kind != BankKind::hs_concentric) {
    throw Error(ErrorKind::not_hs_concentric, "H(z^-1) != L H(z) J");
  }
  PolyphaseMatrix rest = h;
  std::vector<GroupElement> word;
  while (order(rest.filter(0)) != order(rest.filter(1))) {
    word.emplace_back(peel_one(rest, PeelKind::hs));
  }
  if (suppint(rest.rows[0]) != suppint(rest.rows[1])) stuck("base polyphase supports differ");

  LiftingCascade out = normalize_semidirect(word, rest);
  if (cascade_product(out) != h) stuck("reconstruction mismatch");
  return dc ? normalize_dc(out) : out;
}

std::pair<LaurentPoly, LaurentPoly> laurent_divide(const LaurentPoly& f, const LaurentPoly& g) {
  const auto sg = suppint(g);
  if (!sg) throw Error(ErrorKind::empty_support, "division by zero polynomial");
  const auto sf = suppint(f);
  if (!sf) return {LaurentPoly(), LaurentPoly()};
  const long dg = sg->hi - sg->lo;
  const Coefficient top = g[sg->hi];
  const Coefficient bottom = g[sg->lo];

  std::optional<std::pair<LaurentPoly, LaurentPoly>> best;
  auto better = [](const LaurentPoly& r, const LaurentPoly& old) {
    const auto a = suppint(r);
    const auto b = suppint(old);
    if (!a) return b.has_value();
    if (!b) return false;
    if (a->length() != b->length()) return a->length() < b->length();
    return a->hi < b->hi;
  };
  // Each window [w, w + dg - 1] admits exactly one remainder.
  for (long w = sf->lo - dg; w <= sf->hi + 1; ++w) {
    LaurentPoly q;
    LaurentPoly r = f;
    while (!r.is_zero() && r.taps().rbegin()->first > w + dg - 1) {
      const auto& [n, c] = *r.taps().rbegin();
      const LaurentPoly term = LaurentPoly::tap(n - sg->hi, c / top);
      q += term;
      r -= term * g;
    }
    while (!r.is_zero() && r.taps().begin()->first < w) {
      const auto& [n, c] = *r.taps().begin();
      const LaurentPoly term = LaurentPoly::tap(n - sg->lo, c / bottom);
      q += term;
      r -= term * g;
    }
    if (!best || better(r, best->second)) best = std::make_pair(std::move(q), std::move(r));
  }
  return *best;
}

namespace {

long width(const LaurentPoly& f) { return order(f); }

// Right-multiplies by a column operation and records it.
void apply_column_op(PolyphaseMatrix& m, std::vector<LiftingStep>& ops, const LiftingStep& s) {
  if (s.trivial()) return;
  m = m * step_to_matrix(s);
  ops.push_back(s);
}

// Euclid on one row (x, y) = (m(r, 0), m(r, 1)) until the entry in column
// `zero_col` vanishes. Upper steps change column 1, lower steps column 0.
void euclid_row(PolyphaseMatrix& m, std::vector<LiftingStep>& ops, int r, int zero_col) {
  while (!m(r, zero_col).is_zero()) {
    const int keep_col = 1 - zero_col;
    const LaurentPoly& target = m(r, zero_col);
    const LaurentPoly& other = m(r, keep_col);
    auto reduce = [&](int col) {
      // column col <- column col - q * column (1 - col)
      const auto [q, rem] = laurent_divide(m(r, col), m(r, 1 - col));
      apply_column_op(m, ops, col == 1 ? upper(-q) : lower(-q));
    };
    if (other.is_zero()) {
      // target is a unit: make the other entry 1 first
      const LaurentPoly inv = LaurentPoly::tap(-target.taps().begin()->first,
                                               target.taps().begin()->second.inverse());
      apply_column_op(m, ops, keep_col == 1 ? upper(inv) : lower(inv));
    } else if (width(target) >= width(other)) {
      reduce(zero_col);
    } else {
      reduce(keep_col);
    }
  }
}

LaurentPoly monomial_inverse(const LaurentPoly& x) {
  if (x.tap_count() != 1) stuck("diagonal entry is not a monomial");
  const auto& [n, c] = *x.taps().begin();
  return LaurentPoly::tap(-n, c.inverse());
}

}  // namespace

LiftingCascade factor_euclidean(const PolyphaseMatrix& h, PivotPolicy policy) {
  require_unimodular(h);
  PolyphaseMatrix m = h;
  std::vector<LiftingStep> ops;  // H * ops[0] * ops[1] ... = diagonal
  if (policy == PivotPolicy::upper_right) {
    euclid_row(m, ops, 0, 1);
    apply_column_op(m, ops, lower(-(m(1, 0) * monomial_inverse(m(1, 1)))));
  } else {
    euclid_row(m, ops, 1, 0);
    apply_column_op(m, ops, upper(-(m(0, 1) * monomial_inverse(m(0, 0)))));
  }
  if (!m(0, 1).is_zero() || !m(1, 0).is_zero()) stuck("Euclid left an off-diagonal entry");

  // diag(u z^j, 1/(u z^j)) = D_{1/u} diag(z^j, z^-j), and
  // diag(y, 1/y) = upsilon(y) lambda(-1/y) upsilon(y) upsilon(-1) lambda(1) upsilon(-1).
  const LaurentPoly& x = m(0, 0);
  if (x.tap_count() != 1) stuck("diagonal entry is not a monomial");
  const auto& [n, u] = *x.taps().begin();
  std::vector<GroupElement> word;
  word.emplace_back(GainScale(u.inverse()));
  if (n != 0) {
    const LaurentPoly y = LaurentPoly::tap(n, 1);
    const LaurentPoly y_inv = LaurentPoly::tap(-n, 1);
    for (const auto& s : {upper(y), lower(-y_inv), upper(y), upper(-1), lower(1), upper(-1)}) {
      word.emplace_back(s);
    }
  }
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) word.emplace_back(inverse(*it));

  LiftingCascade out = normalize_semidirect(word);
  if (cascade_product(out) != h) stuck("reconstruction mismatch");
  return out;
}

std::optional<RescalingWitness> equivalent_mod_rescaling(const LiftingCascade& c1,
                                                         const LiftingCascade& c2) {
  if (!is_irreducible(c1) || !is_irreducible(c2)) {
    throw Error(ErrorKind::not_irreducible, "rescaling comparison needs irreducible cascades");
  }
  const GainScale alpha(c1.scale.k() / c2.scale.k());
  if (c1.size() != c2.size()) return std::nullopt;
  if (c2.base != alpha.matrix() * c1.base) return std::nullopt;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    if (c2.steps[i] != gamma_conjugate(alpha, c1.steps[i])) return std::nullopt;
  }
  return RescalingWitness{alpha.k()};
}

}  // namespace lpfb
