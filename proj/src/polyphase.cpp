#include "lpfb/polyphase.hpp"

#include <algorithm>
#include <cstdlib>

namespace lpfb {

namespace {

long floor_div2(long k) { return k >= 0 ? k / 2 : -((-k + 1) / 2); }

}  // namespace

std::optional<Interval> suppint(const PolyphaseVector& v) {
  return hull(suppint(v[0]), suppint(v[1]));
}

long order(const PolyphaseVector& v) {
  const auto s = suppint(v);
  if (!s) throw Error(ErrorKind::empty_support, "order of the zero polyphase vector");
  return s->hi - s->lo;
}

PolyphaseVector analyze_filter(const LaurentPoly& f) {
  LaurentPoly::TapMap even, odd;
  for (const auto& [k, c] : f.taps()) {
    if (k % 2 == 0) {
      even.emplace(k / 2, c);
    } else {
      odd.emplace((k + 1) / 2, c);  // f_1(n) = f(2n - 1)
    }
  }
  return {{LaurentPoly(std::move(even)), LaurentPoly(std::move(odd))}};
}

LaurentPoly synthesize_filter(const PolyphaseVector& v) {
  LaurentPoly::TapMap out;
  for (const auto& [n, c] : v[0].taps()) out.emplace(2 * n, c);
  for (const auto& [n, c] : v[1].taps()) out.emplace(2 * n - 1, c);
  return LaurentPoly(std::move(out));
}

SignalPair split_signal(const Signal& x) {
  LaurentPoly::TapMap even, odd;
  for (const auto& [k, c] : x.taps()) {
    const long n = floor_div2(k);
    (k - 2 * n == 0 ? even : odd).emplace(n, c);
  }
  return {{LaurentPoly(std::move(even)), LaurentPoly(std::move(odd))}};
}

Signal merge_signal(const SignalPair& parts) {
  LaurentPoly::TapMap out;
  for (const auto& [n, c] : parts[0].taps()) out.emplace(2 * n, c);
  for (const auto& [n, c] : parts[1].taps()) out.emplace(2 * n + 1, c);
  return LaurentPoly(std::move(out));
}

// ---------------------------------------------------------------------------

PolyphaseMatrix::PolyphaseMatrix(LaurentPoly a, LaurentPoly b, LaurentPoly c, LaurentPoly d)
    : rows{PolyphaseVector{{std::move(a), std::move(b)}},
           PolyphaseVector{{std::move(c), std::move(d)}}} {}

PolyphaseMatrix PolyphaseMatrix::from_rows(PolyphaseVector lowpass, PolyphaseVector highpass) {
  PolyphaseMatrix m;
  m.rows = {std::move(lowpass), std::move(highpass)};
  return m;
}

PolyphaseMatrix PolyphaseMatrix::from_filters(const LaurentPoly& h0, const LaurentPoly& h1) {
  return from_rows(analyze_filter(h0), analyze_filter(h1));
}

PolyphaseMatrix PolyphaseMatrix::identity() { return PolyphaseMatrix(1, 0, 0, 1); }

PolyphaseMatrix PolyphaseMatrix::diagonal(LaurentPoly a, LaurentPoly d) {
  return PolyphaseMatrix(std::move(a), 0, 0, std::move(d));
}

std::ostream& operator<<(std::ostream& os, const PolyphaseMatrix& m) {
  return os << "[[" << m(0, 0) << ", " << m(0, 1) << "], [" << m(1, 0) << ", " << m(1, 1)
            << "]]";
}

PolyphaseMatrix operator*(const PolyphaseMatrix& a, const PolyphaseMatrix& b) {
  PolyphaseMatrix out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  }
  return out;
}

PolyphaseMatrix operator+(const PolyphaseMatrix& a, const PolyphaseMatrix& b) {
  PolyphaseMatrix out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out(i, j) = a(i, j) + b(i, j);
  }
  return out;
}

PolyphaseMatrix operator*(const Coefficient& c, const PolyphaseMatrix& m) {
  PolyphaseMatrix out = m;
  for (auto& row : out.rows) {
    for (auto& e : row.comp) e *= c;
  }
  return out;
}

PolyphaseVector operator*(const PolyphaseMatrix& m, const PolyphaseVector& v) {
  return {{m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]}};
}

PolyphaseMatrix transpose(const PolyphaseMatrix& m) {
  return PolyphaseMatrix(m(0, 0), m(1, 0), m(0, 1), m(1, 1));
}

PolyphaseMatrix reflect(const PolyphaseMatrix& m) {
  return PolyphaseMatrix(reflect(m(0, 0)), reflect(m(0, 1)), reflect(m(1, 0)),
                         reflect(m(1, 1)));
}

PolyphaseMatrix lambda_matrix() { return PolyphaseMatrix::diagonal(1, LaurentPoly::tap(1, 1)); }

PolyphaseMatrix j_matrix() { return PolyphaseMatrix(0, 1, 1, 0); }

PolyphaseMatrix l_matrix() { return PolyphaseMatrix::diagonal(1, -1); }

LaurentPoly det(const PolyphaseMatrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

PolyphaseMatrix haar_bank() {
  return PolyphaseMatrix::from_filters({{-1, Coefficient(1, 2)}, {0, Coefficient(1, 2)}},
                                       {{-1, 1}, {0, -1}});
}

PolyphaseMatrix legall53_bank() {
  return PolyphaseMatrix::from_filters({{-2, Coefficient(-1, 8)},
                                        {-1, Coefficient(1, 4)},
                                        {0, Coefficient(3, 4)},
                                        {1, Coefficient(1, 4)},
                                        {2, Coefficient(-1, 8)}},
                                       {{-2, Coefficient(-1, 2)}, {-1, 1}, {0, Coefficient(-1, 2)}});
}

std::optional<Interval> suppint(const PolyphaseMatrix& m) {
  return hull(suppint(m.rows[0]), suppint(m.rows[1]));
}

long order(const PolyphaseMatrix& m) {
  const auto s = suppint(m);
  if (!s) throw Error(ErrorKind::empty_support, "order of the zero matrix");
  return s->hi - s->lo;
}

DetInfo det_info(const PolyphaseMatrix& m) {
  const LaurentPoly d = det(m);
  DetInfo info;
  if (d.tap_count() == 1) {
    info.monomial = true;
    info.delay = d.taps().begin()->first;
    info.amplitude = d.taps().begin()->second;
  }
  return info;
}

PolyphaseMatrix unimodular_inverse(const PolyphaseMatrix& m) {
  if (!det_info(m).unimodular()) {
    throw Error(ErrorKind::not_unimodular, "matrix determinant is not 1");
  }
  return PolyphaseMatrix(m(1, 1), -m(0, 1), -m(1, 0), m(0, 0));
}

const char* to_string(BankKind kind) {
  switch (kind) {
    case BankKind::ws_delay_minimized: return "WS_DELAY_MINIMIZED";
    case BankKind::ws_general: return "WS_GENERAL";
    case BankKind::hs_concentric: return "HS_CONCENTRIC";
    case BankKind::other_pr: return "OTHER_PR";
    case BankKind::non_pr: return "NON_PR";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const BankClass& c) {
  os << to_string(c.kind);
  if (c.kind == BankKind::ws_general) os << "(" << c.d0 << ", " << c.d1 << ")";
  if (c.kind == BankKind::hs_concentric) os << (c.equal_length_base ? " equal-length" : "");
  return os;
}

bool satisfies_ws_intertwining(const PolyphaseMatrix& h) {
  return reflect(h) == lambda_matrix() * h * reflect(lambda_matrix());
}

bool satisfies_ws_delays(const PolyphaseMatrix& h, long d0, long d1) {
  const PolyphaseMatrix delays =
      PolyphaseMatrix::diagonal(LaurentPoly::z_power(d0), LaurentPoly::z_power(d1));
  return reflect(h) == delays * h * reflect(lambda_matrix());
}

bool satisfies_hs_mirror(const PolyphaseMatrix& h) {
  return reflect(h) == l_matrix() * h * j_matrix();
}

namespace {

// Each row of the group-delay relation pins its own delay; search the finite
// window the matrix support allows.
std::optional<long> row_delay(const PolyphaseMatrix& h, int row, long radius) {
  const PolyphaseVector& v = h.rows[row];
  const PolyphaseVector lhs{{reflect(v[0]), reflect(v[1])}};
  for (long d = -radius; d <= radius; ++d) {
    const PolyphaseVector rhs{{v[0].delayed(-d), v[1].delayed(-d - 1)}};
    if (lhs == rhs) return d;
  }
  return std::nullopt;
}

}  // namespace

BankClass classify_bank(const PolyphaseMatrix& h) {
  BankClass out;
  if (!det_info(h).monomial) return out;

  if (satisfies_ws_intertwining(h)) {
    out.kind = BankKind::ws_delay_minimized;
    out.d0 = 0;
    out.d1 = -1;
    return out;
  }

  const auto s = suppint(h);  // nonzero: det is a monomial
  const long radius = 2 * std::max(std::labs(s->lo), std::labs(s->hi)) + 4;
  const auto d0 = row_delay(h, 0, radius);
  const auto d1 = d0 ? row_delay(h, 1, radius) : std::nullopt;
  if (d0 && d1 && satisfies_ws_delays(h, *d0, *d1)) {
    out.kind = BankKind::ws_general;
    out.d0 = *d0;
    out.d1 = *d1;
    return out;
  }

  if (satisfies_hs_mirror(h)) {
    out.kind = BankKind::hs_concentric;
    out.equal_length_base = order(h.filter(0)) == order(h.filter(1));
    return out;
  }

  out.kind = BankKind::other_pr;
  return out;
}

}  // namespace lpfb
