#pragma once

// Polyphase-with-advance vectors and 2x2 matrices over the Laurent polynomials.
//
// A scalar filter F(z) splits as F(z) = F0(z^2) + z F1(z^2), f_j(n) = f(2n - j).
// A signal splits as X(z) = X0(z^2) + z^-1 X1(z^2), x_i(n) = x(2n + i).
// Row 0 of a polyphase matrix is the lowpass analysis filter, row 1 the highpass.

#include <array>
#include <optional>
#include <ostream>

#include "lpfb/laurent.hpp"

namespace lpfb {

struct PolyphaseVector {
  std::array<LaurentPoly, 2> comp;

  const LaurentPoly& operator[](int j) const { return comp[j]; }
  LaurentPoly& operator[](int j) { return comp[j]; }
  bool is_zero() const { return comp[0].is_zero() && comp[1].is_zero(); }

  friend bool operator==(const PolyphaseVector&, const PolyphaseVector&) = default;
};

/// A discrete-time signal x(k) with X(z) = sum_k x(k) z^-k.
using Signal = LaurentPoly;
/// Even/odd subsequences (x0, x1), or the two subband outputs (y0, y1).
using SignalPair = PolyphaseVector;

/// Union of the component supports; nullopt when both are zero.
std::optional<Interval> suppint(const PolyphaseVector& v);
/// Polyphase order d - c. Throws empty_support on zero.
long order(const PolyphaseVector& v);

PolyphaseVector analyze_filter(const LaurentPoly& f);
LaurentPoly synthesize_filter(const PolyphaseVector& v);

SignalPair split_signal(const Signal& x);
Signal merge_signal(const SignalPair& parts);

class PolyphaseMatrix {
 public:
  std::array<PolyphaseVector, 2> rows;

  PolyphaseMatrix() = default;
  PolyphaseMatrix(LaurentPoly a, LaurentPoly b, LaurentPoly c, LaurentPoly d);
  static PolyphaseMatrix from_rows(PolyphaseVector lowpass, PolyphaseVector highpass);
  /// Builds the polyphase matrix of the scalar pair {H0, H1}.
  static PolyphaseMatrix from_filters(const LaurentPoly& h0, const LaurentPoly& h1);

  static PolyphaseMatrix identity();
  static PolyphaseMatrix diagonal(LaurentPoly a, LaurentPoly d);

  const LaurentPoly& operator()(int i, int j) const { return rows[i][j]; }
  LaurentPoly& operator()(int i, int j) { return rows[i][j]; }

  /// Scalar analysis filter H_i(z) of row i.
  LaurentPoly filter(int i) const { return synthesize_filter(rows[i]); }

  friend bool operator==(const PolyphaseMatrix&, const PolyphaseMatrix&) = default;
};

std::ostream& operator<<(std::ostream& os, const PolyphaseMatrix& m);

PolyphaseMatrix operator*(const PolyphaseMatrix& a, const PolyphaseMatrix& b);
PolyphaseMatrix operator+(const PolyphaseMatrix& a, const PolyphaseMatrix& b);
PolyphaseMatrix operator*(const Coefficient& c, const PolyphaseMatrix& m);
PolyphaseVector operator*(const PolyphaseMatrix& m, const PolyphaseVector& v);
PolyphaseMatrix transpose(const PolyphaseMatrix& m);
/// Entrywise z -> z^-1.
PolyphaseMatrix reflect(const PolyphaseMatrix& m);

/// Lambda(z) = diag(1, z^-1).
PolyphaseMatrix lambda_matrix();
/// Antidiagonal exchange matrix.
PolyphaseMatrix j_matrix();
/// diag(1, -1).
PolyphaseMatrix l_matrix();

LaurentPoly det(const PolyphaseMatrix& m);

/// H0 = (z + 1)/2, H1 = z - 1.
PolyphaseMatrix haar_bank();
/// LeGall 5/3: H0 taps -1/8 1/4 3/4 1/4 -1/8 on [-2, 2], H1 taps -1/2 1 -1/2 on [-2, 0].
PolyphaseMatrix legall53_bank();

/// Matrix support interval: union of all entry supports.
std::optional<Interval> suppint(const PolyphaseMatrix& m);
/// Polyphase order of the matrix. Throws empty_support on the zero matrix.
long order(const PolyphaseMatrix& m);

struct DetInfo {
  Coefficient amplitude;  // det = amplitude * z^-delay when monomial
  long delay = 0;
  bool monomial = false;

  bool unimodular() const { return monomial && amplitude == 1 && delay == 0; }
};

DetInfo det_info(const PolyphaseMatrix& m);

/// Adjugate inverse. Throws not_unimodular unless det == 1.
PolyphaseMatrix unimodular_inverse(const PolyphaseMatrix& m);

enum class BankKind { ws_delay_minimized, ws_general, hs_concentric, other_pr, non_pr };

const char* to_string(BankKind kind);

struct BankClass {
  BankKind kind = BankKind::non_pr;
  long d0 = 0;  // group delays, meaningful for ws_general
  long d1 = 0;
  bool equal_length_base = false;

  friend bool operator==(const BankClass&, const BankClass&) = default;
};

std::ostream& operator<<(std::ostream& os, const BankClass& c);

/// True when H(z^-1) = Lambda(z) H(z) Lambda(z^-1).
bool satisfies_ws_intertwining(const PolyphaseMatrix& h);
/// True when H(z^-1) = diag(z^d0, z^d1) H(z) Lambda(z^-1).
bool satisfies_ws_delays(const PolyphaseMatrix& h, long d0, long d1);
/// True when H(z^-1) = L H(z) J.
bool satisfies_hs_mirror(const PolyphaseMatrix& h);

/// Most specific class. Banks whose determinant is not a nonzero monomial are
/// always non_pr.
BankClass classify_bank(const PolyphaseMatrix& h);

}  // namespace lpfb
