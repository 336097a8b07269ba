#pragma once

// Exact rational coefficients and Laurent polynomials F(z) = sum_n f(n) z^-n.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "lpfb/error.hpp"

namespace lpfb {

/// Arbitrary-precision rational, always held in lowest terms with a positive
/// denominator.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Coefficient(long num, long den);
  explicit Coefficient(mpq_class value);

  /// Accepts "p" or "p/q" with an optional leading sign on p.
  static std::optional<Coefficient> parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  /// True when the denominator is a power of two (2^0 included).
  bool is_dyadic() const;

  Coefficient inverse() const;
  /// floor(v + 1/2)
  mpz_class round_half_up() const;

  /// Canonical text: "p" for integers, otherwise "p/q".
  std::string str() const;

  Coefficient operator-() const { return Coefficient(mpq_class(-v_)); }
  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  Coefficient& operator/=(const Coefficient& o);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }

  friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Coefficient& a, const Coefficient& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Coefficient& c);

/// Closed integer interval [lo, hi].
struct Interval {
  long lo = 0;
  long hi = 0;

  long length() const { return hi - lo + 1; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool properly_contains(const Interval& o) const { return contains(o) && *this != o; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

std::ostream& operator<<(std::ostream& os, const Interval& iv);

/// Smallest interval containing both (either may be absent).
std::optional<Interval> hull(const std::optional<Interval>& a, const std::optional<Interval>& b);

/// Finitely supported map n -> f(n), representing F(z) = sum_n f(n) z^-n.
/// Zero taps are never stored; the zero polynomial is the empty map.
class LaurentPoly {
 public:
  using Index = long;
  using TapMap = std::map<Index, Coefficient>;

  LaurentPoly() = default;
  LaurentPoly(const Coefficient& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long constant) : LaurentPoly(Coefficient(constant)) {}  // NOLINT
  explicit LaurentPoly(TapMap taps);
  LaurentPoly(std::initializer_list<std::pair<const Index, Coefficient>> taps);

  /// c * z^-n, i.e. a single tap at index n.
  static LaurentPoly tap(Index n, const Coefficient& c);
  /// c * z^k (a single tap at index -k).
  static LaurentPoly z_power(long k, const Coefficient& c = 1);

  const TapMap& taps() const { return taps_; }
  Coefficient operator[](Index n) const;
  bool is_zero() const { return taps_.empty(); }
  std::size_t tap_count() const { return taps_.size(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Coefficient& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Coefficient& c) { return a *= c; }
  friend LaurentPoly operator*(const Coefficient& c, LaurentPoly a) { return a *= c; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Multiplies by z^-k: every tap index moves by +k.
  LaurentPoly delayed(long k) const;

  bool all_dyadic() const;
  bool all_integer() const;

 private:
  TapMap taps_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

/// [a, b] with f(a) != 0 and f(b) != 0; nullopt for the zero polynomial.
std::optional<Interval> suppint(const LaurentPoly& f);
/// b - a. Throws empty_support on zero.
long order(const LaurentPoly& f);
/// floor((b - a + 1) / 2). Throws empty_support on zero.
long supprad(const LaurentPoly& f);
/// sum_n f(n) z0^-n. Throws zero_evaluation_point for z0 == 0.
Coefficient evaluate(const LaurentPoly& f, const Coefficient& z0);
/// F(z) -> F(z^-1).
LaurentPoly reflect(const LaurentPoly& f);

enum class SymmetryKind { ws, hs, wa, ha, none };

const char* to_string(SymmetryKind kind);

struct SymmetryTag {
  SymmetryKind kind = SymmetryKind::none;
  std::optional<Coefficient> axis;  // present iff kind != none

  friend bool operator==(const SymmetryTag&, const SymmetryTag&) = default;
};

std::ostream& operator<<(std::ostream& os, const SymmetryTag& tag);

/// Linear-phase classification about the support midpoint (a + b) / 2.
/// Throws empty_support on zero.
SymmetryTag classify_symmetry(const LaurentPoly& f);

}  // namespace lpfb
