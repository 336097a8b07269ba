#include "lpfb/laurent.hpp"

#include <cctype>
#include <sstream>

namespace lpfb {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::empty_support: return "EmptySupport";
    case ErrorKind::zero_evaluation_point: return "ZeroEvaluationPoint";
    case ErrorKind::zero_scale: return "ZeroScale";
    case ErrorKind::not_unimodular: return "NotUnimodular";
    case ErrorKind::not_irreducible: return "NotIrreducible";
    case ErrorKind::not_admissible: return "NotAdmissible";
    case ErrorKind::base_not_identity: return "BaseNotIdentity";
    case ErrorKind::not_ws_delay_minimized: return "NotWSDelayMinimized";
    case ErrorKind::not_hs_concentric: return "NotHSConcentric";
    case ErrorKind::factorization_stuck: return "FactorizationStuck";
    case ErrorKind::dc_zero: return "DCZero";
    case ErrorKind::not_dyadic: return "NotDyadic";
    case ErrorKind::not_reversible: return "NotReversible";
    case ErrorKind::non_integer_input: return "NonIntegerInput";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::duplicate_tap: return "DuplicateTap";
    case ErrorKind::zero_tap: return "ZeroTap";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Coefficient

Coefficient::Coefficient(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Coefficient: zero denominator");
  v_.canonicalize();
}

Coefficient::Coefficient(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

std::optional<Coefficient> Coefficient::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  const auto valid_int = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                          : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) return std::nullopt;
  if (num[0] == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  mpq_class q(n, d);
  q.canonicalize();
  return Coefficient(std::move(q));
}

bool Coefficient::is_dyadic() const {
  return mpz_popcount(v_.get_den_mpz_t()) == 1;
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw Error(ErrorKind::zero_scale, "inverse of zero");
  return Coefficient(mpq_class(1 / v_));
}

mpz_class Coefficient::round_half_up() const {
  mpq_class shifted = v_ + mpq_class(1, 2);
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return out;
}

std::string Coefficient::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  v_ += o.v_;
  return *this;
}
Coefficient& Coefficient::operator-=(const Coefficient& o) {
  v_ -= o.v_;
  return *this;
}
Coefficient& Coefficient::operator*=(const Coefficient& o) {
  v_ *= o.v_;
  return *this;
}
Coefficient& Coefficient::operator/=(const Coefficient& o) {
  if (o.is_zero()) throw std::domain_error("Coefficient: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Coefficient& c) { return os << c.str(); }

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
  return os << '[' << iv.lo << ", " << iv.hi << ']';
}

std::optional<Interval> hull(const std::optional<Interval>& a, const std::optional<Interval>& b) {
  if (!a) return b;
  if (!b) return a;
  return Interval{std::min(a->lo, b->lo), std::max(a->hi, b->hi)};
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const Coefficient& constant) {
  if (!constant.is_zero()) taps_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(TapMap taps) : taps_(std::move(taps)) {
  std::erase_if(taps_, [](const auto& kv) { return kv.second.is_zero(); });
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const Index, Coefficient>> taps)
    : LaurentPoly(TapMap(taps)) {}

LaurentPoly LaurentPoly::tap(Index n, const Coefficient& c) {
  LaurentPoly out;
  if (!c.is_zero()) out.taps_.emplace(n, c);
  return out;
}

LaurentPoly LaurentPoly::z_power(long k, const Coefficient& c) { return tap(-k, c); }

Coefficient LaurentPoly::operator[](Index n) const {
  const auto it = taps_.find(n);
  return it == taps_.end() ? Coefficient() : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [n, c] : out.taps_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [n, c] : o.taps_) {
    auto [it, inserted] = taps_.try_emplace(n, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) taps_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Coefficient& c) {
  if (c.is_zero()) {
    taps_.clear();
    return *this;
  }
  for (auto& [n, v] : taps_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly::TapMap acc;
  for (const auto& [i, x] : a.taps_) {
    for (const auto& [j, y] : b.taps_) acc[i + j] += x * y;
  }
  return LaurentPoly(std::move(acc));
}

LaurentPoly LaurentPoly::delayed(long k) const {
  LaurentPoly out;
  for (const auto& [n, c] : taps_) out.taps_.emplace_hint(out.taps_.end(), n + k, c);
  return out;
}

bool LaurentPoly::all_dyadic() const {
  for (const auto& [n, c] : taps_) {
    if (!c.is_dyadic()) return false;
  }
  return true;
}

bool LaurentPoly::all_integer() const {
  for (const auto& [n, c] : taps_) {
    if (!c.is_integer()) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [n, c] : f.taps()) {
    if (!first) os << ' ';
    os << c << "@" << n;
    first = false;
  }
  return os;
}

std::optional<Interval> suppint(const LaurentPoly& f) {
  if (f.is_zero()) return std::nullopt;
  return Interval{f.taps().begin()->first, f.taps().rbegin()->first};
}

namespace {
Interval require_support(const LaurentPoly& f, const char* op) {
  const auto s = suppint(f);
  if (!s) throw Error(ErrorKind::empty_support, std::string(op) + " of the zero polynomial");
  return *s;
}
}  // namespace

long order(const LaurentPoly& f) {
  const Interval s = require_support(f, "order");
  return s.hi - s.lo;
}

long supprad(const LaurentPoly& f) {
  const Interval s = require_support(f, "supprad");
  const long len = s.hi - s.lo + 1;
  return len / 2;  // len > 0, so truncation is floor
}

Coefficient evaluate(const LaurentPoly& f, const Coefficient& z0) {
  if (z0.is_zero()) throw Error(ErrorKind::zero_evaluation_point, "evaluate at z = 0");
  const mpq_class inv = 1 / z0.value();
  mpq_class sum = 0;
  for (const auto& [n, c] : f.taps()) {
    // z0^-n
    mpq_class p = 1;
    const mpq_class& base = n >= 0 ? inv : z0.value();
    for (long e = 0, m = n >= 0 ? n : -n; e < m; ++e) p *= base;
    sum += c.value() * p;
  }
  return Coefficient(std::move(sum));
}

LaurentPoly reflect(const LaurentPoly& f) {
  LaurentPoly::TapMap out;
  for (const auto& [n, c] : f.taps()) out.emplace(-n, c);
  return LaurentPoly(std::move(out));
}

const char* to_string(SymmetryKind kind) {
  switch (kind) {
    case SymmetryKind::ws: return "WS";
    case SymmetryKind::hs: return "HS";
    case SymmetryKind::wa: return "WA";
    case SymmetryKind::ha: return "HA";
    case SymmetryKind::none: return "NONE";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const SymmetryTag& tag) {
  os << to_string(tag.kind);
  if (tag.axis) os << " about " << *tag.axis;
  return os;
}

SymmetryTag classify_symmetry(const LaurentPoly& f) {
  const Interval s = require_support(f, "classify_symmetry");
  const long twice_axis = s.lo + s.hi;
  bool symmetric = true;
  bool antisymmetric = true;
  for (const auto& [n, c] : f.taps()) {
    const Coefficient mirror = f[twice_axis - n];
    if (mirror != c) symmetric = false;
    if (mirror != -c) antisymmetric = false;
    if (!symmetric && !antisymmetric) break;
  }
  const bool whole = twice_axis % 2 == 0;
  SymmetryTag tag;
  if (symmetric) {
    tag.kind = whole ? SymmetryKind::ws : SymmetryKind::hs;
  } else if (antisymmetric) {
    tag.kind = whole ? SymmetryKind::wa : SymmetryKind::ha;
  } else {
    return tag;
  }
  tag.axis = Coefficient(twice_axis, 2);
  return tag;
}

}  // namespace lpfb
