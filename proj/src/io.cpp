#include "lpfb/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace lpfb {

namespace {

struct Token {
  std::string_view text;
  int column = 0;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const Token& at, const std::string& why,
                       ErrorKind kind = ErrorKind::parse_error) {
  throw ParseError(kind, line.number, at.column, why);
}

[[noreturn]] void fail_end(const std::vector<Line>& lines, const std::string& why) {
  const int n = lines.empty() ? 1 : lines.back().number;
  throw ParseError(ErrorKind::parse_error, n, 1, why);
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) {
    const Token& at = line.tokens.size() > n ? line.tokens[n] : line.tokens.back();
    fail(line, at, "expected " + std::to_string(n - 1) + " argument(s)");
  }
}

Coefficient parse_coefficient(const Line& line, const Token& tok) {
  const auto c = Coefficient::parse(tok.text);
  if (!c) fail(line, tok, "malformed rational '" + std::string(tok.text) + "'");
  return *c;
}

long parse_index(const Line& line, const Token& tok) {
  long n = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last) fail(line, tok, "malformed tap index");
  return n;
}

// Reads tap lines starting at `i` into `taps`; stops at the first other line.
void read_taps(const std::vector<Line>& lines, std::size_t& i, LaurentPoly::TapMap& taps) {
  for (; i < lines.size() && lines[i].tokens[0].text == "tap"; ++i) {
    const Line& line = lines[i];
    expect_arity(line, 3);
    const long n = parse_index(line, line.tokens[1]);
    const Coefficient c = parse_coefficient(line, line.tokens[2]);
    if (c.is_zero()) fail(line, line.tokens[2], "zero tap is not canonical", ErrorKind::zero_tap);
    if (!taps.emplace(n, c).second) {
      fail(line, line.tokens[1], "duplicate tap index " + std::to_string(n),
           ErrorKind::duplicate_tap);
    }
  }
}

BankFile read_bank(const std::vector<Line>& lines, std::size_t& i) {
  BankFile out;
  if (i < lines.size() && lines[i].tokens[0].text == "bank") {
    expect_arity(lines[i], 2);
    out.name = std::string(lines[i].tokens[1].text);
    ++i;
  }
  LaurentPoly::TapMap h[2];
  for (int k = 0; k < 2; ++k) {
    const std::string header = k == 0 ? "h0:" : "h1:";
    if (i >= lines.size()) fail_end(lines, "missing section " + header);
    if (lines[i].tokens[0].text != header) {
      fail(lines[i], lines[i].tokens[0], "expected '" + header + "'");
    }
    expect_arity(lines[i], 1);
    ++i;
    read_taps(lines, i, h[k]);
  }
  out.bank = PolyphaseMatrix::from_filters(LaurentPoly(std::move(h[0])), LaurentPoly(std::move(h[1])));
  return out;
}

void write_taps(std::ostream& os, const LaurentPoly& f) {
  for (const auto& [n, c] : f.taps()) os << "tap " << n << " " << c.str() << "\n";
}

}  // namespace

BankFile parse_bank(std::string_view text) {
  const auto lines = tokenize(text);
  std::size_t i = 0;
  BankFile out = read_bank(lines, i);
  if (i < lines.size()) fail(lines[i], lines[i].tokens[0], "unexpected content after bank");
  return out;
}

std::string print_bank(const PolyphaseMatrix& h, const std::string& name) {
  std::ostringstream os;
  if (!name.empty()) os << "bank " << name << "\n";
  os << "h0:\n";
  write_taps(os, h.filter(0));
  os << "h1:\n";
  write_taps(os, h.filter(1));
  return os.str();
}

LiftingCascade parse_cascade(std::string_view text) {
  const auto lines = tokenize(text);
  LiftingCascade c;
  std::size_t i = 0;
  if (i < lines.size() && lines[i].tokens[0].text == "scale") {
    expect_arity(lines[i], 2);
    const Coefficient k = parse_coefficient(lines[i], lines[i].tokens[1]);
    if (k.is_zero()) fail(lines[i], lines[i].tokens[1], "scale must be nonzero");
    c.scale = GainScale(k);
    ++i;
  }
  while (i < lines.size() && lines[i].tokens[0].text == "step") {
    const Line& line = lines[i];
    expect_arity(line, 2);
    const auto kind = line.tokens[1].text;
    if (kind != "U" && kind != "L") fail(line, line.tokens[1], "step kind must be U or L");
    ++i;
    LaurentPoly::TapMap taps;
    read_taps(lines, i, taps);
    c.steps.push_back({kind == "U" ? Update::lowpass : Update::highpass, LaurentPoly(std::move(taps))});
  }
  if (i < lines.size() && lines[i].tokens[0].text == "base:") {
    expect_arity(lines[i], 1);
    ++i;
    c.base = read_bank(lines, i).bank;
  }
  if (i < lines.size()) fail(lines[i], lines[i].tokens[0], "unexpected '" + std::string(lines[i].tokens[0].text) + "'");
  return c;
}

std::string print_cascade(const LiftingCascade& c) {
  std::ostringstream os;
  if (c.scale.k() != 1) os << "scale " << c.scale.k().str() << "\n";
  for (const auto& s : c.steps) {
    os << "step " << (s.update == Update::lowpass ? "U" : "L") << "\n";
    write_taps(os, s.filter);
  }
  if (c.base != PolyphaseMatrix::identity()) os << "base:\n" << print_bank(c.base);
  return os.str();
}

}  // namespace lpfb
