#pragma once

#include <stdexcept>
#include <string>

namespace lpfb {

enum class ErrorKind {
  empty_support,
  zero_evaluation_point,
  zero_scale,
  not_unimodular,
  not_irreducible,
  not_admissible,
  base_not_identity,
  not_ws_delay_minimized,
  not_hs_concentric,
  factorization_stuck,
  dc_zero,
  not_dyadic,
  not_reversible,
  non_integer_input,
  parse_error,
  duplicate_tap,
  zero_tap,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the bank/cascade file readers; carries a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, int line, int column, const std::string& what)
      : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                        ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace lpfb
