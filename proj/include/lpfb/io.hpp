#pragma once

// Text formats for filter banks and lifting cascades.
//
//   bank <name>          optional
//   h0:                  lowpass section
//   tap <n> <p>[/<q>]    one line per nonzero tap
//   h1:                  highpass section
//
// A cascade file holds an optional `scale <p>/<q>`, then `step U` / `step L`
// blocks with tap lines in application order, then an optional `base:` block
// embedding a bank. `#` starts a comment anywhere on a line.

#include <string>
#include <string_view>

#include "lpfb/lifting.hpp"

namespace lpfb {

struct BankFile {
  std::string name;
  PolyphaseMatrix bank;
};

/// Throws ParseError (parse_error, duplicate_tap, zero_tap).
BankFile parse_bank(std::string_view text);
std::string print_bank(const PolyphaseMatrix& h, const std::string& name = "");

LiftingCascade parse_cascade(std::string_view text);
std::string print_cascade(const LiftingCascade& c);

}  // namespace lpfb
