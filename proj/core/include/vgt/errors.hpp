#pragma once

#include <stdexcept>
#include <string>

namespace vgt {

// A mathematical precondition was violated (value outside the domain of an
// operation, e.g. a negative radicand or an evaluation point past an
// asymptote).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// The call itself is malformed (wrong sequence lengths, bad flags, an
// unparsable literal).
struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// An enclosure is too wide to determine every requested digit.
// `ambiguous_digit` is the 1-based position of the first undetermined
// mantissa digit (0 when even the decimal exponent is undetermined).
struct precision_error : std::runtime_error {
  precision_error(const std::string& what, int digit)
      : std::runtime_error(what), ambiguous_digit(digit) {}
  int ambiguous_digit;
};

}  // namespace vgt
