#pragma once

#include <string>

#include "vgt/enclosure.hpp"
#include "vgt/rational.hpp"

namespace vgt {

// Rendered decimal with an unbounded exponent: sign, mantissa digits (one
// integer digit, the rest fractional), exact power of ten. In one-minus mode
// the mantissa and exponent describe 1 - v for a value v in (1/2, 1) and the
// string is prefixed "1 - ".
struct SciDec {
  bool negative = false;
  std::string mantissa;  // e.g. "352" denotes 3.52
  Int exp10 = Int(0);
  bool one_minus = false;

  unsigned digits() const { return static_cast<unsigned>(mantissa.size()); }
  std::string str() const;
  // the exact rational the rendered string denotes
  Rat value() const;
  static SciDec parse(const std::string& text);

  friend bool operator==(const SciDec& a, const SciDec& b) {
    return a.negative == b.negative && a.mantissa == b.mantissa && a.exp10 == b.exp10 &&
           a.one_minus == b.one_minus;
  }
};

// e with 10^e <= |v| < 10^(e+1); v must be nonzero
Int floor_log10(const Rat& v);

// Round to `digits` significant digits, ties half-even. one_minus requires
// 1/2 < v < 1.
SciDec to_scidec(const Rat& v, unsigned digits, bool one_minus = false);

// Enc variant: every requested digit must be determined by the enclosure,
// otherwise a precision_error names the first ambiguous digit.
SciDec to_scidec(const Enc& v, unsigned digits, bool one_minus = false);

// single SciDec string when the enclosure determines all digits, otherwise
// "[lo, hi]" with both endpoints rendered individually
std::string enc_str(const Enc& v, unsigned digits, bool one_minus = false);

// Accepts "p/q", plain or scientific decimals ("24", "-0.5", "3.84e2"),
// and the one-minus form ("1 - 6.22e-61").
Rat parse_rational(const std::string& text);

}  // namespace vgt
