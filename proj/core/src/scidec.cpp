#include "vgt/scidec.hpp"

#include <cctype>
#include <cstdlib>
#include <utility>

namespace vgt {

namespace {

// cmp(|v|, 10^e)
int cmp_pow10(const Rat& v, const Int& e) {
  Int p = v.num();
  if (p.sgn() < 0) p = -p;
  Int q = v.den();
  if (e.sgn() >= 0) {
    Int rhs = q * Int::ten_pow(static_cast<unsigned long>(e.to_long()));
    return p == rhs ? 0 : (p < rhs ? -1 : 1);
  }
  Int lhs = p * Int::ten_pow(static_cast<unsigned long>((-e).to_long()));
  return lhs == q ? 0 : (lhs < q ? -1 : 1);
}

// scale |v| by 10^t and round to an integer, ties to even
Int scaled_round_half_even(const Rat& v, long t) {
  Int p = v.num();
  if (p.sgn() < 0) p = -p;
  Int q = v.den();
  if (t >= 0) {
    p *= Int::ten_pow(static_cast<unsigned long>(t));
  } else {
    q *= Int::ten_pow(static_cast<unsigned long>(-t));
  }
  Int quo, rem;
  Int::fdiv_qr(quo, rem, p, q);
  Int twice = rem + rem;
  if (twice > q || (twice == q && quo.odd())) quo += Int(1);
  return quo;
}

Rat pow10_rat(const Int& e) {
  if (e.sgn() >= 0) return Rat(Int::ten_pow(static_cast<unsigned long>(e.to_long())));
  return Rat(Int(1), Int::ten_pow(static_cast<unsigned long>((-e).to_long())));
}

const Rat& half() {
  static const Rat h(1, 2);
  return h;
}

void check_one_minus_domain(const Rat& v) {
  if (!(half() < v && v < Rat(1)))
    throw domain_error("one-minus display requires a value in (1/2, 1)");
}

}  // namespace

Int floor_log10(const Rat& v) {
  if (v.is_zero()) throw domain_error("floor_log10 of zero");
  long est = static_cast<long>(v.num().size_in_base(10)) -
             static_cast<long>(v.den().size_in_base(10));
  Int e(est);
  while (cmp_pow10(v, e) < 0) e -= Int(1);
  while (cmp_pow10(v, e + Int(1)) >= 0) e += Int(1);
  return e;
}

SciDec to_scidec(const Rat& v, unsigned digits, bool one_minus) {
  if (digits == 0) throw usage_error("at least one significant digit required");
  SciDec out;
  out.one_minus = one_minus;
  Rat w = v;
  if (one_minus) {
    check_one_minus_domain(v);
    w = Rat(1) - v;
  }
  if (w.is_zero()) {
    out.mantissa.assign(digits, '0');
    return out;
  }
  out.negative = w.sgn() < 0;
  Int e = floor_log10(w);
  Int m = scaled_round_half_even(w, static_cast<long>(digits) - 1 - e.to_long());
  if (m == Int::ten_pow(digits)) {
    m = Int::ten_pow(digits - 1);
    e += Int(1);
  }
  out.mantissa = m.str();
  out.exp10 = std::move(e);
  return out;
}

SciDec to_scidec(const Enc& v, unsigned digits, bool one_minus) {
  if (v.is_point()) return to_scidec(v.lo(), digits, one_minus);
  if (one_minus) {
    check_one_minus_domain(v.lo());
    check_one_minus_domain(v.hi());
  }
  SciDec a = to_scidec(v.lo(), digits, one_minus);
  SciDec b = to_scidec(v.hi(), digits, one_minus);
  if (a == b) return a;
  if (a.negative != b.negative || a.exp10 != b.exp10)
    throw precision_error("enclosure too wide: decimal exponent undetermined", 0);
  for (unsigned i = 0; i < digits; ++i) {
    if (a.mantissa[i] != b.mantissa[i])
      throw precision_error(
          "enclosure too wide: mantissa digit " + std::to_string(i + 1) + " undetermined",
          static_cast<int>(i + 1));
  }
  return a;  // unreachable
}

std::string enc_str(const Enc& v, unsigned digits, bool one_minus) {
  try {
    return to_scidec(v, digits, one_minus).str();
  } catch (const precision_error&) {
    return "[" + to_scidec(v.lo(), digits, one_minus).str() + ", " +
           to_scidec(v.hi(), digits, one_minus).str() + "]";
  }
}

std::string SciDec::str() const {
  std::string s;
  if (one_minus) s += "1 - ";
  if (negative) s += '-';
  s += mantissa[0];
  if (mantissa.size() > 1) {
    s += '.';
    s += mantissa.substr(1);
  }
  s += 'e';
  s += exp10.str();
  return s;
}

Rat SciDec::value() const {
  Int m(mantissa);
  Rat v = Rat(m) * pow10_rat(exp10 - Int(static_cast<long>(mantissa.size()) - 1));
  if (negative) v = -v;
  if (one_minus) v = Rat(1) - v;
  return v;
}

SciDec SciDec::parse(const std::string& text) {
  SciDec out;
  size_t pos = 0;
  if (text.rfind("1 - ", 0) == 0) {
    out.one_minus = true;
    pos = 4;
  }
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    out.negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw usage_error("not a scientific decimal: '" + text + "'");
  digits += text[pos++];
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      digits += text[pos++];
  }
  if (pos >= text.size() || (text[pos] != 'e' && text[pos] != 'E'))
    throw usage_error("not a scientific decimal: '" + text + "'");
  ++pos;
  std::string exppart = text.substr(pos);
  if (exppart.empty()) throw usage_error("missing exponent in '" + text + "'");
  out.mantissa = std::move(digits);
  out.exp10 = Int(exppart);
  return out;
}

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw usage_error("empty numeric literal");
  if (text.rfind("1 - ", 0) == 0) return Rat(1) - parse_rational(text.substr(4));
  if (text.find('/') != std::string::npos) return Rat(text);

  // [sign] digits [. digits] [e[sign] digits]
  size_t pos = 0;
  bool neg = false;
  if (text[pos] == '+' || text[pos] == '-') {
    neg = text[pos] == '-';
    ++pos;
  }
  std::string intpart, fracpart, exppart;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    intpart += text[pos++];
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      fracpart += text[pos++];
  }
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) exppart += text[pos++];
    bool any = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      exppart += text[pos++];
      any = true;
    }
    if (!any) throw usage_error("missing exponent digits in '" + text + "'");
  }
  if (pos != text.size() || (intpart.empty() && fracpart.empty()))
    throw usage_error("not a rational literal: '" + text + "'");

  Int digits(intpart.empty() ? "0" : intpart);
  if (!fracpart.empty()) {
    digits = digits * Int::ten_pow(fracpart.size()) + Int(fracpart);
  }
  Rat v(digits);
  if (!fracpart.empty()) v /= Rat(Int::ten_pow(fracpart.size()));
  if (!exppart.empty()) v *= pow10_rat(Int(exppart));
  if (neg) v = -v;
  return v;
}

}  // namespace vgt
