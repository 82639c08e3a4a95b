#include "vgt/rational.hpp"

#include <ostream>
#include <vector>

namespace vgt {

Int::Int(const std::string& decimal) {
  if (mpz_init_set_str(z_, decimal.c_str(), 10) != 0) {
    mpz_clear(z_);
    throw usage_error("not a decimal integer: '" + decimal + "'");
  }
}

long Int::to_long() const {
  if (!fits_long()) throw usage_error("integer too large for a machine word");
  return mpz_get_si(z_);
}

std::string Int::str() const {
  std::vector<char> buf(mpz_sizeinbase(z_, 10) + 2);
  mpz_get_str(buf.data(), 10, z_);
  return std::string(buf.data());
}

Rat::Rat(long num, long den) {
  if (den == 0) throw domain_error("zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, num, 1);
  Rat d;
  mpq_set_si(d.q_, den, 1);
  mpq_div(q_, q_, d.q_);
}

Rat::Rat(const Int& num, const Int& den) {
  if (den.sgn() == 0) throw domain_error("zero denominator");
  mpq_init(q_);
  mpz_set(mpq_numref(q_), num.raw());
  mpz_set(mpq_denref(q_), den.raw());
  mpq_canonicalize(q_);
}

Rat::Rat(const std::string& s) {
  mpq_init(q_);
  if (mpq_set_str(q_, s.c_str(), 10) != 0) {
    mpq_clear(q_);
    throw usage_error("not a rational literal: '" + s + "'");
  }
  if (mpz_sgn(mpq_denref(q_)) == 0) {
    mpq_clear(q_);
    throw domain_error("zero denominator in '" + s + "'");
  }
  mpq_canonicalize(q_);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw domain_error("division by zero");
  Rat r;
  mpq_div(r.q_, a.q_, b.q_);
  return r;
}

Rat Rat::inverse() const {
  if (is_zero()) throw domain_error("inverse of zero");
  Rat r;
  mpq_inv(r.q_, q_);
  return r;
}

std::string Rat::str() const {
  std::string s = num().str();
  if (!is_integer()) s += "/" + den().str();
  return s;
}

Rat rat_pow(const Rat& x, long e) {
  if (e == 0) return Rat(1);
  if (x.is_zero()) {
    if (e < 0) throw domain_error("zero base with negative exponent");
    return Rat(0);
  }
  unsigned long mag = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  // numerator and denominator are coprime, so their powers are too
  Int pn = Int::pow(x.num(), mag);
  Int pd = Int::pow(x.den(), mag);
  return e > 0 ? Rat(pn, pd) : Rat(pd, pn);
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.str(); }
std::ostream& operator<<(std::ostream& os, const Rat& v) { return os << v.str(); }

}  // namespace vgt
