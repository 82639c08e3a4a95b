#include "vgt/enclosure.hpp"

#include <stdexcept>
#include <utility>

namespace vgt {

namespace {

// bit length of |v|, 0 for v == 0
long bitlen(const Int& v) { return v.sgn() == 0 ? 0 : static_cast<long>(v.size_in_base(2)); }

// approximate -log2 of a rational in (0, 1)
long frac_bits(const Rat& w) {
  long b = bitlen(w.den()) - bitlen(w.num());
  return b > 0 ? b : 1;
}

}  // namespace

Enc::Enc(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("enclosure endpoints out of order");
}

Rat Enc::rel_width() const {
  Rat w = width();
  if (w.is_zero()) return Rat(0);
  Rat d = lo_.abs();
  if (d.is_zero()) d = hi_.abs();
  if (d.is_zero()) d = Rat(1);
  return w / d;
}

Enc operator*(const Enc& a, const Rat& s) {
  if (s.sgn() <= 0) throw std::invalid_argument("enclosure scaling needs a positive factor");
  return Enc(a.lo_ * s, a.hi_ * s);
}

Enc operator/(const Enc& a, const Rat& s) {
  if (s.sgn() <= 0) throw std::invalid_argument("enclosure scaling needs a positive factor");
  return Enc(a.lo_ / s, a.hi_ / s);
}

Enc Enc::hull(const Enc& a, const Enc& b) {
  return Enc(a.lo_ < b.lo_ ? a.lo_ : b.lo_, a.hi_ > b.hi_ ? a.hi_ : b.hi_);
}

Enc Enc::max(const Enc& a, const Enc& b) {
  return Enc(a.lo_ > b.lo_ ? a.lo_ : b.lo_, a.hi_ > b.hi_ ? a.hi_ : b.hi_);
}

Enc Enc::min(const Enc& a, const Enc& b) {
  return Enc(a.lo_ < b.lo_ ? a.lo_ : b.lo_, a.hi_ < b.hi_ ? a.hi_ : b.hi_);
}

Enc Enc::pow_int(unsigned e) const {
  if (lo_.sgn() < 0) throw std::invalid_argument("pow_int needs a nonnegative interval");
  return Enc(rat_pow(lo_, e), rat_pow(hi_, e));
}

Enc Enc::outward_rounded(unsigned bits) const {
  return Enc(dyadic_floor(lo_, bits), dyadic_ceil(hi_, bits));
}

Rat dyadic_floor(const Rat& x, unsigned bits) {
  if (x.is_zero()) return Rat(0);
  Int p = x.num();
  Int q = x.den();
  long e = bitlen(p) - bitlen(q);
  long s = static_cast<long>(bits) - e;
  Int m;
  Rat scale;
  if (s >= 0) {
    m = Int::fdiv_q(Int::mul_2exp(p, static_cast<unsigned long>(s)), q);
    return Rat(m, Int::two_pow(static_cast<unsigned long>(s)));
  }
  m = Int::fdiv_q(p, Int::mul_2exp(q, static_cast<unsigned long>(-s)));
  return Rat(m * Int::two_pow(static_cast<unsigned long>(-s)), Int(1));
}

Rat dyadic_ceil(const Rat& x, unsigned bits) {
  if (x.is_zero()) return Rat(0);
  Int p = x.num();
  Int q = x.den();
  long e = bitlen(p) - bitlen(q);
  long s = static_cast<long>(bits) - e;
  Int m;
  if (s >= 0) {
    m = Int::cdiv_q(Int::mul_2exp(p, static_cast<unsigned long>(s)), q);
    return Rat(m, Int::two_pow(static_cast<unsigned long>(s)));
  }
  m = Int::cdiv_q(p, Int::mul_2exp(q, static_cast<unsigned long>(-s)));
  return Rat(m * Int::two_pow(static_cast<unsigned long>(-s)), Int(1));
}

Enc bisect_increasing(const std::function<Rat(const Rat&)>& g, const Rat& target,
                      Rat lo, Rat hi, const Rat& rel_width) {
  if (lo.sgn() <= 0 || lo > hi) throw std::invalid_argument("bisection needs 0 < lo <= hi");
  if (rel_width.sgn() <= 0) throw domain_error("rel_width must be positive");

  const unsigned round_bits = static_cast<unsigned>(frac_bits(rel_width)) + 96;
  const Rat two(2);
  unsigned iter = 0;
  while (hi - lo > rel_width * lo) {
    if (++iter > 200000) throw std::logic_error("bisection failed to converge");
    if (iter % 48 == 0) {
      lo = dyadic_floor(lo, round_bits);
      hi = dyadic_ceil(hi, round_bits);
    }
    Rat mid = (lo + hi) / two;
    Rat gm = g(mid);
    if (gm < target) {
      lo = std::move(mid);
    } else if (gm > target) {
      hi = std::move(mid);
    } else {
      return Enc(mid);
    }
  }
  return Enc(std::move(lo), std::move(hi));
}

Enc root_enclosure(const Rat& x, unsigned r, const Rat& rel_width) {
  if (x.sgn() < 0) throw domain_error("negative radicand");
  if (r == 0) throw domain_error("root order must be at least 1");
  if (rel_width.sgn() <= 0) throw domain_error("rel_width must be positive");
  if (x.is_zero()) return Enc(Rat(0));
  if (r == 1) return Enc(x);

  Int p = x.num();
  Int q = x.den();
  auto [pr, p_exact] = Int::root(p, r);
  if (p_exact) {
    auto [qr, q_exact] = Int::root(q, r);
    if (q_exact) return Enc(Rat(pr, qr));
  }

  // scaled integer root: N = floor(p * 2^(r*s) / q) with at least r*B bits,
  // then floor(N^(1/r)) / 2^s brackets the real root from below
  const long B = frac_bits(rel_width) + 3;
  long s = (r * B + bitlen(q) - bitlen(p) + 2 + static_cast<long>(r) - 1) / static_cast<long>(r);
  if (s < 0) s = 0;
  Int n = Int::fdiv_q(Int::mul_2exp(p, static_cast<unsigned long>(s) * r), q);
  Int a = Int::root(n, r).first;
  Int scale = Int::two_pow(static_cast<unsigned long>(s));
  Rat lo(a, scale);
  Rat hi(a + Int(1), scale);
  return Enc(std::move(lo), std::move(hi));
}

}  // namespace vgt
