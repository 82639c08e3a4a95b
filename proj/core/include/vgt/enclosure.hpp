#pragma once

#include <functional>
#include <string>

#include "vgt/rational.hpp"

namespace vgt {

// Closed rational interval [lo, hi] certifying a real value. Every map
// applied to an Enc in this library is monotone in each argument, so image
// enclosures are formed from directed endpoint evaluations.
class Enc {
 public:
  Enc() : lo_(0), hi_(0) {}
  explicit Enc(Rat point) : lo_(point), hi_(std::move(point)) {}
  Enc(Rat lo, Rat hi);

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  Rat mid() const { return (lo_ + hi_) / Rat(2); }
  Rat width() const { return hi_ - lo_; }
  // (hi - lo) / max(|lo|, smallest positive available magnitude)
  Rat rel_width() const;
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rat& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Enc& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool intersects(const Enc& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
  // certified strict order: every point of *this below every point of o
  bool strictly_below(const Enc& o) const { return hi_ < o.lo_; }

  friend Enc operator+(const Enc& a, const Rat& s) { return Enc(a.lo_ + s, a.hi_ + s); }
  friend Enc operator+(const Rat& s, const Enc& a) { return a + s; }
  friend Enc operator+(const Enc& a, const Enc& b) { return Enc(a.lo_ + b.lo_, a.hi_ + b.hi_); }
  friend Enc operator-(const Enc& a, const Enc& b) { return Enc(a.lo_ - b.hi_, a.hi_ - b.lo_); }
  // scaling requires s > 0
  friend Enc operator*(const Enc& a, const Rat& s);
  friend Enc operator/(const Enc& a, const Rat& s);

  static Enc one_minus(const Enc& a) { return Enc(Rat(1) - a.hi_, Rat(1) - a.lo_); }
  static Enc hull(const Enc& a, const Enc& b);
  static Enc max(const Enc& a, const Enc& b);  // endpoint-wise
  static Enc min(const Enc& a, const Enc& b);

  // image under x^e for an interval with lo >= 0 (e >= 1)
  Enc pow_int(unsigned e) const;

  // widen endpoints outward to dyadic rationals with about `bits`
  // significant bits; keeps certificates valid and operand sizes bounded
  Enc outward_rounded(unsigned bits) const;

 private:
  Rat lo_, hi_;
};

// round |x| down/up to a dyadic rational keeping about `bits` significant
// bits; sign is preserved, "down" means toward -inf and "up" toward +inf
Rat dyadic_floor(const Rat& x, unsigned bits);
Rat dyadic_ceil(const Rat& x, unsigned bits);

// Certified bisection for a strictly increasing exact map g.
// Pre: g(lo) <= target <= g(hi). Stops once hi - lo <= rel_width * lo
// (endpoints positive in every use here). Returns [lo, hi] with the bracket
// invariant g(lo) <= target <= g(hi) intact; collapses to a point when the
// root is hit exactly. Brackets are periodically rounded outward to keep
// operand bit-size bounded; by monotonicity this cannot break the invariant.
Enc bisect_increasing(const std::function<Rat(const Rat&)>& g, const Rat& target,
                      Rat lo, Rat hi, const Rat& rel_width);

// Certified enclosure of x^(1/r): E.lo^r <= x <= E.hi^r with relative width
// at most rel_width. Exact degenerate enclosure when x is the r-th power of
// a rational. Negative x is a domain error.
Enc root_enclosure(const Rat& x, unsigned r, const Rat& rel_width);

}  // namespace vgt
