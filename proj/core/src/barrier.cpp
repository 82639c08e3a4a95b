#include "vgt/barrier.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <utility>

namespace vgt {

namespace {

long frac_bits(const Rat& w) {
  long b = static_cast<long>(w.den().size_in_base(2)) - static_cast<long>(w.num().size_in_base(2));
  return b > 0 ? b : 1;
}

void require_rel_width(const Rat& w) {
  if (w.sgn() <= 0) throw domain_error("rel_width must be positive");
}

}  // namespace

const Rat& default_rel_width() {
  static const Rat w(Int(1), Int::ten_pow(9));
  return w;
}

BarrierPoly::BarrierPoly(unsigned k, unsigned n, Variant v)
    : k_(k), n_(n), variant_(v), c_(c_kn(k, n, k, v)) {
  const Int a = Int::ten_pow(k + 2) * c_;
  // A * binom(k,j) / (2k)^j is the coefficient of x^(j+1)
  coeff_.assign(k + 2, Rat(0));
  Int binom(1);
  for (unsigned j = 0; j <= k; ++j) {
    coeff_[j + 1] = Rat(a * binom, Int::pow(Int(2L * k), j));
    binom = Int::fdiv_q(binom * Int(static_cast<long>(k - j)), Int(static_cast<long>(j + 1)));
  }
  x0_ = Rat(Int(1), a);
}

Rat BarrierPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t j = coeff_.size(); j-- > 0;) acc = acc * x + coeff_[j];
  return acc;
}

std::shared_ptr<const BarrierPoly> BarrierPoly::get(unsigned k, unsigned n, Variant v) {
  static std::mutex mu;
  static std::map<std::tuple<unsigned, unsigned, int>, std::shared_ptr<const BarrierPoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(k, n, static_cast<int>(v));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto bp = std::make_shared<const BarrierPoly>(k, n, v);
  cache.emplace(key, bp);
  return bp;
}

Rat gamma(const Rat& c, const Rat& eps, unsigned n) {
  if (!(c > Rat(1))) throw domain_error("gamma requires c > 1");
  if (eps.sgn() <= 0) throw domain_error("gamma requires eps > 0");
  if (n < 1) throw domain_error("gamma requires n >= 1");
  Rat en = rat_pow(eps, n);
  return en / (en + rat_pow(c, n));
}

Enc gamma_enc(const Enc& c, const Enc& eps, unsigned n) {
  return Enc(gamma(c.hi(), eps.lo(), n), gamma(c.lo(), eps.hi(), n));
}

Rat h_eval(unsigned k, unsigned n, Variant v, const Rat& x) {
  if (x.sgn() < 0) throw domain_error("h is evaluated on x >= 0");
  Rat p = BarrierPoly::get(k, n, v)->eval(x);
  if (p >= Rat(1)) throw domain_error("h undefined at or past the asymptote");
  return (Rat(1) - p).inverse();
}

Enc delta_kn(unsigned k, unsigned n, Variant v, const Rat& rel_width) {
  require_rel_width(rel_width);
  auto bp = BarrierPoly::get(k, n, v);
  const Rat one(1);
  Rat hi = bp->upper_root_bound();  // p(x0) = (1 + x0/2k)^k > 1
  Rat lo = hi / Rat(2);
  while (!(bp->eval(lo) < one)) lo = lo / Rat(2);
  Rat inner = rel_width / Rat(2);
  Enc root = bisect_increasing([&bp](const Rat& x) { return bp->eval(x); }, one,
                               std::move(lo), std::move(hi), inner);
  if (root.is_point()) return root;
  Enc out = root.outward_rounded(static_cast<unsigned>(frac_bits(rel_width)) + 40);
  // rounding must not push the upper end past the analytic bound x0
  if (out.hi() > bp->upper_root_bound()) out = Enc(out.lo(), bp->upper_root_bound());
  return out;
}

Enc h_inv(unsigned k, unsigned n, Variant v, const Rat& c, const Rat& rel_width) {
  require_rel_width(rel_width);
  if (!(c > Rat(1))) throw domain_error("h^-1 requires c > 1");
  auto bp = BarrierPoly::get(k, n, v);
  const Rat target = Rat(1) - c.inverse();
  const Rat& x0 = bp->upper_root_bound();

  // p(t x0) >= t and p(t x0 (1+x0/2k)^-k) <= t for t in (0, 1]
  Rat hi = target * x0;
  Rat lo = hi * rat_pow(Rat(1) + x0 / Rat(2L * k), -(long)k);
  while (!(bp->eval(lo) <= target)) lo = lo / Rat(2);
  while (!(bp->eval(hi) >= target)) hi = hi * Rat(2);

  Rat inner = rel_width / Rat(2);
  Enc root = bisect_increasing([&bp](const Rat& x) { return bp->eval(x); }, target,
                               std::move(lo), std::move(hi), inner);
  if (root.is_point()) return root;
  return root.outward_rounded(static_cast<unsigned>(frac_bits(rel_width)) + 40);
}

Enc h_inv(unsigned k, unsigned n, Variant v, const Enc& c, const Rat& rel_width) {
  if (c.is_point()) return h_inv(k, n, v, c.lo(), rel_width);
  Enc a = h_inv(k, n, v, c.lo(), rel_width);
  Enc b = h_inv(k, n, v, c.hi(), rel_width);
  return Enc(a.lo(), b.hi());
}

Enc excess_bound(const Rat& h, const Rat& s, unsigned n, const Rat& rel_width) {
  require_rel_width(rel_width);
  if (s.sgn() <= 0) throw domain_error("excess bound requires s > 0");
  if (h.sgn() < 0) throw domain_error("excess bound requires h >= 0");
  if (!(h <= s / Rat(2))) throw domain_error("excess bound hypothesis h <= s/2 violated");
  if (n < 2) throw domain_error("excess bound requires n >= 2");
  if (h.is_zero()) return Enc(Rat(0));
  Enc root = root_enclosure(rat_pow(h, n) / s, n - 1, rel_width);
  return root * Rat(8);
}

}  // namespace vgt
