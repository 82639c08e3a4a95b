#pragma once

#include <memory>
#include <vector>

#include "vgt/enclosure.hpp"
#include "vgt/rational.hpp"
#include "vgt/recurrence.hpp"

namespace vgt {

// default relative width for enclosures: 10^-(6+3)
const Rat& default_rel_width();

// p(x) = 10^(k+2) C_{k,n} x (1 + x/2k)^k, exact coefficients, degree k+1.
// p(0) = 0, p strictly increasing on x >= 0, and p(delta) = 1 defines the
// asymptote abscissa of h = 1/(1-p).
class BarrierPoly {
 public:
  BarrierPoly(unsigned k, unsigned n, Variant v);

  unsigned k() const { return k_; }
  unsigned n() const { return n_; }
  Variant variant() const { return variant_; }
  const Int& constant() const { return c_; }  // C_{k,n}(k)
  const std::vector<Rat>& coefficients() const { return coeff_; }
  Rat eval(const Rat& x) const;
  // x0 = 10^-(k+2)/C; p(x0) >= 1, so delta <= x0
  const Rat& upper_root_bound() const { return x0_; }

  // memoized immutable instances keyed by (k, n, variant)
  static std::shared_ptr<const BarrierPoly> get(unsigned k, unsigned n, Variant v);

 private:
  unsigned k_, n_;
  Variant variant_;
  Int c_;
  std::vector<Rat> coeff_;
  Rat x0_;
};

// gamma(c, eps, n) = [1 + (c/eps)^n]^-1, exact. Requires c > 1, eps > 0.
Rat gamma(const Rat& c, const Rat& eps, unsigned n);
// decreasing in c, increasing in eps: directed endpoint propagation
Enc gamma_enc(const Enc& c, const Enc& eps, unsigned n);

// h_{k,n}(x) = [1 - p(x)]^-1, exact; domain error at or past the asymptote
Rat h_eval(unsigned k, unsigned n, Variant v, const Rat& x);

// Enclosure of the asymptote abscissa delta_{k,n} with p(lo) < 1 < p(hi),
// by bisection from the bracket [x0/2, x0] (re-bracketed if needed).
Enc delta_kn(unsigned k, unsigned n, Variant v, const Rat& rel_width = default_rel_width());

// Enclosure X of h^-1(c) with p(X.lo) <= 1 - 1/c <= p(X.hi). Requires c > 1.
Enc h_inv(unsigned k, unsigned n, Variant v, const Rat& c,
          const Rat& rel_width = default_rel_width());
// Enc input maps endpoint-wise (h^-1 is increasing)
Enc h_inv(unsigned k, unsigned n, Variant v, const Enc& c,
          const Rat& rel_width = default_rel_width());

// Certified enclosure of 8 (h^n / s)^(1/(n-1)). Hypothesis h <= s/2 is
// enforced; n >= 2.
Enc excess_bound(const Rat& h, const Rat& s, unsigned n,
                 const Rat& rel_width = default_rel_width());

}  // namespace vgt
