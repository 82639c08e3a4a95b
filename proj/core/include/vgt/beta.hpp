#pragma once

#include <string>
#include <vector>

#include "vgt/barrier.hpp"
#include "vgt/enclosure.hpp"

namespace vgt {

// One leaf of the recursive expansion of beta(k, c, n): a strictly
// decreasing index chain k = k0 > k1 > ... > km >= 1. Evaluation threads
// c through c_{j+1} = 1 + h^-1_{k_j,n}(c_j) / (2 k_j); the leaf value is
// 1 - gamma(c_m, h^-1_{k_m,n}(c_m), n).
struct TermChain {
  std::vector<unsigned> levels;

  std::string str() const;
  bool leading() const { return levels.size() == 1; }
  bool full_descent() const { return levels.size() == levels.front(); }
  friend bool operator==(const TermChain& a, const TermChain& b) = default;
};

// All 2^(k-1) chains, ordered lexicographically on levels (the full-descent
// chain [k, k-1, .., 1] comes last).
std::vector<TermChain> beta_terms(unsigned k);

struct ChainValue {
  TermChain chain;
  Enc gamma_term;  // the gamma part of the leaf
  Enc value;       // 1 - gamma_term
};

struct BetaResult {
  unsigned k = 0;
  unsigned n = 0;
  Variant variant = Variant::Section3;
  Rat c;
  Enc value;                      // endpoint-wise max over chain values
  std::vector<ChainValue> chains; // in beta_terms order
  std::vector<TermChain> argmax;  // singleton when resolved
  bool tie = false;               // argmax still ambiguous at the refinement cap
};

// Evaluates every chain with certified enclosures, refining widths until the
// argmax is unambiguous or a refinement cap is reached (then all candidates
// are reported as ties). beta(0, c, n) = 0.
BetaResult beta_eval(unsigned k, unsigned n, const Rat& c, Variant v,
                     const Rat& rel_width = default_rel_width());

// The c -> infinity limit of the full-descent chain: c1 = 1 + delta/2k,
// c_{j+1} = 1 + h^-1_{k-j,n}(c_j)/(2(k-j)), final gamma at level 1.
// For k = 1 this is gamma(2, h^-1_{1,n}(2), n).
Enc epsilon_kn(unsigned k, unsigned n, Variant v, const Rat& rel_width = default_rel_width());

// alpha(k,n) = 1 - epsilon_{k,n}; display uses one-minus mode
Enc alpha_kn(unsigned k, unsigned n, Variant v, const Rat& rel_width = default_rel_width());

// Overlay of external results on top of alpha: exact 0 for n <= 3, exact 1/2
// for k = 1, n >= 4, a dash for (1,1) and unpopulated cells.
enum class RevisedKind { NotApplicable, Zero, Half, Value };
struct RevisedCell {
  RevisedKind kind = RevisedKind::NotApplicable;
  Enc value;  // meaningful only when kind == Value
};
RevisedCell alpha_revised(unsigned k, unsigned n, Variant v = Variant::Section3,
                          const Rat& rel_width = default_rel_width());

}  // namespace vgt
