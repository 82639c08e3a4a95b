#pragma once

#include <string>
#include <vector>

#include "vgt/rational.hpp"

namespace vgt {

// The defining iteration for the net-diameter constants appears in two
// conflicting forms. Section3 is the form behind the published constants
// table; Appendix is the form whose sequences satisfy the closed identities
// below. They coincide exactly when n = 1.
//
//   Section3:  C(i) = (16k)^(n-1) * (1 + 10 C(i-1)^n + 3 + 10 C(i-1))
//   Appendix:  C(i) = (16k)^(n-1) * (1 + 10 C(i-1))^n + 3 + 10 C(i-1)
//
// with C(0) = 1 in both.
enum class Variant { Section3, Appendix };

std::string variant_name(Variant v);
Variant variant_from_string(const std::string& s);

// C_{k,n}(i) under the selected variant; exact integer
Int c_kn(unsigned k, unsigned n, unsigned i, Variant v);
// C(0..k)
std::vector<Int> c_sequence(unsigned k, unsigned n, Variant v);

// The canonical scale sequences: d_i = C(i) d0 (stored as the integer
// coefficient C(i)) and b_i = [16k(1+10C(i))]^-(n-1).
struct SeqBundle {
  unsigned k = 0;
  unsigned n = 0;
  Variant variant = Variant::Section3;
  std::vector<Int> C;        // indices 0..k
  std::vector<Int> d_coeff;  // d_i = C(i) * d0
  std::vector<Rat> b;        // indices 0..k
};
SeqBundle seq_bundle(unsigned k, unsigned n, Variant v);

struct CheckRecord {
  std::string check;  // Eq1, Eq3, Ineq1..Ineq4, d_lt_1, d_monotone
  int index;          // i, or -1 for whole-sequence checks
  Rat left;
  Rat right;
  bool pass;
};

// Structured verdicts for the identity/inequality system at a concrete
// (k, n, variant, d0). Reproducible from those four inputs alone.
struct AuditReport {
  unsigned k = 0;
  unsigned n = 0;
  Variant variant = Variant::Section3;
  Rat d0;
  std::vector<CheckRecord> records;

  bool all_pass() const;
  const CheckRecord* find(const std::string& check, int index) const;
  std::string text() const;
  std::string csv() const;
};

// Evaluates, in exact rational arithmetic and for i = 0..k-1:
//   Eq1:   d0 + 10 d_i = b_i (d_{i+1} - 3 d0 - 10 d_i)
//   Eq3:   8 b_i^(1/(n-1)) (d0 + 10 d_i) = d0 / 2k
//   Ineq1..Ineq3 as inequalities, and Ineq4 with c = h_{k,n}(d0),
// plus the d_k < 1 and d-monotonicity checks. The (n-1)-th root of b_i is
// taken via its closed form 1/(16k(1+10C(i))), which keeps Eq3 exact.
// Requires 0 < d0 < delta_{k,n} for the selected variant.
AuditReport audit(unsigned k, unsigned n, Variant v, const Rat& d0);

struct LemmaA2Report {
  bool hypotheses_ok = false;
  bool dominance_ok = false;
  std::string detail;
  bool ok() const { return hypotheses_ok && dominance_ok; }
};

// Optimality check for user-supplied sequences normalized to d0 = 1
// (d has k+1 entries, b has k). Verifies Ineq1 and Ineq3 hold, then that the
// sequences dominate the canonical Appendix ones: d_i >= C(i) and
// b_i <= [16k(1+10C(i))]^-(n-1). Reports the first violation.
LemmaA2Report lemma_a2_check(unsigned k, unsigned n, const std::vector<Rat>& d,
                             const std::vector<Rat>& b);

}  // namespace vgt
