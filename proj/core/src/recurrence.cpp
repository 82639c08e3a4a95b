#include "vgt/recurrence.hpp"

#include <sstream>

#include "vgt/barrier.hpp"

namespace vgt {

namespace {

void require_kn(unsigned k, unsigned n) {
  if (k < 1 || n < 1) throw domain_error("k and n must be at least 1");
}

Rat ratio(long num, long den) { return Rat(Int(num), Int(den)); }

}  // namespace

std::string variant_name(Variant v) {
  return v == Variant::Section3 ? "section3" : "appendix";
}

Variant variant_from_string(const std::string& s) {
  if (s == "section3") return Variant::Section3;
  if (s == "appendix") return Variant::Appendix;
  throw usage_error("unknown variant '" + s + "' (expected section3 or appendix)");
}

std::vector<Int> c_sequence(unsigned k, unsigned n, Variant v) {
  require_kn(k, n);
  const Int scale = Int::pow(Int(16L * k), n - 1);
  std::vector<Int> c;
  c.reserve(k + 1);
  c.emplace_back(1);
  for (unsigned i = 1; i <= k; ++i) {
    const Int& prev = c.back();
    Int ten_prev = Int(10) * prev;
    Int next = v == Variant::Section3
                   ? scale * (Int(4) + Int(10) * Int::pow(prev, n) + ten_prev)
                   : scale * Int::pow(Int(1) + ten_prev, n) + Int(3) + ten_prev;
    c.push_back(std::move(next));
  }
  return c;
}

Int c_kn(unsigned k, unsigned n, unsigned i, Variant v) {
  require_kn(k, n);
  if (i > k) throw domain_error("index i must satisfy 0 <= i <= k");
  return c_sequence(k, n, v)[i];
}

SeqBundle seq_bundle(unsigned k, unsigned n, Variant v) {
  SeqBundle out;
  out.k = k;
  out.n = n;
  out.variant = v;
  out.C = c_sequence(k, n, v);
  out.d_coeff = out.C;
  out.b.reserve(k + 1);
  for (unsigned i = 0; i <= k; ++i) {
    Int base = Int(16L * k) * (Int(1) + Int(10) * out.C[i]);
    out.b.emplace_back(Int(1), Int::pow(base, n - 1));
  }
  return out;
}

bool AuditReport::all_pass() const {
  for (const auto& r : records)
    if (!r.pass) return false;
  return true;
}

const CheckRecord* AuditReport::find(const std::string& check, int index) const {
  for (const auto& r : records)
    if (r.check == check && r.index == index) return &r;
  return nullptr;
}

std::string AuditReport::text() const {
  std::ostringstream os;
  os << "audit k=" << k << " n=" << n << " variant=" << variant_name(variant)
     << " d0=" << d0.str() << "\n";
  for (const auto& r : records) {
    os << "  " << r.check;
    if (r.index >= 0) os << "[i=" << r.index << "]";
    os << ": " << (r.pass ? "PASS" : "FAIL");
    os << "  left=" << r.left.str() << "  right=" << r.right.str() << "\n";
  }
  os << "result: " << (all_pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string AuditReport::csv() const {
  std::ostringstream os;
  os << "check,i,left,right,verdict\n";
  for (const auto& r : records) {
    os << r.check << "," << r.index << "," << r.left.str() << "," << r.right.str() << ","
       << (r.pass ? "pass" : "fail") << "\n";
  }
  return os.str();
}

AuditReport audit(unsigned k, unsigned n, Variant v, const Rat& d0) {
  require_kn(k, n);
  auto bp = BarrierPoly::get(k, n, v);
  if (d0.sgn() <= 0 || bp->eval(d0) >= Rat(1))
    throw domain_error("d0 outside (0, delta) for " + variant_name(v));

  SeqBundle sb = seq_bundle(k, n, v);
  const Rat c = h_eval(k, n, v, d0);
  std::vector<Rat> d;
  d.reserve(k + 1);
  for (unsigned i = 0; i <= k; ++i) d.push_back(Rat(sb.C[i]) * d0);

  AuditReport rep;
  rep.k = k;
  rep.n = n;
  rep.variant = v;
  rep.d0 = d0;

  auto emit = [&rep](std::string check, int i, Rat left, Rat right, bool pass) {
    rep.records.push_back({std::move(check), i, std::move(left), std::move(right), pass});
  };

  const Rat ten(10);
  const Rat d0_over_2k = d0 / Rat(2L * k);
  for (unsigned i = 0; i + 1 <= k; ++i) {
    Rat lhs = d0 + ten * d[i];
    Rat rhs = sb.b[i] * (d[i + 1] - Rat(3) * d0 - ten * d[i]);
    emit("Eq1", static_cast<int>(i), lhs, rhs, lhs == rhs);

    // exact (n-1)-th root of b_i
    Rat b_root(Int(1), Int(16L * k) * (Int(1) + Int(10) * sb.C[i]));
    Rat lhs3 = Rat(8) * b_root * (d0 + ten * d[i]);
    emit("Eq3", static_cast<int>(i), lhs3, d0_over_2k, lhs3 == d0_over_2k);

    emit("Ineq1", static_cast<int>(i), lhs, rhs, lhs <= rhs);
    Rat rhs2 = sb.b[i] * (c - Rat(1) + d0 * ratio(2L * k - i, k));
    emit("Ineq2", static_cast<int>(i), lhs, rhs2, lhs <= rhs2);
    emit("Ineq3", static_cast<int>(i), lhs3, d0_over_2k, lhs3 <= d0_over_2k);
  }

  Rat lhs4 = ten * d[k];
  Rat rhs4 = Rat(Int(1), Int::ten_pow(k + 1)) * rat_pow(Rat(1) + d0 / Rat(2L * k), -(long)k) *
             (Rat(1) - c.inverse());
  emit("Ineq4", static_cast<int>(k), lhs4, rhs4, lhs4 <= rhs4);

  emit("d_lt_1", static_cast<int>(k), d[k], Rat(1), d[k] < Rat(1));

  bool mono = true;
  for (unsigned i = 1; i <= k; ++i) mono = mono && d[i - 1] < d[i];
  emit("d_monotone", -1, d[0], d[k], mono);

  return rep;
}

LemmaA2Report lemma_a2_check(unsigned k, unsigned n, const std::vector<Rat>& d,
                             const std::vector<Rat>& b) {
  require_kn(k, n);
  if (d.size() != k + 1 || b.size() != k)
    throw usage_error("expected k+1 d-values and k b-values");
  if (d[0] != Rat(1)) throw usage_error("sequences must be normalized to d0 = 1");

  LemmaA2Report rep;
  const Rat one(1);
  const Rat ten(10);
  for (unsigned i = 0; i < k; ++i) {
    if (b[i].sgn() <= 0) {
      rep.detail = "hypotheses not satisfied: b[" + std::to_string(i) + "] not positive";
      return rep;
    }
    Rat lhs = one + ten * d[i];
    if (!(lhs <= b[i] * (d[i + 1] - Rat(3) - ten * d[i]))) {
      rep.detail = "hypotheses not satisfied: Ineq1 fails at i=" + std::to_string(i);
      return rep;
    }
    // Ineq3 in root-free form: b_i <= [16k(1+10 d_i)]^-(n-1)
    Rat cap = rat_pow(Rat(16L * k) * (one + ten * d[i]), -(long)(n - 1));
    if (!(b[i] <= cap)) {
      rep.detail = "hypotheses not satisfied: Ineq3 fails at i=" + std::to_string(i);
      return rep;
    }
  }
  rep.hypotheses_ok = true;

  SeqBundle canon = seq_bundle(k, n, Variant::Appendix);
  for (unsigned i = 0; i <= k; ++i) {
    if (!(d[i] >= Rat(canon.C[i]))) {
      rep.detail = "dominance violated: d[" + std::to_string(i) + "] below canonical";
      return rep;
    }
  }
  for (unsigned i = 0; i < k; ++i) {
    if (!(b[i] <= canon.b[i])) {
      rep.detail = "dominance violated: b[" + std::to_string(i) + "] above canonical";
      return rep;
    }
  }
  rep.dominance_ok = true;
  return rep;
}

}  // namespace vgt
