#include <doctest.h>

#include "vgt/barrier.hpp"
#include "vgt/recurrence.hpp"

using namespace vgt;

namespace {

// certified point below the asymptote with a compact representation:
// p(d0) <= 1/10 (1 + ..)^k < 1 because C < 2^bits(C)
Rat cheap_d0(unsigned k, unsigned n, Variant v) {
  Int c = c_kn(k, n, k, v);
  return Rat(Int(1), Int::ten_pow(k + 3) * Int::two_pow(c.size_in_base(2)));
}

}  // namespace

TEST_CASE("c_kn base cases and published values") {
  CHECK(c_kn(1, 1, 1, Variant::Section3) == Int(24));
  CHECK(c_kn(1, 2, 1, Variant::Section3) == Int(384));
  for (unsigned k : {1u, 2u, 3u}) {
    for (Variant v : {Variant::Section3, Variant::Appendix}) {
      CHECK(c_kn(k, 5, 0, v) == Int(1));
    }
  }
}

TEST_CASE("c_kn two-step hand evaluation") {
  // 32 * (4 + 10*768^2 + 10*768) recomputed from scratch
  Int c1 = Int(32) * Int(24);
  CHECK(c1 == Int(768));
  Int hand = Int(32) * (Int(4) + Int(10) * c1 * c1 + Int(10) * c1);
  CHECK(hand == Int(188989568));
  CHECK(c_kn(2, 2, 2, Variant::Section3) == hand);

  // appendix variant at (1,2): 16*11^2 + 13
  CHECK(c_kn(1, 2, 1, Variant::Appendix) == Int(16) * Int(121) + Int(13));
  CHECK(c_kn(1, 2, 1, Variant::Appendix) == Int(1949));
}

TEST_CASE("c_kn argument validation") {
  CHECK_THROWS_AS(c_kn(0, 1, 0, Variant::Section3), domain_error);
  CHECK_THROWS_AS(c_kn(1, 0, 0, Variant::Section3), domain_error);
  CHECK_THROWS_AS(c_kn(1, 1, 2, Variant::Section3), domain_error);
}

TEST_CASE("seq_bundle values") {
  SeqBundle b12 = seq_bundle(1, 2, Variant::Section3);
  CHECK(b12.b[0] == Rat(1, 176));

  for (Variant v : {Variant::Section3, Variant::Appendix}) {
    SeqBundle b11 = seq_bundle(1, 1, v);
    REQUIRE(b11.C.size() == 2);
    CHECK(b11.C[0] == Int(1));
    CHECK(b11.C[1] == Int(24));
  }

  SeqBundle b22 = seq_bundle(2, 2, Variant::Section3);
  REQUIRE(b22.C.size() == 3);
  CHECK(b22.C[0] == Int(1));
  CHECK(b22.C[1] == Int(768));
  CHECK(b22.C[2] == Int(188989568));
  CHECK(b22.d_coeff == b22.C);
}

TEST_CASE("variants coincide at n = 1") {
  for (unsigned k = 1; k <= 5; ++k) {
    auto s3 = c_sequence(k, 1, Variant::Section3);
    auto ap = c_sequence(k, 1, Variant::Appendix);
    CHECK(s3 == ap);
  }
}

TEST_CASE("appendix dominates section3 for n >= 2") {
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned n = 2; n <= 6; ++n) {
      auto s3 = c_sequence(k, n, Variant::Section3);
      auto ap = c_sequence(k, n, Variant::Appendix);
      for (unsigned i = 1; i <= k; ++i) CHECK(ap[i] > s3[i]);
      CHECK(ap[0] == s3[0]);
    }
  }
}

TEST_CASE("C strictly increasing, b in (0, 1/2] for n >= 2") {
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned n = 2; n <= 10; ++n) {
      for (Variant v : {Variant::Section3, Variant::Appendix}) {
        SeqBundle sb = seq_bundle(k, n, v);
        for (unsigned i = 1; i <= k; ++i) CHECK(sb.C[i] > sb.C[i - 1]);
        for (const Rat& b : sb.b) {
          CHECK(b.sgn() > 0);
          CHECK(b <= Rat(1, 2));
        }
      }
    }
  }
}

TEST_CASE("Eq1 and Eq3 are exact identities under the appendix variant") {
  for (unsigned k = 1; k <= 5; ++k) {
    for (unsigned n = 1; n <= 10; ++n) {
      AuditReport rep = audit(k, n, Variant::Appendix, cheap_d0(k, n, Variant::Appendix));
      for (unsigned i = 0; i < k; ++i) {
        const CheckRecord* eq1 = rep.find("Eq1", static_cast<int>(i));
        REQUIRE(eq1 != nullptr);
        CHECK(eq1->left == eq1->right);
        const CheckRecord* eq3 = rep.find("Eq3", static_cast<int>(i));
        REQUIRE(eq3 != nullptr);
        CHECK(eq3->left == eq3->right);
      }
      CHECK(rep.all_pass());
    }
  }
}

TEST_CASE("Eq3 is exact under both variants") {
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned n = 1; n <= 10; ++n) {
      for (Variant v : {Variant::Section3, Variant::Appendix}) {
        AuditReport rep = audit(k, n, v, cheap_d0(k, n, v));
        for (unsigned i = 0; i < k; ++i) {
          const CheckRecord* eq3 = rep.find("Eq3", static_cast<int>(i));
          REQUIRE(eq3 != nullptr);
          CHECK(eq3->left == eq3->right);
        }
      }
    }
  }
}

TEST_CASE("Ineq4 holds with exact equality under both variants") {
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned n = 1; n <= 6; ++n) {
      for (Variant v : {Variant::Section3, Variant::Appendix}) {
        AuditReport rep = audit(k, n, v, cheap_d0(k, n, v));
        const CheckRecord* iq4 = rep.find("Ineq4", static_cast<int>(k));
        REQUIRE(iq4 != nullptr);
        CHECK(iq4->left == iq4->right);
        CHECK(iq4->pass);
      }
    }
  }
}

TEST_CASE("section3 variant fails Ineq1 at i = 0 for n >= 2") {
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned n = 2; n <= 6; ++n) {
      AuditReport rep = audit(k, n, Variant::Section3, cheap_d0(k, n, Variant::Section3));
      const CheckRecord* iq1 = rep.find("Ineq1", 0);
      REQUIRE(iq1 != nullptr);
      CHECK_FALSE(iq1->pass);
    }
  }

  // pinned exact witness at k=1, n=2: left 11 d0, right (371/176) d0
  Rat d0 = cheap_d0(1, 2, Variant::Section3);
  AuditReport rep = audit(1, 2, Variant::Section3, d0);
  const CheckRecord* iq1 = rep.find("Ineq1", 0);
  REQUIRE(iq1 != nullptr);
  CHECK(iq1->left == Rat(11) * d0);
  CHECK(iq1->right == Rat(371, 176) * d0);
  CHECK_FALSE(rep.all_pass());
}

TEST_CASE("n = 1 verdicts agree across variants") {
  for (unsigned k = 1; k <= 3; ++k) {
    Rat d0 = cheap_d0(k, 1, Variant::Section3);
    AuditReport a = audit(k, 1, Variant::Section3, d0);
    AuditReport b = audit(k, 1, Variant::Appendix, d0);
    REQUIRE(a.records.size() == b.records.size());
    for (size_t i = 0; i < a.records.size(); ++i) {
      CHECK(a.records[i].check == b.records[i].check);
      CHECK(a.records[i].pass == b.records[i].pass);
      CHECK(a.records[i].left == b.records[i].left);
      CHECK(a.records[i].right == b.records[i].right);
    }
  }
}

TEST_CASE("audit domain") {
  CHECK_THROWS_AS(audit(1, 2, Variant::Appendix, Rat(0)), domain_error);
  CHECK_THROWS_AS(audit(1, 2, Variant::Appendix, Rat(-1, 10)), domain_error);
  // at or past the asymptote
  Rat x0 = BarrierPoly::get(1, 2, Variant::Appendix)->upper_root_bound();
  CHECK_THROWS_AS(audit(1, 2, Variant::Appendix, x0), domain_error);
}

TEST_CASE("audit serialization") {
  AuditReport rep = audit(1, 2, Variant::Appendix, cheap_d0(1, 2, Variant::Appendix));
  std::string text = rep.text();
  CHECK(text.find("Eq1[i=0]: PASS") != std::string::npos);
  CHECK(text.find("result: PASS") != std::string::npos);
  std::string csv = rep.csv();
  CHECK(csv.rfind("check,i,left,right,verdict\n", 0) == 0);
  CHECK(csv.find("Ineq4,") != std::string::npos);
}

TEST_CASE("lemma A.2 dominance") {
  for (unsigned k : {1u, 2u, 3u}) {
    unsigned n = 2;
    SeqBundle canon = seq_bundle(k, n, Variant::Appendix);
    std::vector<Rat> d, b;
    for (unsigned i = 0; i <= k; ++i) d.emplace_back(canon.C[i]);
    for (unsigned i = 0; i < k; ++i) b.push_back(canon.b[i]);

    LemmaA2Report rep = lemma_a2_check(k, n, d, b);
    CHECK(rep.hypotheses_ok);
    CHECK(rep.dominance_ok);

    // canonical sequences saturate: doubling the last d keeps everything
    d[k] = d[k] * Rat(2);
    LemmaA2Report doubled = lemma_a2_check(k, n, d, b);
    CHECK(doubled.hypotheses_ok);
    CHECK(doubled.dominance_ok);
  }
}

TEST_CASE("lemma A.2 rejects section3 sequences for n = 2") {
  unsigned k = 1, n = 2;
  SeqBundle s3 = seq_bundle(k, n, Variant::Section3);
  std::vector<Rat> d, b;
  for (unsigned i = 0; i <= k; ++i) d.emplace_back(s3.C[i]);
  for (unsigned i = 0; i < k; ++i) b.push_back(s3.b[i]);
  LemmaA2Report rep = lemma_a2_check(k, n, d, b);
  CHECK_FALSE(rep.hypotheses_ok);
  CHECK(rep.detail.find("hypotheses not satisfied") != std::string::npos);
  CHECK(rep.detail.find("Ineq1") != std::string::npos);
}

TEST_CASE("lemma A.2 usage errors") {
  std::vector<Rat> d{Rat(1), Rat(24)};
  std::vector<Rat> b{Rat(1, 176)};
  CHECK_THROWS_AS(lemma_a2_check(2, 2, d, b), usage_error);
  std::vector<Rat> bad_d{Rat(2), Rat(24)};
  CHECK_THROWS_AS(lemma_a2_check(1, 2, bad_d, b), usage_error);
}
