#include <doctest.h>

#include "vgt/barrier.hpp"
#include "vgt/scidec.hpp"

using namespace vgt;

namespace {

const Rat kTight(Int(1), Int::ten_pow(9));

// independent bisection oracle for 10^(k+2) C x (1 + x/2k)^k = t, written
// against the product form rather than BarrierPoly's coefficients
Enc oracle_barrier_root(long scale, long k, const Rat& t, const Rat& rel) {
  auto p = [&](const Rat& x) {
    return Rat(scale) * x * rat_pow(Rat(1) + x / Rat(2 * k), k);
  };
  Rat lo(0);
  Rat hi(1);
  while (p(hi) < t) hi = hi * Rat(2);
  for (int iter = 0; iter < 4000; ++iter) {
    if (!lo.is_zero() && hi - lo <= rel * lo) break;
    Rat mid = (lo + hi) / Rat(2);
    if (p(mid) < t)
      lo = mid;
    else
      hi = mid;
  }
  return Enc(lo, hi);
}

}  // namespace

TEST_CASE("gamma closed forms") {
  for (long c : {2, 3, 7}) {
    for (unsigned n : {1u, 2u, 5u}) {
      CHECK(gamma(Rat(c), Rat(c), n) == Rat(1, 2));
    }
  }
  Rat e(7, 3);
  CHECK(gamma(Rat(10) * e, e, 2) == Rat(1, 101));
  CHECK(gamma(Rat(2), Rat(1), 3) == Rat(1, 9));
}

TEST_CASE("gamma domain") {
  CHECK_THROWS_AS(gamma(Rat(1), Rat(1), 2), domain_error);
  CHECK_THROWS_AS(gamma(Rat(1, 2), Rat(1), 2), domain_error);
  CHECK_THROWS_AS(gamma(Rat(2), Rat(0), 2), domain_error);
  CHECK_THROWS_AS(gamma(Rat(2), Rat(-1), 2), domain_error);
  CHECK_THROWS_AS(gamma(Rat(2), Rat(1), 0), domain_error);
}

TEST_CASE("gamma at the first published defect value") {
  Enc x = h_inv(1, 1, Variant::Section3, Rat(2), kTight);
  Enc g = gamma_enc(Enc(Rat(2)), x, 1);
  CHECK(to_scidec(g, 3).str() == "1.04e-5");
}

TEST_CASE("barrier polynomial shape") {
  auto bp = BarrierPoly::get(2, 3, Variant::Section3);
  CHECK(bp->eval(Rat(0)) == Rat(0));
  CHECK(bp->coefficients().size() == 4);
  CHECK(bp->coefficients()[0] == Rat(0));
  // strictly increasing on a few sample points
  Rat x1 = bp->upper_root_bound() / Rat(7);
  Rat x2 = bp->upper_root_bound() / Rat(3);
  Rat x3 = bp->upper_root_bound();
  CHECK(bp->eval(x1) < bp->eval(x2));
  CHECK(bp->eval(x2) < bp->eval(x3));
  CHECK(BarrierPoly::get(2, 3, Variant::Section3).get() == bp.get());

  // product form and coefficient form agree
  Rat prod = Rat(Int::ten_pow(4) * bp->constant()) * x2 * rat_pow(Rat(1) + x2 / Rat(4), 2);
  CHECK(bp->eval(x2) == prod);
}

TEST_CASE("h_eval basics") {
  CHECK(h_eval(1, 1, Variant::Section3, Rat(0)) == Rat(1));
  CHECK(h_eval(2, 2, Variant::Appendix, Rat(0)) == Rat(1));
  Rat x0 = BarrierPoly::get(1, 1, Variant::Section3)->upper_root_bound();
  CHECK(h_eval(1, 1, Variant::Section3, x0 / Rat(3)) <
        h_eval(1, 1, Variant::Section3, x0 / Rat(2)));
  CHECK_THROWS_AS(h_eval(1, 1, Variant::Section3, x0), domain_error);
  CHECK_THROWS_AS(h_eval(1, 1, Variant::Section3, Rat(-1)), domain_error);
}

TEST_CASE("h_inv against the independent oracle") {
  // 24000 x (1 + x/2) = 1/2, frozen from the oracle
  Enc ref = oracle_barrier_root(24000, 1, Rat(1, 2), Rat(Int(1), Int::ten_pow(12)));
  CHECK(to_scidec(ref, 5).str() == "2.0833e-5");

  Enc x = h_inv(1, 1, Variant::Section3, Rat(2), kTight);
  CHECK(x.intersects(ref));
  CHECK(to_scidec(x, 5).str() == "2.0833e-5");

  // 384000 x (1 + x/2) = 1/2 feeds the (1,2) defect entry
  Enc ref2 = oracle_barrier_root(384000, 1, Rat(1, 2), Rat(Int(1), Int::ten_pow(12)));
  CHECK(to_scidec(ref2, 5).str() == "1.3021e-6");
  Enc x2 = h_inv(1, 2, Variant::Section3, Rat(2), kTight);
  CHECK(x2.intersects(ref2));
}

TEST_CASE("h round trip") {
  for (long c : {2, 5, 1000}) {
    Enc x = h_inv(1, 1, Variant::Section3, Rat(c), kTight);
    CHECK(h_eval(1, 1, Variant::Section3, x.lo()) <= Rat(c));
    CHECK(h_eval(1, 1, Variant::Section3, x.hi()) >= Rat(c));
  }
  Enc x = h_inv(2, 2, Variant::Appendix, Rat(3, 2), kTight);
  CHECK(h_eval(2, 2, Variant::Appendix, x.lo()) <= Rat(3, 2));
  CHECK(h_eval(2, 2, Variant::Appendix, x.hi()) >= Rat(3, 2));
}

TEST_CASE("h_inv requires c > 1") {
  CHECK_THROWS_AS(h_inv(1, 1, Variant::Section3, Rat(1), kTight), domain_error);
  CHECK_THROWS_AS(h_inv(1, 1, Variant::Section3, Rat(1, 2), kTight), domain_error);
}

TEST_CASE("h_inv is monotone in c") {
  Enc prev = h_inv(1, 2, Variant::Section3, Rat(3, 2), kTight);
  for (long c : {2, 4, 100, 100000}) {
    Enc cur = h_inv(1, 2, Variant::Section3, Rat(c), kTight);
    CHECK(prev.hi() < cur.lo());
    prev = cur;
  }
}

TEST_CASE("h_inv approaches delta as c grows") {
  for (auto [k, n] : {std::pair{1u, 1u}, {1u, 3u}, {2u, 2u}}) {
    Enc d = delta_kn(k, n, Variant::Section3, kTight);
    Enc x = h_inv(k, n, Variant::Section3, Rat(1000000), kTight);
    CHECK(x.hi() <= d.hi());
    // within relative 10 * (1/c) of delta
    CHECK((d.hi() - x.lo()) / d.lo() <= Rat(1, 100000));
  }
}

TEST_CASE("delta enclosures reproduce the published abscissas") {
  CHECK(to_scidec(delta_kn(1, 1, Variant::Section3, kTight), 3).str() == "4.17e-5");
  CHECK(to_scidec(delta_kn(2, 2, Variant::Section3, kTight), 3).str() == "5.29e-13");
  CHECK(to_scidec(delta_kn(3, 3, Variant::Section3, kTight), 3).str() == "7.34e-66");
}

TEST_CASE("delta certificate") {
  for (auto [k, n] : {std::pair{1u, 1u}, {2u, 3u}, {3u, 4u}}) {
    for (Variant v : {Variant::Section3, Variant::Appendix}) {
      auto bp = BarrierPoly::get(k, n, v);
      Enc d = delta_kn(k, n, v, kTight);
      CHECK(bp->eval(d.lo()) < Rat(1));
      CHECK(bp->eval(d.hi()) > Rat(1));
      CHECK(d.rel_width() <= kTight);
      // delta < 10^-(k+2)/C since (1 + delta/2k)^k > 1
      CHECK(d.hi() <= bp->upper_root_bound());
      CHECK(d.lo() < bp->upper_root_bound());
    }
  }
}

TEST_CASE("appendix delta sits below section3 delta for n >= 2") {
  for (auto [k, n] : {std::pair{1u, 2u}, {2u, 2u}, {2u, 3u}}) {
    Enc app = delta_kn(k, n, Variant::Appendix, kTight);
    Enc s3 = delta_kn(k, n, Variant::Section3, kTight);
    CHECK(app.hi() < s3.lo());
  }
}

TEST_CASE("excess bound") {
  Enc zero = excess_bound(Rat(0), Rat(5), 3);
  CHECK(zero.is_point());
  CHECK(zero.lo() == Rat(0));

  // n = 2 makes the exponent 1: exactly 8 * (1/2) = 4
  Enc four = excess_bound(Rat(1), Rat(2), 2);
  CHECK(four.is_point());
  CHECK(four.lo() == Rat(4));

  // 8 / sqrt(8): frozen from the sqrt oracle digits 2.8284271
  Enc e = excess_bound(Rat(1), Rat(8), 3, Rat(Int(1), Int::ten_pow(9)));
  CHECK(to_scidec(e, 6).str() == "2.82843e0");

  CHECK_THROWS_AS(excess_bound(Rat(2), Rat(3), 3), domain_error);   // h > s/2
  CHECK_THROWS_AS(excess_bound(Rat(1), Rat(0), 3), domain_error);   // s = 0
  CHECK_THROWS_AS(excess_bound(Rat(-1), Rat(8), 3), domain_error);  // h < 0
  CHECK_THROWS_AS(excess_bound(Rat(1), Rat(8), 1), domain_error);   // n < 2
}
