#include <doctest.h>

#include <random>

#include "vgt/enclosure.hpp"
#include "vgt/scidec.hpp"

using namespace vgt;

namespace {

// independent bisection oracle for y^r = x, kept free of root_enclosure
Enc oracle_root(const Rat& x, unsigned r, const Rat& rel) {
  Rat lo = x < Rat(1) ? x : Rat(1);
  Rat hi = x < Rat(1) ? Rat(1) : x;
  while (hi - lo > rel * lo) {
    Rat mid = (lo + hi) / Rat(2);
    if (rat_pow(mid, r) < x)
      lo = mid;
    else
      hi = mid;
  }
  return Enc(lo, hi);
}

}  // namespace

TEST_CASE("root_enclosure exact cases") {
  Enc e = root_enclosure(Rat(1, 4), 2, Rat(1, 1000));
  CHECK(e.is_point());
  CHECK(e.lo() == Rat(1, 2));

  Enc cube = root_enclosure(Rat(27, 64), 3, Rat(1, 1000));
  CHECK(cube.is_point());
  CHECK(cube.lo() == Rat(3, 4));

  Rat x(5, 7);
  Enc ident = root_enclosure(x, 1, Rat(1, 1000));
  CHECK(ident.is_point());
  CHECK(ident.lo() == x);

  CHECK(root_enclosure(Rat(0), 4, Rat(1, 1000)).is_point());
}

TEST_CASE("root_enclosure of 1/8 against the bisection oracle") {
  // frozen from the oracle: sqrt(1/8) = 3.5355339e-1 to eight digits
  Enc ref = oracle_root(Rat(1, 8), 2, Rat(Int(1), Int::ten_pow(12)));
  CHECK(to_scidec(ref, 8).str() == "3.5355339e-1");

  Enc e = root_enclosure(Rat(1, 8), 2, Rat(Int(1), Int::ten_pow(6)));
  CHECK(rat_pow(e.lo(), 2) <= Rat(1, 8));
  CHECK(rat_pow(e.hi(), 2) >= Rat(1, 8));
  CHECK(e.rel_width() <= Rat(Int(1), Int::ten_pow(6)));
  CHECK(e.intersects(ref));
  CHECK(to_scidec(root_enclosure(Rat(1, 8), 2, Rat(Int(1), Int::ten_pow(12))), 8).str() ==
        "3.5355339e-1");
}

TEST_CASE("root_enclosure domain") {
  CHECK_THROWS_AS(root_enclosure(Rat(-1), 2, Rat(1, 10)), domain_error);
  CHECK_THROWS_AS(root_enclosure(Rat(1), 0, Rat(1, 10)), domain_error);
  CHECK_THROWS_AS(root_enclosure(Rat(1), 2, Rat(0)), domain_error);
}

TEST_CASE("root_enclosure always brackets") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(1, 100000);
  std::uniform_int_distribution<long> den(1, 100000);
  std::uniform_int_distribution<unsigned> rr(1, 5);
  for (int trial = 0; trial < 120; ++trial) {
    Rat x(num(rng), den(rng));
    unsigned r = rr(rng);
    Enc wide = root_enclosure(x, r, Rat(1, 1000));
    CHECK(rat_pow(wide.lo(), r) <= x);
    CHECK(rat_pow(wide.hi(), r) >= x);
    // shrinking the tolerance never moves the bracket off x
    Enc tight = root_enclosure(x, r, Rat(Int(1), Int::ten_pow(9)));
    CHECK(rat_pow(tight.lo(), r) <= x);
    CHECK(rat_pow(tight.hi(), r) >= x);
    CHECK(tight.width() <= wide.width());
  }
}

TEST_CASE("bisect_increasing finds sqrt(2)") {
  auto square = [](const Rat& y) { return y * y; };
  Enc e = bisect_increasing(square, Rat(2), Rat(1), Rat(2), Rat(Int(1), Int::ten_pow(12)));
  CHECK(e.lo() * e.lo() <= Rat(2));
  CHECK(e.hi() * e.hi() >= Rat(2));
  CHECK(to_scidec(e, 10).str() == "1.414213562e0");
}

TEST_CASE("bisect_increasing exact hit collapses") {
  auto cube = [](const Rat& y) { return y * y * y; };
  Enc e = bisect_increasing(cube, Rat(27, 8), Rat(1), Rat(2), Rat(1, 1000000));
  CHECK(e.is_point());
  CHECK(e.lo() == Rat(3, 2));
}

TEST_CASE("enclosure basics") {
  CHECK_THROWS_AS(Enc(Rat(2), Rat(1)), std::invalid_argument);
  Enc e(Rat(1, 3), Rat(1, 2));
  CHECK(e.contains(Rat(2, 5)));
  CHECK_FALSE(e.contains(Rat(2)));
  CHECK(e.rel_width() == (Rat(1, 2) - Rat(1, 3)) / Rat(1, 3));
  CHECK(Enc(Rat(5)).rel_width() == Rat(0));

  Enc flipped = Enc::one_minus(e);
  CHECK(flipped.lo() == Rat(1, 2));
  CHECK(flipped.hi() == Rat(2, 3));

  Enc r = e.outward_rounded(64);
  CHECK(r.contains(e));
  CHECK(r.rel_width() <= e.rel_width() * Rat(2));

  CHECK(Enc::max(Enc(Rat(1), Rat(3)), Enc(Rat(2), Rat(2))).lo() == Rat(2));
  CHECK(Enc::min(Enc(Rat(1), Rat(3)), Enc(Rat(2), Rat(2))).hi() == Rat(2));
  CHECK(Enc(Rat(1), Rat(2)).strictly_below(Enc(Rat(3), Rat(4))));
}

TEST_CASE("dyadic rounding is outward") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> num(1, 1000000000L);
  for (int trial = 0; trial < 100; ++trial) {
    Rat x(num(rng), num(rng));
    CHECK(dyadic_floor(x, 80) <= x);
    CHECK(dyadic_ceil(x, 80) >= x);
    Rat neg = -x;
    CHECK(dyadic_floor(neg, 80) <= neg);
    CHECK(dyadic_ceil(neg, 80) >= neg);
  }
}
