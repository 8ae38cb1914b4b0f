#include "doctest.h"
#include "lenstab/laurent.hpp"

using namespace lenstab;

TEST_CASE("LaurentA arithmetic") {
  LaurentA a = LaurentA::mono(1, 2) + LaurentA::mono(3, -1);
  LaurentA b = LaurentA::mono(-1, 0) + LaurentA::mono(1, 2);
  CHECK((a + b).str() == "2A^2 - 1 + 3A^-1");
  CHECK((a - a).is_zero());
  LaurentA p = a * b;
  CHECK(p == LaurentA::mono(1, 4) + LaurentA::mono(-1, 2) + LaurentA::mono(3, 1) +
                 LaurentA::mono(-3, -1));
  CHECK(LaurentA::delta().str() == "-A^2 - A^-2");
  CHECK(LaurentA(2).pow(3) == LaurentA(8));
  CHECK(LaurentA::mono(1, 1).bar() == LaurentA::mono(1, -1));
}

TEST_CASE("LaurentA exact division") {
  LaurentA d = LaurentA::delta();
  LaurentA f = LaurentA::mono(1, 5) + LaurentA::mono(-2, 0) + LaurentA::mono(7, -3);
  LaurentA prod = d * d * f;
  LaurentA q;
  REQUIRE(LaurentA::try_divide(prod, d, q));
  CHECK(q == d * f);
  REQUIRE(LaurentA::try_divide(q, d, q));
  CHECK(q == f);
  CHECK_FALSE(LaurentA::try_divide(f, d, q));
  // divisible values stay divisible after unit shifts
  LaurentA shifted = prod;
  shifted.mulmono(-1, 3);
  REQUIRE(LaurentA::try_divide(shifted, d, q));
}

TEST_CASE("LaurentVZ arithmetic") {
  LaurentVZ dh = LaurentVZ::delta_h();
  CHECK(dh.str() == "-v z^-1 + v^-1 z^-1");
  LaurentVZ x = LaurentVZ::mono(1, 2, 0) + LaurentVZ::mono(1, 0, 2);
  CHECK((x * x) == LaurentVZ::mono(1, 4, 0) + LaurentVZ::mono(2, 2, 2) + LaurentVZ::mono(1, 0, 4));
  // v -> -v^-1 fixes v^-1 - v, so delta_h is bar-invariant
  CHECK(dh.bar() == dh);
  CHECK((dh * LaurentVZ::mono(1, 0, 1)) == LaurentVZ::mono(1, -1, 0) + LaurentVZ::mono(-1, 1, 0));
  CHECK(x.min_z_exp() == 0);
  CHECK(dh.min_z_exp() == -1);
}
