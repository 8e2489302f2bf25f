#include <catch2/catch_amalgamated.hpp>

#include "qsmzv/hpoly.hpp"

using namespace qsmzv;

TEST_CASE("rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(1, -2).to_string() == "-1/2");
  CHECK(Rational::parse("22/9") == Rational(22, 9));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), Error);
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(3, 5) == Rational(0));
  CHECK(factorial(5) == Rational(120));
}

TEST_CASE("hbar_eval examples") {
  CHECK(hbar_eval(HPoly::hbar(), Rational(1, 2)) == Rational(1, 2));
  CHECK(hbar_eval(HPoly(1), Rational(1, 3)) == Rational(1));
  // h^2 + 2 at q = 1/3: (2/3)^2 + 2 = 22/9
  HPoly p = HPoly::hbar() * HPoly::hbar() + HPoly(2);
  CHECK(hbar_eval(p, Rational(1, 3)) == Rational(22, 9));
}

TEST_CASE("hbar divisibility") {
  auto [f1, q1] = hbar_divides(HPoly::hbar());
  CHECK(f1);
  CHECK(q1 == HPoly(1));

  auto [f2, q2] = hbar_divides(HPoly(1) + HPoly::hbar());
  CHECK_FALSE(f2);

  // 2h^2 + 3h -> 2h + 3
  HPoly p = HPoly::monomial(Rational(2), 2) + HPoly::monomial(Rational(3), 1);
  auto [f3, q3] = hbar_divides(p);
  CHECK(f3);
  CHECK(q3 == HPoly::monomial(Rational(2), 1) + HPoly(3));
}

TEST_CASE("hbar_eval is a ring homomorphism") {
  std::vector<HPoly> polys = {HPoly(0), HPoly(3), HPoly::hbar(),
                              HPoly::monomial(Rational(1, 2), 2) + HPoly(1),
                              HPoly::monomial(Rational(-3), 1) + HPoly::monomial(Rational(2), 3)};
  std::vector<Rational> qs = {Rational(1, 2), Rational(1, 3), Rational(2, 5)};
  for (auto& p : polys)
    for (auto& r : polys)
      for (auto& q : qs) {
        CHECK(hbar_eval(p * r, q) == hbar_eval(p, q) * hbar_eval(r, q));
        CHECK(hbar_eval(p + r, q) == hbar_eval(p, q) + hbar_eval(r, q));
      }
}

TEST_CASE("divisibility matches vanishing at q = 1") {
  std::vector<HPoly> polys = {HPoly(0), HPoly(3), HPoly::hbar(),
                              HPoly::monomial(Rational(1, 2), 2),
                              HPoly(1) + HPoly::hbar()};
  for (auto& p : polys)
    CHECK(hbar_divides(p).first == hbar_eval(p, Rational(1)).is_zero());
}
