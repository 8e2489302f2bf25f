#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qsmzv/freealg.hpp"
#include "qsmzv/io.hpp"

using namespace qsmzv;

TEST_CASE("index stats") {
  auto s = index_stats({2, 3});
  CHECK(s.wt == 5);
  CHECK(s.dep == 2);
  CHECK(s.rev == Index{3, 2});
  CHECK(s.admissible);

  auto e = index_stats({});
  CHECK(e.wt == 0);
  CHECK(e.dep == 0);
  CHECK(e.rev.empty());
  CHECK(e.admissible);

  auto t = index_stats({3, 1});
  CHECK(t.wt == 4);
  CHECK(t.rev == Index{1, 3});
  CHECK_FALSE(t.admissible);
}

TEST_CASE("hoffman dual") {
  CHECK(hoffman_dual({3, 1, 2, 1}) == Index{1, 1, 3, 2});
  CHECK(hoffman_dual({}) == Index{});
  for (int k = 1; k <= 6; ++k) CHECK(hoffman_dual({k}) == Index(static_cast<size_t>(k), 1));
  // involution on all indices of weight <= 10
  for (int w = 0; w <= 10; ++w)
    for (auto& k : compositions(w)) CHECK(hoffman_dual(hoffman_dual(k)) == k);
}

TEST_CASE("e-shape") {
  auto s = e_shape({1, 3, 1});
  CHECK(s.s0 == 1);
  REQUIRE(s.blocks.size() == 1);
  CHECK(s.blocks[0] == std::pair<int, int>{1, 1});

  auto s2 = e_shape({1, 1});
  CHECK(s2.s0 == 2);
  CHECK(s2.blocks.empty());

  auto s3 = e_shape({2});
  CHECK(s3.s0 == 0);
  REQUIRE(s3.blocks.size() == 1);
  CHECK(s3.blocks[0] == std::pair<int, int>{0, 0});

  for (int w = 1; w <= 10; ++w)
    for (auto& k : compositions(w)) CHECK(e_shape_assemble(e_shape(k)) == k);
}

TEST_CASE("expand_A on letters") {
  CHECK(expand_A(AWord{2}) == NCPoly::monomial("baa"));
  CHECK(expand_A(AWord{kH}) == NCPoly::monomial("b", HPoly::hbar()));
  // e_2 = g_2 + h g_1
  CHECK(e_word(2) == NCPoly::monomial("baa") + NCPoly::monomial("ba", HPoly::hbar()));
}

TEST_CASE("to_A_basis") {
  APoly a = to_A_basis(e_word(1));
  REQUIRE(a.size() == 2);
  CHECK(a.at(AWord{1}) == HPoly(1));
  CHECK(a.at(AWord{kH}) == HPoly(1));

  CHECK_THROWS_AS(to_A_basis(NCPoly::monomial("a")), NotInSubalgebra);
  CHECK_THROWS_AS(to_A_basis(NCPoly::monomial("b")), NotInSubalgebra);
  CHECK_THROWS_AS(to_A_basis(NCPoly::monomial("bab")), NotInSubalgebra);

  APoly b = to_A_basis(NCPoly::monomial("baa", HPoly::hbar()));
  REQUIRE(b.size() == 1);
  CHECK(b.at(AWord{2}) == HPoly::hbar());
}

TEST_CASE("expand round-trips through to_A_basis") {
  std::mt19937_64 rng(12345);
  auto pool = awords_up_to_weight(8);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    APoly p;
    for (int t = 0; t < 3; ++t) {
      int c = coeff(rng);
      if (c == 0) continue;
      apoly_add(p, pool[pick(rng)], HPoly::monomial(Rational(c), deg(rng)));
    }
    CHECK(to_A_basis(expand_A(p)) == p);
  }
}

TEST_CASE("membership examples") {
  NCPoly Hg2 = hb_word() * g_word(2);   // (e1-g1) g2
  NCPoly Hg1 = hb_word() * g_word(1);   // (e1-g1) g1
  CHECK(membership(Hg2, Space::n0));
  CHECK(membership(Hg2, Space::n));
  CHECK_FALSE(membership(Hg1, Space::n0));
  CHECK_FALSE(membership(Hg1, Space::n));
  CHECK(membership(g_word(2), Space::H0));
  CHECK_FALSE(membership(g_word(1), Space::H0));
  CHECK(membership(g_word(1), Space::Hhat0));
  CHECK(membership(g_word(Index{1, 2}), Space::Zspan_adm));
  CHECK_FALSE(membership(g_word(Index{2, 1}), Space::Zspan_adm));
  CHECK_FALSE(membership(HPoly(Rational(1, 2)) * g_word(2), Space::Zspan_adm));
  CHECK(membership(hb_word(), Space::gspan) == false);
  CHECK(membership(g_word(Index{1, 1}), Space::gspan));
}

TEST_CASE("membership monotonicity") {
  auto words = awords_up_to_weight(5);
  for (auto& w : words) {
    NCPoly p = expand_A(w);
    if (membership(p, Space::n0)) CHECK(membership(p, Space::n));
    if (membership(p, Space::n)) CHECK(membership(p, Space::Hhat0));
    if (membership(p, Space::H0)) CHECK(membership(p, Space::Hhat0));
    if (membership(p, Space::Hhat0)) CHECK(membership(hbar_times(p), Space::n));
  }
}

TEST_CASE("printing round-trips") {
  NCPoly p = HPoly(Rational(1, 2)) * g_word(Index{1, 2}) + hb_word() * g_word(1) -
             HPoly::monomial(Rational(3), 2) * e_word(2);
  CHECK_FALSE(to_string(p).empty());
}
