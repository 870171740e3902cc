#include <doctest.h>

#include "common/oracles.hpp"
#include "f2/concentration.hpp"
#include "f2/rng.hpp"

using namespace f2;

TEST_CASE("hamming ball basics") {
  SplitMix64 rng(71);
  DenseSet a = sample_bernoulli(8, mpq_class(1, 10), rng);
  CHECK(ham_ball(a, 0) == a);
  CHECK(ham_ball(DenseSet::singleton(8, 0), 8).is_full());

  // frozen: |Ham_2({0})| at n=8 is 1 + 8 + 28 = 37
  CHECK(ham_ball(DenseSet::singleton(8, 0), 2).card() == 37);

  // monotone and compositional
  DenseSet b1 = ham_ball(a, 1);
  DenseSet b3 = ham_ball(a, 3);
  CHECK(a.is_subset_of(b1));
  CHECK(b1.is_subset_of(b3));
  CHECK(ham_ball(b1, 2) == b3);

  // matches a per-point expansion
  DenseSet direct(8);
  a.for_each([&](GroupElement x) {
    direct.insert(x);
    for (int i = 0; i < 8; ++i) direct.insert(x ^ (GroupElement(1) << i));
  });
  CHECK(b1 == direct);

  CHECK_THROWS_AS(ham_ball(a, -1), std::invalid_argument);
}

TEST_CASE("basis set mapping") {
  BasisSet std6 = BasisSet::standard(6);
  CHECK(std6.apply(0b10110) == 0b10110);
  CHECK(std6.apply_inverse(0b10110) == 0b10110);

  SplitMix64 rng(72);
  for (int trial = 0; trial < 10; ++trial) {
    BasisSet e = random_basis(7, rng);
    for (int probe = 0; probe < 50; ++probe) {
      GroupElement x = static_cast<GroupElement>(rng.next_below(128));
      CHECK(e.apply_inverse(e.apply(x)) == x);
      CHECK(e.apply(e.apply_inverse(x)) == x);
    }
    DenseSet s = sample_bernoulli(7, mpq_class(1, 3), rng);
    CHECK(e.map_back(e.map_through(s)) == s);
    CHECK(e.map_through(s).card() == s.card());
  }

  CHECK_THROWS_AS(BasisSet::of(3, {1, 2, 3}), std::invalid_argument);  // rank 2
  CHECK(BasisSet::of(3, {1, 2, 4}).f_set().card() == 4);
}

TEST_CASE("mcdiarmid inequality") {
  SplitMix64 rng(73);
  // r >= n: full expansion, lhs = 1
  DenseSet tiny = DenseSet::singleton(10, 77);
  ConcentrationCheck full = mcdiarmid_check(tiny, 10);
  CHECK(full.lhs == Dyadic(1));
  CHECK(full.holds);

  // r = 0: rhs = 1 - 1/P(A) <= 0, vacuous
  ConcentrationCheck vac = mcdiarmid_check(tiny, 0);
  CHECK(vac.rhs <= 0.0);
  CHECK(vac.holds);

  CHECK_THROWS_AS(mcdiarmid_check(DenseSet(6), 1), std::invalid_argument);

  for (int trial = 0; trial < 200; ++trial) {
    DenseSet a = sample_exact_card(10, 1 + rng.next_below(1023), rng);
    int r = static_cast<int>(rng.next_below(12));
    CHECK(mcdiarmid_check(a, r).holds);
  }
}

TEST_CASE("basis expansion reduces to the hamming ball for the standard basis") {
  SplitMix64 rng(74);
  BasisSet std9 = BasisSet::standard(9);
  for (int trial = 0; trial < 10; ++trial) {
    DenseSet a = sample_bernoulli(9, mpq_class(1, 6), rng);
    if (a.empty()) continue;
    int r = static_cast<int>(rng.next_below(5));
    CHECK(basis_expand(a, std9, r) == ham_ball(a, r));
    BasisGrowthCheck g = basis_growth_check(a, std9, r);
    CHECK(g.covers);
    CHECK(g.expanded == g.ball_image);  // equality in the standard basis
  }
}

TEST_CASE("growth containment and concentration for random bases") {
  SplitMix64 rng(75);
  for (int trial = 0; trial < 30; ++trial) {
    BasisSet e = random_basis(9, rng);
    DenseSet a = sample_exact_card(9, 1 + rng.next_below(511), rng);
    int r = static_cast<int>(rng.next_below(6));
    BasisGrowthCheck g = basis_growth_check(a, e, r);
    CHECK(g.covers);
    // in characteristic 2 repeated directions cancel, so the containment
    // is in fact an equality for every basis
    CHECK(g.expanded == g.ball_image);
    CHECK(basis_concentration_check(a, e, r).holds);
    CHECK(basis_expand(a, e, 0) == a);
  }
}
