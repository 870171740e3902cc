#include <doctest.h>

#include <stdexcept>

#include "common/oracles.hpp"
#include "f2/dense_set.hpp"
#include "f2/rng.hpp"

using namespace f2;

TEST_CASE("construction and capacity") {
  DenseSet a(4);
  CHECK(a.universe_size() == 16);
  CHECK(a.empty());
  CHECK_THROWS_AS(DenseSet(0), std::invalid_argument);
  CHECK_THROWS_AS(DenseSet(29), std::length_error);
  CHECK(DenseSet::full(5).card() == 32);
  CHECK(DenseSet::full(8).density() == Dyadic(1));
  CHECK(DenseSet(8).density() == Dyadic(0));
}

TEST_CASE("density of a weight ball matches the binomial oracle") {
  // frozen ahead of the build: sum_{k<=7} C(16,k) = 26333
  CHECK(oracle::binomial_tail(16, 7) == 26333);
  DenseSet a = DenseSet::from_predicate(16, [](GroupElement x) { return weight(x) <= 7; });
  CHECK(a.density() == Dyadic(mpz_class(26333), 16));
}

TEST_CASE("set algebra") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    DenseSet a = sample_bernoulli(9, mpq_class(1, 3), rng);
    DenseSet b = sample_bernoulli(9, mpq_class(1, 2), rng);
    CHECK(a.complement().complement() == a);
    CHECK((a & a.complement()).empty());
    CHECK((a | a.complement()) == DenseSet::full(9));
    // inclusion-exclusion recount
    CHECK((a | b).card() + (a & b).card() == a.card() + b.card());
    CHECK(a.minus(b) == (a & b.complement()));
  }
  CHECK(DenseSet(6).complement() == DenseSet::full(6));
  CHECK_THROWS_AS(DenseSet(4) & DenseSet(5), std::invalid_argument);
}

TEST_CASE("translate is an involution and preserves cardinality") {
  SplitMix64 rng(12);
  for (int n : {3, 5, 6, 7, 11}) {
    DenseSet a = sample_bernoulli(n, mpq_class(1, 2), rng);
    GroupElement t = static_cast<GroupElement>(rng.next_below(a.universe_size()));
    DenseSet shifted = a.translate(t);
    CHECK(shifted.card() == a.card());
    CHECK(shifted.translate(t) == a);
    a.for_each([&](GroupElement x) { CHECK(shifted.contains(x ^ t)); });
  }
}

TEST_CASE("sumset against the definitional oracle") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    DenseSet a = sample_bernoulli(10, mpq_class(1, 5), rng);
    DenseSet b = sample_bernoulli(10, mpq_class(1, 7), rng);
    CHECK(sumset(a, b) == oracle::sumset(a, b));
  }
}

TEST_CASE("sumset edge cases") {
  SplitMix64 rng(14);
  DenseSet a = sample_bernoulli(7, mpq_class(1, 2), rng);
  CHECK(sumset(a, DenseSet(7)).empty());  // empty summand
  // a subspace is closed under addition
  DenseSet h = DenseSet::from_predicate(7, [](GroupElement x) { return parity(x & 0x55u) == 0; });
  CHECK(sumset(h, h) == h);
  CHECK_THROWS_AS(sumset(DenseSet(3), DenseSet(4)), std::invalid_argument);
}

TEST_CASE("dense sets above density 1/2 have full sumset") {
  SplitMix64 rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + static_cast<int>(rng.next_below(9));  // 4..12
    std::uint64_t half = std::uint64_t(1) << (n - 1);
    std::uint64_t card = half + 1 + rng.next_below(half);
    DenseSet a = sample_exact_card(n, card, rng);
    CHECK(sumset(a, a).is_full());
  }
}

TEST_CASE("element iteration is ascending") {
  DenseSet a = DenseSet::from_elements(6, {5, 1, 63, 17});
  CHECK(a.elements() == std::vector<GroupElement>{1, 5, 17, 63});
  CHECK(a.card() == 4);
  a.erase(17);
  CHECK(a.card() == 3);
  a.erase(17);  // no-op
  CHECK(a.card() == 3);
  CHECK_THROWS_AS(a.insert(64), std::out_of_range);
}
