#include <doctest.h>

#include "common/oracles.hpp"
#include "f2/rng.hpp"
#include "f2/walsh.hpp"

using namespace f2;

TEST_CASE("delta and hyperplane spectra") {
  Spectrum delta = wht(DenseSet::singleton(4, 0));
  for (std::int64_t v : delta.raw) CHECK(v == 1);

  const Character g0 = 0b1010;
  DenseSet h = DenseSet::from_predicate(5, [&](GroupElement x) { return parity(g0 & x) == 0; });
  Spectrum hs = wht(h);
  for (std::uint64_t g = 0; g < hs.raw.size(); ++g) {
    if (g == 0 || g == g0)
      CHECK(hs.raw[g] == 16);
    else
      CHECK(hs.raw[g] == 0);
  }
  CHECK(hs.normalized(g0) == Dyadic(mpz_class(1), 1));
}

TEST_CASE("transform matches the double-loop oracle") {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::int64_t> f(1 << 6);
    for (auto& v : f) v = static_cast<std::int64_t>(rng.next_below(41)) - 20;
    CHECK(wht(6, f).raw == oracle::wht(6, f));
  }
}

TEST_CASE("involution: transforming twice scales by 2^m") {
  SplitMix64 rng(22);
  for (int m : {1, 3, 8, 10}) {
    std::vector<std::int64_t> f(std::size_t(1) << m);
    for (auto& v : f) v = static_cast<std::int64_t>(rng.next_below(1001)) - 500;
    Spectrum once = wht(m, f);
    Spectrum twice = wht(m, once.raw);
    for (std::size_t x = 0; x < f.size(); ++x)
      CHECK(twice.raw[x] == f[x] * (std::int64_t(1) << m));
  }
}

TEST_CASE("Parseval holds exactly for random indicators") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    DenseSet a = sample_bernoulli(10, mpq_class(2, 5), rng);
    Spectrum s = wht(a);
    CHECK(s.raw[0] == static_cast<std::int64_t>(a.card()));
    std::int64_t sum = 0;
    std::int64_t bound = static_cast<std::int64_t>(a.card());
    for (std::int64_t v : s.raw) {
      CHECK(std::abs(v) <= bound);
      sum += v * v;
    }
    CHECK(sum == static_cast<std::int64_t>(a.card()) * (std::int64_t(1) << 10));
  }
}

TEST_CASE("convolution: delta, hyperplane, and the direct oracle") {
  Convolution dd = convolve(DenseSet::singleton(6, 0), DenseSet::singleton(6, 0));
  CHECK(dd.value(0) == Dyadic(mpz_class(1), 6));
  CHECK(dd.support().card() == 1);

  const Character g0 = 0b11;
  DenseSet h = DenseSet::from_predicate(6, [&](GroupElement x) { return parity(g0 & x) == 0; });
  Convolution hh = convolve(h, h);
  h.for_each([&](GroupElement x) { CHECK(hh.value(x) == Dyadic(mpz_class(1), 1)); });
  CHECK(hh.support() == h);

  SplitMix64 rng(24);
  for (int trial = 0; trial < 5; ++trial) {
    DenseSet a = sample_bernoulli(8, mpq_class(1, 4), rng);
    DenseSet b = sample_bernoulli(8, mpq_class(1, 3), rng);
    CHECK(convolve(a, b).counts == oracle::convolution_counts(a, b));
  }
}

TEST_CASE("convolution support equals the sumset") {
  SplitMix64 rng(25);
  for (int trial = 0; trial < 10; ++trial) {
    DenseSet a = sample_bernoulli(10, mpq_class(1, 9), rng);
    DenseSet b = sample_bernoulli(10, mpq_class(1, 6), rng);
    if (a.empty() || b.empty()) continue;
    CHECK(convolve(a, b).support() == sumset(a, b));
  }
}

TEST_CASE("convolution theorem: spectrum of counts is the product of spectra") {
  SplitMix64 rng(26);
  DenseSet a = sample_bernoulli(7, mpq_class(1, 3), rng);
  DenseSet b = sample_bernoulli(7, mpq_class(1, 2), rng);
  Convolution c = convolve(a, b);
  Spectrum sc = wht(7, c.counts);
  Spectrum sa = wht(a);
  Spectrum sb = wht(b);
  for (std::size_t g = 0; g < sc.raw.size(); ++g) {
    CHECK(sc.raw[g] == sa.raw[g] * sb.raw[g]);
    // E-normalized form, exact in dyadic rationals
    Character gamma = static_cast<Character>(g);
    CHECK(Dyadic(mpz_class(sc.raw[g]), unsigned(2 * 7)) ==
          sa.normalized(gamma) * sb.normalized(gamma));
  }
}

TEST_CASE("hyperplane scan via the complement spectrum") {
  // A+A = everything: every character qualifies, smallest reported
  HyperplaneScan full = hyperplane_scan(DenseSet::full(5));
  CHECK(full.subspace_gamma == Character{1});
  CHECK(full.subspace_hits == 31);

  // container = hyperplane g0-perp itself
  const Character g0 = 0b101;
  DenseSet h = DenseSet::from_predicate(5, [&](GroupElement x) { return parity(g0 & x) == 0; });
  HyperplaneScan hs = hyperplane_scan(h);
  CHECK(hs.subspace_gamma == g0);
  CHECK(hs.subspace_hits == 1);
  // the complement of h is the odd coset of h: coset branch fires for g0 too
  HyperplaneScan cs = hyperplane_scan(h.complement());
  CHECK(!cs.subspace_gamma.has_value());
  CHECK(cs.coset_gamma == g0);

  // cross-check against a direct per-character scan
  SplitMix64 rng(27);
  for (int trial = 0; trial < 10; ++trial) {
    DenseSet t = sample_bernoulli(7, mpq_class(7, 8), rng);
    HyperplaneScan scan = hyperplane_scan(t);
    std::optional<Character> direct_sub;
    std::optional<Character> direct_coset;
    DenseSet miss = t.complement();
    for (Character g = 1; g < 128; ++g) {
      bool even_clear = true;
      bool odd_clear = true;
      miss.for_each([&](GroupElement s) {
        (parity(g & s) ? odd_clear : even_clear) = false;
      });
      if (even_clear && !direct_sub) direct_sub = g;
      if ((even_clear || odd_clear) && !direct_coset) direct_coset = g;
    }
    CHECK(scan.subspace_gamma == direct_sub);
    CHECK(scan.coset_gamma == direct_coset);
  }
}

TEST_CASE("dimension guards") {
  CHECK_THROWS_AS(convolve(DenseSet(3), DenseSet(4)), std::invalid_argument);
  std::vector<std::int64_t> bad(3);
  CHECK_THROWS_AS(wht_inplace(bad), std::invalid_argument);
  CHECK_THROWS_AS(wht(4, std::vector<std::int64_t>(8)), std::invalid_argument);
}
