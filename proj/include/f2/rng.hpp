#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "f2/concentration.hpp"
#include "f2/dense_set.hpp"
#include "f2/subspace.hpp"

namespace f2 {

// SplitMix64, implemented from Vigna's published reference so any language
// can reproduce the stream bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased value in [0, bound) by masked rejection; draws are portable.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// Uniform among subsets of F2^n of the given cardinality, realized as a
// seeded partial Fisher-Yates shuffle of [0, 2^n).
DenseSet sample_exact_card(int n, std::uint64_t card, SplitMix64& rng);

// Same shuffle over [1, 2^n): uniform subsets of G \ {0}.
DenseSet sample_exact_card_nonzero(int n, std::uint64_t card, SplitMix64& rng);

// Include each element independently with rational probability p.
DenseSet sample_bernoulli(int n, const mpq_class& p, SplitMix64& rng);

GroupElement random_nonzero(int n, SplitMix64& rng);

// Random subspace of the given codimension: perp of c independent
// characters drawn from the stream.
Subspace random_subspace_of_codim(int n, int c, SplitMix64& rng);

// Random basis of F2^n: masks drawn from the stream, dependent draws skipped.
BasisSet random_basis(int n, SplitMix64& rng);

}  // namespace f2
