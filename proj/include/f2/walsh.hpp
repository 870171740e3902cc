#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "f2/dense_set.hpp"
#include "f2/dyadic.hpp"

namespace f2 {

// Exact unnormalized Walsh-Hadamard spectrum of an integer-valued function
// on F2^m: raw[gamma] = sum_x f(x) * (-1)^<gamma,x>.  The normalized Fourier
// coefficient is raw[gamma] / 2^m, a dyadic rational.
struct Spectrum {
  int m = 0;
  std::vector<std::int64_t> raw;

  Dyadic normalized(Character gamma) const {
    return Dyadic(mpz_class(raw[gamma]), static_cast<unsigned>(m));
  }
};

// In-place unnormalized butterfly; v.size() must be a power of two.
// Applying it twice multiplies every entry by v.size().
void wht_inplace(std::vector<std::int64_t>& v);

Spectrum wht(const DenseSet& indicator);
Spectrum wht(int m, std::vector<std::int64_t> values);

// E-normalized XOR convolution of two indicators:
//   (1_A * 1_B)(x) = E_y 1_A(y) 1_B(x ^ y) = counts[x] / 2^m
// where counts[x] = |A cap (x + B)|.  Computed through the spectra; exact.
struct Convolution {
  int m = 0;
  std::vector<std::int64_t> counts;

  Dyadic value(GroupElement x) const {
    return Dyadic(mpz_class(counts[x]), static_cast<unsigned>(m));
  }
  DenseSet support() const;
};

Convolution convolve(const DenseSet& a, const DenseSet& b);

// Characters gamma whose hyperplane gamma^perp (or one of its cosets) lies
// inside `container`, read off the spectrum of the complement:
//   |S cap gamma^perp| = (|S| + raw_S[gamma]) / 2   for S = complement.
// Smallest qualifying gamma is reported; nullopt when none exists.
struct HyperplaneScan {
  std::optional<Character> subspace_gamma;  // gamma^perp itself contained
  std::optional<Character> coset_gamma;     // some coset of gamma^perp contained
  std::uint64_t subspace_hits = 0;          // number of qualifying gammas
  std::uint64_t coset_hits = 0;
};

HyperplaneScan hyperplane_scan(const DenseSet& container);

}  // namespace f2
