#include "f2/walsh.hpp"

#include <stdexcept>

namespace f2 {

void wht_inplace(std::vector<std::int64_t>& v) {
  const std::size_t n = v.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("wht_inplace: size must be a power of two");
  for (std::size_t len = 1; len < n; len <<= 1) {
    for (std::size_t i = 0; i < n; i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        std::int64_t a = v[j];
        std::int64_t b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
    }
  }
}

Spectrum wht(int m, std::vector<std::int64_t> values) {
  if (m < 1 || m > kMaxDenseDim) throw std::length_error("wht: dimension out of range");
  if (values.size() != (std::size_t(1) << m))
    throw std::invalid_argument("wht: value table has wrong size");
  wht_inplace(values);
  return Spectrum{m, std::move(values)};
}

Spectrum wht(const DenseSet& indicator) {
  std::vector<std::int64_t> v(indicator.universe_size(), 0);
  indicator.for_each([&](GroupElement x) { v[x] = 1; });
  return wht(indicator.dim(), std::move(v));
}

DenseSet Convolution::support() const {
  DenseSet s(m);
  for (std::uint64_t x = 0; x < counts.size(); ++x)
    if (counts[x] != 0) s.insert(static_cast<GroupElement>(x));
  return s;
}

Convolution convolve(const DenseSet& a, const DenseSet& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("convolve: dimension mismatch");
  const int m = a.dim();
  Spectrum fa = wht(a);
  Spectrum fb = wht(b);
  // Indicator spectra keep every butterfly intermediate within
  // sum |fa*fb| <= 2^{2m} (Cauchy-Schwarz), so int64 is exact for m <= 28.
  std::vector<std::int64_t> prod(fa.raw.size());
  for (std::size_t g = 0; g < prod.size(); ++g) prod[g] = fa.raw[g] * fb.raw[g];
  wht_inplace(prod);
  const std::int64_t scale = std::int64_t(1) << m;
  Convolution conv{m, std::move(prod)};
  for (auto& c : conv.counts) {
    if (c % scale != 0)
      throw std::logic_error("convolve: inverse transform not divisible by 2^m");
    c /= scale;
  }
  return conv;
}

HyperplaneScan hyperplane_scan(const DenseSet& container) {
  Spectrum s = wht(container.complement());
  const std::int64_t missing = static_cast<std::int64_t>(s.raw[0]);
  HyperplaneScan out;
  for (std::uint64_t gamma = 1; gamma < s.raw.size(); ++gamma) {
    if (s.raw[gamma] == -missing) {
      ++out.subspace_hits;
      if (!out.subspace_gamma) out.subspace_gamma = static_cast<Character>(gamma);
    }
    if (s.raw[gamma] == missing || s.raw[gamma] == -missing) {
      ++out.coset_hits;
      if (!out.coset_gamma) out.coset_gamma = static_cast<Character>(gamma);
    }
  }
  return out;
}

}  // namespace f2
