#pragma once

// Brute-force reference implementations used only by tests.  Each one
// follows the defining formula directly so it stays independent of the
// library's fast paths.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

#include "f2/dense_set.hpp"
#include "f2/subspace.hpp"

namespace oracle {

// Spectrum by the defining double loop.
inline std::vector<std::int64_t> wht(int m, const std::vector<std::int64_t>& f) {
  const std::uint64_t size = std::uint64_t(1) << m;
  std::vector<std::int64_t> out(size, 0);
  for (std::uint64_t g = 0; g < size; ++g)
    for (std::uint64_t x = 0; x < size; ++x)
      out[g] += f2::parity(static_cast<std::uint32_t>(g & x)) ? -f[x] : f[x];
  return out;
}

// Convolution counts |A cap (x + B)| by the defining double loop.
inline std::vector<std::int64_t> convolution_counts(const f2::DenseSet& a,
                                                    const f2::DenseSet& b) {
  std::vector<std::int64_t> out(a.universe_size(), 0);
  a.for_each([&](f2::GroupElement x) {
    b.for_each([&](f2::GroupElement y) { out[x ^ y] += 1; });
  });
  return out;
}

// Sumset by the defining double loop.
inline f2::DenseSet sumset(const f2::DenseSet& a, const f2::DenseSet& b) {
  f2::DenseSet out(a.dim());
  a.for_each([&](f2::GroupElement x) {
    b.for_each([&](f2::GroupElement y) { out.insert(x ^ y); });
  });
  return out;
}

// Binomial tail by Pascal's triangle (addition only).
inline mpz_class binomial_tail(int n, int w) {
  std::vector<mpz_class> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<mpz_class> next(i + 1, 1);
    for (int k = 1; k < i; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  mpz_class total = 0;
  for (int k = 0; k <= w && k <= n; ++k) total += row[k];
  return total;
}

// Every subspace of F2^n, enumerated through reduced echelon bases: choose
// descending pivots, then fill each row's free positions (below its pivot,
// off the other pivots) in every possible way.
inline std::vector<std::vector<f2::GroupElement>> all_subspace_bases(int n) {
  std::vector<std::vector<f2::GroupElement>> out;
  out.push_back({});  // the zero subspace
  std::vector<int> pivots;
  std::function<void(int)> choose = [&](int next) {
    for (int p = next; p >= 0; --p) {
      pivots.push_back(p);
      // free slots for this pivot set: below the row's pivot, off the others
      std::vector<std::pair<int, int>> slots;
      for (std::size_t r = 0; r < pivots.size(); ++r)
        for (int j = 0; j < pivots[r]; ++j) {
          bool is_pivot = false;
          for (int q : pivots) is_pivot |= (q == j);
          if (!is_pivot) slots.emplace_back(static_cast<int>(r), j);
        }
      for (std::uint64_t fill = 0; fill < (std::uint64_t(1) << slots.size()); ++fill) {
        std::vector<f2::GroupElement> rows(pivots.size());
        for (std::size_t r = 0; r < pivots.size(); ++r)
          rows[r] = f2::GroupElement(1) << pivots[r];
        for (std::size_t s = 0; s < slots.size(); ++s)
          if ((fill >> s) & 1)
            rows[slots[s].first] |= f2::GroupElement(1) << slots[s].second;
        out.push_back(rows);
      }
      choose(p - 1);
      pivots.pop_back();
    }
  };
  choose(n - 1);
  return out;
}

// Elements of the span of the rows.
inline std::vector<f2::GroupElement> span_elements(const std::vector<f2::GroupElement>& rows) {
  std::vector<f2::GroupElement> out{0};
  for (f2::GroupElement r : rows) {
    std::size_t half = out.size();
    for (std::size_t i = 0; i < half; ++i) out.push_back(out[i] ^ r);
  }
  return out;
}

}  // namespace oracle
