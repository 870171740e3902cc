#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "f2/dyadic.hpp"

namespace f2 {

// Elements of F2^n are integers in [0, 2^n); bit i is the coordinate along
// the standard basis vector e_{i+1}.  Group addition is XOR.
using GroupElement = std::uint32_t;

// Characters are identified with masks: gamma(x) = (-1)^parity(gamma & x).
using Character = std::uint32_t;

inline int weight(GroupElement x) { return std::popcount(x); }
inline int zero_count(int n, GroupElement x) { return n - std::popcount(x); }
inline int parity(std::uint32_t a) { return std::popcount(a) & 1; }
// +1 / -1 value of the character pairing <gamma, x>
inline int pairing(Character gamma, GroupElement x) { return parity(gamma & x) ? -1 : 1; }

// Dense representation caps at 2^28 bits (32 MiB per set).
inline constexpr int kMaxDenseDim = 28;

// A subset of F2^n stored as a 2^n-bit array with cached cardinality.
// Values are immutable in normal use: operations return new sets, and the
// few mutators exist for construction.
class DenseSet {
 public:
  explicit DenseSet(int n);
  static DenseSet full(int n);
  static DenseSet singleton(int n, GroupElement x);
  static DenseSet from_elements(int n, const std::vector<GroupElement>& elems);
  template <class Pred>
  static DenseSet from_predicate(int n, Pred keep) {
    DenseSet s(n);
    for (std::uint64_t x = 0; x < s.universe_; ++x)
      if (keep(static_cast<GroupElement>(x))) s.insert(static_cast<GroupElement>(x));
    return s;
  }

  int dim() const { return n_; }
  std::uint64_t universe_size() const { return universe_; }
  std::uint64_t card() const { return card_; }
  bool empty() const { return card_ == 0; }
  bool is_full() const { return card_ == universe_; }

  bool contains(GroupElement x) const {
    return (words_[x >> 6] >> (x & 63)) & 1;
  }
  void insert(GroupElement x);
  void erase(GroupElement x);

  Dyadic density() const { return Dyadic(mpz_class(card_), static_cast<unsigned>(n_)); }

  DenseSet complement() const;
  DenseSet operator&(const DenseSet& o) const;
  DenseSet operator|(const DenseSet& o) const;
  // set difference: elements of *this not in o
  DenseSet minus(const DenseSet& o) const;
  // {x ^ a : x in this}
  DenseSet translate(GroupElement a) const;

  bool is_subset_of(const DenseSet& o) const;
  bool operator==(const DenseSet& o) const { return n_ == o.n_ && words_ == o.words_; }

  std::vector<GroupElement> elements() const;  // ascending
  template <class Fn>
  void for_each(Fn fn) const {  // ascending element order
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        fn(static_cast<GroupElement>((i << 6) + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  // OR the translate of src by a into this set's bits (bulk kernel used by
  // sumset and Hamming expansion).  Same-dimension sets only.
  void accumulate_translate(const DenseSet& src, GroupElement a);

 private:
  friend DenseSet sumset(const DenseSet& a, const DenseSet& b);

  // accumulate_translate without the range checks and the recount
  void or_translate_words(const DenseSet& src, GroupElement a);
  void check_same_dim(const DenseSet& o) const;
  void recount();

  int n_;
  std::uint64_t universe_;
  std::uint64_t card_;
  std::vector<std::uint64_t> words_;
};

Dyadic density(const DenseSet& a);

// {a ^ b : a in A, b in B}; bit-parallel shift-and-OR over the smaller set.
DenseSet sumset(const DenseSet& a, const DenseSet& b);

DenseSet intersect(const DenseSet& a, const DenseSet& b);
DenseSet unite(const DenseSet& a, const DenseSet& b);
inline bool member(const DenseSet& a, GroupElement x) { return a.contains(x); }

}  // namespace f2
