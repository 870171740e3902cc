#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "f2/dense_set.hpp"

namespace f2 {

// A subspace of F2^n in canonical reduced echelon form.
//
// Basis rows have distinct pivots (the pivot of a row is its highest set
// bit), pivots are strictly decreasing down the rows, and no row contains
// another row's pivot bit.  This form is unique per subspace, so equality
// of bases is equality of subspaces.  The annihilator is the canonical
// basis of {gamma : <gamma, b> = 0 for every basis row b}.
class Subspace {
 public:
  static Subspace full(int n);
  static Subspace zero(int n);
  static Subspace span_of(int n, std::span<const GroupElement> vectors);
  // {x : parity(gamma & x) = 0 for all gammas}; codimension = rank of gammas
  static Subspace perp(int n, std::span<const Character> gammas);

  int ambient_dim() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int codim() const { return n_ - dim(); }

  const std::vector<GroupElement>& basis() const { return basis_; }
  const std::vector<Character>& annihilator() const { return annihilator_; }

  bool contains(GroupElement x) const { return reduce(x) == 0; }

  // Minimum element of the coset x + V: clears every pivot bit of x.
  GroupElement reduce(GroupElement x) const;

  // phi_B: coordinate y in F2^dim to the element XOR_{i: y_i = 1} b_i where
  // b_i is the basis row with the i-th smallest pivot.  The identity map
  // when V is the full space.
  GroupElement element_from_coordinates(std::uint32_t y) const;

  // Character gamma on coordinate space F2^dim lifted to a mask on F2^n
  // agreeing with gamma on V (zero coefficients on non-pivot positions).
  Character lift_character(Character gamma_local) const;

  // V cut by one more character of the ambient group.
  Subspace intersect_perp(Character gamma_ambient) const;

  DenseSet members() const;

  // {y in F2^dim : phi_B(y) in T}.  pushforward is its inverse on V.
  DenseSet pullback(const DenseSet& t) const;
  DenseSet pushforward(const DenseSet& s) const;

  // Minimal representatives of the 2^codim cosets of V, ascending.
  std::vector<GroupElement> coset_reps() const;

  bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }

 private:
  Subspace(int n, std::vector<GroupElement> echelon_basis);

  int n_;
  std::vector<GroupElement> basis_;        // echelon, pivots descending
  std::vector<Character> annihilator_;     // echelon basis of the dual kernel
};

// A + A decomposes over cosets: this restricts A to the coset with minimal
// representative rep and recenters it as a subset of coordinate space,
// {y : phi_B(y) ^ rep in A}.  rep must be coset-minimal.
DenseSet coset_restrict(const DenseSet& a, const Subspace& v, GroupElement rep);

// Maximum-dimension subspace contained in T (0 must be in T), by canonical
// depth-first basis extension: every new basis vector is the minimum of its
// coset modulo the current span, candidates tried in ascending order.
// Returns the first maximum found in that order.  Intended for n <= 14.
Subspace max_subspace_in(const DenseSet& t);

// First dimension-d subspace inside T in the same canonical order, or
// nullopt when T contains none.
std::optional<Subspace> subspace_of_dim_in(const DenseSet& t, int d);

// A vector of V with at most codim(V) zero coordinates, built by solving
// for coordinate value 1 on a maximal independent set of coordinate
// positions (greedy lowest positions first).  nullopt only for dim(V) = 0.
std::optional<GroupElement> low_zero_vector(const Subspace& v);

// Blocking-set bound: a set S in G \ {0} meeting every dimension-d
// subspace has |S| >= 2^{n+1-d} - 1.
std::uint64_t metsch_bound(int n, int d);

// A dimension-d subspace disjoint from S (0 must not be in S), or nullopt
// when S blocks every one.  Must succeed whenever |S| < metsch_bound(n,d).
std::optional<Subspace> metsch_witness(const DenseSet& s, int d);

}  // namespace f2
