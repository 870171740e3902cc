#pragma once

#include <cstdint>
#include <vector>

#include "f2/dense_set.hpp"
#include "f2/dyadic.hpp"

namespace f2 {

// A basis E = {e_1, ..., e_n} of F2^n together with the coordinate
// bijection phi_E(x) = XOR_{i: x_i = 1} e_i and its inverse.
class BasisSet {
 public:
  static BasisSet standard(int n);
  static BasisSet of(int n, std::vector<GroupElement> vectors);  // must have rank n

  int dim() const { return n_; }
  const std::vector<GroupElement>& vectors() const { return vectors_; }

  GroupElement apply(GroupElement x) const;          // phi_E
  GroupElement apply_inverse(GroupElement y) const;  // phi_E^{-1}

  // F = E union {0} as a dense set
  DenseSet f_set() const;

  DenseSet map_through(const DenseSet& a) const;  // image under phi_E
  DenseSet map_back(const DenseSet& a) const;     // image under phi_E^{-1}

 private:
  BasisSet(int n, std::vector<GroupElement> vectors, std::vector<GroupElement> inverse)
      : n_(n), vectors_(std::move(vectors)), inverse_(std::move(inverse)) {}

  int n_;
  std::vector<GroupElement> vectors_;
  std::vector<GroupElement> inverse_;  // rows of phi_E^{-1} in the same convention
};

// Points within Hamming distance r of A: r rounds of single-bit-flip
// expansion, word-parallel over all n directions.
DenseSet ham_ball(const DenseSet& a, int r);

// A + rF computed by r successive sumsets with F = E union {0}.
DenseSet basis_expand(const DenseSet& a, const BasisSet& e, int r);

// Cube concentration: P(Ham_r(A)) >= 1 - exp(-r^2/2n) / P(A).  The left
// side is exact; the right uses doubles, compared with 1e-12 slack.
struct ConcentrationCheck {
  Dyadic lhs;
  double rhs = 0.0;
  bool holds = false;
};

ConcentrationCheck mcdiarmid_check(const DenseSet& a, int r);

// Same inequality with A + rF on the left (any basis E).
ConcentrationCheck basis_concentration_check(const DenseSet& a, const BasisSet& e, int r);

// A + rF contains the phi_E-transported Hamming ball; equality for the
// standard basis.
struct BasisGrowthCheck {
  DenseSet expanded;    // A + rF
  DenseSet ball_image;  // phi_E(Ham_r(phi_E^{-1}(A)))
  bool covers = false;
};

BasisGrowthCheck basis_growth_check(const DenseSet& a, const BasisSet& e, int r);

}  // namespace f2
