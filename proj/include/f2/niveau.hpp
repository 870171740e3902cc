#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>

#include "f2/dense_set.hpp"
#include "f2/dyadic.hpp"
#include "f2/subspace.hpp"

namespace f2 {

// Parameters of the low-weight construction: members are the points with
// at most w_star ones, so every element of A+A has at least n - 2*w_star
// zero coordinates, while the density stays above 1/2 - epsilon.
struct NiveauParams {
  int n = 0;
  mpq_class epsilon;  // in (0, 1/2]
  mpq_class eta;      // 0.8 * epsilon
  int w_star = 0;     // floor(n/2 - eta*sqrt(2*pi*n)/2)
  int d = 0;          // floor(eta*sqrt(2*pi*n))

  static NiveauParams make(int n, const mpq_class& epsilon);

  // weight-threshold membership; valid for any n up to the mask width
  bool contains(GroupElement x) const { return weight(x) <= w_star; }
};

// Dense materialization; n <= 28.
DenseSet niveau_set(const NiveauParams& params);

// sum_{k <= w_star} C(n, k) / 2^n, exact.
Dyadic exact_density(int n, int w_star);

// Standard normal CDF via std::erfc; absolute error well below 1e-12.
double normal_cdf(double z);

struct DensityBounds {
  Dyadic exact;
  double berry_esseen_lower = 0.0;  // Phi(-eta*sqrt(2*pi)) - 3.2/sqrt(n)
  mpq_class target_density;         // 1/2 - epsilon
  bool holds = false;               // exact > 1/2 - epsilon
  bool regime_ok = false;           // epsilon * sqrt(n) >= 4
};

DensityBounds density_bounds_check(const NiveauParams& params);

// Does x have at least n - 2*w_star zeros?  True for every x in A+A.
bool sumset_weight_bound_check(const NiveauParams& params, GroupElement x);

// A vector of V with too few zeros to lie in A+A, when one is forced;
// nullopt means the floor-boundary case was hit and nothing is claimed.
// Requires codim(V) <= d.
std::optional<GroupElement> codim_witness(const NiveauParams& params, const Subspace& v);

}  // namespace f2
