#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f2/dense_set.hpp"
#include "f2/dyadic.hpp"
#include "f2/subspace.hpp"

namespace f2 {

// One step of the density increment: inside V, the complement S of A+A has
// a negative Fourier coefficient of size at least alpha/(1-alpha) * P_V(S);
// cutting V by that character contracts the relative density of S by
// (1-2*alpha)/(1-alpha), exactly.
struct IterationStep {
  int step_index = 0;    // 1-based
  int codim_before = 0;  // codimension of V before the cut
  Character gamma_local = 0;   // chosen character in V's coordinate space
  Character gamma_lift = 0;    // the same character lifted to the ambient group
  Dyadic density_s_before;     // P_V(V \ (A+A))
  Dyadic density_s_after;      // P_{V'}(V' \ (A+A))
  mpq_class contraction_bound;  // (1-2*alpha)/(1-alpha)
};

struct Stopping {
  enum class Rule { plain, metsch };
  Rule rule = Rule::plain;
  int d = 0;  // metsch target dimension

  static Stopping plain() { return {Rule::plain, 0}; }
  static Stopping metsch(int d) { return {Rule::metsch, d}; }
  std::string to_string() const;
  static Stopping parse(const std::string& text);
};

struct FinderReport {
  int n = 0;
  Dyadic alpha;               // exact density of A in G
  Stopping stopping;
  std::vector<IterationStep> steps;
  Subspace final_subspace = Subspace::zero(1);
  int achieved_codim = 0;     // number of steps == codim of the last iterate
  int theorem_bound = 0;      // plain-rule codimension bound for (n, alpha)
  bool verified = false;
};

// Smallest i with 2^{n-i} * ((1-2a)/(1-a))^i < 1, evaluated by exact
// rational power comparison; equals ceil(n / log2((2-2a)/(1-2a))) for
// a < 1/2.  Returns 1 at a = 1/2 and 0 for a > 1/2 (A+A is everything).
int codim_bound(int n, const Dyadic& alpha);

// One cut, or nullopt once V \ AA is empty.  alpha must be the exact
// density of A in the ambient group; AA must be sumset(A, A).
std::optional<std::pair<IterationStep, Subspace>> iteration_step(const DenseSet& aa,
                                                                 const Subspace& v,
                                                                 const Dyadic& alpha);

// Iterate from V_0 = G.  Plain rule: stop when V_i \ (A+A) is empty and
// return V_i.  Metsch rule: stop as soon as |V_i \ (A+A)| < 2^{n-i+1-d}
// and return a dimension-d subspace located inside (A+A) cap V_i.
FinderReport find_subspace(const DenseSet& a, Stopping stopping = Stopping::plain());

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

// Recompute A+A, replay the recorded cuts, and recheck inclusion, the
// per-step densities and contractions, and the codimension bound.
VerifyResult verify_report(const DenseSet& a, const FinderReport& report);

// Same checks with the sumset already in hand; find_subspace's self-check
// uses this to skip one recomputation.
VerifyResult verify_report(const DenseSet& a, const FinderReport& report, const DenseSet& aa);

}  // namespace f2
