#include "f2/increment.hpp"

#include "f2/walsh.hpp"

#include <stdexcept>

namespace f2 {

std::string Stopping::to_string() const {
  if (rule == Rule::plain) return "plain";
  return "metsch(" + std::to_string(d) + ")";
}

Stopping Stopping::parse(const std::string& text) {
  if (text == "plain") return plain();
  for (const char* prefix : {"metsch:", "metsch("}) {
    if (text.rfind(prefix, 0) == 0) {
      std::size_t pos = std::string(prefix).size();
      std::size_t end = text.size() - (text.back() == ')' ? 1 : 0);
      return metsch(std::stoi(text.substr(pos, end - pos)));
    }
  }
  throw std::invalid_argument("bad stopping rule: " + text);
}

int codim_bound(int n, const Dyadic& alpha) {
  if (n < 1) throw std::invalid_argument("codim_bound: n must be >= 1");
  if (alpha.sign() <= 0) throw std::invalid_argument("codim_bound: alpha must be positive");
  mpq_class a = alpha.to_mpq();
  const mpz_class p = a.get_num();
  const mpz_class q = a.get_den();
  if (2 * p > q) return 0;  // A+A is already everything
  // Find the least i with 2^n (q-2p)^i < 2^i (q-p)^i, all in exact integers.
  mpz_class lhs = mpz_class(1) << n;
  mpz_class rhs = 1;
  const mpz_class lfac = q - 2 * p;
  const mpz_class rfac = 2 * (q - p);
  for (int i = 0; i <= n; ++i) {
    if (lhs < rhs) return i;
    lhs *= lfac;
    rhs *= rfac;
  }
  throw std::logic_error("codim_bound: no i <= n satisfied the power inequality");
}

std::optional<std::pair<IterationStep, Subspace>> iteration_step(const DenseSet& aa,
                                                                 const Subspace& v,
                                                                 const Dyadic& alpha) {
  if (aa.dim() != v.ambient_dim())
    throw std::invalid_argument("iteration_step: dimension mismatch");
  if (alpha.sign() <= 0) throw std::invalid_argument("iteration_step: alpha must be positive");

  const DenseSet s_ambient = v.members().minus(aa);
  if (s_ambient.empty()) return std::nullopt;

  const int m = v.dim();
  const DenseSet s = v.pullback(s_ambient);
  const Spectrum spectrum = wht(s);

  Character gamma = 0;
  std::int64_t min_raw = 0;
  for (std::uint64_t g = 1; g < spectrum.raw.size(); ++g) {
    if (spectrum.raw[g] < min_raw) {
      min_raw = spectrum.raw[g];
      gamma = static_cast<Character>(g);
    }
  }
  if (min_raw >= 0)
    throw std::logic_error("iteration_step: S nonempty but no negative coefficient");

  // The guarantee behind the cut, cross-multiplied:
  // |raw| * (q - p) >= p * |S|, i.e. |S-hat(gamma)| >= alpha/(1-alpha) P_V(S).
  mpq_class a = alpha.to_mpq();
  const mpz_class p = a.get_num();
  const mpz_class q = a.get_den();
  if (mpz_class(-min_raw) * (q - p) < p * mpz_class(s.card()))
    throw std::logic_error("iteration_step: negative coefficient below the increment guarantee");

  const Character lift = v.lift_character(gamma);
  const Subspace vnext = v.intersect_perp(lift);
  if (vnext.dim() != m - 1)
    throw std::logic_error("iteration_step: cut did not drop the dimension by one");

  const DenseSet snext = vnext.members().minus(aa);
  // Exact halving identity: |S'| = (|S| + raw(gamma)) / 2.
  if (2 * static_cast<std::int64_t>(snext.card()) !=
      static_cast<std::int64_t>(s_ambient.card()) + min_raw)
    throw std::logic_error("iteration_step: halving identity violated");

  IterationStep step;
  step.codim_before = v.codim();
  step.gamma_local = gamma;
  step.gamma_lift = lift;
  step.density_s_before = Dyadic(mpz_class(s_ambient.card()), static_cast<unsigned>(m));
  step.density_s_after = Dyadic(mpz_class(snext.card()), static_cast<unsigned>(m - 1));
  step.contraction_bound = mpq_class(q - 2 * p, q - p);
  step.contraction_bound.canonicalize();
  return std::make_pair(step, vnext);
}

namespace {

// Metsch-rule threshold: |S| < 2^{dim(V)+1-d}, where exponents <= 0 mean
// the condition only passes once S is empty.
bool metsch_fires(std::uint64_t s_card, int dim_v, int d) {
  const int e = dim_v + 1 - d;
  if (e <= 0) return s_card == 0;
  if (e >= 64) return true;
  return s_card < (std::uint64_t(1) << e);
}

}  // namespace

FinderReport find_subspace(const DenseSet& a, Stopping stopping) {
  if (a.empty()) throw std::invalid_argument("find_subspace: A is empty");
  const int n = a.dim();
  if (stopping.rule == Stopping::Rule::metsch && (stopping.d < 1 || stopping.d > n))
    throw std::invalid_argument("find_subspace: metsch dimension out of range");

  FinderReport report;
  report.n = n;
  report.alpha = a.density();
  report.stopping = stopping;
  report.theorem_bound = codim_bound(n, report.alpha);
  report.final_subspace = Subspace::full(n);

  const DenseSet aa = sumset(a, a);
  Subspace v = Subspace::full(n);
  bool located = false;

  while (true) {
    if (stopping.rule == Stopping::Rule::metsch) {
      const std::uint64_t s_card = v.members().minus(aa).card();
      if (metsch_fires(s_card, v.dim(), stopping.d)) {
        if (v.dim() < stopping.d)
          throw std::domain_error(
              "find_subspace: iteration bottomed out below the requested metsch dimension");
        if (auto found = subspace_of_dim_in(v.pullback(aa), stopping.d)) {
          std::vector<GroupElement> ambient_basis;
          for (GroupElement b : found->basis())
            ambient_basis.push_back(v.element_from_coordinates(b));
          report.final_subspace = Subspace::span_of(n, ambient_basis);
          located = true;
          break;
        }
        // |S| = 2^{dim+1-d} - 1 can be a blocking set (the bound is tight);
        // take another step and retry.
      }
    }
    auto step = iteration_step(aa, v, report.alpha);
    if (!step) {
      report.final_subspace = v;
      located = true;
      break;
    }
    step->first.step_index = static_cast<int>(report.steps.size()) + 1;
    report.steps.push_back(step->first);
    v = step->second;
    if (static_cast<int>(report.steps.size()) > n)
      throw std::logic_error("find_subspace: iteration exceeded the ambient dimension");
  }

  if (!located) throw std::logic_error("find_subspace: loop ended without a subspace");
  report.achieved_codim = static_cast<int>(report.steps.size());
  report.verified = verify_report(a, report, aa).ok;
  return report;
}

VerifyResult verify_report(const DenseSet& a, const FinderReport& report) {
  return verify_report(a, report, sumset(a, a));
}

VerifyResult verify_report(const DenseSet& a, const FinderReport& report, const DenseSet& aa) {
  VerifyResult res;
  auto fail = [&](const std::string& msg) {
    res.ok = false;
    res.diagnostics.push_back(msg);
  };
  try {
    if (a.empty()) {
      fail("input set is empty");
      return res;
    }
    if (aa.dim() != a.dim()) {
      fail("sumset dimension mismatch");
      return res;
    }
    const int n = a.dim();
    if (report.n != n) fail("report n does not match the set");
    const Dyadic alpha = a.density();
    if (!(report.alpha == alpha)) fail("report alpha is not the exact density");
    if (report.theorem_bound != codim_bound(n, alpha)) fail("theorem bound mismatch");
    if (report.achieved_codim != static_cast<int>(report.steps.size()))
      fail("achieved_codim is not the number of steps");

    mpq_class aq = alpha.to_mpq();
    mpq_class bound_q;
    if (aq != 1) {  // alpha = 1 admits no steps; the ratio is undefined there
      bound_q = mpq_class(aq.get_den() - 2 * aq.get_num(), aq.get_den() - aq.get_num());
      bound_q.canonicalize();
    } else if (!report.steps.empty()) {
      fail("steps recorded for the full set");
      return res;
    }

    Subspace v = Subspace::full(n);
    for (std::size_t i = 0; i < report.steps.size(); ++i) {
      const IterationStep& st = report.steps[i];
      if (st.step_index != static_cast<int>(i) + 1)
        fail("step " + std::to_string(i + 1) + ": bad step_index");
      if (st.codim_before != v.codim())
        fail("step " + std::to_string(i + 1) + ": bad codim_before");
      if (st.gamma_lift != v.lift_character(st.gamma_local))
        fail("step " + std::to_string(i + 1) + ": lift does not match the local character");
      const Dyadic before(mpz_class(v.members().minus(aa).card()),
                          static_cast<unsigned>(v.dim()));
      if (!(before == st.density_s_before))
        fail("step " + std::to_string(i + 1) + ": recorded density before the cut is wrong");
      Subspace vnext = v.intersect_perp(st.gamma_lift);
      if (vnext.dim() != v.dim() - 1)
        fail("step " + std::to_string(i + 1) + ": cut does not have relative codimension 1");
      const Dyadic after(mpz_class(vnext.members().minus(aa).card()),
                         static_cast<unsigned>(vnext.dim()));
      if (!(after == st.density_s_after))
        fail("step " + std::to_string(i + 1) + ": recorded density after the cut is wrong");
      if (!(st.contraction_bound == bound_q))
        fail("step " + std::to_string(i + 1) + ": recorded contraction bound is wrong");
      if (after.to_mpq() > bound_q * before.to_mpq())
        fail("step " + std::to_string(i + 1) + ": contraction inequality violated");
      v = vnext;
    }

    if (report.stopping.rule == Stopping::Rule::plain) {
      if (report.achieved_codim > report.theorem_bound)
        fail("achieved codimension exceeds the theorem bound");
      if (!(report.final_subspace == v)) fail("final subspace is not the last iterate");
      if (!v.members().minus(aa).empty()) fail("last iterate still misses part of A+A");
    } else {
      if (report.final_subspace.dim() != report.stopping.d)
        fail("final subspace does not have the requested dimension");
      const std::uint64_t s_card = v.members().minus(aa).card();
      if (!metsch_fires(s_card, v.dim(), report.stopping.d))
        fail("metsch threshold had not fired at the recorded stopping point");
      for (GroupElement b : report.final_subspace.basis())
        if (!v.contains(b)) fail("final subspace is not inside the last iterate");
    }
    if (!report.final_subspace.members().is_subset_of(aa))
      fail("final subspace is not contained in A+A");
  } catch (const std::exception& e) {
    fail(std::string("exception during verification: ") + e.what());
  }
  return res;
}

}  // namespace f2
