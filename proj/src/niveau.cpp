#include "f2/niveau.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace f2 {

namespace {

// floor(n/2 - (eta/2) sqrt(2 pi n)) when subtract_from_half, otherwise
// floor(eta sqrt(2 pi n)).  Evaluated as an interval with directed
// rounding; precision doubles until both endpoints floor the same way.
long floor_threshold(int n, const mpq_class& eta, bool subtract_from_half,
                     mpfr_prec_t prec = 320) {
  // eta * sqrt(2 pi n), rounded in the requested direction (eta > 0)
  auto eval = [&](mpfr_t out, mpfr_rnd_t rnd) {
    mpfr_t q;
    mpfr_init2(q, prec);
    mpfr_const_pi(out, rnd);
    mpfr_mul_ui(out, out, 2 * static_cast<unsigned long>(n), rnd);
    mpfr_sqrt(out, out, rnd);
    mpfr_set_q(q, eta.get_mpq_t(), rnd);
    mpfr_mul(out, out, q, rnd);
    mpfr_clear(q);
  };
  mpfr_t lo, hi;
  mpfr_init2(lo, prec);
  mpfr_init2(hi, prec);
  eval(lo, MPFR_RNDD);
  eval(hi, MPFR_RNDU);
  if (subtract_from_half) {
    // [n/2 - hi/2, n/2 - lo/2]
    mpfr_div_2ui(lo, lo, 1, MPFR_RNDD);
    mpfr_div_2ui(hi, hi, 1, MPFR_RNDU);
    mpfr_ui_sub(lo, 0, lo, MPFR_RNDU);
    mpfr_ui_sub(hi, 0, hi, MPFR_RNDD);
    mpfr_swap(lo, hi);
    mpfr_add_d(lo, lo, 0.5 * n, MPFR_RNDD);  // n/2 exact in double for n < 2^52
    mpfr_add_d(hi, hi, 0.5 * n, MPFR_RNDU);
  }
  mpfr_floor(lo, lo);
  mpfr_floor(hi, hi);
  long f_lo = mpfr_get_si(lo, MPFR_RNDN);
  long f_hi = mpfr_get_si(hi, MPFR_RNDN);
  mpfr_clear(lo);
  mpfr_clear(hi);
  if (f_lo != f_hi) {
    if (prec >= 1 << 16)
      throw std::runtime_error("floor_threshold: value sits on an integer boundary");
    return floor_threshold(n, eta, subtract_from_half, prec * 2);
  }
  return f_lo;
}

}  // namespace

NiveauParams NiveauParams::make(int n, const mpq_class& epsilon) {
  if (n < 1) throw std::invalid_argument("NiveauParams: n must be >= 1");
  if (epsilon <= 0 || epsilon > mpq_class(1, 2))
    throw std::invalid_argument("NiveauParams: epsilon must be in (0, 1/2]");
  NiveauParams p;
  p.n = n;
  p.epsilon = epsilon;
  p.eta = mpq_class(4, 5) * epsilon;
  p.eta.canonicalize();
  p.w_star = static_cast<int>(floor_threshold(n, p.eta, /*half=*/true));
  p.d = static_cast<int>(floor_threshold(n, p.eta, /*half=*/false));
  if (p.w_star < 0)
    throw std::domain_error("NiveauParams: weight threshold is negative for these parameters");
  if (n - 2 * p.w_star < p.d)
    throw std::logic_error("NiveauParams: zero bound exceeds the sumset weight gap");
  return p;
}

DenseSet niveau_set(const NiveauParams& params) {
  return DenseSet::from_predicate(params.n,
                                  [&](GroupElement x) { return params.contains(x); });
}

Dyadic exact_density(int n, int w_star) {
  if (n < 1 || w_star < 0 || w_star > n)
    throw std::invalid_argument("exact_density: need 0 <= w_star <= n");
  mpz_class total = 0;
  mpz_class binom;
  for (int k = 0; k <= w_star; ++k) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    total += binom;
  }
  return Dyadic(total, static_cast<unsigned>(n));
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

DensityBounds density_bounds_check(const NiveauParams& params) {
  DensityBounds out;
  out.exact = exact_density(params.n, params.w_star);
  const double eta = params.eta.get_d();
  out.berry_esseen_lower =
      normal_cdf(-eta * std::sqrt(2.0 * M_PI)) - 3.2 / std::sqrt(double(params.n));
  out.target_density = mpq_class(1, 2) - params.epsilon;
  out.target_density.canonicalize();
  out.holds = out.exact.to_mpq() > out.target_density;
  // epsilon * sqrt(n) >= 4  <=>  epsilon^2 * n >= 16, exactly
  out.regime_ok = params.epsilon * params.epsilon * params.n >= 16;
  return out;
}

bool sumset_weight_bound_check(const NiveauParams& params, GroupElement x) {
  return zero_count(params.n, x) >= params.n - 2 * params.w_star;
}

std::optional<GroupElement> codim_witness(const NiveauParams& params, const Subspace& v) {
  if (v.ambient_dim() != params.n)
    throw std::invalid_argument("codim_witness: dimension mismatch");
  if (v.codim() > params.d)
    throw std::invalid_argument("codim_witness: codimension exceeds the zero bound d");
  auto vec = low_zero_vector(v);
  if (!vec) return std::nullopt;  // dim(V) = 0 never happens under the precondition
  if (zero_count(params.n, *vec) < params.n - 2 * params.w_star) return vec;
  return std::nullopt;
}

}  // namespace f2
