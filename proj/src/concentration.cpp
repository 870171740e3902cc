#include "f2/concentration.hpp"

#include <cmath>
#include <stdexcept>

namespace f2 {

namespace {

constexpr double kSlack = 1e-12;

// Rows of the inverse of the matrix with rows `vectors` over GF(2):
// apply_inverse(y) bit i = parity(inverse[i] & y).  Gauss-Jordan on
// (vectors | identity); throws when the rank is deficient.
std::vector<GroupElement> invert_rows(int n, const std::vector<GroupElement>& vectors) {
  std::vector<std::uint64_t> rows(n);
  for (int i = 0; i < n; ++i)
    rows[i] = std::uint64_t(vectors[i]) | (std::uint64_t(1) << (32 + i));
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if ((rows[r] >> c) & 1) {
        p = r;
        break;
      }
    if (p < 0) throw std::invalid_argument("BasisSet: vectors do not form a basis");
    std::swap(rows[c], rows[p]);
    for (int r = 0; r < n; ++r)
      if (r != c && ((rows[r] >> c) & 1)) rows[r] ^= rows[c];
  }
  // rows[c] = unit_c | (comb_c << 32) with XOR_{i in comb_c} e_i = unit_c,
  // so x_i = parity over c of y_c * comb_c[i]: transpose the comb matrix.
  std::vector<GroupElement> inv(n, 0);
  for (int c = 0; c < n; ++c) {
    std::uint32_t comb = static_cast<std::uint32_t>(rows[c] >> 32);
    for (int i = 0; i < n; ++i)
      if ((comb >> i) & 1) inv[i] |= GroupElement(1) << c;
  }
  return inv;
}

}  // namespace

BasisSet BasisSet::standard(int n) {
  std::vector<GroupElement> v(n);
  for (int i = 0; i < n; ++i) v[i] = GroupElement(1) << i;
  return BasisSet(n, v, v);
}

BasisSet BasisSet::of(int n, std::vector<GroupElement> vectors) {
  if (n < 1 || n > kMaxDenseDim) throw std::invalid_argument("BasisSet: bad dimension");
  if (static_cast<int>(vectors.size()) != n)
    throw std::invalid_argument("BasisSet: need exactly n vectors");
  std::vector<GroupElement> inverse = invert_rows(n, vectors);
  return BasisSet(n, std::move(vectors), std::move(inverse));
}

GroupElement BasisSet::apply(GroupElement x) const {
  GroupElement y = 0;
  std::uint32_t bits = x;
  while (bits) {
    y ^= vectors_[std::countr_zero(bits)];
    bits &= bits - 1;
  }
  return y;
}

GroupElement BasisSet::apply_inverse(GroupElement y) const {
  GroupElement x = 0;
  for (int i = 0; i < n_; ++i) x |= GroupElement(parity(inverse_[i] & y)) << i;
  return x;
}

DenseSet BasisSet::f_set() const {
  DenseSet f(n_);
  f.insert(0);
  for (GroupElement e : vectors_) f.insert(e);
  return f;
}

DenseSet BasisSet::map_through(const DenseSet& a) const {
  if (a.dim() != n_) throw std::invalid_argument("BasisSet: dimension mismatch");
  DenseSet out(n_);
  a.for_each([&](GroupElement x) { out.insert(apply(x)); });
  return out;
}

DenseSet BasisSet::map_back(const DenseSet& a) const {
  if (a.dim() != n_) throw std::invalid_argument("BasisSet: dimension mismatch");
  DenseSet out(n_);
  a.for_each([&](GroupElement x) { out.insert(apply_inverse(x)); });
  return out;
}

DenseSet ham_ball(const DenseSet& a, int r) {
  if (r < 0) throw std::invalid_argument("ham_ball: r must be >= 0");
  DenseSet out = a;
  for (int round = 0; round < r; ++round) {
    DenseSet prev = out;
    for (int i = 0; i < a.dim(); ++i)
      out.accumulate_translate(prev, GroupElement(1) << i);
    if (out.is_full()) break;
  }
  return out;
}

DenseSet basis_expand(const DenseSet& a, const BasisSet& e, int r) {
  if (r < 0) throw std::invalid_argument("basis_expand: r must be >= 0");
  if (a.dim() != e.dim()) throw std::invalid_argument("basis_expand: dimension mismatch");
  DenseSet out = a;
  const DenseSet f = e.f_set();
  for (int round = 0; round < r; ++round) {
    out = sumset(out, f);
    if (out.is_full()) break;
  }
  return out;
}

namespace {

ConcentrationCheck check_against(const DenseSet& a, const DenseSet& expanded, int r) {
  if (a.empty()) throw std::invalid_argument("concentration check: A is empty");
  ConcentrationCheck out;
  out.lhs = expanded.density();
  const double n = static_cast<double>(a.dim());
  const double rr = static_cast<double>(r);
  out.rhs = 1.0 - std::exp(-rr * rr / (2.0 * n)) / a.density().to_double();
  out.holds = out.lhs.to_double() >= out.rhs - kSlack;
  return out;
}

}  // namespace

ConcentrationCheck mcdiarmid_check(const DenseSet& a, int r) {
  return check_against(a, ham_ball(a, r), r);
}

ConcentrationCheck basis_concentration_check(const DenseSet& a, const BasisSet& e, int r) {
  return check_against(a, basis_expand(a, e, r), r);
}

BasisGrowthCheck basis_growth_check(const DenseSet& a, const BasisSet& e, int r) {
  DenseSet expanded = basis_expand(a, e, r);
  DenseSet ball = e.map_through(ham_ball(e.map_back(a), r));
  bool covers = ball.is_subset_of(expanded);
  return BasisGrowthCheck{std::move(expanded), std::move(ball), covers};
}

}  // namespace f2
