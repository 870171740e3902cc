#include "f2/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace f2 {

namespace {

inline std::uint32_t pivot_bit(std::uint32_t row) { return std::bit_floor(row); }

// Reduce v against echelon rows (pivots descending): clears every pivot bit.
std::uint32_t echelon_reduce(const std::vector<std::uint32_t>& rows, std::uint32_t v) {
  for (std::uint32_t r : rows)
    if (v & pivot_bit(r)) v ^= r;
  return v;
}

// Insert v into an echelon basis, keeping reduced form and descending
// pivots.  Returns false when v is dependent.
bool echelon_insert(std::vector<std::uint32_t>& rows, std::uint32_t v) {
  v = echelon_reduce(rows, v);
  if (v == 0) return false;
  std::uint32_t p = pivot_bit(v);
  for (auto& r : rows)
    if (r & p) r ^= v;
  auto pos = std::find_if(rows.begin(), rows.end(),
                          [&](std::uint32_t r) { return pivot_bit(r) < p; });
  rows.insert(pos, v);
  return true;
}

std::vector<std::uint32_t> echelonize(std::span<const std::uint32_t> vectors) {
  std::vector<std::uint32_t> rows;
  for (std::uint32_t v : vectors) echelon_insert(rows, v);
  return rows;
}

// Canonical basis of {x : parity(x & r) = 0 for every row r}: one vector
// per non-pivot position f, namely e_f plus e_{pivot(r)} for every row r
// with bit f set.
std::vector<std::uint32_t> echelon_kernel(int n, const std::vector<std::uint32_t>& rows) {
  std::uint32_t pivots = 0;
  for (std::uint32_t r : rows) pivots |= pivot_bit(r);
  std::vector<std::uint32_t> kernel;
  for (int f = 0; f < n; ++f) {
    std::uint32_t fb = std::uint32_t(1) << f;
    if (pivots & fb) continue;
    std::uint32_t v = fb;
    for (std::uint32_t r : rows)
      if (r & fb) v |= pivot_bit(r);
    kernel.push_back(v);
  }
  return echelonize(kernel);
}

}  // namespace

Subspace::Subspace(int n, std::vector<GroupElement> echelon_basis)
    : n_(n), basis_(std::move(echelon_basis)) {
  if (n < 1 || n > 31) throw std::invalid_argument("Subspace: bad ambient dimension");
  annihilator_ = echelon_kernel(n_, basis_);
  if (static_cast<int>(basis_.size() + annihilator_.size()) != n_)
    throw std::logic_error("Subspace: rank + corank mismatch");
}

Subspace Subspace::full(int n) {
  std::vector<GroupElement> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = GroupElement(1) << (n - 1 - i);
  return Subspace(n, std::move(rows));
}

Subspace Subspace::zero(int n) { return Subspace(n, {}); }

Subspace Subspace::span_of(int n, std::span<const GroupElement> vectors) {
  for (GroupElement v : vectors)
    if (n < 31 && (std::uint64_t(v) >> n) != 0)
      throw std::invalid_argument("Subspace::span_of: vector out of range");
  return Subspace(n, echelonize(vectors));
}

Subspace Subspace::perp(int n, std::span<const Character> gammas) {
  for (Character g : gammas)
    if (n < 31 && (std::uint64_t(g) >> n) != 0)
      throw std::invalid_argument("Subspace::perp: character out of range");
  return Subspace(n, echelon_kernel(n, echelonize(gammas)));
}

GroupElement Subspace::reduce(GroupElement x) const { return echelon_reduce(basis_, x); }

GroupElement Subspace::element_from_coordinates(std::uint32_t y) const {
  GroupElement x = 0;
  const int m = dim();
  while (y) {
    int i = std::countr_zero(y);
    x ^= basis_[m - 1 - i];
    y &= y - 1;
  }
  return x;
}

Character Subspace::lift_character(Character gamma_local) const {
  Character out = 0;
  const int m = dim();
  while (gamma_local) {
    int i = std::countr_zero(gamma_local);
    out |= pivot_bit(basis_[m - 1 - i]);
    gamma_local &= gamma_local - 1;
  }
  return out;
}

Subspace Subspace::intersect_perp(Character gamma_ambient) const {
  std::vector<Character> gammas = annihilator_;
  gammas.push_back(gamma_ambient);
  return perp(n_, gammas);
}

DenseSet Subspace::members() const {
  DenseSet s = DenseSet::singleton(n_, 0);
  for (GroupElement b : basis_) {
    DenseSet prev = s;
    s.accumulate_translate(prev, b);
  }
  return s;
}

DenseSet Subspace::pullback(const DenseSet& t) const {
  if (t.dim() != n_) throw std::invalid_argument("pullback: dimension mismatch");
  const int m = dim();
  if (m == 0) throw std::domain_error("pullback: zero subspace has no coordinate space");
  DenseSet out(m);
  // Gray-code walk of coordinate space; cur tracks phi_B of the visited y.
  GroupElement cur = 0;
  std::uint32_t y = 0;
  const std::uint64_t total = std::uint64_t(1) << m;
  for (std::uint64_t i = 0;; ++i) {
    if (t.contains(cur)) out.insert(y);
    if (i + 1 == total) break;
    int b = std::countr_zero(i + 1);
    y ^= std::uint32_t(1) << b;
    cur ^= basis_[m - 1 - b];
  }
  return out;
}

DenseSet Subspace::pushforward(const DenseSet& s) const {
  const int m = dim();
  if (m == 0) throw std::domain_error("pushforward: zero subspace has no coordinate space");
  if (s.dim() != m) throw std::invalid_argument("pushforward: dimension mismatch");
  DenseSet out(n_);
  GroupElement cur = 0;
  std::uint32_t y = 0;
  const std::uint64_t total = std::uint64_t(1) << m;
  for (std::uint64_t i = 0;; ++i) {
    if (s.contains(y)) out.insert(cur);
    if (i + 1 == total) break;
    int b = std::countr_zero(i + 1);
    y ^= std::uint32_t(1) << b;
    cur ^= basis_[m - 1 - b];
  }
  return out;
}

std::vector<GroupElement> Subspace::coset_reps() const {
  std::uint32_t pivots = 0;
  for (GroupElement b : basis_) pivots |= pivot_bit(b);
  std::vector<int> free_pos;
  for (int j = 0; j < n_; ++j)
    if (!(pivots & (std::uint32_t(1) << j))) free_pos.push_back(j);
  std::vector<GroupElement> reps;
  reps.reserve(std::size_t(1) << free_pos.size());
  for (std::uint64_t c = 0; c < (std::uint64_t(1) << free_pos.size()); ++c) {
    GroupElement rep = 0;
    for (std::size_t i = 0; i < free_pos.size(); ++i)
      if ((c >> i) & 1) rep |= GroupElement(1) << free_pos[i];
    reps.push_back(rep);
  }
  return reps;
}

DenseSet coset_restrict(const DenseSet& a, const Subspace& v, GroupElement rep) {
  if (a.dim() != v.ambient_dim())
    throw std::invalid_argument("coset_restrict: dimension mismatch");
  if (v.reduce(rep) != rep)
    throw std::invalid_argument("coset_restrict: rep is not a canonical coset representative");
  const int m = v.dim();
  if (m == 0) throw std::domain_error("coset_restrict: zero subspace");
  DenseSet out(m);
  GroupElement cur = rep;
  std::uint32_t y = 0;
  const std::uint64_t total = std::uint64_t(1) << m;
  for (std::uint64_t i = 0;; ++i) {
    if (a.contains(cur)) out.insert(y);
    if (i + 1 == total) break;
    int b = std::countr_zero(i + 1);
    y ^= std::uint32_t(1) << b;
    cur ^= v.basis()[m - 1 - b];
  }
  return out;
}

namespace {

// Exact minimum codimension of a subspace avoiding every point of `bad`
// (all nonzero).  Dual view: V = perp(W) misses p iff some basis character
// of W pairs oddly with p, so the answer is a minimum set cover of `bad`
// by the odd-pairing patterns of characters.  Patterns are linear in the
// character, so all of them come from one Gray-code walk.
int min_cover_codim(int n, const std::vector<GroupElement>& bad) {
  const int b = static_cast<int>(bad.size());
  if (b == 0) return 0;
  // signature of gamma: bit j set iff <gamma, bad[j]> = 1
  std::vector<std::uint32_t> basis_sig(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < b; ++j)
      basis_sig[i] |= ((bad[j] >> i) & 1u) << j;
  const std::uint32_t full = (b == 32) ? ~0u : (std::uint32_t(1) << b) - 1;
  std::vector<bool> seen(std::size_t(full) + 1, false);
  std::vector<std::vector<std::uint32_t>> covering(b);  // sigs by covered element
  std::uint32_t sig = 0;
  const std::uint64_t total = std::uint64_t(1) << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    sig ^= basis_sig[std::countr_zero(i)];
    if (sig == 0 || seen[sig]) continue;
    seen[sig] = true;
    for (int j = 0; j < b; ++j)
      if ((sig >> j) & 1) covering[j].push_back(sig);
  }
  // breadth-first over coverage states; it is enough to extend with sigs
  // covering the lowest uncovered element
  std::vector<std::uint8_t> dist(std::size_t(full) + 1, 0xff);
  std::vector<std::uint32_t> frontier{0};
  dist[0] = 0;
  for (int depth = 0; !frontier.empty(); ++depth) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t s : frontier) {
      if (s == full) return depth;
      int j = std::countr_zero(~s);
      for (std::uint32_t t : covering[j]) {
        std::uint32_t ns = s | t;
        if (dist[ns] == 0xff) {
          dist[ns] = static_cast<std::uint8_t>(depth + 1);
          next.push_back(ns);
        }
      }
    }
    frontier = std::move(next);
  }
  throw std::logic_error("min_cover_codim: no cover found for nonzero points");
}

// Depth-first search over canonical basis chains.  Candidate lists carry
// down and shrink; every subspace reachable below a node has all of its
// new coset minima inside the node's list, which gives the log2 bound.
class SubspaceSearch {
 public:
  SubspaceSearch(const DenseSet& t, int target) : t_(t), target_(target) {
    // no subspace inside T can be bigger than T itself
    size_cap_ = std::bit_width(t.card()) - 1;
    span_.push_back(0);
  }

  // target < 0: maximize dimension.  target >= 0: first chain of that dim.
  std::optional<std::vector<GroupElement>> run() {
    if (target_ == 0) return std::vector<GroupElement>{};
    if (target_ > size_cap_) return std::nullopt;  // |T| cannot hold 2^target points
    std::vector<GroupElement> root;
    t_.for_each([&](GroupElement x) {
      if (x != 0) root.push_back(x);
    });
    found_ = false;
    dfs(root);
    if (target_ >= 0 && !found_) return std::nullopt;
    return best_;
  }

 private:
  void dfs(const std::vector<GroupElement>& cands) {
    const int k = static_cast<int>(chain_.size());
    if (target_ < 0 && k > static_cast<int>(best_.size())) {
      best_ = chain_;
      if (k == size_cap_) {
        found_ = true;  // nothing larger can fit; first chain at the cap wins
        return;
      }
    }
    int extra = std::bit_width(cands.size() + 1) - 1;
    if (target_ < 0 ? (k + extra <= static_cast<int>(best_.size())) : (k + extra < target_))
      return;
    std::vector<GroupElement> child;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      const GroupElement v = cands[i];
      const std::uint32_t vp = pivot_bit(v);
      const std::size_t half = span_.size();
      chain_.push_back(v);
      for (std::size_t s = 0; s < half; ++s) span_.push_back(span_[s] ^ v);
      if (target_ >= 0 && static_cast<int>(chain_.size()) == target_) {
        best_ = chain_;
        found_ = true;
        return;  // leave chain_/span_ as-is; run() is done with them
      }
      child.clear();
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        const GroupElement w = cands[j];
        if (w & vp) continue;  // not minimal in its coset once v joins
        bool ok = true;
        for (std::size_t s = half; s < span_.size(); ++s) {
          if (!t_.contains(w ^ span_[s])) {
            ok = false;
            break;
          }
        }
        if (ok) child.push_back(w);
      }
      dfs(child);
      if (found_) return;
      chain_.pop_back();
      span_.resize(half);
    }
  }

  const DenseSet& t_;
  int target_;
  int size_cap_;
  bool found_ = false;
  std::vector<GroupElement> best_;
  std::vector<GroupElement> chain_;
  std::vector<GroupElement> span_;
};

}  // namespace

Subspace max_subspace_in(const DenseSet& t) {
  if (!t.contains(0)) throw std::invalid_argument("max_subspace_in: 0 not in T");
  const int n = t.dim();
  // Near-full sets: get the exact maximum dimension from the dual cover,
  // then let the canonical search stop at the first chain of that size.
  // The witness is identical to what the plain maximization would return.
  const std::uint64_t missing = t.universe_size() - t.card();
  if (n <= 20 && missing <= 16) {
    const int dim = n - min_cover_codim(n, t.complement().elements());
    SubspaceSearch search(t, dim);
    return Subspace::span_of(n, *search.run());
  }
  SubspaceSearch search(t, -1);
  auto chain = search.run();
  return Subspace::span_of(n, *chain);
}

std::optional<Subspace> subspace_of_dim_in(const DenseSet& t, int d) {
  if (d < 0 || d > t.dim()) throw std::invalid_argument("subspace_of_dim_in: bad dimension");
  if (!t.contains(0)) throw std::invalid_argument("subspace_of_dim_in: 0 not in T");
  SubspaceSearch search(t, d);
  auto chain = search.run();
  if (!chain) return std::nullopt;
  return Subspace::span_of(t.dim(), *chain);
}

std::optional<GroupElement> low_zero_vector(const Subspace& v) {
  const int m = v.dim();
  const int n = v.ambient_dim();
  if (m == 0) return std::nullopt;
  // Column j of the basis matrix, packed over the m rows.
  auto column = [&](int j) {
    std::uint32_t c = 0;
    for (int i = 0; i < m; ++i) c |= ((v.basis()[i] >> j) & 1u) << i;
    return c;
  };
  // Greedy lowest coordinate positions whose columns are independent.
  std::vector<std::uint32_t> echelon;
  std::vector<std::pair<std::uint32_t, int>> selected;  // (column, position)
  for (int j = 0; j < n && static_cast<int>(selected.size()) < m; ++j) {
    std::uint32_t c = column(j);
    if (echelon_insert(echelon, c)) selected.emplace_back(c, j);
  }
  if (static_cast<int>(selected.size()) != m)
    throw std::logic_error("low_zero_vector: column rank below row rank");
  // Solve parity(lambda & col_j) = 1 on the selected positions.
  std::vector<std::uint64_t> rows;  // column bits | rhs << m
  rows.reserve(m);
  for (auto [c, j] : selected) rows.push_back(std::uint64_t(c) | (std::uint64_t(1) << m));
  for (int i = 0; i < m; ++i) {
    auto it = std::find_if(rows.begin() + i, rows.end(),
                           [&](std::uint64_t r) { return (r >> i) & 1; });
    if (it == rows.end()) throw std::logic_error("low_zero_vector: singular system");
    std::swap(*it, rows[i]);
    for (int r = 0; r < m; ++r)
      if (r != i && ((rows[r] >> i) & 1)) rows[r] ^= rows[i];
  }
  GroupElement out = 0;
  for (int i = 0; i < m; ++i)
    if ((rows[i] >> m) & 1) out ^= v.basis()[i];
  if (zero_count(n, out) > n - m) throw std::logic_error("low_zero_vector: zero bound violated");
  return out;
}

std::uint64_t metsch_bound(int n, int d) {
  if (d < 1 || d > n) throw std::invalid_argument("metsch_bound: need 1 <= d <= n");
  return (std::uint64_t(1) << (n + 1 - d)) - 1;
}

std::optional<Subspace> metsch_witness(const DenseSet& s, int d) {
  if (s.contains(0)) throw std::invalid_argument("metsch_witness: S must avoid 0");
  if (d < 1 || d > s.dim()) throw std::invalid_argument("metsch_witness: need 1 <= d <= n");
  return subspace_of_dim_in(s.complement(), d);
}

}  // namespace f2
