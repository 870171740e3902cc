#include "f2/rng.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace f2 {

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
  const std::uint64_t mask = std::bit_ceil(bound) - 1;
  while (true) {
    std::uint64_t v = next() & mask;
    if (v < bound) return v;
  }
}

namespace {

// Partial Fisher-Yates over the virtual array base, base+1, ..., base+len-1.
// The dense path materializes the array; the sparse path simulates it with
// a map of displaced entries and produces the identical selection.
DenseSet partial_shuffle_sample(int n, std::uint64_t base, std::uint64_t len,
                                std::uint64_t card, SplitMix64& rng) {
  if (card > len) throw std::invalid_argument("sample: cardinality exceeds the universe");
  DenseSet out(n);
  if (len <= (std::uint64_t(1) << 24)) {
    std::vector<std::uint32_t> arr(len);
    for (std::uint64_t i = 0; i < len; ++i) arr[i] = static_cast<std::uint32_t>(base + i);
    for (std::uint64_t i = 0; i < card; ++i) {
      std::uint64_t j = i + rng.next_below(len - i);
      std::swap(arr[i], arr[j]);
      out.insert(arr[i]);
    }
  } else {
    std::unordered_map<std::uint64_t, std::uint32_t> displaced;
    auto at = [&](std::uint64_t idx) {
      auto it = displaced.find(idx);
      return it == displaced.end() ? static_cast<std::uint32_t>(base + idx) : it->second;
    };
    for (std::uint64_t i = 0; i < card; ++i) {
      std::uint64_t j = i + rng.next_below(len - i);
      std::uint32_t vi = at(i);
      std::uint32_t vj = at(j);
      displaced[j] = vi;
      out.insert(vj);
    }
  }
  return out;
}

}  // namespace

DenseSet sample_exact_card(int n, std::uint64_t card, SplitMix64& rng) {
  DenseSet probe(n);  // validates n
  return partial_shuffle_sample(n, 0, probe.universe_size(), card, rng);
}

DenseSet sample_exact_card_nonzero(int n, std::uint64_t card, SplitMix64& rng) {
  DenseSet probe(n);
  return partial_shuffle_sample(n, 1, probe.universe_size() - 1, card, rng);
}

DenseSet sample_bernoulli(int n, const mpq_class& p, SplitMix64& rng) {
  if (p < 0 || p > 1) throw std::invalid_argument("sample_bernoulli: p must be in [0, 1]");
  if (!p.get_num().fits_ulong_p() || !p.get_den().fits_ulong_p())
    throw std::invalid_argument("sample_bernoulli: probability denominator too large");
  const std::uint64_t num = p.get_num().get_ui();
  const std::uint64_t den = p.get_den().get_ui();
  DenseSet out(n);
  for (std::uint64_t x = 0; x < out.universe_size(); ++x)
    if (rng.next_below(den) < num) out.insert(static_cast<GroupElement>(x));
  return out;
}

GroupElement random_nonzero(int n, SplitMix64& rng) {
  return static_cast<GroupElement>(1 + rng.next_below((std::uint64_t(1) << n) - 1));
}

Subspace random_subspace_of_codim(int n, int c, SplitMix64& rng) {
  if (c < 0 || c > n) throw std::invalid_argument("random_subspace_of_codim: bad codimension");
  std::vector<Character> gammas;
  Subspace span = Subspace::zero(n);
  while (static_cast<int>(gammas.size()) < c) {
    Character g = static_cast<Character>(rng.next_below(std::uint64_t(1) << n));
    std::vector<Character> trial = gammas;
    trial.push_back(g);
    Subspace next = Subspace::span_of(n, trial);
    if (next.dim() > span.dim()) {
      gammas.push_back(g);
      span = next;
    }
  }
  return Subspace::perp(n, gammas);
}

BasisSet random_basis(int n, SplitMix64& rng) {
  std::vector<GroupElement> vecs;
  Subspace span = Subspace::zero(n);
  while (static_cast<int>(vecs.size()) < n) {
    GroupElement v = static_cast<GroupElement>(rng.next_below(std::uint64_t(1) << n));
    std::vector<GroupElement> trial = vecs;
    trial.push_back(v);
    Subspace next = Subspace::span_of(n, trial);
    if (next.dim() > span.dim()) {
      vecs.push_back(v);
      span = next;
    }
  }
  return BasisSet::of(n, vecs);
}

}  // namespace f2
