#include "f2/dense_set.hpp"

#include <stdexcept>

namespace f2 {

namespace {

// Butterfly masks: kSwapMask[k] selects the bit positions j with bit k of j
// clear, so XOR-translation by 2^k inside a word is a masked swap.
constexpr std::uint64_t kSwapMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

inline std::uint64_t xor_translate_word(std::uint64_t w, unsigned lo) {
  if (lo & 1) w = ((w & kSwapMask[0]) << 1) | ((w >> 1) & kSwapMask[0]);
  if (lo & 2) w = ((w & kSwapMask[1]) << 2) | ((w >> 2) & kSwapMask[1]);
  if (lo & 4) w = ((w & kSwapMask[2]) << 4) | ((w >> 4) & kSwapMask[2]);
  if (lo & 8) w = ((w & kSwapMask[3]) << 8) | ((w >> 8) & kSwapMask[3]);
  if (lo & 16) w = ((w & kSwapMask[4]) << 16) | ((w >> 16) & kSwapMask[4]);
  if (lo & 32) w = ((w & kSwapMask[5]) << 32) | ((w >> 32) & kSwapMask[5]);
  return w;
}

}  // namespace

DenseSet::DenseSet(int n) : n_(n), card_(0) {
  if (n < 1) throw std::invalid_argument("DenseSet: dimension must be >= 1");
  if (n > kMaxDenseDim)
    throw std::length_error("DenseSet: dense capacity is n <= 28 (2^28 bits)");
  universe_ = std::uint64_t(1) << n;
  words_.assign(universe_ <= 64 ? 1 : universe_ >> 6, 0);
}

DenseSet DenseSet::full(int n) {
  DenseSet s(n);
  if (s.universe_ < 64) {
    s.words_[0] = (std::uint64_t(1) << s.universe_) - 1;
  } else {
    for (auto& w : s.words_) w = ~std::uint64_t(0);
  }
  s.card_ = s.universe_;
  return s;
}

DenseSet DenseSet::singleton(int n, GroupElement x) {
  DenseSet s(n);
  s.insert(x);
  return s;
}

DenseSet DenseSet::from_elements(int n, const std::vector<GroupElement>& elems) {
  DenseSet s(n);
  for (GroupElement x : elems) s.insert(x);
  return s;
}

void DenseSet::insert(GroupElement x) {
  if (x >= universe_) throw std::out_of_range("DenseSet::insert: element out of range");
  std::uint64_t bit = std::uint64_t(1) << (x & 63);
  if (!(words_[x >> 6] & bit)) {
    words_[x >> 6] |= bit;
    ++card_;
  }
}

void DenseSet::erase(GroupElement x) {
  if (x >= universe_) throw std::out_of_range("DenseSet::erase: element out of range");
  std::uint64_t bit = std::uint64_t(1) << (x & 63);
  if (words_[x >> 6] & bit) {
    words_[x >> 6] &= ~bit;
    --card_;
  }
}

void DenseSet::check_same_dim(const DenseSet& o) const {
  if (n_ != o.n_) throw std::invalid_argument("DenseSet: dimension mismatch");
}

void DenseSet::recount() {
  std::uint64_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  card_ = c;
}

DenseSet DenseSet::complement() const {
  DenseSet out(n_);
  if (universe_ < 64) {
    out.words_[0] = ~words_[0] & ((std::uint64_t(1) << universe_) - 1);
  } else {
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  }
  out.card_ = universe_ - card_;
  return out;
}

DenseSet DenseSet::operator&(const DenseSet& o) const {
  check_same_dim(o);
  DenseSet out(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & o.words_[i];
  out.recount();
  return out;
}

DenseSet DenseSet::operator|(const DenseSet& o) const {
  check_same_dim(o);
  DenseSet out(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | o.words_[i];
  out.recount();
  return out;
}

DenseSet DenseSet::minus(const DenseSet& o) const {
  check_same_dim(o);
  DenseSet out(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & ~o.words_[i];
  out.recount();
  return out;
}

void DenseSet::or_translate_words(const DenseSet& src, GroupElement a) {
  const std::size_t hi = a >> 6;
  const unsigned lo = a & 63;
  if (lo == 0) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= src.words_[i ^ hi];
    return;
  }
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] |= xor_translate_word(src.words_[i ^ hi], lo);
}

void DenseSet::accumulate_translate(const DenseSet& src, GroupElement a) {
  check_same_dim(src);
  if (a >= universe_) throw std::out_of_range("DenseSet: translate amount out of range");
  or_translate_words(src, a);
  recount();
}

DenseSet DenseSet::translate(GroupElement a) const {
  DenseSet out(n_);
  out.accumulate_translate(*this, a);
  return out;
}

bool DenseSet::is_subset_of(const DenseSet& o) const {
  check_same_dim(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

std::vector<GroupElement> DenseSet::elements() const {
  std::vector<GroupElement> out;
  out.reserve(card_);
  for_each([&](GroupElement x) { out.push_back(x); });
  return out;
}

Dyadic density(const DenseSet& a) { return a.density(); }

DenseSet sumset(const DenseSet& a, const DenseSet& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("sumset: dimension mismatch");
  DenseSet out(a.dim());
  const DenseSet& small = a.card() <= b.card() ? a : b;
  const DenseSet& large = a.card() <= b.card() ? b : a;
  small.for_each([&](GroupElement x) { out.or_translate_words(large, x); });
  out.recount();
  return out;
}

DenseSet intersect(const DenseSet& a, const DenseSet& b) { return a & b; }
DenseSet unite(const DenseSet& a, const DenseSet& b) { return a | b; }

}  // namespace f2
