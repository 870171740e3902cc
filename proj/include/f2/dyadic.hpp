#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace f2 {

// Exact dyadic rational num / 2^k with arbitrary-precision numerator.
// Canonical form: num odd whenever k > 0, and zero is stored as 0 / 2^0,
// so equal values have equal representations.
class Dyadic {
 public:
  Dyadic() : num_(0), k_(0) {}
  Dyadic(long value) : num_(value), k_(0) {}  // implicit: integers are dyadic
  Dyadic(mpz_class numerator, unsigned log2_denominator)
      : num_(std::move(numerator)), k_(log2_denominator) {
    canonicalize();
  }

  const mpz_class& numerator() const { return num_; }
  unsigned log2_denominator() const { return k_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return sgn(num_); }

  Dyadic operator-() const { return Dyadic(-num_, k_); }

  Dyadic operator+(const Dyadic& o) const {
    unsigned k = std::max(k_, o.k_);
    return Dyadic(shifted_to(k) + o.shifted_to(k), k);
  }
  Dyadic operator-(const Dyadic& o) const { return *this + (-o); }
  Dyadic operator*(const Dyadic& o) const { return Dyadic(num_ * o.num_, k_ + o.k_); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.k_ == b.k_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    unsigned k = std::max(a.k_, b.k_);
    int c = cmp(a.shifted_to(k), b.shifted_to(k));
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  mpq_class to_mpq() const {
    mpq_class q(num_, mpz_class(1) << k_);
    q.canonicalize();
    return q;
  }

  double to_double() const { return to_mpq().get_d(); }

  // "num" when k == 0, otherwise "num/2^k".
  std::string to_string() const {
    if (k_ == 0) return num_.get_str();
    return num_.get_str() + "/2^" + std::to_string(k_);
  }

  static Dyadic parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Dyadic(mpz_class(text), 0);
    if (text.compare(slash, 3, "/2^") != 0)
      throw std::invalid_argument("bad dyadic literal: " + text);
    mpz_class num(text.substr(0, slash));
    unsigned k = static_cast<unsigned>(std::stoul(text.substr(slash + 3)));
    return Dyadic(num, k);
  }

 private:
  void canonicalize() {
    if (num_ == 0) {
      k_ = 0;
      return;
    }
    while (k_ > 0 && mpz_even_p(num_.get_mpz_t())) {
      num_ >>= 1;
      --k_;
    }
  }

  // numerator rescaled to denominator 2^k (requires k >= k_)
  mpz_class shifted_to(unsigned k) const { return num_ << (k - k_); }

  mpz_class num_;
  unsigned k_;
};

}  // namespace f2
