#pragma once

// Small finite fields F_p and F_{p^2}, elements stored as residues
// c0 + c1 x modulo a fixed monic irreducible quadratic.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tits {

struct FieldElement {
  int c0 = 0;
  int c1 = 0;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

class FiniteField {
 public:
  static constexpr int kMaxPrime = 13;

  FiniteField(int p, int degree) : p_(p), degree_(degree) {
    bool prime = p >= 2;
    for (int d = 2; d * d <= p; ++d) prime = prime && (p % d != 0);
    if (!prime || p > kMaxPrime) throw std::invalid_argument("field characteristic must be a prime <= 13");
    if (degree != 1 && degree != 2) throw std::invalid_argument("field degree must be 1 or 2");
    if (degree == 2) find_modulus();
    order_ = degree == 1 ? p : p * p;
    find_generator();
  }

  int characteristic() const { return p_; }
  int degree() const { return degree_; }
  /// Number of elements.
  int size() const { return order_; }
  /// Coefficients (m0, m1) of the modulus x^2 + m1 x + m0 (degree 2 only).
  std::pair<int, int> modulus() const { return {m0_, m1_}; }

  FieldElement zero() const { return {}; }
  FieldElement one() const { return {1, 0}; }
  FieldElement from_int(long v) const { return {norm(v), 0}; }
  FieldElement generator() const { return gen_; }

  FieldElement add(FieldElement a, FieldElement b) const { return {norm(a.c0 + b.c0), norm(a.c1 + b.c1)}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return {norm(a.c0 - b.c0), norm(a.c1 - b.c1)}; }
  FieldElement neg(FieldElement a) const { return {norm(-a.c0), norm(-a.c1)}; }
  FieldElement mul(FieldElement a, FieldElement b) const {
    // x^2 = -m1 x - m0
    const long hi = static_cast<long>(a.c1) * b.c1;
    return {norm(static_cast<long>(a.c0) * b.c0 - hi * m0_),
            norm(static_cast<long>(a.c0) * b.c1 + static_cast<long>(a.c1) * b.c0 - hi * m1_)};
  }
  FieldElement pow(FieldElement a, std::int64_t e) const {
    const std::int64_t group = order_ - 1;
    if (e < 0) {
      if (is_zero(a)) throw std::domain_error("zero has no inverse");
      e = ((e % group) + group) % group;
    }
    FieldElement r = one();
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  FieldElement inv(FieldElement a) const {
    if (is_zero(a)) throw std::domain_error("zero has no inverse");
    return pow(a, order_ - 2);
  }
  bool is_zero(FieldElement a) const { return a.c0 == 0 && a.c1 == 0; }

  /// Smallest k > 0 with a^k = 1.
  int multiplicative_order(FieldElement a) const {
    if (is_zero(a)) throw std::domain_error("zero has no multiplicative order");
    FieldElement x = a;
    for (int k = 1; k < order_; ++k) {
      if (x == one()) return k;
      x = mul(x, a);
    }
    throw std::logic_error("element order exceeds group order");
  }

  /// Element number k in the enumeration c0 + p c1.
  FieldElement element(int k) const { return {k % p_, k / p_}; }
  std::vector<FieldElement> elements() const {
    std::vector<FieldElement> out;
    for (int k = 0; k < order_; ++k) out.push_back(element(k));
    return out;
  }

 private:
  int norm(long v) const {
    long r = v % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }

  // Lexicographically smallest (m1, m0) with x^2 + m1 x + m0 irreducible.
  void find_modulus() {
    for (int m1 = 0; m1 < p_; ++m1)
      for (int m0 = 0; m0 < p_; ++m0) {
        bool has_root = false;
        for (int x = 0; x < p_ && !has_root; ++x) has_root = (x * x + m1 * x + m0) % p_ == 0;
        if (!has_root) {
          m0_ = m0;
          m1_ = m1;
          return;
        }
      }
    throw std::logic_error("no irreducible quadratic found");
  }

  void find_generator() {
    for (int k = 1; k < order_; ++k) {
      if (multiplicative_order(element(k)) == order_ - 1) {
        gen_ = element(k);
        return;
      }
    }
    throw std::logic_error("multiplicative group is not cyclic");
  }

  int p_;
  int degree_;
  int order_ = 0;
  int m0_ = 0;
  int m1_ = 0;
  FieldElement gen_{};
};

}  // namespace tits
