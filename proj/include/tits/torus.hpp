#pragma once

// Points of the simply-connected torus with values in mu_N.
//
// A TorusElement with exponent vector (e_0, ..., e_{r-1}) stands for
//     prod_i alpha_i^vee(zeta_N^{e_i}),
// where zeta_N is a fixed generator of the N-th roots of unity. Everything
// is exact arithmetic modulo N.

#include <cstdint>
#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "tits/root_datum.hpp"
#include "tits/weyl.hpp"

namespace tits {

enum class FieldMode { Finite, Complex };

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Returns the prime p with q = p^k, or 0 if q is not a prime power.
inline std::int64_t prime_power_base(std::int64_t q) {
  if (q < 2) return 0;
  for (std::int64_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      return q == 1 ? p : 0;
    }
  }
  return q;
}

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

/// Which field the roots of unity live in, and how phi acts on them.
///
/// finite(q): N = 2(q-1) for odd q, N = q-1 for even q; phi raises to the q.
/// complex:   N = 4; phi is complex conjugation, i.e. exponent negation.
class CyclotomicContext {
 public:
  static constexpr std::int64_t kMaxQ = std::int64_t{1} << 24;

  static CyclotomicContext finite(std::int64_t q) {
    if (q > kMaxQ || prime_power_base(q) == 0)
      throw std::invalid_argument("q = " + std::to_string(q) + " is not a supported prime power");
    CyclotomicContext c;
    c.mode_ = FieldMode::Finite;
    c.q_ = q;
    c.characteristic_ = prime_power_base(q);
    c.order_ = c.characteristic_ == 2 ? q - 1 : 2 * (q - 1);
    c.minus_one_exp_ = c.characteristic_ == 2 ? 0 : c.order_ / 2;
    c.phi_multiplier_ = mod(q, c.order_);
    return c;
  }

  static CyclotomicContext complex() {
    CyclotomicContext c;
    c.mode_ = FieldMode::Complex;
    c.q_ = 0;
    c.characteristic_ = 0;
    c.order_ = 4;
    c.minus_one_exp_ = 2;
    c.phi_multiplier_ = 3;
    return c;
  }

  FieldMode mode() const { return mode_; }
  bool is_complex() const { return mode_ == FieldMode::Complex; }
  /// 0 in complex mode.
  std::int64_t q() const { return q_; }
  std::int64_t characteristic() const { return characteristic_; }
  /// N, the order of the cyclic group of roots of unity in play.
  std::int64_t order() const { return order_; }
  /// Exponent e with zeta_N^e = -1 (0 in characteristic 2).
  std::int64_t minus_one_exp() const { return minus_one_exp_; }
  /// phi(zeta_N) = zeta_N^{phi_multiplier}.
  std::int64_t phi_multiplier() const { return phi_multiplier_; }
  std::int64_t reduce(std::int64_t e) const { return mod(e, order_); }

  /// Exponent of zeta: a (q-1)-th root of -1 in finite mode, a primitive
  /// fourth root of unity in complex mode.
  std::int64_t zeta_exp() const {
    if (is_complex()) return 1;
    return characteristic_ == 2 ? 0 : 1;
  }

  std::string mode_name() const { return is_complex() ? "complex" : "fq"; }

  friend bool operator==(const CyclotomicContext&, const CyclotomicContext&) = default;

 private:
  CyclotomicContext() = default;

  FieldMode mode_ = FieldMode::Finite;
  std::int64_t q_ = 0;
  std::int64_t characteristic_ = 0;
  std::int64_t order_ = 1;
  std::int64_t minus_one_exp_ = 0;
  std::int64_t phi_multiplier_ = 1;
};

inline std::int64_t zeta_exp(const CyclotomicContext& ctx) { return ctx.zeta_exp(); }

class TorusElement {
 public:
  TorusElement(CyclotomicContext ctx, std::vector<std::int64_t> exps) : ctx_(ctx), exps_(std::move(exps)) {
    for (auto& e : exps_) e = ctx_.reduce(e);
  }

  static TorusElement identity(const CyclotomicContext& ctx, int rank) {
    return TorusElement(ctx, std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0));
  }

  const CyclotomicContext& context() const { return ctx_; }
  const std::vector<std::int64_t>& exps() const { return exps_; }
  int rank() const { return static_cast<int>(exps_.size()); }
  std::int64_t operator[](std::size_t i) const { return exps_[i]; }

  bool is_identity() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::int64_t e) { return e == 0; });
  }

  friend TorusElement operator*(const TorusElement& a, const TorusElement& b) {
    a.check_compatible(b);
    std::vector<std::int64_t> e(a.exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
    return TorusElement(a.ctx_, std::move(e));
  }

  TorusElement inverse() const {
    std::vector<std::int64_t> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = -exps_[i];
    return TorusElement(ctx_, std::move(e));
  }

  TorusElement power(std::int64_t k) const {
    std::vector<std::int64_t> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = ctx_.reduce(exps_[i] * ctx_.reduce(k));
    return TorusElement(ctx_, std::move(e));
  }

  /// Smallest k > 0 with t^k = 1; divides N.
  std::int64_t element_order() const {
    std::int64_t ord = 1;
    for (auto e : exps_) ord = std::lcm(ord, ctx_.order() / std::gcd(e, ctx_.order()));
    return ord;
  }

  void check_compatible(const TorusElement& o) const {
    if (!(ctx_ == o.ctx_) || exps_.size() != o.exps_.size())
      throw std::invalid_argument("torus elements from different contexts");
  }

  friend bool operator==(const TorusElement&, const TorusElement&) = default;

 private:
  CyclotomicContext ctx_;
  std::vector<std::int64_t> exps_;
};

/// y(zeta_N^exp) for a coroot-lattice vector y.
inline TorusElement coroot_value(const CyclotomicContext& ctx, const CorootVector& v, std::int64_t exp) {
  std::vector<std::int64_t> e(v.rank());
  const std::int64_t k = ctx.reduce(exp);
  for (std::size_t i = 0; i < v.rank(); ++i) e[i] = ctx.reduce(ctx.reduce(v[i]) * k);
  return TorusElement(ctx, std::move(e));
}

/// y(-1).
inline TorusElement minus_one_at(const CyclotomicContext& ctx, const CorootVector& v) {
  return coroot_value(ctx, v, ctx.minus_one_exp());
}

/// w(t): the exponent vector transformed by w's coroot action.
inline TorusElement weyl_act(const WeylElement& w, const TorusElement& t) {
  if (w.rank() != t.rank()) throw std::invalid_argument("Weyl element and torus element of different rank");
  const auto& m = w.action();
  std::vector<std::int64_t> e(static_cast<std::size_t>(t.rank()), 0);
  for (int i = 0; i < t.rank(); ++i)
    for (int j = 0; j < t.rank(); ++j) e[static_cast<std::size_t>(i)] += m(i, j) * t[static_cast<std::size_t>(j)];
  return TorusElement(t.context(), std::move(e));
}

/// Frobenius (t -> t^q) or complex conjugation, on exponents.
inline TorusElement phi(const TorusElement& t) { return t.power(t.context().phi_multiplier()); }

}  // namespace tits
