#pragma once

// Explicit model of type A_r inside SL_{r+1}(F_{q^2}), used as an
// independent check of the abstract normalizer model.
//
// Root groups are elementary matrices, sigma_i = u_i(1) u_{-i}(-1) u_i(1),
// the coroot alpha_i^vee(z) is diag(..., z, z^{-1}, ...) at positions
// (i, i+1), and Frobenius acts entrywise.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tits/finite_field.hpp"
#include "tits/tits_lift.hpp"

namespace tits {

class FieldMatrix {
 public:
  FieldMatrix() = default;
  explicit FieldMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n)) {}

  int size() const { return n_; }
  FieldElement operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * n_ + c)]; }
  FieldElement& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * n_ + c)]; }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<FieldElement> a_;
};

/// SL_n(F) with the Chevalley generators of type A_{n-1}.
class SpecialLinearGroup {
 public:
  SpecialLinearGroup(FiniteField field, int n) : f_(std::move(field)), n_(n) {
    if (n < 2 || n > kMaxRank + 1) throw std::invalid_argument("SL_n needs 2 <= n <= 5");
  }

  const FiniteField& field() const { return f_; }
  int n() const { return n_; }
  int rank() const { return n_ - 1; }

  FieldMatrix identity() const {
    FieldMatrix m(n_);
    for (int i = 0; i < n_; ++i) m(i, i) = f_.one();
    return m;
  }

  FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b) const {
    FieldMatrix r(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const FieldElement x = a(i, k);
        if (f_.is_zero(x)) continue;
        for (int j = 0; j < n_; ++j) r(i, j) = f_.add(r(i, j), f_.mul(x, b(k, j)));
      }
    return r;
  }

  FieldElement determinant(FieldMatrix m) const {
    FieldElement det = f_.one();
    for (int c = 0; c < n_; ++c) {
      int pivot = c;
      while (pivot < n_ && f_.is_zero(m(pivot, c))) ++pivot;
      if (pivot == n_) return f_.zero();
      if (pivot != c) {
        for (int j = 0; j < n_; ++j) std::swap(m(c, j), m(pivot, j));
        det = f_.neg(det);
      }
      det = f_.mul(det, m(c, c));
      const FieldElement inv = f_.inv(m(c, c));
      for (int r = c + 1; r < n_; ++r) {
        const FieldElement factor = f_.mul(m(r, c), inv);
        for (int j = c; j < n_; ++j) m(r, j) = f_.sub(m(r, j), f_.mul(factor, m(c, j)));
      }
    }
    return det;
  }

  FieldMatrix inverse(const FieldMatrix& m) const {
    FieldMatrix a = m;
    FieldMatrix r = identity();
    for (int c = 0; c < n_; ++c) {
      int pivot = c;
      while (pivot < n_ && f_.is_zero(a(pivot, c))) ++pivot;
      if (pivot == n_) throw std::domain_error("singular matrix");
      for (int j = 0; j < n_; ++j) {
        std::swap(a(c, j), a(pivot, j));
        std::swap(r(c, j), r(pivot, j));
      }
      const FieldElement inv = f_.inv(a(c, c));
      for (int j = 0; j < n_; ++j) {
        a(c, j) = f_.mul(a(c, j), inv);
        r(c, j) = f_.mul(r(c, j), inv);
      }
      for (int row = 0; row < n_; ++row) {
        if (row == c || f_.is_zero(a(row, c))) continue;
        const FieldElement factor = a(row, c);
        for (int j = 0; j < n_; ++j) {
          a(row, j) = f_.sub(a(row, j), f_.mul(factor, a(c, j)));
          r(row, j) = f_.sub(r(row, j), f_.mul(factor, r(c, j)));
        }
      }
    }
    return r;
  }

  /// u_{alpha_i}(x) (identity plus x at (i, i+1)), or u_{-alpha_i}(x) with
  /// x at (i+1, i) when negative is set.
  FieldMatrix u(int i, FieldElement x, bool negative = false) const {
    check_index(i);
    FieldMatrix m = identity();
    if (negative)
      m(i + 1, i) = x;
    else
      m(i, i + 1) = x;
    return m;
  }

  /// u_a(1) u_{-a}(-1) u_a(1).
  FieldMatrix sigma(int i) const {
    return multiply(multiply(u(i, f_.one()), u(i, f_.neg(f_.one()), true)), u(i, f_.one()));
  }

  /// alpha_i^vee(z) = diag(..., z, z^{-1}, ...).
  FieldMatrix coroot_diag(int i, FieldElement z) const {
    check_index(i);
    if (f_.is_zero(z)) throw std::domain_error("coroot evaluated at zero");
    FieldMatrix m = identity();
    m(i, i) = z;
    m(i + 1, i + 1) = f_.inv(z);
    return m;
  }

  FieldMatrix diagonal(const std::vector<FieldElement>& d) const {
    if (static_cast<int>(d.size()) != n_) throw std::invalid_argument("diagonal of wrong size");
    FieldMatrix m(n_);
    for (int i = 0; i < n_; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
  }

  /// Entrywise x -> x^q.
  FieldMatrix frobenius(const FieldMatrix& m, std::int64_t q) const {
    FieldMatrix r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(i, j) = f_.pow(m(i, j), q);
    return r;
  }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= rank()) throw std::out_of_range("simple index out of range");
  }

  FiniteField f_;
  int n_;
};

/// Sends abstract elements t sigma_w of the type-A model to matrices in
/// SL_{r+1}(F_{q^2}).
class MatrixRealization {
 public:
  MatrixRealization(const CyclotomicContext& ctx, DatumPtr datum)
      : ctx_(ctx), datum_(std::move(datum)), group_(make_field(ctx), datum_->rank() + 1) {
    if (datum_->cartan_type().family != Family::A)
      throw std::invalid_argument("matrix oracle supports type A only, got " + datum_->name());
    const std::int64_t group_order = static_cast<std::int64_t>(group_.field().size()) - 1;
    if (group_order % ctx_.order() != 0)
      throw std::invalid_argument("F_q^2 does not contain the " + std::to_string(ctx_.order()) + "-th roots of unity");
    zeta_n_ = group_.field().pow(group_.field().generator(), group_order / ctx_.order());
  }

  const SpecialLinearGroup& group() const { return group_; }
  const FiniteField& field() const { return group_.field(); }
  /// The fixed generator of mu_N inside F_{q^2}.
  FieldElement zeta_n() const { return zeta_n_; }
  FieldElement root_of_unity(std::int64_t exp) const { return field().pow(zeta_n_, ctx_.reduce(exp)); }

  FieldMatrix torus_matrix(const TorusElement& t) const {
    FieldMatrix m = group_.identity();
    for (int i = 0; i < t.rank(); ++i)
      m = group_.multiply(m, group_.coroot_diag(i, root_of_unity(t[static_cast<std::size_t>(i)])));
    return m;
  }

  FieldMatrix word_matrix(const Word& word) const {
    FieldMatrix m = group_.identity();
    for (int i : word) m = group_.multiply(m, group_.sigma(i));
    return m;
  }

  FieldMatrix sigma_matrix(const WeylElement& w) const { return word_matrix(reduced_word(w)); }

  FieldMatrix to_matrix(const NormalizerElement& n) const {
    return group_.multiply(torus_matrix(n.torus()), sigma_matrix(n.weyl()));
  }

  FieldMatrix frobenius(const FieldMatrix& m) const { return group_.frobenius(m, ctx_.q()); }

 private:
  static FiniteField make_field(const CyclotomicContext& ctx) {
    if (ctx.is_complex() || !is_prime(ctx.q()) || ctx.q() % 2 == 0 || ctx.q() > FiniteField::kMaxPrime)
      throw std::invalid_argument("matrix oracle needs an odd prime q <= 13");
    return FiniteField(static_cast<int>(ctx.q()), 2);
  }

  CyclotomicContext ctx_;
  DatumPtr datum_;
  SpecialLinearGroup group_;
  FieldElement zeta_n_;
};

struct OracleInvolutionRow {
  Word word;
  bool abstract_identity;  // phi(n) n = 1 in the abstract model
  bool matrix_identity;    // phi(M) M = I in SL_n
};

struct OracleReport {
  CartanType type;
  std::int64_t q = 0;
  std::int64_t order = 0;
  SectionKind spec_kind = SectionKind::Zeta;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t words_checked = 0;
  std::size_t word_mismatches = 0;
  std::size_t product_mismatches = 0;
  std::size_t frobenius_mismatches = 0;
  std::size_t determinant_failures = 0;
  std::vector<OracleInvolutionRow> involutions;

  bool abstract_theorem_holds() const {
    for (const auto& r : involutions)
      if (!r.abstract_identity) return false;
    return true;
  }
  bool matrix_theorem_holds() const {
    for (const auto& r : involutions)
      if (!r.matrix_identity) return false;
    return true;
  }
  std::size_t theorem_disagreements() const {
    std::size_t k = 0;
    for (const auto& r : involutions) k += r.abstract_identity != r.matrix_identity ? 1 : 0;
    return k;
  }
  /// The abstract model and the matrices agree on everything checked.
  bool passed() const {
    return word_mismatches == 0 && product_mismatches == 0 && frobenius_mismatches == 0 &&
           determinant_failures == 0 && theorem_disagreements() == 0;
  }
};

inline NormalizerElement random_normalizer_element(const std::vector<WeylElement>& group, const CyclotomicContext& ctx,
                                                   std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  std::uniform_int_distribution<std::int64_t> exp(0, ctx.order() - 1);
  const WeylElement& w = group[pick(rng)];
  std::vector<std::int64_t> e(static_cast<std::size_t>(w.rank()));
  for (auto& x : e) x = exp(rng);
  return {TorusElement(ctx, std::move(e)), w};
}

/// Compares the abstract model with SL_{r+1}(F_{q^2}): word independence of
/// sigma_w, multiplicativity on sampled pairs, phi against entrywise
/// Frobenius, and the identity phi(S(w)) S(w) = 1 for every involution.
inline OracleReport cross_validate(const SectionSpec& spec, std::size_t samples, std::uint64_t seed,
                                   const Bounds& bounds = {}) {
  const DatumPtr& d = spec.datum();
  const CyclotomicContext& ctx = spec.context();
  MatrixRealization real(ctx, d);
  const auto& G = real.group();

  OracleReport rep;
  rep.type = d->cartan_type();
  rep.q = ctx.q();
  rep.order = ctx.order();
  rep.spec_kind = spec.kind();
  rep.seed = seed;
  rep.samples = samples;

  const auto elements = enumerate(d, bounds.max_group_order);
  for (const auto& w : elements) {
    if (static_cast<std::size_t>(w.length()) > bounds.max_word_length) continue;
    const auto words = all_reduced_words(w, bounds.max_word_length);
    const FieldMatrix first = real.word_matrix(words.front());
    for (const auto& word : words) {
      ++rep.words_checked;
      if (!(real.word_matrix(word) == first)) ++rep.word_mismatches;
    }
  }

  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const NormalizerElement a = random_normalizer_element(elements, ctx, rng);
    const NormalizerElement b = random_normalizer_element(elements, ctx, rng);
    const FieldMatrix ma = real.to_matrix(a);
    if (!(G.determinant(ma) == G.field().one())) ++rep.determinant_failures;
    if (!(real.to_matrix(multiply(a, b)) == G.multiply(ma, real.to_matrix(b)))) ++rep.product_mismatches;
    if (!(real.to_matrix(apply_phi(a)) == real.frobenius(ma))) ++rep.frobenius_mismatches;
  }

  for (const auto& w : involutions_bruteforce(d, bounds.max_group_order)) {
    const NormalizerElement n = extend_section(spec, w);
    const FieldMatrix m = real.to_matrix(n);
    const bool matrix_ok = G.multiply(real.frobenius(m), m) == G.identity();
    rep.involutions.push_back({reduced_word(w), multiply(apply_phi(n), n).is_identity(), matrix_ok});
  }
  return rep;
}

}  // namespace tits
