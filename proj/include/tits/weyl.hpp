#pragma once

// Weyl group elements as integer matrices acting on the simple-coroot basis.
//
// Column j of an element's action matrix holds the coordinates of
// w(alpha_j^vee). Reduced words are derived from the matrix by descent
// stripping; the matrix is the canonical form used for equality and hashing.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tits/root_datum.hpp"

namespace tits {

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Bounds {
  std::size_t max_group_order = 2000;
  std::size_t max_word_length = 12;
};

/// Square integer matrix of size at most kMaxRank.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n) {
    if (n < 0 || n > kMaxRank) throw std::invalid_argument("matrix size out of range");
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int size() const { return n_; }
  long operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * kMaxRank + c)]; }
  long& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * kMaxRank + c)]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("matrix size mismatch");
    IntMatrix r(x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int k = 0; k < x.n_; ++k) {
        long v = x(i, k);
        if (v == 0) continue;
        for (int j = 0; j < x.n_; ++j) r(i, j) += v * y(k, j);
      }
    return r;
  }

  template <typename Tag>
  LatticeVector<Tag> apply(const LatticeVector<Tag>& v) const {
    if (v.rank() != static_cast<std::size_t>(n_)) throw std::invalid_argument("vector size mismatch");
    LatticeVector<Tag> r(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      long s = 0;
      for (int j = 0; j < n_; ++j) s += (*this)(i, j) * v[static_cast<std::size_t>(j)];
      r[static_cast<std::size_t>(i)] = s;
    }
    return r;
  }

  std::vector<std::vector<long>> rows() const {
    std::vector<std::vector<long>> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
    return out;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(n_);
    for (long v : a_) h = h * 1000003u ^ static_cast<std::size_t>(v + 0x9e37);
    return h;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_ = 0;
  std::array<long, kMaxRank * kMaxRank> a_{};
};

/// Sequence of simple indices; {0, 1, 0} stands for s_0 s_1 s_0.
using Word = std::vector<int>;

inline std::string word_to_string(const Word& w) {
  std::string s;
  for (int i : w) s += static_cast<char>('0' + i);
  return s;
}

inline Word parse_word(std::string_view s) {
  Word w;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad word '" + std::string(s) + "'");
    w.push_back(c - '0');
  }
  return w;
}

class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement identity(DatumPtr datum) {
    return WeylElement(datum, IntMatrix::identity(datum->rank()));
  }

  /// Matrix of s_i on the coroot basis: s_i(alpha_j^vee) = alpha_j^vee - cartan(j, i) alpha_i^vee.
  static WeylElement generator(DatumPtr datum, int i) {
    datum->check_index(i);
    IntMatrix m = IntMatrix::identity(datum->rank());
    for (int j = 0; j < datum->rank(); ++j) m(i, j) -= datum->cartan(j, i);
    return WeylElement(datum, m);
  }

  /// Wraps an arbitrary action matrix. The matrix must preserve the coroot
  /// system; this is checked.
  static WeylElement from_matrix(DatumPtr datum, const IntMatrix& m) {
    if (m.size() != datum->rank()) throw std::invalid_argument("matrix size does not match rank");
    const auto& coroots = datum->positive_coroots();
    std::set<CorootVector> images;
    for (const auto& c : coroots) {
      auto image = m.apply(c);
      if (!image.is_nonnegative()) image = -image;
      if (!std::binary_search(coroots.begin(), coroots.end(), image, by_height<CorootVector>))
        throw std::invalid_argument("matrix is not a Weyl group element");
      images.insert(image);
    }
    if (images.size() != coroots.size()) throw std::invalid_argument("matrix is not a Weyl group element");
    WeylElement w(datum, m);
    return w;
  }

  const RootDatum& datum() const { return *datum_; }
  const DatumPtr& datum_ptr() const { return datum_; }
  int rank() const { return action_.size(); }
  const IntMatrix& action() const { return action_; }

  /// Number of positive coroots sent to negative ones (equivalently roots).
  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  CorootVector apply(const CorootVector& v) const { return action_.apply(v); }

  /// l(w s_i) < l(w), i.e. w(alpha_i) < 0.
  bool has_right_descent(int i) const {
    datum_->check_index(i);
    for (int r = 0; r < rank(); ++r) {
      if (action_(r, i) < 0) return true;
      if (action_(r, i) > 0) return false;
    }
    return false;
  }

  std::vector<int> right_descents() const {
    std::vector<int> out;
    for (int i = 0; i < rank(); ++i)
      if (has_right_descent(i)) out.push_back(i);
    return out;
  }

  /// l(s_i w) < l(w), i.e. w^{-1}(alpha_i) < 0.
  bool has_left_descent(int i) const { return inverse().has_right_descent(i); }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    a.check_same_datum(b);
    return WeylElement(a.datum_, a.action_ * b.action_);
  }

  WeylElement times_generator(int i) const { return *this * generator(datum_, i); }
  WeylElement generator_times(int i) const { return generator(datum_, i) * *this; }

  WeylElement inverse() const {
    WeylElement r = identity(datum_);
    WeylElement cur = *this;
    // cur = w, peel right descents: w = w' s_i  =>  w^{-1} = s_i w'^{-1}.
    while (!cur.is_identity()) {
      int i = cur.first_right_descent();
      cur = cur.times_generator(i);
      r = r.times_generator(i);
    }
    return r;
  }

  bool is_involution() const { return (*this * *this).is_identity(); }
  bool commutes_with(const WeylElement& o) const { return *this * o == o * *this; }

  int first_right_descent() const {
    for (int i = 0; i < rank(); ++i)
      if (has_right_descent(i)) return i;
    return -1;
  }

  void check_same_datum(const WeylElement& o) const {
    if (datum_ != o.datum_ && !(datum_ && o.datum_ && datum_->cartan_type() == o.datum_->cartan_type()))
      throw std::invalid_argument("Weyl elements from different root data");
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    if (a.datum_ && b.datum_ && a.datum_ != b.datum_ && !(a.datum_->cartan_type() == b.datum_->cartan_type()))
      return false;
    return a.action_ == b.action_;
  }

 private:
  WeylElement(DatumPtr datum, IntMatrix m) : datum_(std::move(datum)), action_(m) {
    for (const auto& c : datum_->positive_coroots())
      if (!action_.apply(c).is_nonnegative()) ++length_;
  }

  DatumPtr datum_;
  IntMatrix action_;
  int length_ = 0;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const { return w.action().hash(); }
};

inline WeylElement evaluate(DatumPtr datum, const Word& word) {
  WeylElement w = WeylElement::identity(datum);
  for (int i : word) w = w.times_generator(i);
  return w;
}

/// Reduced word obtained by repeatedly stripping the smallest right descent.
inline Word reduced_word(const WeylElement& w) {
  Word rev;
  WeylElement cur = w;
  while (!cur.is_identity()) {
    int i = cur.first_right_descent();
    rev.push_back(i);
    cur = cur.times_generator(i);
  }
  return Word(rev.rbegin(), rev.rend());
}

namespace detail {

inline void collect_reduced_words(const WeylElement& w, Word& suffix, std::vector<Word>& out) {
  if (w.is_identity()) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int i : w.right_descents()) {
    suffix.push_back(i);
    collect_reduced_words(w.times_generator(i), suffix, out);
    suffix.pop_back();
  }
}

}  // namespace detail

/// Every reduced word of w, in lexicographic order.
inline std::vector<Word> all_reduced_words(const WeylElement& w, std::size_t max_length = Bounds{}.max_word_length) {
  if (static_cast<std::size_t>(w.length()) > max_length)
    throw BoundExceeded("element length " + std::to_string(w.length()) + " exceeds word bound " +
                        std::to_string(max_length));
  std::vector<Word> out;
  Word suffix;
  detail::collect_reduced_words(w, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Whole group by breadth-first closure over the generators; ordered by
/// length, then discovery.
inline std::vector<WeylElement> enumerate(DatumPtr datum, std::size_t max_order = Bounds{}.max_group_order) {
  std::vector<WeylElement> out{WeylElement::identity(datum)};
  std::unordered_set<WeylElement, WeylElementHash> seen{out.front()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 0; i < datum->rank(); ++i) {
      WeylElement next = out[head].times_generator(i);
      if (seen.insert(next).second) {
        if (out.size() >= max_order)
          throw BoundExceeded("Weyl group of " + datum->name() + " exceeds order bound " + std::to_string(max_order));
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

inline WeylElement longest_element(DatumPtr datum) {
  WeylElement w = WeylElement::identity(datum);
  for (;;) {
    bool grew = false;
    for (int i = 0; i < datum->rank(); ++i) {
      if (!w.has_right_descent(i)) {
        w = w.times_generator(i);
        grew = true;
        break;
      }
    }
    if (!grew) return w;
  }
}

/// { w : w^2 = e }, including e.
inline std::vector<WeylElement> involutions_bruteforce(DatumPtr datum, std::size_t max_order = Bounds{}.max_group_order) {
  std::vector<WeylElement> out;
  for (auto& w : enumerate(datum, max_order))
    if (w.is_involution()) out.push_back(std::move(w));
  return out;
}

enum class MoveKind { CommutingMultiplication, Conjugation };

/// One length-increasing step: w -> s_i w (s_i commutes with w) or
/// w -> s_i w s_i (s_i does not commute with w).
struct DeodharMove {
  MoveKind kind;
  int simple;

  WeylElement apply(const WeylElement& w) const {
    WeylElement r = w.generator_times(simple);
    return kind == MoveKind::Conjugation ? r.times_generator(simple) : r;
  }

  std::string to_string() const {
    return (kind == MoveKind::CommutingMultiplication ? "mul(" : "conj(") + std::to_string(simple) + ")";
  }

  friend bool operator==(const DeodharMove&, const DeodharMove&) = default;
};

struct InvolutionRecord {
  WeylElement element;
  std::vector<DeodharMove> chain;  // moves applied to e, in order
};

/// All involutions generated from e by the two length-increasing moves,
/// each tagged with the first chain that reached it.
inline std::vector<InvolutionRecord> involutions_deodhar(DatumPtr datum, std::size_t max_order = Bounds{}.max_group_order) {
  std::vector<InvolutionRecord> out{{WeylElement::identity(datum), {}}};
  std::unordered_set<WeylElement, WeylElementHash> seen{out.front().element};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (MoveKind kind : {MoveKind::CommutingMultiplication, MoveKind::Conjugation}) {
      for (int i = 0; i < datum->rank(); ++i) {
        const WeylElement& w = out[head].element;
        const WeylElement s = WeylElement::generator(datum, i);
        const bool commutes = w.commutes_with(s);
        if (commutes != (kind == MoveKind::CommutingMultiplication)) continue;
        DeodharMove move{kind, i};
        WeylElement next = move.apply(w);
        if (next.length() <= w.length()) continue;
        if (!seen.insert(next).second) continue;
        if (out.size() >= max_order) throw BoundExceeded("involution closure exceeds order bound");
        auto chain = out[head].chain;
        chain.push_back(move);
        out.push_back({std::move(next), std::move(chain)});
      }
    }
  }
  return out;
}

}  // namespace tits

template <>
struct std::hash<tits::WeylElement> {
  std::size_t operator()(const tits::WeylElement& w) const { return w.action().hash(); }
};
