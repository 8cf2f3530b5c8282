#pragma once

// Split root data of small rank, built from Cartan matrices.
//
// Roots live in the simple-root basis and coroots in the simple-coroot
// basis, both as integer vectors. The pairing convention is
//
//     cartan(i, j) = < alpha_j, alpha_i^vee >
//
// so that s_i(alpha_j) = alpha_j - cartan(i, j) alpha_i and
// s_i(alpha_j^vee) = alpha_j^vee - cartan(j, i) alpha_i^vee.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdlib>
#include <initializer_list>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tits {

inline constexpr int kMaxRank = 4;

/// Integer vector over a fixed lattice basis. The tag keeps root and coroot
/// coordinates from being mixed up.
template <typename Tag>
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : coeffs_(rank, 0) {}
  LatticeVector(std::initializer_list<long> init) : coeffs_(init) {}
  explicit LatticeVector(std::vector<long> coeffs) : coeffs_(std::move(coeffs)) {}

  static LatticeVector basis(std::size_t rank, std::size_t i) {
    LatticeVector v(rank);
    v.coeffs_.at(i) = 1;
    return v;
  }

  std::size_t rank() const { return coeffs_.size(); }
  long operator[](std::size_t i) const { return coeffs_[i]; }
  long& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<long>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](long c) { return c == 0; });
  }
  bool is_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](long c) { return c >= 0; });
  }
  bool is_nonpositive() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](long c) { return c <= 0; });
  }
  long height() const {
    long h = 0;
    for (long c : coeffs_) h += c;
    return h;
  }

  LatticeVector& operator+=(const LatticeVector& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  LatticeVector& operator*=(long k) {
    for (long& c : coeffs_) c *= k;
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(long k, LatticeVector a) { return a *= k; }
  LatticeVector operator-() const {
    LatticeVector r = *this;
    for (long& c : r.coeffs_) c = -c;
    return r;
  }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

 private:
  void check_rank(const LatticeVector& o) const {
    if (o.rank() != rank()) throw std::invalid_argument("lattice vectors of different rank");
  }

  std::vector<long> coeffs_;
};

/// Height first, then lexicographic. Positive roots and coroots are stored
/// sorted by this order.
template <typename V>
bool by_height(const V& a, const V& b) {
  return a.height() != b.height() ? a.height() < b.height() : a < b;
}

struct RootTag {};
struct CorootTag {};
using RootVector = LatticeVector<RootTag>;
using CorootVector = LatticeVector<CorootTag>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', F = 'F', G = 'G' };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  /// Throws std::invalid_argument for combinations outside the supported
  /// range (rank <= 4; G only in rank 2, F only in rank 4, B/C from rank 2,
  /// D from rank 3).
  void validate() const {
    bool ok = rank >= 1 && rank <= kMaxRank;
    switch (family) {
      case Family::A: break;
      case Family::B:
      case Family::C: ok = ok && rank >= 2; break;
      case Family::D: ok = ok && rank >= 3; break;
      case Family::F: ok = ok && rank == 4; break;
      case Family::G: ok = ok && rank == 2; break;
      default: ok = false;
    }
    if (!ok) throw std::invalid_argument("unsupported Cartan type " + name());
  }

  std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

  /// Parses "A2", "b3", "G2" (family letter followed by a decimal rank).
  static CartanType parse(std::string_view text) {
    if (text.size() < 2) throw std::invalid_argument("bad Cartan type '" + std::string(text) + "'");
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (std::string_view("ABCDFG").find(letter) == std::string_view::npos)
      throw std::invalid_argument("bad Cartan family in '" + std::string(text) + "'");
    int rank = 0;
    for (char c : text.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad Cartan rank in '" + std::string(text) + "'");
      rank = rank * 10 + (c - '0');
      if (rank > 1000) throw std::invalid_argument("Cartan rank too large");
    }
    CartanType t{static_cast<Family>(letter), rank};
    t.validate();
    return t;
  }

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

class RootDatum {
 public:
  explicit RootDatum(CartanType type) : type_(type) {
    type_.validate();
    const int n = type_.rank;
    build_lengths();
    cartan_.assign(static_cast<std::size_t>(n * n), 0);
    // Doubled symmetric form: 2(a_i, a_i) = 2 len_i, 2(a_i, a_j) = -max(len_i, len_j)
    // on edges of the Dynkin diagram. Then cartan(i, j) = 2(a_i, a_j) / len_i.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        long form = 0;
        if (i == j) {
          form = 2 * length2_[i];
        } else if (adjacent(i, j)) {
          form = -std::max(length2_[i], length2_[j]);
        }
        cartan_[static_cast<std::size_t>(i * n + j)] = form / length2_[i];
      }
    }
    build_roots();
  }

  const CartanType& cartan_type() const { return type_; }
  int rank() const { return type_.rank; }
  std::string name() const { return type_.name(); }

  /// < alpha_j, alpha_i^vee >
  long cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank() + j)]; }

  /// Squared length of the simple root in units where the shortest root has
  /// length 1 (simply-laced types use 1 throughout).
  long length2(int i) const { return length2_.at(static_cast<std::size_t>(i)); }
  bool is_long(int i) const {
    long mx = *std::max_element(length2_.begin(), length2_.end());
    long mn = *std::min_element(length2_.begin(), length2_.end());
    return mx != mn && length2(i) == mx;
  }
  bool is_short(int i) const {
    long mx = *std::max_element(length2_.begin(), length2_.end());
    long mn = *std::min_element(length2_.begin(), length2_.end());
    return mx != mn && length2(i) == mn;
  }

  RootVector simple_root(int i) const { return RootVector::basis(static_cast<std::size_t>(rank()), static_cast<std::size_t>(i)); }
  CorootVector simple_coroot(int i) const {
    return CorootVector::basis(static_cast<std::size_t>(rank()), static_cast<std::size_t>(i));
  }

  const std::vector<RootVector>& positive_roots() const { return positive_roots_; }
  const std::vector<CorootVector>& positive_coroots() const { return positive_coroots_; }
  /// Index into positive_coroots() of the coroot of positive_roots()[k].
  std::size_t root_to_coroot(std::size_t k) const { return root_to_coroot_.at(k); }
  CorootVector coroot_of(const RootVector& root) const {
    auto it = coroot_lookup_.find(root);
    if (it == coroot_lookup_.end()) throw std::invalid_argument("not a root");
    return it->second;
  }
  bool is_root(const RootVector& v) const { return coroot_lookup_.count(v) != 0; }

  /// < root, coroot >
  long pairing(const RootVector& root, const CorootVector& coroot) const {
    long s = 0;
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) s += coroot[static_cast<std::size_t>(i)] * root[static_cast<std::size_t>(j)] * cartan(i, j);
    return s;
  }

  RootVector reflect_root(int i, const RootVector& v) const {
    check_index(i);
    long c = 0;
    for (int j = 0; j < rank(); ++j) c += v[static_cast<std::size_t>(j)] * cartan(i, j);
    RootVector r = v;
    r[static_cast<std::size_t>(i)] -= c;
    return r;
  }

  /// s_i(y) = y - < alpha_i, y > alpha_i^vee
  CorootVector reflect_coroot(int i, const CorootVector& v) const {
    check_index(i);
    if (v.rank() != static_cast<std::size_t>(rank())) throw std::invalid_argument("coroot vector of wrong rank");
    long c = 0;
    for (int k = 0; k < rank(); ++k) c += v[static_cast<std::size_t>(k)] * cartan(k, i);
    CorootVector r = v;
    r[static_cast<std::size_t>(i)] -= c;
    return r;
  }

  /// Order of s_i s_j, read off from cartan(i, j) * cartan(j, i).
  int m_order(int i, int j) const {
    check_index(i);
    check_index(j);
    if (i == j) throw std::invalid_argument("m_order needs two distinct simple indices");
    switch (cartan(i, j) * cartan(j, i)) {
      case 0: return 2;
      case 1: return 3;
      case 2: return 4;
      case 3: return 6;
      default: throw std::logic_error("non-crystallographic Cartan entry");
    }
  }

  void check_index(int i) const {
    if (i < 0 || i >= rank()) throw std::out_of_range("simple index " + std::to_string(i) + " out of range");
  }

 private:
  bool adjacent(int i, int j) const {
    const int n = rank();
    auto chain = [&](int a, int b) { return std::abs(a - b) == 1; };
    switch (type_.family) {
      case Family::D:
        // Chain 0 - 1 - ... - (n-2), with node n-1 attached to node n-3.
        if (std::max(i, j) == n - 1) return std::min(i, j) == n - 3;
        return chain(i, j);
      default:
        return chain(i, j);
    }
  }

  void build_lengths() {
    const int n = rank();
    length2_.assign(static_cast<std::size_t>(n), 1);
    switch (type_.family) {
      case Family::B:  // alpha_n short
        for (int i = 0; i + 1 < n; ++i) length2_[static_cast<std::size_t>(i)] = 2;
        break;
      case Family::C:  // alpha_n long
        length2_[static_cast<std::size_t>(n - 1)] = 2;
        break;
      case Family::F:  // alpha_1, alpha_2 long
        length2_[0] = length2_[1] = 2;
        break;
      case Family::G:  // alpha_1 short, alpha_2 long
        length2_[1] = 3;
        break;
      default: break;
    }
  }

  // Orbit closure of the simple (root, coroot) pairs under the simple
  // reflections; w(alpha_i)^vee = w(alpha_i^vee).
  void build_roots() {
    const int n = rank();
    std::vector<std::pair<RootVector, CorootVector>> frontier;
    for (int i = 0; i < n; ++i) {
      frontier.emplace_back(simple_root(i), simple_coroot(i));
      coroot_lookup_.emplace(simple_root(i), simple_coroot(i));
    }
    while (!frontier.empty()) {
      std::vector<std::pair<RootVector, CorootVector>> next;
      for (const auto& [root, coroot] : frontier) {
        for (int i = 0; i < n; ++i) {
          RootVector r = reflect_root(i, root);
          if (coroot_lookup_.count(r)) continue;
          CorootVector c = reflect_coroot(i, coroot);
          coroot_lookup_.emplace(r, c);
          next.emplace_back(std::move(r), std::move(c));
        }
      }
      frontier = std::move(next);
    }

    for (const auto& [root, coroot] : coroot_lookup_) {
      if (root.is_nonnegative()) {
        positive_roots_.push_back(root);
        positive_coroots_.push_back(coroot);
      } else if (!root.is_nonpositive()) {
        throw std::logic_error("root with mixed-sign coefficients in " + name());
      }
    }
    std::vector<std::pair<RootVector, CorootVector>> pairs;
    for (std::size_t k = 0; k < positive_roots_.size(); ++k) pairs.emplace_back(positive_roots_[k], positive_coroots_[k]);
    std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) { return by_height<RootVector>(a.first, b.first); });
    positive_roots_.clear();
    for (const auto& p : pairs) positive_roots_.push_back(p.first);
    std::sort(positive_coroots_.begin(), positive_coroots_.end(), by_height<CorootVector>);
    for (const auto& p : pairs) {
      auto it = std::lower_bound(positive_coroots_.begin(), positive_coroots_.end(), p.second, by_height<CorootVector>);
      root_to_coroot_.push_back(static_cast<std::size_t>(it - positive_coroots_.begin()));
    }
  }

  CartanType type_;
  std::vector<long> cartan_;
  std::vector<long> length2_;
  std::vector<RootVector> positive_roots_;
  std::vector<CorootVector> positive_coroots_;
  std::vector<std::size_t> root_to_coroot_;
  std::map<RootVector, CorootVector> coroot_lookup_;
};

using DatumPtr = std::shared_ptr<const RootDatum>;

inline DatumPtr build_root_datum(CartanType type) { return std::make_shared<const RootDatum>(type); }
inline DatumPtr build_root_datum(std::string_view name) { return build_root_datum(CartanType::parse(name)); }

}  // namespace tits
