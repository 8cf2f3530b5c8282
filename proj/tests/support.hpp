#pragma once

// Helpers shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "tits/tits_lift.hpp"

namespace tits::testing {

/// Every t sigma_w with t in (mu_N)^rank and w in W.
inline std::vector<NormalizerElement> all_normalizer_elements(const CyclotomicContext& ctx, DatumPtr d) {
  std::vector<NormalizerElement> out;
  const auto group = enumerate(d);
  const int r = d->rank();
  std::int64_t torus_size = 1;
  for (int i = 0; i < r; ++i) torus_size *= ctx.order();
  for (const auto& w : group)
    for (std::int64_t code = 0; code < torus_size; ++code) {
      std::vector<std::int64_t> e(static_cast<std::size_t>(r));
      std::int64_t c = code;
      for (auto& x : e) {
        x = c % ctx.order();
        c /= ctx.order();
      }
      out.emplace_back(TorusElement(ctx, e), w);
    }
  return out;
}

struct AxiomCounts {
  std::size_t elements = 0;
  std::size_t triples = 0;
  std::size_t closure_failures = 0;
  std::size_t associativity_failures = 0;
  std::size_t identity_failures = 0;
  std::size_t inverse_failures = 0;
};

/// Builds the full multiplication table with multiply(), then checks the
/// group axioms on it for every element, pair and triple.
inline AxiomCounts check_group_axioms_exhaustively(const CyclotomicContext& ctx, DatumPtr d) {
  const auto elems = all_normalizer_elements(ctx, d);
  const std::size_t n = elems.size();
  auto key = [&](const NormalizerElement& x) {
    std::size_t h = x.weyl().action().hash();
    for (auto e : x.torus().exps()) h = h * 131u + static_cast<std::size_t>(e);
    return h;
  };
  std::unordered_multimap<std::size_t, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) index.emplace(key(elems[k]), k);
  auto find = [&](const NormalizerElement& x) -> std::ptrdiff_t {
    auto [lo, hi] = index.equal_range(key(x));
    for (auto it = lo; it != hi; ++it)
      if (elems[it->second] == x) return static_cast<std::ptrdiff_t>(it->second);
    return -1;
  };

  AxiomCounts c;
  c.elements = n;
  std::vector<std::size_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto idx = find(multiply(elems[a], elems[b]));
      if (idx < 0) {
        ++c.closure_failures;
        idx = 0;
      }
      table[a * n + b] = static_cast<std::size_t>(idx);
    }
  const auto id = NormalizerElement::identity(ctx, d);
  const std::size_t e = static_cast<std::size_t>(find(id));
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a * n + e] != a || table[e * n + a] != a) ++c.identity_failures;
    const auto inv = invert(elems[a]);
    if (!multiply(elems[a], inv).is_identity() || !multiply(inv, elems[a]).is_identity() ||
        !(invert(inv) == elems[a]))
      ++c.inverse_failures;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = table[a * n + b];
      for (std::size_t x = 0; x < n; ++x) {
        ++c.triples;
        if (table[ab * n + x] != table[a * n + table[b * n + x]]) ++c.associativity_failures;
      }
    }
  return c;
}

inline NormalizerElement random_element(const std::vector<WeylElement>& group, const CyclotomicContext& ctx,
                                        std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  std::uniform_int_distribution<std::int64_t> exp(0, ctx.order() - 1);
  const WeylElement& w = group[pick(rng)];
  std::vector<std::int64_t> e(static_cast<std::size_t>(w.rank()));
  for (auto& x : e) x = exp(rng);
  return {TorusElement(ctx, std::move(e)), w};
}

}  // namespace tits::testing
