// Builds the zeta-section for B2 over F_5 and prints phi(S(w)) S(w) for
// every involution w.

#include <iostream>

#include "tits/tits.hpp"

int main() {
  using namespace tits;
  const DatumPtr b2 = build_root_datum("B2");
  const auto ctx = CyclotomicContext::finite(5);
  const auto spec = SectionSpec::zeta(ctx, b2);

  for (const auto& w : involutions_bruteforce(b2)) {
    const NormalizerElement n = extend_section(spec, w);
    const NormalizerElement check = multiply(apply_phi(n), n);
    const auto word = word_to_string(reduced_word(w));
    std::cout << (word.empty() ? "e" : word) << ":";
    for (auto e : check.torus().exps()) std::cout << ' ' << e;
    std::cout << (check.is_identity() ? "  (identity)\n" : "\n");
  }
}
