#include <catch_amalgamated.hpp>

#include <random>

#include "support.hpp"
#include "tits/tits_lift.hpp"

using namespace tits;

namespace {

struct Term {
  CorootVector coroot;
  bool uses_alpha;  // evaluated at z_alpha, else z_beta
};

TorusElement closed_form(const CyclotomicContext& ctx, const std::vector<Term>& terms, std::int64_t za,
                         std::int64_t zb) {
  TorusElement t = TorusElement::identity(ctx, static_cast<int>(terms.front().coroot.rank()));
  for (const auto& term : terms) t = t * coroot_value(ctx, term.coroot, term.uses_alpha ? za : zb);
  return t;
}

SectionSpec pair_spec(const CyclotomicContext& ctx, DatumPtr d, int a, std::int64_t za, int b, std::int64_t zb) {
  std::vector<std::int64_t> z(static_cast<std::size_t>(d->rank()), 0);
  z[static_cast<std::size_t>(a)] = za;
  z[static_cast<std::size_t>(b)] = zb;
  return SectionSpec::from_exponents(ctx, d, z);
}

}  // namespace

TEST_CASE("mul_by_generator", "[tits_lift]") {
  auto a1 = build_root_datum("A1");
  auto ctx = CyclotomicContext::finite(3);
  auto id = NormalizerElement::identity(ctx, a1);
  auto s = WeylElement::generator(a1, 0);
  CHECK(mul_by_generator(id, 0) == NormalizerElement::tits_lift(ctx, s));
  auto sq = mul_by_generator(NormalizerElement::tits_lift(ctx, s), 0);
  CHECK(sq.weyl().is_identity());
  CHECK(sq.torus() == minus_one_at(ctx, a1->simple_coroot(0)));

  auto a2 = build_root_datum("A2");
  auto n0 = NormalizerElement::tits_lift(ctx, WeylElement::generator(a2, 0));
  auto n1 = NormalizerElement::tits_lift(ctx, WeylElement::generator(a2, 1));
  auto lhs = mul_by_generator(mul_by_generator(n0, 1), 0);
  auto rhs = mul_by_generator(mul_by_generator(n1, 0), 1);
  CHECK(lhs == rhs);
  CHECK(lhs == NormalizerElement::tits_lift(ctx, longest_element(a2)));
}

TEST_CASE("multiply and invert", "[tits_lift]") {
  std::mt19937_64 rng(2024);
  {
    auto b2 = build_root_datum("B2");
    auto ctx = CyclotomicContext::finite(5);
    auto group = enumerate(b2);
    auto id = NormalizerElement::identity(ctx, b2);
    for (int k = 0; k < 200; ++k) {
      auto n = testing::random_element(group, ctx, rng);
      CHECK(multiply(n, id) == n);
      CHECK(multiply(id, n) == n);
      CHECK(multiply(n, invert(n)).is_identity());
      CHECK(multiply(invert(n), n).is_identity());
    }
  }
  {
    auto a2 = build_root_datum("A2");
    auto ctx = CyclotomicContext::finite(3);
    auto group = enumerate(a2);
    for (int k = 0; k < 200; ++k) {
      auto a = testing::random_element(group, ctx, rng);
      auto b = testing::random_element(group, ctx, rng);
      auto c = testing::random_element(group, ctx, rng);
      CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
  }
}

TEST_CASE("invert examples", "[tits_lift]") {
  auto a1 = build_root_datum("A1");
  auto ctx = CyclotomicContext::finite(3);
  CHECK(invert(NormalizerElement::identity(ctx, a1)).is_identity());
  auto s = NormalizerElement::tits_lift(ctx, WeylElement::generator(a1, 0));
  auto inv = invert(s);
  CHECK(inv.weyl() == s.weyl());
  CHECK(inv.torus() == minus_one_at(ctx, a1->simple_coroot(0)));
  // sigma has order 4 when -1 != 1
  CHECK_FALSE(power(s, 2).is_identity());
  CHECK(power(s, 4).is_identity());
}

TEST_CASE("group axioms on the full B2 model over q = 3", "[tits_lift]") {
  auto counts = testing::check_group_axioms_exhaustively(CyclotomicContext::finite(3), build_root_datum("B2"));
  CHECK(counts.elements == 8 * 4 * 4);
  CHECK(counts.closure_failures == 0);
  CHECK(counts.identity_failures == 0);
  CHECK(counts.inverse_failures == 0);
  CHECK(counts.associativity_failures == 0);
}

TEST_CASE("apply_phi", "[tits_lift]") {
  auto a2 = build_root_datum("A2");
  auto f3 = CyclotomicContext::finite(3);
  for (const auto& w : enumerate(a2)) {
    auto n = NormalizerElement::tits_lift(f3, w);
    CHECK(apply_phi(n) == n);
  }
  auto t = coroot_value(f3, a2->simple_coroot(0), f3.zeta_exp());
  NormalizerElement n{t, WeylElement::identity(a2)};
  CHECK(apply_phi(n).torus() == coroot_value(f3, a2->simple_coroot(0), 3));
  auto c = CyclotomicContext::complex();
  NormalizerElement m{coroot_value(c, a2->simple_coroot(0), 1), WeylElement::identity(a2)};
  CHECK(apply_phi(m).torus() == coroot_value(c, a2->simple_coroot(0), -1));
}

TEST_CASE("tits lift is independent of the reduced word", "[tits_lift]") {
  auto ctx = CyclotomicContext::finite(7);
  for (const char* name : {"A3", "B3", "G2"}) {
    auto d = build_root_datum(name);
    for (const auto& w : enumerate(d)) {
      for (const auto& word : all_reduced_words(w)) {
        auto n = NormalizerElement::identity(ctx, d);
        for (int i : word) n = mul_by_generator(n, i);
        CHECK(n == NormalizerElement::tits_lift(ctx, w));
      }
    }
  }
}

TEST_CASE("Tits cocycle takes values in coroots at -1", "[tits_lift]") {
  for (auto ctx : {CyclotomicContext::finite(3), CyclotomicContext::finite(7), CyclotomicContext::complex()}) {
    for (const char* name : {"B3", "G2", "A3"}) {
      auto d = build_root_datum(name);
      auto group = enumerate(d);
      for (const auto& u : group)
        for (const auto& v : group) {
          auto p = multiply(NormalizerElement::tits_lift(ctx, u), NormalizerElement::tits_lift(ctx, v));
          REQUIRE(p.weyl() == u * v);
          for (auto e : p.torus().exps()) CHECK((e == 0 || e == ctx.minus_one_exp()));
        }
    }
  }
}

TEST_CASE("conjugation by sigma_a acts as s_a on the torus", "[tits_lift]") {
  std::mt19937_64 rng(5);
  auto ctx = CyclotomicContext::finite(5);
  for (const char* name : {"B3", "G2", "F4"}) {
    auto d = build_root_datum(name);
    std::uniform_int_distribution<std::int64_t> e(0, ctx.order() - 1);
    for (int i = 0; i < d->rank(); ++i) {
      auto sigma = NormalizerElement::tits_lift(ctx, WeylElement::generator(d, i));
      for (int k = 0; k < 20; ++k) {
        std::vector<std::int64_t> x(static_cast<std::size_t>(d->rank()));
        for (auto& v : x) v = e(rng);
        TorusElement t(ctx, x);
        auto conj = multiply(multiply(sigma, NormalizerElement{t, WeylElement::identity(d)}), invert(sigma));
        CHECK(conj.weyl().is_identity());
        CHECK(conj.torus() == weyl_act(WeylElement::generator(d, i), t));
      }
    }
  }
}

TEST_CASE("braid pair closed forms", "[tits_lift]") {
  std::mt19937_64 rng(99);
  auto ctx = CyclotomicContext::finite(7);
  std::uniform_int_distribution<std::int64_t> e(0, ctx.order() - 1);

  SECTION("A2") {
    auto d = build_root_datum("A2");
    const auto av = d->simple_coroot(0), bv = d->simple_coroot(1);
    std::vector<Term> form = {{av, true}, {av, false}, {bv, true}, {bv, false}};
    for (int k = 0; k < 20; ++k) {
      auto za = e(rng), zb = e(rng);
      auto r = check_braid_pair(pair_spec(ctx, d, 0, za, 1, zb), 0, 1);
      CHECK(r.holds);
      CHECK(r.m == 3);
      CHECK(r.lhs == closed_form(ctx, form, za, zb));
      CHECK(r.rhs == closed_form(ctx, form, za, zb));
    }
  }
  SECTION("B2") {
    auto d = build_root_datum("B2");
    const int a = 1, b = 0;  // a short, b long
    const auto av = d->simple_coroot(a), bv = d->simple_coroot(b);
    // a^vee(z_a) (2a+b)^vee(z_b) (a+b)^vee(z_a) b^vee(z_b)
    std::vector<Term> form = {{av, true}, {av + bv, false}, {av + 2 * bv, true}, {bv, false}};
    for (int k = 0; k < 20; ++k) {
      auto za = e(rng), zb = e(rng);
      auto r = check_braid_pair(pair_spec(ctx, d, a, za, b, zb), a, b);
      CHECK(r.holds);
      CHECK(r.m == 4);
      CHECK(r.lhs == closed_form(ctx, form, za, zb));
    }
  }
  SECTION("G2") {
    auto d = build_root_datum("G2");
    const int a = 0, b = 1;
    const auto av = d->simple_coroot(a), bv = d->simple_coroot(b);
    std::vector<Term> form = {{av, true},           {av + bv, false},     {2 * av + 3 * bv, true},
                              {av + 2 * bv, false}, {av + 3 * bv, true}, {bv, false}};
    for (int k = 0; k < 20; ++k) {
      auto za = e(rng), zb = e(rng);
      auto r = check_braid_pair(pair_spec(ctx, d, a, za, b, zb), a, b);
      CHECK(r.holds);
      CHECK(r.m == 6);
      CHECK(r.lhs == closed_form(ctx, form, za, zb));
      CHECK(r.rhs == closed_form(ctx, form, za, zb));
    }
  }
  SECTION("trivial exponents") {
    auto d = build_root_datum("G2");
    auto r = check_braid_pair(SectionSpec::tits(ctx, d), 0, 1);
    CHECK(r.holds);
    CHECK(r.lhs.is_identity());
  }
}

TEST_CASE("non-coroot section values can break the braid relations", "[tits_lift]") {
  auto d = build_root_datum("A2");
  auto ctx = CyclotomicContext::finite(7);
  // t_0 = beta^vee(zeta), t_1 = 1
  auto spec = SectionSpec::from_factors(
      ctx, d, {coroot_value(ctx, d->simple_coroot(1), 1), TorusElement::identity(ctx, 2)});
  auto r = check_braid_pair(spec, 0, 1);
  CHECK_FALSE(r.holds);
  CHECK_FALSE(satisfies_braid_relations(spec));
  CHECK_THROWS_AS(extend_section(spec, longest_element(d)), BraidRelationError);
  auto v = verify_theorem(spec);
  CHECK_FALSE(v.braid_relations);
  CHECK_FALSE(v.passed());
}

TEST_CASE("extend_section", "[tits_lift]") {
  auto ctx = CyclotomicContext::finite(5);
  auto a3 = build_root_datum("A3");
  auto spec = SectionSpec::from_exponents(ctx, a3, {1, 6, 3});
  CHECK(extend_section(spec, WeylElement::identity(a3)).is_identity());
  for (int i = 0; i < 3; ++i) {
    auto n = extend_section(spec, WeylElement::generator(a3, i));
    CHECK(n.weyl() == WeylElement::generator(a3, i));
    CHECK(n.torus() == coroot_value(ctx, a3->simple_coroot(i), spec.z_exps()->at(static_cast<std::size_t>(i))));
  }
  auto w0 = longest_element(a3);
  CHECK(all_reduced_words(w0).size() == 16);
  auto single = extend_section(spec, w0);
  CHECK(extend_section(spec, w0, ExtendMode::AllReducedWords) == single);
  for (const auto& word : all_reduced_words(w0)) CHECK(fold_word(spec, word) == single);
}

TEST_CASE("section is multiplicative on length-additive pairs", "[tits_lift]") {
  std::mt19937_64 rng(17);
  for (const char* name : {"B2", "A3", "G2"}) {
    auto d = build_root_datum(name);
    for (auto ctx : {CyclotomicContext::finite(5), CyclotomicContext::complex()}) {
      std::uniform_int_distribution<std::int64_t> e(0, ctx.order() - 1);
      std::vector<std::int64_t> z(static_cast<std::size_t>(d->rank()));
      for (auto& x : z) x = e(rng);
      auto spec = SectionSpec::from_exponents(ctx, d, z);
      auto group = enumerate(d);
      for (const auto& u : group)
        for (const auto& v : group)
          if ((u * v).length() == u.length() + v.length())
            CHECK(extend_section(spec, u * v) == multiply(extend_section(spec, u), extend_section(spec, v)));
    }
  }
}

TEST_CASE("check_phi_condition", "[tits_lift]") {
  auto a3 = build_root_datum("A3");
  auto f3 = CyclotomicContext::finite(3);
  CHECK(check_phi_condition(SectionSpec::zeta(f3, a3)));
  CHECK_FALSE(check_phi_condition(SectionSpec::tits(f3, a3)));
  CHECK(check_phi_condition(SectionSpec::tits(CyclotomicContext::finite(2), a3)));
  CHECK(check_phi_condition(SectionSpec::zeta(CyclotomicContext::complex(), a3)));
  CHECK_FALSE(check_phi_condition(SectionSpec::tits(CyclotomicContext::complex(), a3)));
}

TEST_CASE("verify_theorem examples", "[tits_lift]") {
  auto a1 = build_root_datum("A1");
  auto f3 = CyclotomicContext::finite(3);
  auto ok = verify_theorem(SectionSpec::zeta(f3, a1));
  CHECK(ok.passed());
  CHECK(ok.involution_count() == 2);

  auto a3 = build_root_datum("A3");
  auto r = verify_theorem(SectionSpec::zeta(CyclotomicContext::finite(5), a3));
  CHECK(r.passed());
  CHECK(r.involution_count() == 10);
  CHECK(r.passed_count() == 10);
  CHECK(r.inductive_steps.size() == 9);
  CHECK(r.inductive_breaks() == 0);
  CHECK(r.factorization_failures() == 0);

  auto bad = verify_theorem(SectionSpec::tits(f3, a1));
  CHECK_FALSE(bad.passed());
  REQUIRE(bad.failures().size() == 1);
  CHECK(bad.failures()[0]->word == Word{0});
  CHECK(bad.failures()[0]->residue == minus_one_at(f3, a1->simple_coroot(0)));
}

TEST_CASE("phi condition implies the theorem for arbitrary exponents", "[tits_lift]") {
  // With N = 2(q-1), (q-1) z = N/2 mod N exactly when z is odd.
  std::mt19937_64 rng(3);
  for (const char* name : {"A3", "B3", "C3", "G2"}) {
    auto d = build_root_datum(name);
    for (std::int64_t q : {3, 5, 7, 9}) {
      auto ctx = CyclotomicContext::finite(q);
      std::uniform_int_distribution<std::int64_t> e(0, ctx.order() / 2 - 1);
      for (int k = 0; k < 3; ++k) {
        std::vector<std::int64_t> odd(static_cast<std::size_t>(d->rank()));
        for (auto& x : odd) x = 2 * e(rng) + 1;
        auto good = SectionSpec::from_exponents(ctx, d, odd);
        REQUIRE(check_phi_condition(good));
        CHECK(verify_theorem(good).passed());

        auto even = odd;
        even[static_cast<std::size_t>(k % d->rank())] += 1;
        auto spec = SectionSpec::from_exponents(ctx, d, even);
        CHECK_FALSE(check_phi_condition(spec));
        CHECK_FALSE(verify_theorem(spec).passed());
      }
    }
  }
}
