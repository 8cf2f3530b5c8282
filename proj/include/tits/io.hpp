#pragma once

// JSON forms of the library's values and reports.

#include <string>

#include "json.hpp"
#include "tits/matrix_oracle.hpp"
#include "tits/tits_lift.hpp"

namespace tits {

using json = nlohmann::json;

inline json to_json(const IntMatrix& m) { return m.rows(); }

/// Action matrix, row-major nested arrays.
inline json to_json(const WeylElement& w) { return to_json(w.action()); }

inline json to_json(const TorusElement& t) { return {{"N", t.context().order()}, {"exps", t.exps()}}; }

inline TorusElement torus_from_json(const CyclotomicContext& ctx, const json& j) {
  if (j.at("N").get<std::int64_t>() != ctx.order()) throw std::invalid_argument("torus element has the wrong N");
  return TorusElement(ctx, j.at("exps").get<std::vector<std::int64_t>>());
}

inline json to_json(const NormalizerElement& n) {
  return {{"torus", to_json(n.torus())}, {"word", word_to_string(reduced_word(n.weyl()))}};
}

inline json to_json(const FieldElement& x) { return json::array({x.c0, x.c1}); }

/// Nested arrays of polynomial-coefficient vectors [c0, c1].
inline json to_json(const FieldMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline json context_fields(const CyclotomicContext& ctx) {
  json j;
  j["mode"] = ctx.mode_name();
  j["q"] = ctx.is_complex() ? json(nullptr) : json(ctx.q());
  j["N"] = ctx.order();
  j["zeta_exp"] = ctx.zeta_exp();
  return j;
}

inline json to_json(const TheoremReport& r) {
  json j = context_fields(r.ctx);
  j["type"] = r.type.name();
  j["rank"] = r.type.rank;
  j["spec"] = to_string(r.spec_kind);
  j["z_exps"] = r.z_exps;
  j["braid_relations"] = r.braid_relations;
  j["phi_condition"] = r.phi_condition;
  j["involution_count"] = r.involution_count();
  j["passed_count"] = r.passed_count();
  json failures = json::array();
  for (const auto* f : r.failures())
    failures.push_back({{"word", word_to_string(f->word)}, {"phi_n_times_n", to_json(f->residue)}});
  j["failures"] = failures;
  j["inductive"] = {{"steps", r.inductive_steps.size()},
                    {"breaks", r.inductive_breaks()},
                    {"factorization_failures", r.factorization_failures()}};
  j["deodhar_matches_bruteforce"] = r.deodhar_matches_bruteforce;
  j["passed"] = r.passed();
  return j;
}

inline json to_json(const OracleReport& r) {
  json j;
  j["type"] = r.type.name();
  j["rank"] = r.type.rank;
  j["q"] = r.q;
  j["N"] = r.order;
  j["spec"] = to_string(r.spec_kind);
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["words_checked"] = r.words_checked;
  j["word_mismatches"] = r.word_mismatches;
  j["product_mismatches"] = r.product_mismatches;
  j["frobenius_mismatches"] = r.frobenius_mismatches;
  j["determinant_failures"] = r.determinant_failures;
  json rows = json::array();
  for (const auto& row : r.involutions)
    rows.push_back({{"word", word_to_string(row.word)},
                    {"abstract_identity", row.abstract_identity},
                    {"matrix_identity", row.matrix_identity}});
  j["involutions"] = rows;
  j["abstract_theorem_holds"] = r.abstract_theorem_holds();
  j["matrix_theorem_holds"] = r.matrix_theorem_holds();
  j["passed"] = r.passed();
  return j;
}

}  // namespace tits
