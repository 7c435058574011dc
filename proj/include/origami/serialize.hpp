#pragma once

// JSON encoding of groups, certificates and reports. Matrices are 8 reals
// [Re a, Im a, Re b, Im b, Re c, Im c, Re d, Im d]; non-finite reals are
// written as null.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "origami/builder.hpp"
#include "origami/finite_group.hpp"
#include "origami/geometry.hpp"
#include "origami/limitset.hpp"
#include "origami/moebius.hpp"
#include "origami/word.hpp"

namespace origami {

using json = nlohmann::ordered_json;

inline json real_json(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

inline double real_from(const json& j) {
  if (j.is_null())
    return std::numeric_limits<double>::quiet_NaN();
  if (!j.is_number())
    throw precondition_error("expected a number in JSON input");
  return j.get<double>();
}

inline json complex_json(complex z) { return json::array({real_json(z.real()), real_json(z.imag())}); }

inline complex complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw precondition_error("expected [re, im] in JSON input");
  return {real_from(j[0]), real_from(j[1])};
}

inline json matrix_json(const MoebiusMap& m) {
  json out = json::array();
  for (const auto& c : m.coefficients()) {
    out.push_back(real_json(c.real()));
    out.push_back(real_json(c.imag()));
  }
  return out;
}

inline MoebiusMap matrix_from(const json& j) {
  if (!j.is_array() || j.size() != 8)
    throw precondition_error("expected 8 reals for a matrix in JSON input");
  auto at = [&](std::size_t k) { return complex(real_from(j[2 * k]), real_from(j[2 * k + 1])); };
  return {at(0), at(1), at(2), at(3)};
}

inline json circle_json(const Circle& c) {
  return {{"center", complex_json(c.center)},
          {"radius", real_json(c.radius)},
          {"interior", c.interior == Interior::disc ? "disc" : "complement"}};
}

inline Circle circle_from(const json& j) {
  const auto interior = j.at("interior").get<std::string>();
  if (interior != "disc" && interior != "complement")
    throw precondition_error("circle interior must be disc or complement");
  return {complex_from(j.at("center")), real_from(j.at("radius")),
          interior == "disc" ? Interior::disc : Interior::complement};
}

inline json word_json(const Word& w, const std::vector<std::string>& names) {
  return format_word(w, names);
}

inline json class_json(const MapClass& c) { return to_string(c); }

inline json kind_json(const GroupKind& k) {
  return {{"case", k.is_case_a() ? "a" : "b"}, {"n", k.n}};
}

inline GroupKind kind_from(const json& j) {
  const auto c = j.at("case").get<std::string>();
  if (c == "a")
    return GroupKind::case_a(j.at("n").get<int>());
  if (c == "b")
    return GroupKind::case_b();
  throw precondition_error("kind case must be a or b");
}

inline json certificate_json(const CombinationCertificate& cert) {
  json orbit = json::array();
  for (const auto& o : cert.orbit)
    orbit.push_back({{"circle", circle_json(o.circle)},
                     {"base", o.base == 0 ? "first" : "second"},
                     {"element", o.element}});
  json stab = json::array();
  for (const auto& s : cert.stabilizer_checks)
    stab.push_back({{"circle", circle_json(s.circle)},
                    {"elliptic", matrix_json(s.elliptic)},
                    {"residual", real_json(s.residual)}});
  return {{"verdict", cert.verdict},
          {"orbit_size", cert.orbit.size()},
          {"pairwise_margin", real_json(cert.pairwise_margin)},
          {"pairing_residual", real_json(cert.pairing_residual)},
          {"conjugation_residual", real_json(cert.conjugation_residual)},
          {"degenerate", cert.degenerate},
          {"orbit", orbit},
          {"stabilizer_checks", stab}};
}

inline json group_json(const OrigamiSchottkyGroup& g) {
  const auto& p = g.pairing;
  return {{"kind", kind_json(g.kind)},
          {"presentation",
           {{"generators", g.presentation.generators},
            {"relators", [&] {
               json rels = json::array();
               for (const auto& r : g.presentation.relators)
                 rels.push_back(format_word(r, g.presentation.generators));
               return rels;
             }()}}},
          {"matrices",
           {{"A", matrix_json(g.A)}, {"B", matrix_json(g.B)}, {"T", matrix_json(g.T)}}},
          {"classification",
           {{"A", class_json(classify(g.A))},
            {"B", class_json(classify(g.B))},
            {"T", class_json(classify(g.T))}}},
          {"relator_residual", real_json(g.relator_residual)},
          {"pairing",
           {{"first", circle_json(p.first)},
            {"second", circle_json(p.second)},
            {"source", matrix_json(p.source)},
            {"target", matrix_json(p.target)},
            {"lambda", complex_json(p.lambda)},
            {"form", to_string(p.form)},
            {"circle_parameter", real_json(p.circle_parameter)}}},
          {"certificate", certificate_json(g.certificate)}};
}

/// Rebuilds a group from build JSON, re-running every certification step on
/// the stored matrices and circles rather than trusting stored verdicts.
inline OrigamiSchottkyGroup group_from(const json& j, double tol = kDefaultTolerance) {
  try {
    const GroupKind kind = kind_from(j.at("kind"));
    const auto& m = j.at("matrices");
    const auto& p = j.at("pairing");
    OrigamiSchottkyGroup g{kind,
                           matrix_from(m.at("A")),
                           matrix_from(m.at("B")),
                           matrix_from(m.at("T")),
                           {},
                           {},
                           presentation_for(kind),
                           kind.is_case_a() ? dihedral_elements(kind.n) : a4_elements()};
    const auto form_name = p.at("form").get<std::string>();
    g.pairing = {circle_from(p.at("first")),
                 circle_from(p.at("second")),
                 g.T,
                 matrix_from(p.at("source")),
                 matrix_from(p.at("target")),
                 complex_from(p.at("lambda")),
                 form_name == "inversion" ? PairingForm::inversion : PairingForm::scale,
                 real_from(p.at("circle_parameter"))};
    // The stored A, B must be the standard generators the vertex group was
    // closed from.
    const auto std_gens = kind.is_case_a() ? dn_generators(kind.n) : a4_generators();
    if (!projectively_equal(std_gens.first, g.A, tol) || !projectively_equal(std_gens.second, g.B, tol))
      throw precondition_error("stored A, B differ from the standard generators");
    return detail::finish_build(std::move(g), tol);
  } catch (const json::exception& e) {
    throw precondition_error(std::string("malformed build JSON: ") + e.what());
  }
}

inline json freeness_json(const FreenessReport& r, const std::vector<std::string>& names) {
  json hits = json::array();
  for (const auto& w : r.identity_hits)
    hits.push_back(word_json(w, names));
  return {{"max_length", r.max_length},
          {"words_checked", r.words_checked},
          {"min_distance_to_identity", real_json(r.min_distance)},
          {"identity_hits", hits},
          {"passed", r.passed()}};
}

inline json loxodromy_json(const LoxodromyReport& r, const std::vector<std::string>& names) {
  json v = json::array();
  for (const auto& x : r.violations)
    v.push_back({{"word", word_json(x.word, names)}, {"class", class_json(x.cls)}});
  return {{"max_length", r.max_length},
          {"words_checked", r.words_checked},
          {"violations", v},
          {"passed", r.passed()}};
}

/// Names g1, g2, ... for the subgroup generators.
inline std::vector<std::string> subgroup_generator_names(std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i)
    names.push_back("g" + std::to_string(i + 1));
  return names;
}

inline json report_json(const SubgroupReport& r, const Presentation& p) {
  json words = json::array();
  for (const auto& w : r.generator_words)
    words.push_back(format_word(w, p.generators));
  json mats = json::array();
  for (const auto& m : r.generator_matrices)
    mats.push_back(matrix_json(m));
  const auto names = subgroup_generator_names(r.generator_words.size());
  auto opt = [](const auto& o) { return o ? json(*o) : json(nullptr); };
  return {{"generator_words", words},
          {"generator_matrices", mats},
          {"index", r.index},
          {"normal", r.normal},
          {"quotient_tag", r.quotient_tag ? json(to_string(*r.quotient_tag)) : json(nullptr)},
          {"core_index", r.core_index},
          {"genus", opt(r.genus)},
          {"hurwitz_equality", opt(r.hurwitz_equality)},
          {"torsion_free_kernel", opt(r.torsion_free_kernel)},
          {"freeness_depth_checked", r.freeness.max_length},
          {"loxodromy_depth_checked", r.loxodromy.max_length},
          {"freeness", freeness_json(r.freeness, names)},
          {"loxodromy", loxodromy_json(r.loxodromy, names)},
          {"passed", r.passed()}};
}

inline json homs_json(const std::vector<Homomorphism>& homs, const Presentation& p,
                      const FiniteGroup& target) {
  json list = json::array();
  std::size_t both = 0;
  for (const auto& h : homs) {
    json images = json::object();
    for (std::size_t g = 0; g < h.images.size(); ++g)
      images[p.generators[g]] = h.images[g];
    const bool flagged = h.surjective && h.torsion_free.value_or(false);
    both += flagged ? 1 : 0;
    list.push_back({{"images", images},
                    {"surjective", h.surjective},
                    {"torsion_free_kernel",
                     h.torsion_free ? json(*h.torsion_free) : json(nullptr)}});
  }
  return {{"target", target.name()},
          {"target_order", target.order()},
          {"count", homs.size()},
          {"surjective_and_torsion_free", both},
          {"homomorphisms", list}};
}

inline json nesting_json(const NestingReport& r) {
  json depths = json::array();
  for (std::size_t d = 0; d < r.max_radius.size(); ++d)
    depths.push_back({{"depth", d + 1},
                      {"max_radius", real_json(r.max_radius[d])},
                      {"circles", r.count[d]},
                      {"rejected", r.rejected[d]}});
  return {{"initial_max_radius", real_json(r.initial_max_radius)}, {"depths", depths}};
}

}  // namespace origami
