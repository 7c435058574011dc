#pragma once

// Certified origami-Schottky groups, realization of marked subgroups as
// matrix groups, and the genus arithmetic of their quotients.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "origami/coset_table.hpp"
#include "origami/error.hpp"
#include "origami/finite_group.hpp"
#include "origami/geometry.hpp"
#include "origami/moebius.hpp"
#include "origami/presentations.hpp"
#include "origami/word.hpp"

namespace origami {

inline constexpr double kRelatorTolerance = 1e-9;

/// Product of the generator images along w (leftmost letter outermost).
inline MoebiusMap evaluate_word(const Word& w, std::span<const MoebiusMap> images) {
  MoebiusMap m = MoebiusMap::identity();
  for (Letter x : w.letters()) {
    const auto& g = images[static_cast<std::size_t>(generator_of(x))];
    m = m * (is_inverse_letter(x) ? inverse(g) : g);
  }
  return m;
}

struct OrigamiSchottkyGroup {
  GroupKind kind;
  MoebiusMap A, B, T;
  PairedCircles pairing;
  CombinationCertificate certificate;
  Presentation presentation;
  std::vector<MoebiusMap> finite_elements;  // the vertex group D_n or A_4
  double relator_residual = 0.0;

  /// Matrices of the presentation generators: (B, T) or (A, B, T).
  std::vector<MoebiusMap> presentation_images() const {
    if (kind.is_case_a())
      return {B, T};
    return {A, B, T};
  }
};

struct BuildOptions {
  std::optional<double> circle_parameter;  // adaptive when unset
  std::optional<std::vector<complex>> grid;
  double tolerance = kDefaultTolerance;
};

inline double relator_residual(const Presentation& p, std::span<const MoebiusMap> images) {
  double worst = 0.0;
  for (const auto& r : p.relators)
    worst = std::max(worst, distance_to_identity(evaluate_word(r, images)));
  return worst;
}

namespace detail {

inline OrigamiSchottkyGroup finish_build(OrigamiSchottkyGroup g, double tol) {
  g.certificate = verify_combination(g.finite_elements, g.pairing, tol);
  const auto images = g.presentation_images();
  g.relator_residual = relator_residual(g.presentation, images);
  if (!g.certificate.verdict)
    throw computation_error("combination certificate failed");
  if (g.relator_residual >= kRelatorTolerance)
    throw computation_error("relator residual too large");
  if (classify(g.T, tol).kind != MapKind::loxodromic)
    throw computation_error("pairing map is not loxodromic");
  return g;
}

}  // namespace detail

inline OrigamiSchottkyGroup build_case_a(int n, const BuildOptions& opt = {}) {
  require(n >= 2, "case a needs n >= 2");
  const auto [a, b] = dn_generators(n);
  const double r = opt.circle_parameter ? *opt.circle_parameter
                                        : default_circle_parameter_dihedral(n, opt.tolerance);
  const auto grid = opt.grid ? *opt.grid : default_dihedral_grid();
  OrigamiSchottkyGroup g{GroupKind::case_a(n), a, b, MoebiusMap::identity(), {}, {},
                         presentation_case_a(n), dihedral_elements(n)};
  g.pairing = find_pairing_dihedral(n, r, grid, opt.tolerance);
  g.T = g.pairing.pairing;
  return detail::finish_build(std::move(g), opt.tolerance);
}

inline OrigamiSchottkyGroup build_case_b(const BuildOptions& opt = {}) {
  const auto [a, b] = a4_generators();
  const double r = opt.circle_parameter ? *opt.circle_parameter
                                        : default_circle_parameter_a4(opt.tolerance);
  const auto grid = opt.grid ? *opt.grid : default_a4_grid();
  OrigamiSchottkyGroup g{GroupKind::case_b(), a, b, MoebiusMap::identity(), {}, {},
                         presentation_case_b(), a4_elements()};
  g.pairing = find_pairing_a4(r, grid, opt.tolerance);
  g.T = g.pairing.pairing;
  return detail::finish_build(std::move(g), opt.tolerance);
}

inline OrigamiSchottkyGroup build(const GroupKind& kind, const BuildOptions& opt = {}) {
  return kind.is_case_a() ? build_case_a(kind.n, opt) : build_case_b(opt);
}

// ---------------------------------------------------------------------------
// Riemann-Hurwitz arithmetic

/// Genus g of a degree-`index` cover of a torus with one cone point of order
/// `cone_order`, unbranched over the cone point: 2g - 2 = index (1 - 1/cone).
inline int riemann_hurwitz_genus(long long index, long long cone_order) {
  require(index >= 1, "index must be positive");
  require(cone_order >= 2, "cone order must be at least 2");
  const long long num = index * (cone_order - 1);
  if (num % cone_order != 0 || (num / cone_order) % 2 != 0)
    throw precondition_error("index incompatible with cone order");
  return static_cast<int>(num / cone_order / 2 + 1);
}

inline bool hurwitz_equality(long long genus, long long group_order) {
  require(genus >= 2, "Hurwitz equality needs genus >= 2");
  return group_order == 4 * (genus - 1);
}

// ---------------------------------------------------------------------------
// Word certificates

/// Calls visit(word, matrix) for every nontrivial freely reduced word of
/// length 1..max_length in the generators, depth first, letters ordered
/// g0, g0^-1, g1, g1^-1, ...
inline void for_each_reduced_word(std::span<const MoebiusMap> gens, int max_length,
                                  const std::function<void(const Word&, const MoebiusMap&)>& visit) {
  std::vector<MoebiusMap> images;
  std::vector<Letter> letters;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    letters.push_back(letter(static_cast<int>(g)));
    images.push_back(gens[g]);
    letters.push_back(letter(static_cast<int>(g), true));
    images.push_back(inverse(gens[g]));
  }
  std::vector<Letter> word;
  std::function<void(const MoebiusMap&)> rec = [&](const MoebiusMap& prefix) {
    if (static_cast<int>(word.size()) == max_length)
      return;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      if (!word.empty() && word.back() == -letters[k])
        continue;
      word.push_back(letters[k]);
      const MoebiusMap m = prefix * images[k];
      visit(Word(word), m);
      rec(m);
      word.pop_back();
    }
  };
  rec(MoebiusMap::identity());
}

struct FreenessReport {
  int max_length = 0;
  std::size_t words_checked = 0;
  double min_distance = std::numeric_limits<double>::infinity();
  std::vector<Word> identity_hits;

  bool passed() const noexcept { return identity_hits.empty(); }
};

/// No nontrivial reduced word of length <= max_length may be projectively
/// within tol of the identity.
inline FreenessReport freeness_certificate(std::span<const MoebiusMap> gens, int max_length,
                                           double tol = kDefaultTolerance) {
  require(max_length >= 1, "max_length must be at least 1");
  FreenessReport rep;
  rep.max_length = max_length;
  for_each_reduced_word(gens, max_length, [&](const Word& w, const MoebiusMap& m) {
    ++rep.words_checked;
    const double d = distance_to_identity(m);
    rep.min_distance = std::min(rep.min_distance, d);
    if (d <= tol)
      rep.identity_hits.push_back(w);
  });
  return rep;
}

struct LoxodromyViolation {
  Word word;
  MapClass cls;
};

struct LoxodromyReport {
  int max_length = 0;
  std::size_t words_checked = 0;
  std::vector<LoxodromyViolation> violations;

  bool passed() const noexcept { return violations.empty(); }
};

inline LoxodromyReport loxodromy_certificate(std::span<const MoebiusMap> gens, int max_length,
                                             double tol = kDefaultTolerance) {
  require(max_length >= 1, "max_length must be at least 1");
  LoxodromyReport rep;
  rep.max_length = max_length;
  for_each_reduced_word(gens, max_length, [&](const Word& w, const MoebiusMap& m) {
    ++rep.words_checked;
    const MapClass cls = classify(m, tol);
    if (cls.kind != MapKind::loxodromic)
      rep.violations.push_back({w, cls});
  });
  return rep;
}

/// 6 for rank <= 3, else 4.
inline int default_certificate_depth(std::size_t rank) { return rank <= 3 ? 6 : 4; }

// ---------------------------------------------------------------------------
// Subgroup realization

struct SubgroupReport {
  std::vector<Word> generator_words;
  std::vector<MoebiusMap> generator_matrices;
  int index = 0;
  bool normal = false;
  std::optional<StructureTag> quotient_tag;
  std::size_t core_index = 0;
  std::optional<int> genus;  // unset when the index is incompatible
  std::optional<bool> hurwitz_equality;
  /// Canonical quotient map injective on the vertex group (normal case only).
  std::optional<bool> torsion_free_kernel;
  FreenessReport freeness;
  LoxodromyReport loxodromy;

  bool passed() const noexcept {
    return genus.has_value() && torsion_free_kernel.value_or(true) && freeness.passed() &&
           loxodromy.passed();
  }
};

struct RealizeOptions {
  std::optional<int> certificate_depth;  // default_certificate_depth(rank)
  std::size_t max_cosets = kDefaultMaxCosets;
  double tolerance = kDefaultTolerance;
};

inline SubgroupReport realize_subgroup(const OrigamiSchottkyGroup& k, const std::vector<Word>& words,
                                       const RealizeOptions& opt = {}) {
  require(!words.empty(), "subgroup needs at least one generator word");
  const auto images = k.presentation_images();
  for (const auto& w : words)
    require(max_generator(w) < k.presentation.generator_count(),
            "subgroup word uses an unknown generator");
  if (relator_residual(k.presentation, images) >= kRelatorTolerance)
    throw computation_error("relator residual too large");

  SubgroupReport rep;
  rep.generator_words = words;
  for (const auto& w : words)
    rep.generator_matrices.push_back(evaluate_word(w, images));

  const CosetTable table = todd_coxeter(k.presentation, words, opt.max_cosets);
  rep.index = table.index();
  rep.normal = is_normal(table);
  rep.core_index = normal_core(table).core_index;
  try {
    rep.genus = riemann_hurwitz_genus(rep.index, k.kind.cone_order());
  } catch (const precondition_error&) {
  }
  if (rep.normal) {
    const auto q = quotient_structure(table);
    rep.quotient_tag = q.tag;
    rep.torsion_free_kernel = torsion_free_kernel(q.group.generators(), k.kind, q.group);
    if (rep.genus && *rep.genus >= 2)
      rep.hurwitz_equality = hurwitz_equality(*rep.genus, rep.index);
  }

  const int depth = opt.certificate_depth ? *opt.certificate_depth
                                          : default_certificate_depth(words.size());
  rep.freeness = freeness_certificate(rep.generator_matrices, depth, opt.tolerance);
  rep.loxodromy = loxodromy_certificate(rep.generator_matrices, depth, opt.tolerance);
  return rep;
}

}  // namespace origami
