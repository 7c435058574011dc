#include <gtest/gtest.h>

#include "origami/builder.hpp"
#include "support.hpp"

using namespace origami;
using origami::testing::Gen;

namespace {

TEST(Build, CaseAFamily) {
  for (int n = 2; n <= 7; ++n) {
    const auto g = build_case_a(n);
    EXPECT_TRUE(g.certificate.verdict) << n;
    EXPECT_EQ(g.certificate.orbit.size(), static_cast<std::size_t>(2 * n));
    EXPECT_LT(g.relator_residual, kRelatorTolerance);
    EXPECT_EQ(classify(g.T).kind, MapKind::loxodromic);
    EXPECT_EQ(g.finite_elements.size(), static_cast<std::size_t>(2 * n));
  }
}

TEST(Build, CaseB) {
  const auto g = build_case_b();
  EXPECT_TRUE(g.certificate.verdict);
  EXPECT_EQ(g.certificate.orbit.size(), 8u);
  EXPECT_EQ(g.finite_elements.size(), 12u);
  EXPECT_LT(g.relator_residual, kRelatorTolerance);
  // T commutes with A.
  EXPECT_TRUE(is_identity(commutator(g.T, g.A), 1e-9));
}

TEST(Build, RejectsSmallN) {
  EXPECT_THROW(build_case_a(1), precondition_error);
  EXPECT_THROW(build_case_a(0), precondition_error);
}

TEST(Build, RelatorsHoldIndependently) {
  // Oracle: raw 2x2 products of the generator matrices, compared up to sign.
  using origami::testing::Raw;
  using origami::testing::raw_mul;
  using origami::testing::raw_of;
  using origami::testing::raw_projective_distance;
  const Raw id{complex(1), complex(0), complex(0), complex(1)};
  for (int n : {2, 3, 5}) {
    const auto g = build_case_a(n);
    const Raw b = raw_of(g.B), t = raw_of(g.T), ti = raw_of(inverse(g.T));
    const Raw a = raw_mul(raw_mul(raw_mul(t, b), ti), b);
    Raw an = id;
    for (int k = 0; k < n; ++k)
      an = raw_mul(an, a);
    EXPECT_LT(raw_projective_distance(raw_mul(b, b), id), 1e-9);
    EXPECT_LT(raw_projective_distance(an, id), 1e-9);
    const Raw ab = raw_mul(a, b);
    EXPECT_LT(raw_projective_distance(raw_mul(ab, ab), id), 1e-9);
  }
}

TEST(Build, PresentationImagesMatchEvaluation) {
  const auto g = build_case_a(4);
  const auto images = g.presentation_images();
  ASSERT_EQ(images.size(), 2u);
  const Word w = Word::generator(case_a_gens::T) * Word::generator(case_a_gens::B);
  EXPECT_TRUE(projectively_equal(evaluate_word(w, images), g.T * g.B));
  EXPECT_TRUE(projectively_equal(evaluate_word(Word{}, images), MoebiusMap::identity()));
  EXPECT_EQ(build_case_b().presentation_images().size(), 3u);
}

TEST(Build, ExplicitParameterTooLargeFails) {
  BuildOptions opt;
  opt.circle_parameter = 10.0;
  EXPECT_THROW(build_case_a(3, opt), error);
}

TEST(RiemannHurwitz, Examples) {
  EXPECT_EQ(riemann_hurwitz_genus(12, 2), 4);
  for (int n = 2; n <= 9; ++n)
    EXPECT_EQ(riemann_hurwitz_genus(2 * n, n), n);
  for (int d : {4, 8, 12, 40})
    EXPECT_EQ(riemann_hurwitz_genus(d, 2), 1 + d / 4);
}

TEST(RiemannHurwitz, Incompatible) {
  EXPECT_THROW(riemann_hurwitz_genus(3, 2), precondition_error);
  EXPECT_THROW(riemann_hurwitz_genus(2, 2), precondition_error);
  EXPECT_THROW(riemann_hurwitz_genus(0, 2), precondition_error);
  EXPECT_THROW(riemann_hurwitz_genus(4, 1), precondition_error);
}

TEST(RiemannHurwitz, PropertyAgainstEulerCharacteristic) {
  // Oracle: the orbifold Euler characteristic -1/cone scales by the index.
  Gen gen(61);
  for (int i = 0; i < 300; ++i) {
    const int cone = gen.integer(2, 12);
    const int index = gen.integer(1, 200);
    // 2 - 2g = index * (0 - (1 - 1/cone))  =>  2g - 2 = index (cone - 1) / cone
    const long long num = static_cast<long long>(index) * (cone - 1);
    if (num % cone == 0 && (num / cone) % 2 == 0)
      EXPECT_EQ(2LL * riemann_hurwitz_genus(index, cone) - 2, num / cone);
    else
      EXPECT_THROW(riemann_hurwitz_genus(index, cone), precondition_error);
  }
}

TEST(Hurwitz, Equality) {
  EXPECT_TRUE(hurwitz_equality(4, 12));
  EXPECT_TRUE(hurwitz_equality(3, 8));
  EXPECT_FALSE(hurwitz_equality(4, 11));
  EXPECT_THROW(hurwitz_equality(1, 4), precondition_error);
}

TEST(Certificates, ReducedWordCount) {
  // 2k generators give 2k (2k-1)^(L-1) reduced words of length L.
  const std::vector<MoebiusMap> gens{MoebiusMap(2, 0, 0, 0.5), MoebiusMap(1, 1, 0, 1)};
  std::size_t count = 0;
  for_each_reduced_word(gens, 4, [&](const Word& w, const MoebiusMap&) {
    EXPECT_EQ(w, Word(w.letters()));
    ++count;
  });
  EXPECT_EQ(count, 4u + 12u + 36u + 108u);
}

TEST(Certificates, WordMatchesMatrix) {
  Gen gen(71);
  const std::vector<MoebiusMap> gens{gen.map(), gen.map()};
  for_each_reduced_word(gens, 3, [&](const Word& w, const MoebiusMap& m) {
    EXPECT_TRUE(projectively_equal(evaluate_word(w, gens), m, 1e-9));
  });
}

TEST(Certificates, FreenessDetectsInvolution) {
  const std::vector<MoebiusMap> gens{MoebiusMap(complex(0, 1), 0, 0, complex(0, -1))};
  const auto rep = freeness_certificate(gens, 3);
  EXPECT_FALSE(rep.passed());
  ASSERT_FALSE(rep.identity_hits.empty());
  EXPECT_EQ(rep.identity_hits.front().size(), 2u);
}

TEST(Certificates, SingleLoxodromicIsFree) {
  const std::vector<MoebiusMap> gens{MoebiusMap(2, 0, 0, 0.5)};
  const auto f = freeness_certificate(gens, 8);
  EXPECT_TRUE(f.passed());
  EXPECT_EQ(f.words_checked, 16u);
  EXPECT_TRUE(loxodromy_certificate(gens, 8).passed());
}

TEST(Certificates, EllipticGeneratorIsAViolation) {
  const auto g = build_case_a(3);
  const std::vector<MoebiusMap> gens{g.T, g.B};
  const auto rep = loxodromy_certificate(gens, 2);
  EXPECT_FALSE(rep.passed());
}

TEST(Certificates, ConjugationInvariance) {
  Gen gen(81);
  const auto g = build_case_a(3);
  const auto rep = realize_subgroup(g, subgroup_words_odd(3), {3, kDefaultMaxCosets, kDefaultTolerance});
  for (int i = 0; i < 3; ++i) {
    const auto f = gen.map(1.0);
    std::vector<MoebiusMap> conj;
    for (const auto& m : rep.generator_matrices)
      conj.push_back(conjugate(f, m));
    const auto a = loxodromy_certificate(rep.generator_matrices, 3);
    const auto b = loxodromy_certificate(conj, 3);
    EXPECT_EQ(a.passed(), b.passed());
    EXPECT_EQ(a.words_checked, b.words_checked);
  }
}

TEST(Realize, OddFamily) {
  for (int n : {3, 5}) {
    const auto g = build_case_a(n);
    const auto rep = realize_subgroup(g, subgroup_words_odd(n), {4, kDefaultMaxCosets, kDefaultTolerance});
    EXPECT_EQ(rep.index, 2 * n);
    EXPECT_TRUE(rep.normal);
    ASSERT_TRUE(rep.genus.has_value());
    EXPECT_EQ(*rep.genus, n);
    ASSERT_TRUE(rep.quotient_tag.has_value());
    EXPECT_EQ(*rep.quotient_tag, (StructureTag{StructureTag::Kind::dihedral, n}));
    EXPECT_TRUE(rep.torsion_free_kernel.value_or(false));
    EXPECT_EQ(rep.core_index, static_cast<std::size_t>(2 * n));
    EXPECT_TRUE(rep.passed());
  }
}

TEST(Realize, EvenFamily) {
  for (int n : {2, 4}) {
    const auto g = build_case_a(n);
    const auto rep = realize_subgroup(g, subgroup_words_even(n), {4, kDefaultMaxCosets, kDefaultTolerance});
    EXPECT_EQ(rep.index, 2 * n);
    EXPECT_FALSE(rep.normal);
    EXPECT_FALSE(rep.quotient_tag.has_value());
    ASSERT_TRUE(rep.genus.has_value());
    EXPECT_EQ(*rep.genus, n);
    EXPECT_GT(rep.core_index, static_cast<std::size_t>(2 * n));
    EXPECT_EQ(rep.core_index % static_cast<std::size_t>(rep.index), 0u);
    EXPECT_TRUE(rep.passed());
  }
}

TEST(Realize, TetrahedralSubgroup) {
  const auto g = build_case_b();
  const auto rep = realize_subgroup(g, subgroup_words_a4());
  EXPECT_EQ(rep.index, 12);
  EXPECT_TRUE(rep.normal);
  EXPECT_EQ(rep.quotient_tag->kind, StructureTag::Kind::a4);
  EXPECT_EQ(rep.genus, 4);
  EXPECT_EQ(rep.hurwitz_equality, true);
  EXPECT_TRUE(rep.passed());
}

TEST(Realize, GeneratorMatricesMatchWords) {
  const auto g = build_case_b();
  const auto words = subgroup_words_a4();
  const auto rep = realize_subgroup(g, words, {2, kDefaultMaxCosets, kDefaultTolerance});
  const auto images = g.presentation_images();
  ASSERT_EQ(rep.generator_matrices.size(), words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    EXPECT_TRUE(projectively_equal(rep.generator_matrices[i], evaluate_word(words[i], images)));
}

TEST(Realize, TorsionInSubgroupIsCaught) {
  const auto g = build_case_a(3);
  const auto rep = realize_subgroup(g, {Word::generator(case_a_gens::B), Word::generator(case_a_gens::T)},
                                    {3, kDefaultMaxCosets, kDefaultTolerance});
  EXPECT_EQ(rep.index, 1);
  EXPECT_FALSE(rep.freeness.passed());
  EXPECT_FALSE(rep.passed());
}

TEST(Realize, RejectsBadWords) {
  const auto g = build_case_a(3);
  EXPECT_THROW(realize_subgroup(g, {}), precondition_error);
  EXPECT_THROW(realize_subgroup(g, {Word::generator(2)}), precondition_error);
}

}  // namespace
