#include <gtest/gtest.h>

#include <set>

#include "origami/presentations.hpp"
#include "origami/word.hpp"
#include "support.hpp"

using namespace origami;
using origami::testing::Gen;

namespace {

const std::vector<std::string> kBT{"B", "T"};
const std::vector<std::string> kABT{"A", "B", "T"};

/// Oracle free reduction by repeated pair deletion on a raw list.
std::vector<Letter> naive_reduce(std::vector<Letter> l) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < l.size(); ++i)
      if (l[i] == -l[i + 1]) {
        l.erase(l.begin() + static_cast<std::ptrdiff_t>(i), l.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
  }
  return l;
}

TEST(Word, FreeReductionOnConstruction) {
  const Word w{letter(0), letter(1), letter(1, true), letter(0, true), letter(1)};
  EXPECT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0], letter(1));
  EXPECT_THROW(Word({0}), precondition_error);
}

TEST(Word, InverseAndPowers) {
  const Word w{letter(0), letter(1)};
  EXPECT_TRUE((w * w.inverse()).empty());
  EXPECT_EQ(w.pow(3).size(), 6u);
  EXPECT_EQ(w.pow(-2), w.inverse().pow(2));
  EXPECT_TRUE(w.pow(0).empty());
}

TEST(Word, ShortlexOrder) {
  EXPECT_LT(Word{letter(1)}, (Word{letter(0), letter(0)}));
  EXPECT_LT(Word{letter(0, true)}, Word{letter(0)});
}

TEST(Word, CyclicReduction) {
  const Word w{letter(1), letter(0), letter(0), letter(1, true)};
  EXPECT_EQ(cyclically_reduce(w), (Word{letter(0), letter(0)}));
}

TEST(WordProperty, ReductionMatchesNaive) {
  Gen gen(31);
  for (int i = 0; i < 500; ++i) {
    std::vector<Letter> raw;
    const int len = gen.integer(0, 20);
    for (int k = 0; k < len; ++k)
      raw.push_back(letter(gen.integer(0, 2), gen.integer(0, 1) == 1));
    EXPECT_EQ(Word(raw).letters(), naive_reduce(raw));
  }
}

TEST(WordProperty, ReductionIdempotentAndInverseCancels) {
  Gen gen(32);
  for (int i = 0; i < 500; ++i) {
    const Word w = gen.word(3, 15);
    EXPECT_EQ(Word(w.letters()), w);
    EXPECT_TRUE((w * w.inverse()).empty());
    EXPECT_TRUE((w.inverse() * w).empty());
  }
}

TEST(WordProperty, TextRoundTrip) {
  Gen gen(33);
  for (int i = 0; i < 300; ++i) {
    const Word w = gen.word(3, 12);
    EXPECT_EQ(parse_word(format_word(w, kABT), kABT), w);
  }
}

TEST(WordText, Formatting) {
  EXPECT_EQ(format_word(Word{}, kBT), "1");
  EXPECT_EQ(format_word(case_a_rotation_word(), kBT), "T B T^-1 B");
  EXPECT_EQ(parse_word("T B T^-1 B", kBT), case_a_rotation_word());
  EXPECT_THROW(parse_word("X", kBT), precondition_error);
}

TEST(PresentationText, RoundTripAndErrors) {
  const auto p = presentation_case_a(3);
  const auto q = parse_presentation(format_presentation(p));
  EXPECT_EQ(q.generators, p.generators);
  EXPECT_EQ(q.relators, p.relators);
  const auto r = parse_presentation("# dihedral\ngens: a b\nrel: a a a\n\nrel: b b\nrel: a b a b\n");
  EXPECT_EQ(r.generator_count(), 2);
  EXPECT_EQ(r.relators.size(), 3u);
  EXPECT_THROW(parse_presentation("rel: a a\n"), precondition_error);
  EXPECT_THROW(parse_presentation("gens: a a\n"), precondition_error);
  EXPECT_THROW(parse_presentation("gens: a\nfoo: a\n"), precondition_error);
  EXPECT_THROW(parse_presentation("gens: a\nrel: a a^-1\n"), precondition_error);
}

TEST(Presentations, CaseARelatorLengths) {
  // Expanding by hand: B^2 -> 2 letters; (T B T^-1 B)^2 -> 8; (T B T^-1 B B)^2
  // with B B kept (B is not B^-1 in the free group) -> 10.
  const auto p = presentation_case_a(2);
  ASSERT_EQ(p.relators.size(), 3u);
  EXPECT_EQ(p.relators[0].size(), 2u);
  EXPECT_EQ(p.relators[1].size(), 8u);
  EXPECT_EQ(p.relators[2].size(), 10u);
  EXPECT_EQ(p.generators, kBT);
  EXPECT_THROW(presentation_case_a(1), precondition_error);
}

TEST(Presentations, CaseB) {
  const auto p = presentation_case_b();
  EXPECT_EQ(p.generators, kABT);
  ASSERT_EQ(p.relators.size(), 4u);
  EXPECT_EQ(p.relators[3].size(), 4u);
  EXPECT_EQ(format_word(p.relators[3], kABT), "T A T^-1 A^-1");
}

TEST(SubgroupWords, OddFamily) {
  for (int n : {3, 5, 7}) {
    const auto words = subgroup_words_odd(n);
    EXPECT_EQ(words.size(), static_cast<std::size_t>(n));
    const Word a = case_a_rotation_word();
    for (std::size_t k = 0; k + 1 < words.size(); ++k) {
      EXPECT_EQ(words[k + 1], a * words[k] * a.inverse());
      EXPECT_EQ(Word(words[k].letters()), words[k]);
    }
    // The middle word is C = A^((n-1)/2) T.
    EXPECT_EQ(words[static_cast<std::size_t>(n / 2)], a.pow((n - 1) / 2) * Word::generator(case_a_gens::T));
  }
  EXPECT_THROW(subgroup_words_odd(4), precondition_error);
  EXPECT_THROW(subgroup_words_odd(1), precondition_error);
}

TEST(SubgroupWords, EvenFamily) {
  const Word a = case_a_rotation_word();
  const Word t = Word::generator(case_a_gens::T);
  const auto two = subgroup_words_even(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(std::set<Word>(two.begin(), two.end()), (std::set<Word>{t, a * t * a.inverse()}));
  const auto four = subgroup_words_even(4);
  EXPECT_EQ(four.size(), 4u);
  EXPECT_EQ(std::set<Word>(four.begin(), four.end()).size(), 4u);
  EXPECT_THROW(subgroup_words_even(3), precondition_error);
}

TEST(SubgroupWords, TetrahedralFamily) {
  using namespace case_b_gens;
  const auto words = subgroup_words_a4();
  ASSERT_EQ(words.size(), 4u);
  EXPECT_EQ(format_word(words[1], kABT), "B T B");
  for (const auto& w : words)
    EXPECT_EQ(std::abs(exponent_sum(w, T)), 1);
}

}  // namespace
