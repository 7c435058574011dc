#pragma once

// The two families of HNN presentations and the Schottky subgroup generator
// words built over them.

#include <string>
#include <vector>

#include "origami/error.hpp"
#include "origami/word.hpp"

namespace origami {

/// Which family a group belongs to: the dihedral HNN extension of type n, or
/// the A_4 extension (type 2).
struct GroupKind {
  enum class Family { dihedral, tetrahedral };
  Family family = Family::dihedral;
  int n = 2;

  static GroupKind case_a(int n) {
    require(n >= 2, "case a needs n >= 2");
    return {Family::dihedral, n};
  }
  static GroupKind case_b() { return {Family::tetrahedral, 2}; }

  bool is_case_a() const noexcept { return family == Family::dihedral; }
  /// Order of the single cone point of the quotient orbifold.
  int cone_order() const noexcept { return n; }

  friend bool operator==(const GroupKind&, const GroupKind&) = default;
};

inline std::string to_string(const GroupKind& k) {
  return k.is_case_a() ? "case_a(" + std::to_string(k.n) + ")" : "case_b";
}

namespace case_a_gens {
inline constexpr int B = 0;
inline constexpr int T = 1;
}  // namespace case_a_gens

namespace case_b_gens {
inline constexpr int A = 0;
inline constexpr int B = 1;
inline constexpr int T = 2;
}  // namespace case_b_gens

/// A = [T, B] = T B T^-1 B over the generators (B, T).
inline Word case_a_rotation_word() {
  using namespace case_a_gens;
  return Word{letter(T), letter(B), letter(T, true), letter(B)};
}

/// <B, T | B^2, [T,B]^n, ([T,B] B)^2> with [T,B] = T B T^-1 B.
inline Presentation presentation_case_a(int n) {
  require(n >= 2, "case a presentation needs n >= 2");
  const Word b = Word::generator(case_a_gens::B);
  const Word a = case_a_rotation_word();
  return {{"B", "T"}, {b.pow(2), a.pow(n), (a * b).pow(2)}};
}

/// <A, B, T | A^3, B^2, (AB)^3, T A T^-1 A^-1>: A_4 extended by a stable
/// letter commuting with A.
inline Presentation presentation_case_b() {
  using namespace case_b_gens;
  const Word a = Word::generator(A), b = Word::generator(B), t = Word::generator(T);
  return {{"A", "B", "T"},
          {a.pow(3), b.pow(2), (a * b).pow(3), t * a * t.inverse() * a.inverse()}};
}

inline Presentation presentation_for(const GroupKind& k) {
  return k.is_case_a() ? presentation_case_a(k.n) : presentation_case_b();
}

/// A^k C A^-k for k = -(n-1)/2 .. (n-1)/2 with C = A^{(n-1)/2} T, over (B, T).
inline std::vector<Word> subgroup_words_odd(int n) {
  require(n >= 3 && n % 2 == 1, "odd subgroup words need odd n >= 3");
  const Word a = case_a_rotation_word();
  const int m = (n - 1) / 2;
  const Word c = a.pow(m) * Word::generator(case_a_gens::T);
  std::vector<Word> out;
  for (int k = -m; k <= m; ++k)
    out.push_back(conjugate(a.pow(k), c));
  return out;
}

/// A^k T A^-k for k = -(n/2 - 1) .. n/2, over (B, T).
inline std::vector<Word> subgroup_words_even(int n) {
  require(n >= 2 && n % 2 == 0, "even subgroup words need even n >= 2");
  const Word a = case_a_rotation_word();
  const Word t = Word::generator(case_a_gens::T);
  std::vector<Word> out;
  for (int k = -(n / 2 - 1); k <= n / 2; ++k)
    out.push_back(conjugate(a.pow(k), t));
  return out;
}

/// T, BTB, ABTBA^-1, A^-1BTBA over (A, B, T).
inline std::vector<Word> subgroup_words_a4() {
  using namespace case_b_gens;
  const Word a = Word::generator(A), b = Word::generator(B), t = Word::generator(T);
  const Word btb = b * t * b;
  return {t, btb, a * btb * a.inverse(), a.inverse() * btb * a};
}

}  // namespace origami
