#pragma once

// Finite groups as Cayley tables, quotient identification, and exhaustive
// homomorphism search from a finite presentation.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "origami/coset_table.hpp"
#include "origami/error.hpp"
#include "origami/presentations.hpp"
#include "origami/word.hpp"

namespace origami {

/// A finite group on elements 0..order-1 with identity 0. mul(x, y) is the
/// product "x then y", matching the right action of words on cosets.
class FiniteGroup {
public:
  FiniteGroup(std::size_t order, std::vector<int> table, std::vector<int> generators,
              std::string name = {})
      : order_(order), table_(std::move(table)), generators_(std::move(generators)),
        name_(std::move(name)) {
    require(order_ >= 1 && table_.size() == order_ * order_, "Cayley table has wrong size");
    inverse_.assign(order_, -1);
    for (std::size_t x = 0; x < order_; ++x) {
      require(mul(0, static_cast<int>(x)) == static_cast<int>(x) &&
                  mul(static_cast<int>(x), 0) == static_cast<int>(x),
              "element 0 is not the identity");
      for (std::size_t y = 0; y < order_; ++y)
        if (mul(static_cast<int>(x), static_cast<int>(y)) == 0)
          inverse_[x] = static_cast<int>(y);
      require(inverse_[x] >= 0, "Cayley table lacks an inverse");
    }
  }

  std::size_t order() const noexcept { return order_; }
  const std::vector<int>& generators() const noexcept { return generators_; }
  const std::string& name() const noexcept { return name_; }

  int mul(int x, int y) const {
    return table_[static_cast<std::size_t>(x) * order_ + static_cast<std::size_t>(y)];
  }
  int inverse(int x) const { return inverse_[static_cast<std::size_t>(x)]; }

  int power(int x, int k) const {
    if (k < 0)
      return power(inverse(x), -k);
    int r = 0;
    for (int i = 0; i < k; ++i)
      r = mul(r, x);
    return r;
  }

  int order_of(int x) const {
    int k = 1;
    for (int y = x; y != 0; y = mul(y, x))
      ++k;
    return k;
  }

  /// Size of the subgroup generated by `elements`.
  std::size_t generated_size(const std::vector<int>& elements) const {
    std::vector<bool> seen(order_, false);
    std::vector<int> queue{0};
    seen[0] = true;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (int g : elements) {
        const int z = mul(queue[k], g);
        if (!seen[static_cast<std::size_t>(z)]) {
          seen[static_cast<std::size_t>(z)] = true;
          queue.push_back(z);
        }
      }
    return queue.size();
  }

  /// Image of a word under the assignment generator g -> images[g].
  int evaluate(const Word& w, const std::vector<int>& images) const {
    int r = 0;
    for (Letter x : w.letters()) {
      const int g = images.at(static_cast<std::size_t>(generator_of(x)));
      r = mul(r, is_inverse_letter(x) ? inverse(g) : g);
    }
    return r;
  }

  /// Associativity on a deterministic sample of triples (all triples when
  /// order^3 is small).
  bool associative_sample(std::size_t samples = 20000) const {
    const std::size_t total = order_ * order_ * order_;
    const std::size_t step = total <= samples ? 1 : total / samples;
    for (std::size_t i = 0; i < total; i += step) {
      const int x = static_cast<int>(i / (order_ * order_));
      const int y = static_cast<int>((i / order_) % order_);
      const int z = static_cast<int>(i % order_);
      if (mul(mul(x, y), z) != mul(x, mul(y, z)))
        return false;
    }
    return true;
  }

private:
  std::size_t order_;
  std::vector<int> table_;
  std::vector<int> generators_;
  std::string name_;
  std::vector<int> inverse_;
};

/// The permutation group generated by `gens`, elements in closure order.
/// Generators of the result are the indices of `gens`.
inline FiniteGroup from_permutations(const std::vector<Permutation>& gens, std::size_t degree,
                                     std::string name = {},
                                     std::size_t cap = kDefaultPermutationGroupCap) {
  const auto elements = permutation_closure(gens, degree, cap);
  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    index.emplace(elements[i], static_cast<int>(i));
  const std::size_t n = elements.size();
  std::vector<int> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table[x * n + y] = index.at(then(elements[x], elements[y]));
  std::vector<int> generators;
  for (const auto& g : gens)
    generators.push_back(index.at(g));
  return {n, std::move(table), std::move(generators), std::move(name)};
}

/// Z_m with generator 1.
inline FiniteGroup cyclic_group(int m) {
  require(m >= 1, "cyclic group needs m >= 1");
  const auto n = static_cast<std::size_t>(m);
  std::vector<int> table(n * n);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      table[static_cast<std::size_t>(x * m + y)] = (x + y) % m;
  return {n, std::move(table), {m > 1 ? 1 : 0}, "Z" + std::to_string(m)};
}

/// D_m of order 2m. Element r^k s^e is stored as k + m e; generators r, s.
inline FiniteGroup dihedral_group(int m) {
  require(m >= 1, "dihedral group needs m >= 1");
  const int n = 2 * m;
  auto decode = [m](int x) { return std::pair{x % m, x / m}; };
  std::vector<int> table(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto [k1, e1] = decode(x);
      const auto [k2, e2] = decode(y);
      // r^k1 s^e1 r^k2 s^e2 = r^(k1 + (-1)^e1 k2) s^(e1 + e2)
      const int k = ((k1 + (e1 ? -k2 : k2)) % m + m) % m;
      table[static_cast<std::size_t>(x * n + y)] = k + m * ((e1 + e2) % 2);
    }
  return {static_cast<std::size_t>(n), std::move(table), {m > 1 ? 1 : 0, m},
          "D" + std::to_string(m)};
}

/// A_4 as even permutations of {0,1,2,3}, generated by a = (0 1 2) and
/// b = (0 1)(2 3), which satisfy a^3 = b^2 = (ab)^3 = 1.
inline FiniteGroup alternating_group_4() {
  return from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}, 4, "A4");
}

/// Parses "Zm", "Dm" or "A4".
inline FiniteGroup parse_group(const std::string& name) {
  if (name == "A4")
    return alternating_group_4();
  require(name.size() >= 2 && (name[0] == 'Z' || name[0] == 'D'),
          "unknown group '" + name + "' (expected Zm, Dm or A4)");
  int m = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    require(name[i] >= '0' && name[i] <= '9' && m < 100000,
            "unknown group '" + name + "' (expected Zm, Dm or A4)");
    m = 10 * m + (name[i] - '0');
  }
  require(m >= 1, "group parameter must be at least 1");
  return name[0] == 'Z' ? cyclic_group(m) : dihedral_group(m);
}

// ---------------------------------------------------------------------------
// Quotient identification

struct StructureTag {
  enum class Kind { cyclic, dihedral, a4, other };
  Kind kind = Kind::other;
  int m = 0;

  friend bool operator==(const StructureTag&, const StructureTag&) = default;
};

inline std::string to_string(const StructureTag& t) {
  switch (t.kind) {
    case StructureTag::Kind::cyclic: return "cyclic(" + std::to_string(t.m) + ")";
    case StructureTag::Kind::dihedral: return "dihedral(" + std::to_string(t.m) + ")";
    case StructureTag::Kind::a4: return "A4";
    case StructureTag::Kind::other: break;
  }
  return "other";
}

/// Tags G by finding generators satisfying the defining relations of a
/// candidate structure, testing cyclic, then dihedral, then A_4.
inline StructureTag identify_structure(const FiniteGroup& g) {
  const int n = static_cast<int>(g.order());
  for (int x = 0; x < n; ++x)
    if (g.order_of(x) == n)
      return {StructureTag::Kind::cyclic, n};
  if (n % 2 == 0) {
    const int m = n / 2;
    for (int a = 0; a < n; ++a) {
      if (g.order_of(a) != m)
        continue;
      for (int b = 0; b < n; ++b)
        if (g.order_of(b) == 2 && g.order_of(g.mul(a, b)) <= 2 &&
            g.generated_size({a, b}) == g.order())
          return {StructureTag::Kind::dihedral, m};
    }
  }
  if (n == 12) {
    for (int a = 0; a < n; ++a) {
      if (g.order_of(a) != 3)
        continue;
      for (int b = 0; b < n; ++b)
        if (g.order_of(b) == 2 && g.order_of(g.mul(a, b)) == 3 &&
            g.generated_size({a, b}) == g.order())
          return {StructureTag::Kind::a4, 0};
    }
  }
  return {StructureTag::Kind::other, n};
}

struct QuotientStructure {
  FiniteGroup group;
  StructureTag tag;
};

/// The quotient of the presented group by the (normal) subgroup of `t`, as
/// the image of the coset action.
inline QuotientStructure quotient_structure(const CosetTable& t) {
  if (!is_normal(t))
    throw computation_error("quotient undefined");
  auto group = from_permutations(permutation_rep(t), static_cast<std::size_t>(t.index()));
  const auto tag = identify_structure(group);
  return {std::move(group), tag};
}

// ---------------------------------------------------------------------------
// Homomorphisms

struct Homomorphism {
  std::vector<int> images;  // image of each presentation generator
  bool surjective = false;
  /// Evaluated only when the presentation is one of the two HNN families.
  std::optional<bool> torsion_free;
};

/// Kernel torsion-freeness: every torsion element of an HNN extension over a
/// finite vertex group is conjugate into the vertex group, so the kernel is
/// torsion free iff the vertex group (D_n, resp. A_4) injects.
inline bool torsion_free_kernel(const std::vector<int>& images, const GroupKind& kind,
                                const FiniteGroup& target) {
  auto order = [&](const Word& w) { return target.order_of(target.evaluate(w, images)); };
  if (kind.is_case_a()) {
    require(images.size() == 2, "case a homomorphism needs 2 images");
    const Word b = Word::generator(case_a_gens::B);
    const Word a = case_a_rotation_word();
    return order(b) == 2 && order(a) == kind.n && order(a * b) == 2;
  }
  require(images.size() == 3, "case b homomorphism needs 3 images");
  const Word a = Word::generator(case_b_gens::A);
  const Word b = Word::generator(case_b_gens::B);
  return order(a) == 3 && order(b) == 2 && order(a * b) == 3;
}

inline bool torsion_free_kernel(const Homomorphism& h, const GroupKind& kind,
                                const FiniteGroup& target) {
  return torsion_free_kernel(h.images, kind, target);
}

/// Recognizes the two family presentations by exact comparison.
inline std::optional<GroupKind> detect_kind(const Presentation& p) {
  auto same = [](const Presentation& x, const Presentation& y) {
    return x.generators == y.generators && x.relators == y.relators;
  };
  if (same(p, presentation_case_b()))
    return GroupKind::case_b();
  if (p.generator_count() == 2 && p.relators.size() == 3) {
    const auto n = p.relators[1].size() / 4;
    if (n >= 2 && same(p, presentation_case_a(static_cast<int>(n))))
      return GroupKind::case_a(static_cast<int>(n));
  }
  return std::nullopt;
}

inline constexpr std::size_t kMaxHomTargetOrder = 10'000;

/// Every assignment of generators to target elements that kills all
/// relators, in lexicographic order of the image tuple (first generator
/// most significant).
inline std::vector<Homomorphism> enumerate_homs(const Presentation& p, const FiniteGroup& target,
                                                std::optional<GroupKind> kind = std::nullopt) {
  require(target.order() <= kMaxHomTargetOrder, "target group too large for exhaustive search");
  if (!kind)
    kind = detect_kind(p);
  const auto gens = static_cast<std::size_t>(p.generator_count());
  const int order = static_cast<int>(target.order());
  std::vector<Homomorphism> out;
  std::vector<int> images(gens, 0);
  for (;;) {
    const bool ok = std::all_of(p.relators.begin(), p.relators.end(), [&](const Word& r) {
      return target.evaluate(r, images) == 0;
    });
    if (ok) {
      Homomorphism h{images, target.generated_size(images) == target.order(), std::nullopt};
      if (kind)
        h.torsion_free = torsion_free_kernel(images, *kind, target);
      out.push_back(std::move(h));
    }
    std::size_t i = gens;
    while (i > 0 && ++images[i - 1] == order)
      images[--i] = 0;
    if (i == 0)
      break;
  }
  return out;
}

}  // namespace origami
