#pragma once

// Todd-Coxeter coset enumeration (HLT strategy with lookahead) and the
// permutation action of a closed coset table.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "origami/error.hpp"
#include "origami/word.hpp"

namespace origami {

/// Column of a letter in a coset table: 2g for generator g, 2g + 1 for g^-1.
inline constexpr int column_of(Letter x) {
  return 2 * generator_of(x) + (is_inverse_letter(x) ? 1 : 0);
}

/// Permutation of {0, ..., n-1} as an image array: p[i] is the image of i.
using Permutation = std::vector<int>;

/// A complete coset table for a subgroup H of a finitely presented group.
/// Row c, column x holds the coset (H u_c) x. Coset 0 is H itself.
class CosetTable {
public:
  CosetTable(Presentation presentation, std::vector<Word> subgroup, int cosets,
             std::vector<int> data)
      : presentation_(std::move(presentation)),
        subgroup_(std::move(subgroup)),
        cosets_(cosets),
        data_(std::move(data)) {}

  int index() const noexcept { return cosets_; }
  int generator_count() const noexcept { return presentation_.generator_count(); }
  int columns() const noexcept { return 2 * generator_count(); }
  const Presentation& presentation() const noexcept { return presentation_; }
  const std::vector<Word>& subgroup() const noexcept { return subgroup_; }

  int act(int coset, Letter x) const {
    return data_[static_cast<std::size_t>(coset * columns() + column_of(x))];
  }
  int entry(int coset, int column) const {
    return data_[static_cast<std::size_t>(coset * columns() + column)];
  }

  int trace(int coset, const Word& w) const {
    for (Letter x : w.letters())
      coset = act(coset, x);
    return coset;
  }

  /// Checks the closed-table invariants: every entry defined and inverse
  /// columns consistent, relators trivial at every coset, subgroup words fix
  /// coset 0, and the action is transitive.
  bool valid() const {
    for (int c = 0; c < cosets_; ++c)
      for (int x = 0; x < columns(); ++x) {
        const int d = entry(c, x);
        if (d < 0 || d >= cosets_ || entry(d, x ^ 1) != c)
          return false;
      }
    for (int c = 0; c < cosets_; ++c)
      for (const auto& r : presentation_.relators)
        if (trace(c, r) != c)
          return false;
    for (const auto& w : subgroup_)
      if (trace(0, w) != 0)
        return false;
    std::vector<bool> seen(static_cast<std::size_t>(cosets_), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      for (int x = 0; x < columns(); ++x) {
        const int d = entry(c, x);
        if (!seen[static_cast<std::size_t>(d)]) {
          seen[static_cast<std::size_t>(d)] = true;
          ++reached;
          stack.push_back(d);
        }
      }
    }
    return reached == cosets_;
  }

  /// `coset,B,B^-1,T,T^-1` header followed by one row per coset.
  std::string to_csv() const {
    std::ostringstream out;
    out << "coset";
    for (int g = 0; g < generator_count(); ++g) {
      const auto& name = presentation_.generators[static_cast<std::size_t>(g)];
      out << ',' << name << ',' << name << "^-1";
    }
    out << '\n';
    for (int c = 0; c < cosets_; ++c) {
      out << c;
      for (int x = 0; x < columns(); ++x)
        out << ',' << entry(c, x);
      out << '\n';
    }
    return out.str();
  }

private:
  Presentation presentation_;
  std::vector<Word> subgroup_;
  int cosets_;
  std::vector<int> data_;
};

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

namespace detail {

class CosetEnumerator {
public:
  CosetEnumerator(const Presentation& p, std::size_t max_cosets)
      : p_(p), cols_(2 * p.generator_count()), max_cosets_(max_cosets) {
    new_coset();
  }

  CosetTable run(const std::vector<Word>& subgroup) {
    for (const auto& w : subgroup)
      scan_and_fill(0, w);
    int alpha = 0;
    while (alpha < static_cast<int>(parent_.size())) {
      // Compaction is only safe here, between scans.
      if (parent_.size() > 2 * live_count_ + 1024)
        alpha = compact(alpha);
      if (live(alpha)) {
        for (const auto& r : p_.relators) {
          if (!live(alpha))
            break;
          scan_and_fill(alpha, r);
        }
        for (int x = 0; x < cols_ && live(alpha); ++x)
          if (get(alpha, x) < 0)
            define(alpha, x);
      }
      ++alpha;
    }
    return standardized(subgroup);
  }

private:
  bool live(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  int& at(int c, int x) { return table_[static_cast<std::size_t>(c * cols_ + x)]; }
  int get(int c, int x) const { return table_[static_cast<std::size_t>(c * cols_ + x)]; }

  int new_coset() {
    const int c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + static_cast<std::size_t>(cols_), -1);
    ++live_count_;
    return c;
  }

  /// Defines alpha^x as a new coset. When the live count is at the limit a
  /// lookahead pass runs first; returns false if it resolved alpha^x (or
  /// killed alpha) so no new coset was needed.
  bool define(int alpha, int x) {
    if (live_count_ >= max_cosets_) {
      lookahead();
      if (live_count_ + std::max<std::size_t>(1, max_cosets_ / 64) > max_cosets_)
        throw enumeration_overflow_error("enumeration did not close", live_count_);
      if (!live(alpha) || get(alpha, x) >= 0)
        return false;
    }
    const int beta = new_coset();
    at(alpha, x) = beta;
    at(beta, x ^ 1) = alpha;
    return true;
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r)
      r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::deque<int>& queue) {
    const int phi = rep(k), psi = rep(l);
    if (phi == psi)
      return;
    const int mu = std::min(phi, psi), nu = std::max(phi, psi);
    parent_[static_cast<std::size_t>(nu)] = mu;
    --live_count_;
    queue.push_back(nu);
  }

  void coincidence(int alpha, int beta) {
    std::deque<int> queue;
    merge(alpha, beta, queue);
    while (!queue.empty()) {
      const int gamma = queue.front();
      queue.pop_front();
      for (int x = 0; x < cols_; ++x) {
        const int delta = get(gamma, x);
        if (delta < 0)
          continue;
        at(delta, x ^ 1) = -1;
        const int mu = rep(gamma), nu = rep(delta);
        if (get(mu, x) >= 0)
          merge(nu, get(mu, x), queue);
        else if (get(nu, x ^ 1) >= 0)
          merge(mu, get(nu, x ^ 1), queue);
        else {
          at(mu, x) = nu;
          at(nu, x ^ 1) = mu;
        }
      }
    }
  }

  /// Scans w at alpha from both ends, recording a deduction or coincidence
  /// when the scan completes or closes with a single gap. Returns the column
  /// and coset of the first gap if the scan is incomplete, else {-1, -1}.
  std::pair<int, int> scan(int alpha, const Word& w) {
    const auto& l = w.letters();
    int f = alpha, b = alpha;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(l.size()) - 1;
    while (i <= j && get(f, column_of(l[static_cast<std::size_t>(i)])) >= 0)
      f = get(f, column_of(l[static_cast<std::size_t>(i++)]));
    if (i > j) {
      if (f != b)
        coincidence(f, b);
      return {-1, -1};
    }
    while (j >= i && get(b, column_of(l[static_cast<std::size_t>(j)]) ^ 1) >= 0)
      b = get(b, column_of(l[static_cast<std::size_t>(j--)]) ^ 1);
    if (j < i) {
      coincidence(f, b);
      return {-1, -1};
    }
    if (i == j) {
      const int x = column_of(l[static_cast<std::size_t>(i)]);
      at(f, x) = b;
      at(b, x ^ 1) = f;
      return {-1, -1};
    }
    return {f, column_of(l[static_cast<std::size_t>(i)])};
  }

  void scan_and_fill(int alpha, const Word& w) {
    while (live(alpha)) {
      const auto [f, x] = scan(alpha, w);
      if (f < 0)
        return;
      define(f, x);
    }
  }

  void lookahead() {
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c)
      for (const auto& r : p_.relators) {
        if (!live(c))
          break;
        scan(c, r);
      }
  }

  /// Renumbers live cosets consecutively, preserving order, and returns the
  /// new number of the first live coset at or after `cursor`.
  int compact(int cursor) {
    std::vector<int> renum(parent_.size(), -1);
    int next = 0;
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c)
      if (live(c))
        renum[static_cast<std::size_t>(c)] = next++;
    std::vector<int> table(static_cast<std::size_t>(next * cols_), -1);
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
      if (!live(c))
        continue;
      for (int x = 0; x < cols_; ++x) {
        const int d = get(c, x);
        table[static_cast<std::size_t>(renum[static_cast<std::size_t>(c)] * cols_ + x)] =
            d < 0 ? -1 : renum[static_cast<std::size_t>(d)];
      }
    }
    int cur = cursor;
    while (cur < static_cast<int>(parent_.size()) && !live(cur))
      ++cur;
    const int moved =
        cur < static_cast<int>(parent_.size()) ? renum[static_cast<std::size_t>(cur)] : next;
    table_ = std::move(table);
    parent_.resize(static_cast<std::size_t>(next));
    std::iota(parent_.begin(), parent_.end(), 0);
    return moved;
  }

  CosetTable standardized(const std::vector<Word>& subgroup) {
    // Breadth-first renumbering from coset 0 in column order.
    std::vector<int> order{0};
    std::vector<int> renum(parent_.size(), -1);
    renum[0] = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
      for (int x = 0; x < cols_; ++x) {
        const int d = get(order[k], x);
        if (d < 0 || !live(d))
          throw computation_error("coset table left incomplete");
        if (renum[static_cast<std::size_t>(d)] < 0) {
          renum[static_cast<std::size_t>(d)] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    const int n = static_cast<int>(order.size());
    std::vector<int> data(static_cast<std::size_t>(n * cols_));
    for (int k = 0; k < n; ++k)
      for (int x = 0; x < cols_; ++x)
        data[static_cast<std::size_t>(k * cols_ + x)] =
            renum[static_cast<std::size_t>(get(order[static_cast<std::size_t>(k)], x))];
    return {p_, subgroup, n, std::move(data)};
  }

  const Presentation& p_;
  int cols_;
  std::size_t max_cosets_;
  std::vector<int> parent_;
  std::vector<int> table_;
  std::size_t live_count_ = 0;
};

}  // namespace detail

/// Enumerates the right cosets of <subgroup> in the presented group. Throws
/// enumeration_overflow_error when more than `max_cosets` live cosets are
/// needed (the index may be infinite).
inline CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                               std::size_t max_cosets = kDefaultMaxCosets) {
  require(max_cosets >= 1, "max_cosets must be at least 1");
  for (const auto& w : subgroup)
    require(max_generator(w) < p.generator_count(), "subgroup word uses an unknown generator");
  detail::CosetEnumerator e(p, max_cosets);
  return e.run(subgroup);
}

/// Right action of each generator on the cosets: perms[g][c] = c g.
inline std::vector<Permutation> permutation_rep(const CosetTable& t) {
  std::vector<Permutation> perms(static_cast<std::size_t>(t.generator_count()));
  for (int g = 0; g < t.generator_count(); ++g) {
    auto& p = perms[static_cast<std::size_t>(g)];
    p.resize(static_cast<std::size_t>(t.index()));
    for (int c = 0; c < t.index(); ++c)
      p[static_cast<std::size_t>(c)] = t.entry(c, 2 * g);
  }
  return perms;
}

/// Product acting first by p, then by q.
inline Permutation then(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[i] = q[static_cast<std::size_t>(p[i])];
  return r;
}

inline Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline constexpr std::size_t kDefaultPermutationGroupCap = 1'000'000;

/// All elements of the group generated by `gens`, identity first, in
/// breadth-first order. Throws enumeration_overflow_error past `cap`.
inline std::vector<Permutation> permutation_closure(const std::vector<Permutation>& gens,
                                                    std::size_t degree,
                                                    std::size_t cap = kDefaultPermutationGroupCap) {
  std::vector<Permutation> elements{identity_permutation(degree)};
  std::set<Permutation> seen{elements.front()};
  for (std::size_t k = 0; k < elements.size(); ++k)
    for (const auto& g : gens) {
      Permutation next = then(elements[k], g);
      if (seen.insert(next).second) {
        if (elements.size() >= cap)
          throw enumeration_overflow_error("permutation group exceeds cap", elements.size());
        elements.push_back(std::move(next));
      }
    }
  return elements;
}

/// H is normal iff every subgroup generator fixes every coset.
inline bool is_normal(const CosetTable& t) {
  for (int c = 0; c < t.index(); ++c)
    for (const auto& w : t.subgroup())
      if (t.trace(c, w) != c)
        return false;
  return true;
}

struct NormalCore {
  /// Index of the normal core, i.e. the order of the permutation image.
  std::size_t core_index = 0;
  std::vector<Permutation> generator_images;
};

inline NormalCore normal_core(const CosetTable& t,
                              std::size_t cap = kDefaultPermutationGroupCap) {
  NormalCore core;
  core.generator_images = permutation_rep(t);
  core.core_index = permutation_closure(core.generator_images,
                                        static_cast<std::size_t>(t.index()), cap)
                        .size();
  return core;
}

}  // namespace origami
