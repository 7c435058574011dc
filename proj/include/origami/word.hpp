#pragma once

// Freely reduced words and finite presentations, with the line-based text
// format:
//
//   gens: B T
//   rel: B B
//   rel: T B T^-1 B T B T^-1 B

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "origami/error.hpp"

namespace origami {

/// Signed generator index: g + 1 for generator g, -(g + 1) for its inverse.
using Letter = int;

inline constexpr Letter letter(int generator, bool inverted = false) {
  return inverted ? -(generator + 1) : generator + 1;
}
inline constexpr int generator_of(Letter x) { return (x > 0 ? x : -x) - 1; }
inline constexpr bool is_inverse_letter(Letter x) { return x < 0; }

/// An element of a free group, always stored freely reduced.
class Word {
public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters) {
    letters_.reserve(letters.size());
    for (Letter x : letters)
      push(x);
  }
  Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

  static Word generator(int g, int exponent = 1) {
    Word w;
    for (int i = 0; i < std::abs(exponent); ++i)
      w.push(letter(g, exponent < 0));
    return w;
  }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back(-*it);
    return w;
  }

  Word& operator*=(const Word& rhs) {
    for (Letter x : rhs.letters_)
      push(x);
    return *this;
  }
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  Word pow(int k) const {
    const Word base = k < 0 ? inverse() : *this;
    Word out;
    for (int i = 0; i < std::abs(k); ++i)
      out *= base;
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size())
      return a.size() <=> b.size();
    return a.letters_ <=> b.letters_;
  }

private:
  void push(Letter x) {
    if (x == 0)
      throw precondition_error("letter 0 is not a generator");
    if (!letters_.empty() && letters_.back() == -x)
      letters_.pop_back();
    else
      letters_.push_back(x);
  }

  std::vector<Letter> letters_;
};

/// g w g^{-1}.
inline Word conjugate(const Word& g, const Word& w) { return g * w * g.inverse(); }

inline Word cyclically_reduce(const Word& w) {
  const auto& l = w.letters();
  std::size_t i = 0, j = l.size();
  while (j - i >= 2 && l[i] == -l[j - 1]) {
    ++i;
    --j;
  }
  return Word(std::vector<Letter>(l.begin() + static_cast<std::ptrdiff_t>(i),
                                  l.begin() + static_cast<std::ptrdiff_t>(j)));
}

inline int exponent_sum(const Word& w, int generator) {
  int s = 0;
  for (Letter x : w.letters())
    if (generator_of(x) == generator)
      s += x > 0 ? 1 : -1;
  return s;
}

inline int max_generator(const Word& w) {
  int m = -1;
  for (Letter x : w.letters())
    m = std::max(m, generator_of(x));
  return m;
}

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  Presentation() = default;
  Presentation(std::vector<std::string> gens, std::vector<Word> rels)
      : generators(std::move(gens)) {
    require(!generators.empty(), "presentation needs at least one generator");
    for (auto& r : rels) {
      Word w = cyclically_reduce(r);
      require(!w.empty(), "relators must be nontrivial after reduction");
      require(max_generator(w) < generator_count(), "relator uses an unknown generator");
      relators.push_back(std::move(w));
    }
  }

  int generator_count() const noexcept { return static_cast<int>(generators.size()); }
};

// ---------------------------------------------------------------------------
// Text format

inline std::string format_letter(Letter x, const std::vector<std::string>& names) {
  std::string s = names.at(static_cast<std::size_t>(generator_of(x)));
  if (is_inverse_letter(x))
    s += "^-1";
  return s;
}

inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty())
    return "1";
  std::string out;
  for (Letter x : w.letters()) {
    if (!out.empty())
      out += ' ';
    out += format_letter(x, names);
  }
  return out;
}

/// Whitespace-separated tokens `X` or `X^-1`; "1" denotes the empty word.
inline Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  std::string tok;
  while (in >> tok) {
    if (tok == "1")
      continue;
    bool inv = false;
    if (tok.size() > 3 && tok.ends_with("^-1")) {
      inv = true;
      tok.resize(tok.size() - 3);
    }
    const auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end())
      throw precondition_error("unknown generator '" + tok + "'");
    letters.push_back(letter(static_cast<int>(it - names.begin()), inv));
  }
  return Word(letters);
}

inline std::string format_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& g : p.generators)
    out += " " + g;
  out += '\n';
  for (const auto& r : p.relators)
    out += "rel: " + format_word(r, p.generators) + '\n';
  return out;
}

inline Presentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> gens;
  std::vector<std::string> rel_lines;
  bool have_gens = false;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    line = line.substr(first);
    if (line.starts_with("gens:")) {
      require(!have_gens, "duplicate gens line");
      std::istringstream g(line.substr(5));
      std::string name;
      while (g >> name) {
        require(name.find('^') == std::string::npos && name != "1",
                "invalid generator name '" + name + "'");
        require(std::find(gens.begin(), gens.end(), name) == gens.end(),
                "duplicate generator '" + name + "'");
        gens.push_back(name);
      }
      have_gens = true;
    } else if (line.starts_with("rel:")) {
      rel_lines.push_back(line.substr(4));
    } else {
      throw precondition_error("unrecognized presentation line: " + line);
    }
  }
  require(have_gens, "presentation text lacks a gens line");
  std::vector<Word> rels;
  for (const auto& r : rel_lines)
    rels.push_back(parse_word(r, gens));
  return {gens, rels};
}

}  // namespace origami
