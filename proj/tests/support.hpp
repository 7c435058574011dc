#pragma once

// Seeded generators for property tests and independent oracles that avoid
// the library's own code paths.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "origami/geometry.hpp"
#include "origami/moebius.hpp"
#include "origami/word.hpp"

namespace origami::testing {

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  complex point(double box = 3.0) { return {uniform(-box, box), uniform(-box, box)}; }

  /// A map with coefficients in a box, rejected until well conditioned.
  MoebiusMap map(double box = 2.0) {
    for (;;) {
      const complex a = point(box), b = point(box), c = point(box), d = point(box);
      if (std::abs(a * d - b * c) > 0.25)
        return {a, b, c, d};
    }
  }

  Circle circle() { return {point(2.0), uniform(0.1, 1.5)}; }

  /// Random word, not necessarily reduced before construction.
  Word word(int generators, int max_len) {
    std::vector<Letter> letters;
    const int len = integer(0, max_len);
    for (int i = 0; i < len; ++i)
      letters.push_back(letter(integer(0, generators - 1), integer(0, 1) == 1));
    return Word(letters);
  }

private:
  std::mt19937_64 rng_;
};

using Raw = std::array<complex, 4>;

inline Raw raw_mul(const Raw& x, const Raw& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

inline complex raw_apply(const Raw& m, complex z) { return (m[0] * z + m[1]) / (m[2] * z + m[3]); }

/// Distance of two raw matrices as maps: both normalized to det 1, then the
/// max coefficient gap minimized over sign.
inline double raw_projective_distance(Raw x, Raw y) {
  for (Raw* m : {&x, &y}) {
    const complex s = std::sqrt((*m)[0] * (*m)[3] - (*m)[1] * (*m)[2]);
    for (auto& v : *m)
      v /= s;
  }
  double plus = 0.0, minus = 0.0;
  for (int i = 0; i < 4; ++i) {
    plus = std::max(plus, std::abs(x[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(i)]));
    minus = std::max(minus, std::abs(x[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(i)]));
  }
  return std::min(plus, minus);
}

inline Raw raw_of(const MoebiusMap& m) { return m.coefficients(); }

struct PlainCircle {
  complex center;
  double radius;
};

/// Circumcircle of three points.
inline PlainCircle circumcircle(complex a, complex b, complex c) {
  const double ax = a.real(), ay = a.imag(), bx = b.real(), by = b.imag();
  const double cx = c.real(), cy = c.imag();
  const double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
  const double ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) +
                     (cx * cx + cy * cy) * (ay - by)) / d;
  const double uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) +
                     (cx * cx + cy * cy) * (bx - ax)) / d;
  const complex u(ux, uy);
  return {u, std::abs(a - u)};
}

/// Image circle by mapping three boundary points, with the interior decided
/// by where an interior sample point lands.
inline Circle three_point_image(const MoebiusMap& f, const Circle& c) {
  const Raw m = raw_of(f);
  std::array<complex, 3> img;
  for (int k = 0; k < 3; ++k)
    img[static_cast<std::size_t>(k)] =
        raw_apply(m, c.center + std::polar(c.radius, 2.0 * std::numbers::pi * k / 3.0 + 0.3));
  const auto pc = circumcircle(img[0], img[1], img[2]);
  const complex sample = c.interior == Interior::disc
                             ? c.center + 0.37 * c.radius * complex(0.6, 0.8)
                             : c.center + 5.0 * c.radius * complex(0.6, 0.8);
  const complex s = raw_apply(m, sample);
  const bool inside = std::abs(s - pc.center) < pc.radius;
  return {pc.center, pc.radius, inside ? Interior::disc : Interior::complement};
}

}  // namespace origami::testing
