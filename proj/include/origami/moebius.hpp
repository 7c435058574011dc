#pragma once

// Möbius transformations of the Riemann sphere, stored as SL(2,C) matrices
// and compared projectively (up to a global sign).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "origami/error.hpp"

namespace origami {

using complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

/// A point of the extended complex plane: a finite complex number or infinity.
class SpherePoint {
public:
  SpherePoint() = default;
  SpherePoint(complex z) : z_(z) {  // NOLINT(google-explicit-constructor)
    require(std::isfinite(z.real()) && std::isfinite(z.imag()),
            "finite sphere point must have finite coordinates");
  }
  SpherePoint(double x) : SpherePoint(complex(x, 0.0)) {}  // NOLINT

  static SpherePoint infinity() {
    SpherePoint p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinity() const noexcept { return infinite_; }
  complex value() const {
    require(!infinite_, "point at infinity has no finite coordinate");
    return z_;
  }

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

  /// Lexicographic on (re, im), infinity last.
  friend bool lex_less(const SpherePoint& p, const SpherePoint& q) {
    if (p.infinite_ || q.infinite_)
      return !p.infinite_ && q.infinite_;
    if (p.z_.real() != q.z_.real())
      return p.z_.real() < q.z_.real();
    return p.z_.imag() < q.z_.imag();
  }

  /// Euclidean distance for finite points; 0 between two infinities and
  /// +inf between a finite point and infinity.
  friend double distance(const SpherePoint& p, const SpherePoint& q) {
    if (p.infinite_ && q.infinite_)
      return 0.0;
    if (p.infinite_ || q.infinite_)
      return std::numeric_limits<double>::infinity();
    return std::abs(p.z_ - q.z_);
  }

private:
  complex z_{};
  bool infinite_ = false;
};

/// z -> (az + b) / (cz + d) with ad - bc = 1.
class MoebiusMap {
public:
  MoebiusMap() = default;

  /// Normalizes the determinant to 1. Throws on a singular or non-finite
  /// matrix.
  MoebiusMap(complex a, complex b, complex c, complex d) {
    const complex det = a * d - b * c;
    require(std::abs(det) > 0.0 && std::isfinite(std::abs(det)),
            "Moebius coefficients must be finite with nonzero determinant");
    const complex s = std::sqrt(det);
    a_ = a / s;
    b_ = b / s;
    c_ = c / s;
    d_ = d / s;
  }

  static MoebiusMap identity() { return {}; }

  complex a() const noexcept { return a_; }
  complex b() const noexcept { return b_; }
  complex c() const noexcept { return c_; }
  complex d() const noexcept { return d_; }
  std::array<complex, 4> coefficients() const { return {a_, b_, c_, d_}; }

  complex trace() const noexcept { return a_ + d_; }
  complex determinant() const noexcept { return a_ * d_ - b_ * c_; }
  double max_abs() const noexcept {
    return std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)});
  }

private:
  complex a_{1.0}, b_{0.0}, c_{0.0}, d_{1.0};
};

/// f o g.
inline MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g) {
  return {f.a() * g.a() + f.b() * g.c(), f.a() * g.b() + f.b() * g.d(),
          f.c() * g.a() + f.d() * g.c(), f.c() * g.b() + f.d() * g.d()};
}

inline MoebiusMap operator*(const MoebiusMap& f, const MoebiusMap& g) {
  return compose(f, g);
}

inline MoebiusMap inverse(const MoebiusMap& f) {
  return {f.d(), -f.b(), -f.c(), f.a()};
}

inline MoebiusMap power(const MoebiusMap& f, int k) {
  MoebiusMap base = k < 0 ? inverse(f) : f;
  MoebiusMap out;
  for (int e = k < 0 ? -k : k; e > 0; e >>= 1) {
    if (e & 1)
      out = out * base;
    base = base * base;
  }
  return out;
}

inline MoebiusMap conjugate(const MoebiusMap& g, const MoebiusMap& f) {
  return g * f * inverse(g);
}

/// Max-norm distance between coefficient tuples, minimized over the sign
/// ambiguity of PSL(2,C).
inline double projective_distance(const MoebiusMap& f, const MoebiusMap& g) {
  const auto p = f.coefficients();
  const auto q = g.coefficients();
  double plus = 0.0, minus = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    plus = std::max(plus, std::abs(p[i] - q[i]));
    minus = std::max(minus, std::abs(p[i] + q[i]));
  }
  return std::min(plus, minus);
}

inline bool projectively_equal(const MoebiusMap& f, const MoebiusMap& g,
                               double tol = kDefaultTolerance) {
  return projective_distance(f, g) <= tol;
}

inline double distance_to_identity(const MoebiusMap& f) {
  return projective_distance(f, MoebiusMap::identity());
}

inline bool is_identity(const MoebiusMap& f, double tol = kDefaultTolerance) {
  return distance_to_identity(f) <= tol;
}

inline SpherePoint apply(const MoebiusMap& f, const SpherePoint& p) {
  if (p.is_infinity()) {
    if (f.c() == complex(0.0))
      return SpherePoint::infinity();
    return SpherePoint(f.a() / f.c());
  }
  const complex z = p.value();
  const complex den = f.c() * z + f.d();
  if (den == complex(0.0))
    return SpherePoint::infinity();
  const complex w = (f.a() * z + f.b()) / den;
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
    return SpherePoint::infinity();
  return SpherePoint(w);
}

/// Finite-argument, finite-result shorthand used by geometry code.
inline complex apply(const MoebiusMap& f, complex z) {
  return (f.a() * z + f.b()) / (f.c() * z + f.d());
}

// ---------------------------------------------------------------------------
// Classification

enum class MapKind { identity, elliptic, parabolic, loxodromic };

struct MapClass {
  MapKind kind = MapKind::identity;
  /// Rotation order for elliptic maps; nullopt means no order <= 64 was found.
  std::optional<int> order;

  friend bool operator==(const MapClass&, const MapClass&) = default;
};

inline constexpr int kMaxEllipticOrder = 64;

inline std::string to_string(const MapClass& cls) {
  switch (cls.kind) {
    case MapKind::identity:
      return "identity";
    case MapKind::parabolic:
      return "parabolic";
    case MapKind::loxodromic:
      return "loxodromic";
    case MapKind::elliptic:
      return cls.order ? "elliptic(" + std::to_string(*cls.order) + ")"
                       : "elliptic(irrational)";
  }
  return "unknown";
}

inline MapClass classify(const MoebiusMap& f, double tol = kDefaultTolerance) {
  if (is_identity(f, tol))
    return {MapKind::identity, std::nullopt};
  const complex t2 = f.trace() * f.trace();
  if (std::abs(t2 - 4.0) <= tol)
    return {MapKind::parabolic, std::nullopt};
  if (std::abs(t2.imag()) <= tol && t2.real() >= -tol && t2.real() < 4.0) {
    MapClass out{MapKind::elliptic, std::nullopt};
    MoebiusMap acc = f;
    for (int k = 2; k <= kMaxEllipticOrder; ++k) {
      acc = acc * f;
      if (is_identity(acc, tol)) {
        out.order = k;
        break;
      }
    }
    return out;
  }
  return {MapKind::loxodromic, std::nullopt};
}

/// The two fixed points, roots of c z^2 + (d - a) z - b = 0, ordered
/// lexicographically with infinity last. Parabolic maps return a repeated
/// point.
inline std::pair<SpherePoint, SpherePoint> fixed_points(
    const MoebiusMap& f, double tol = kDefaultTolerance) {
  if (is_identity(f, tol))
    throw precondition_error("fixed points undefined for identity");
  const double scale = f.max_abs();
  const complex a = f.a(), b = f.b(), c = f.c(), d = f.d();
  auto ordered = [](SpherePoint p, SpherePoint q) {
    return lex_less(q, p) ? std::pair{q, p} : std::pair{p, q};
  };
  if (std::abs(c) <= 1e-14 * scale) {
    // Infinity is fixed; the other root solves (d - a) z = b.
    if (std::abs(d - a) <= 1e-14 * scale)
      return {SpherePoint::infinity(), SpherePoint::infinity()};
    return ordered(SpherePoint(b / (d - a)), SpherePoint::infinity());
  }
  const complex lin = d - a;
  const complex s = std::sqrt(lin * lin + 4.0 * b * c);
  // Pick the sign that avoids cancellation, then use Vieta for the other root.
  const complex q1 = -0.5 * (lin + s);
  const complex q2 = -0.5 * (lin - s);
  const complex q = std::abs(q1) >= std::abs(q2) ? q1 : q2;
  if (q == complex(0.0))
    return {SpherePoint(complex(0.0)), SpherePoint(complex(0.0))};
  return ordered(SpherePoint(q / c), SpherePoint(-b / q));
}

/// Normalizing map sending p to 0 and q to infinity.
inline MoebiusMap normalizer(const SpherePoint& p, const SpherePoint& q) {
  require(!(p == q), "normalizer needs two distinct points");
  if (q.is_infinity())
    return {1.0, -p.value(), 0.0, 1.0};
  if (p.is_infinity())
    return {0.0, 1.0, 1.0, -q.value()};
  return {1.0, -p.value(), 1.0, -q.value()};
}

// ---------------------------------------------------------------------------
// Generator families

struct GeneratorPair {
  MoebiusMap first;
  MoebiusMap second;
};

/// Projective closure of a finite set of generators. Throws if more than
/// `cap` elements appear (the group is not finite, or not small).
inline std::vector<MoebiusMap> finite_closure(const std::vector<MoebiusMap>& gens,
                                              std::size_t cap = 4096,
                                              double tol = 1e-9) {
  std::vector<MoebiusMap> elems{MoebiusMap::identity()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      MoebiusMap m = elems[i] * g;
      const bool seen = std::any_of(elems.begin(), elems.end(), [&](const auto& e) {
        return projectively_equal(e, m, tol);
      });
      if (!seen) {
        if (elems.size() >= cap)
          throw computation_error("finite closure exceeded cap");
        elems.push_back(m);
      }
    }
  }
  return elems;
}

/// A(z) = e^{2 pi i/n} z, B(z) = 1/z generating the dihedral group of order 2n.
inline GeneratorPair dn_generators(int n) {
  require(n >= 2, "dihedral generators need n >= 2");
  const complex half = std::polar(1.0, std::numbers::pi / n);
  GeneratorPair g{MoebiusMap(half, 0.0, 0.0, 1.0 / half),
                  MoebiusMap(0.0, 1.0, 1.0, 0.0)};
  const double res = std::max({distance_to_identity(power(g.first, n)),
                               distance_to_identity(g.second * g.second),
                               distance_to_identity(power(g.first * g.second, 2))});
  if (res > 1e-12)
    throw computation_error("dihedral generator self-check failed");
  return g;
}

/// A(z) = i(1 - z)/(z + 1), B(z) = -z generating the tetrahedral group A_4.
inline GeneratorPair a4_generators() {
  const complex i(0.0, 1.0);
  GeneratorPair g{MoebiusMap(-i, i, 1.0, 1.0), MoebiusMap(-1.0, 0.0, 0.0, 1.0)};
  const double res = std::max({distance_to_identity(power(g.first, 3)),
                               distance_to_identity(g.second * g.second),
                               distance_to_identity(power(g.first * g.second, 3))});
  if (res > 1e-12)
    throw computation_error("A4 generator self-check failed");
  return g;
}

/// Real generators A(z) = r(z+1)/(z+alpha), B(z) = (r-z)/(z+beta) with
/// beta = 1 - r - alpha, of the punctured-torus Fuchsian family.
inline GeneratorPair fuchsian_punctured_torus(double r, double alpha) {
  require(r > 0.0, "punctured torus family needs r > 0");
  require(alpha > 1.0, "punctured torus family needs alpha > 1");
  const double beta = 1.0 - r - alpha;
  GeneratorPair g{MoebiusMap(r, r, 1.0, alpha), MoebiusMap(-1.0, r, 1.0, beta)};
  for (const auto& m : {g.first, g.second})
    for (const auto& coef : m.coefficients())
      if (std::abs(coef.imag()) > 1e-14)
        throw computation_error("punctured torus generators left PSL(2,R)");
  return g;
}

inline MoebiusMap commutator(const MoebiusMap& f, const MoebiusMap& g) {
  return f * g * inverse(f) * inverse(g);
}

}  // namespace origami
