#pragma once

// Circles on the Riemann sphere and the numerical certificate for the
// HNN combination of a finite elliptic group with a loxodromic pairing map.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <iterator>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "origami/error.hpp"
#include "origami/moebius.hpp"

namespace origami {

enum class Interior { disc, complement };

/// A round circle |z - center| = radius with one side designated interior.
/// Lines are never represented; maps producing them are rejected.
struct Circle {
  complex center{};
  double radius = 1.0;
  Interior interior = Interior::disc;

  Circle() = default;
  Circle(complex c, double r, Interior side = Interior::disc)
      : center(c), radius(r), interior(side) {
    require(r > 0.0 && std::isfinite(r), "circle radius must be positive and finite");
    require(std::isfinite(c.real()) && std::isfinite(c.imag()),
            "circle center must be finite");
  }
};

inline Circle complement(const Circle& c) {
  return {c.center, c.radius,
          c.interior == Interior::disc ? Interior::complement : Interior::disc};
}

/// True when z lies in the closed interior, inflated by `slack`.
inline bool in_closed_interior(const Circle& c, complex z, double slack = 0.0) {
  const double d = std::abs(z - c.center);
  return c.interior == Interior::disc ? d <= c.radius + slack : d >= c.radius - slack;
}

/// Size of the mismatch between two oriented circles; infinite when the
/// interiors disagree.
inline double circle_distance(const Circle& p, const Circle& q) {
  if (p.interior != q.interior)
    return std::numeric_limits<double>::infinity();
  return std::max(std::abs(p.center - q.center), std::abs(p.radius - q.radius));
}

inline bool same_circle(const Circle& p, const Circle& q, double tol = kDefaultTolerance) {
  return circle_distance(p, q) <= tol * std::max(1.0, std::max(p.radius, q.radius));
}

inline constexpr double kDegenerateGuard = 1e-8;

/// Image of an oriented circle. The circle is carried as the Hermitian form
/// H(z) = A|z|^2 + conj(B) z + B conj(z) + C (negative on the interior), which
/// transforms as N^* H N with N = f^{-1}; interior designation follows.
inline Circle image_circle(const MoebiusMap& f, const Circle& c) {
  if (std::abs(f.c()) > 0.0) {
    const complex pole = -f.d() / f.c();
    if (std::abs(std::abs(pole - c.center) - c.radius) <= kDegenerateGuard * c.radius)
      throw degenerate_circle_error();
  }
  const double sign = c.interior == Interior::disc ? 1.0 : -1.0;
  // N = f^{-1} = [[d, -b], [-c, a]]. Entries of N^* H N expanded about the
  // center, which avoids cancellation for small circles. Since det H' =
  // |det N|^2 det H, the new radius is r |det N| / |a'|.
  const complex n11 = f.d(), n12 = -f.b(), n21 = -f.c(), n22 = f.a();
  const complex p = n11 - c.center * n21;
  const complex q = n12 - c.center * n22;
  const double r2 = c.radius * c.radius;
  const double a = sign * (std::norm(p) - r2 * std::norm(n21));
  const complex b = sign * (std::conj(p) * q - r2 * std::conj(n21) * n22);
  if (a == 0.0)
    throw degenerate_circle_error();
  const complex center = -b / a;
  const double radius = c.radius * std::abs(n11 * n22 - n12 * n21) / std::abs(a);
  if (!(radius > 0.0) || !std::isfinite(radius) || !std::isfinite(center.real()) ||
      !std::isfinite(center.imag()))
    throw degenerate_circle_error();
  return {center, radius, a > 0.0 ? Interior::disc : Interior::complement};
}

/// Signed gap between the closed interiors of two circles: positive iff they
/// are disjoint. Two unbounded interiors always meet at infinity.
inline double disjointness_margin(const Circle& p, const Circle& q) {
  const double d = std::abs(p.center - q.center);
  const bool p_disc = p.interior == Interior::disc;
  const bool q_disc = q.interior == Interior::disc;
  if (p_disc && q_disc)
    return d - (p.radius + q.radius);
  if (p_disc)
    return q.radius - (d + p.radius);
  if (q_disc)
    return p.radius - (d + q.radius);
  return -std::numeric_limits<double>::infinity();
}

inline double min_pairwise_margin(std::span<const Circle> circles) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < circles.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      m = std::min(m, disjointness_margin(circles[i], circles[j]));
  return m;
}

/// Circle about the fixed point p of the elliptic g: in coordinates where g
/// is a rotation w -> e^{i theta} w about 0 (p at 0, the other fixed point at
/// infinity) it is |w| = r, interior on the side of p.
inline Circle invariant_circle(const MoebiusMap& g, const SpherePoint& p, double r,
                               double tol = kDefaultTolerance) {
  require(r > 0.0, "invariant circle needs r > 0");
  if (classify(g, tol).kind != MapKind::elliptic)
    throw precondition_error("invariant circle needs an elliptic map");
  const SpherePoint gp = apply(g, p);
  const double scale = p.is_infinity() ? 1.0 : 1.0 + std::abs(p.value());
  if (!(distance(gp, p) <= tol * scale))
    throw precondition_error("point is not fixed by the elliptic map");
  const auto [f1, f2] = fixed_points(g, tol);
  const SpherePoint other = distance(f1, p) > distance(f2, p) ? f1 : f2;
  const MoebiusMap h = normalizer(p, other);
  const Circle out = image_circle(inverse(h), Circle(0.0, r));
  if (!same_circle(image_circle(g, out), out, tol))
    throw computation_error("invariant circle failed its invariance check");
  return out;
}

// ---------------------------------------------------------------------------
// Pairing and certificate

enum class PairingForm { scale, inversion };  // m(w) = lambda w  |  lambda / w

inline const char* to_string(PairingForm f) {
  return f == PairingForm::scale ? "scale" : "inversion";
}

/// The loxodromic T with its paired circles: T maps the exterior of `first`
/// onto the interior of `second` and T source T^{-1} = target.
struct PairedCircles {
  Circle first;
  Circle second;
  MoebiusMap pairing;
  MoebiusMap source;
  MoebiusMap target;
  complex lambda{};
  PairingForm form = PairingForm::scale;
  double circle_parameter = 0.0;
};

struct StabilizerCheck {
  Circle circle;
  MoebiusMap elliptic;
  double residual = 0.0;
};

/// One circle of the finite-group orbit: the image of base circle `base`
/// (0 = first, 1 = second) under group element `element`.
struct OrbitCircle {
  Circle circle;
  int base = 0;
  std::size_t element = 0;
};

struct CombinationCertificate {
  std::vector<OrbitCircle> orbit;
  double pairwise_margin = -std::numeric_limits<double>::infinity();
  std::vector<StabilizerCheck> stabilizer_checks;
  double pairing_residual = std::numeric_limits<double>::infinity();
  double conjugation_residual = std::numeric_limits<double>::infinity();
  bool degenerate = false;
  bool verdict = false;

  std::vector<Circle> circles() const {
    std::vector<Circle> out;
    out.reserve(orbit.size());
    for (const auto& o : orbit)
      out.push_back(o.circle);
    return out;
  }
};

inline constexpr double kMinimumMargin = 1e-6;

/// Checks the finite hypotheses of the HNN combination: (i) the orbit of the
/// two paired circles under the finite group is pairwise disjoint, (ii) each
/// paired circle is invariant under its cyclic stabilizer, (iii) the pairing
/// carries the exterior of the first circle onto the interior of the second.
inline CombinationCertificate verify_combination(std::span<const MoebiusMap> elements,
                                                 const PairedCircles& pc,
                                                 double tol = kDefaultTolerance) {
  CombinationCertificate cert;
  const std::array<Circle, 2> bases{pc.first, pc.second};
  try {
    for (int b = 0; b < 2; ++b) {
      for (std::size_t e = 0; e < elements.size(); ++e) {
        const Circle img = image_circle(elements[e], bases[b]);
        const bool seen = std::any_of(cert.orbit.begin(), cert.orbit.end(),
                                      [&](const OrbitCircle& o) {
                                        return same_circle(o.circle, img, tol);
                                      });
        if (!seen)
          cert.orbit.push_back({img, b, e});
      }
    }
    const auto circles = cert.circles();
    cert.pairwise_margin = min_pairwise_margin(circles);

    auto residual = [&](const MoebiusMap& g, const Circle& c) {
      return circle_distance(image_circle(g, c), c);
    };
    cert.stabilizer_checks.push_back({pc.first, pc.source, residual(pc.source, pc.first)});
    cert.stabilizer_checks.push_back({pc.second, pc.target, residual(pc.target, pc.second)});
    cert.pairing_residual =
        circle_distance(image_circle(pc.pairing, complement(pc.first)), pc.second);
  } catch (const degenerate_circle_error&) {
    cert.degenerate = true;
  }
  cert.conjugation_residual = projective_distance(
      conjugate(pc.pairing, pc.source), pc.target);

  const bool disjoint = cert.pairwise_margin > std::max(tol, kMinimumMargin);
  const bool invariant =
      cert.stabilizer_checks.size() == 2 &&
      std::all_of(cert.stabilizer_checks.begin(), cert.stabilizer_checks.end(),
                  [&](const StabilizerCheck& s) {
                    return s.residual < tol * std::max(1.0, s.circle.radius);
                  });
  const bool carries =
      cert.pairing_residual < tol * std::max(1.0, pc.second.radius);
  cert.verdict = !cert.degenerate && disjoint && invariant && carries;
  return cert;
}

/// Real grid {2, -2, 4, -4, ..., 4096, -4096}.
inline std::vector<complex> default_dihedral_grid() {
  std::vector<complex> grid;
  for (int k = 1; k <= 12; ++k) {
    const double rho = std::ldexp(1.0, k);
    grid.emplace_back(rho);
    grid.emplace_back(-rho);
  }
  return grid;
}

/// {2^k e^{i pi j/6}}, k = 1..12 outer, j = 0..11 inner.
inline std::vector<complex> default_a4_grid() {
  std::vector<complex> grid;
  for (int k = 1; k <= 12; ++k)
    for (int j = 0; j < 12; ++j)
      grid.push_back(std::polar(std::ldexp(1.0, k), std::numbers::pi * j / 6.0));
  return grid;
}

namespace detail {

struct ConfigurationData {
  std::vector<MoebiusMap> elements;
  MoebiusMap source, target;           // stabilizers of the paired circles
  SpherePoint source_point, target_point;
  MoebiusMap source_normalizer;        // source fixed point -> 0
  MoebiusMap target_normalizer;        // see the two builders
  std::size_t expected_orbit = 0;
};

inline ConfigurationData dihedral_data(int n) {
  const auto [a, b] = dn_generators(n);
  const complex zeta = std::polar(1.0, std::numbers::pi / n);
  ConfigurationData cfg;
  cfg.elements = finite_closure({a, b});
  cfg.source = b;
  cfg.target = a * b;
  cfg.source_point = SpherePoint(1.0);
  cfg.target_point = SpherePoint(zeta);
  cfg.source_normalizer = normalizer(SpherePoint(1.0), SpherePoint(-1.0));
  // zeta goes to infinity, so large |lambda| in the scale form shrinks the
  // image of ext(C1) onto a small disc about zeta. zeta is an odd power of
  // e^{i pi/n} and never lies in the <A>-orbit of 1.
  cfg.target_normalizer = normalizer(SpherePoint(-zeta), SpherePoint(zeta));
  cfg.expected_orbit = 2 * static_cast<std::size_t>(n);
  return cfg;
}

inline ConfigurationData a4_data() {
  const auto [a, b] = a4_generators();
  const auto [p, q] = fixed_points(a);
  ConfigurationData cfg;
  cfg.elements = finite_closure({a, b});
  cfg.source = a;
  cfg.target = a;
  cfg.source_point = p;
  cfg.target_point = q;
  cfg.source_normalizer = normalizer(p, q);
  cfg.target_normalizer = normalizer(p, q);
  cfg.expected_orbit = 8;
  return cfg;
}

inline std::vector<Circle> orbit_of(std::span<const MoebiusMap> elements,
                                    std::span<const Circle> seeds, double tol) {
  std::vector<Circle> out;
  for (const auto& s : seeds)
    for (const auto& g : elements) {
      const Circle img = image_circle(g, s);
      if (std::none_of(out.begin(), out.end(),
                       [&](const Circle& c) { return same_circle(c, img, tol); }))
        out.push_back(img);
    }
  return out;
}

/// Halve r from 1/2 until the invariant circles about the source and target
/// fixed points have the expected orbit with pairwise margin at least 10% of
/// the minimal separation of their centers' fixed points; then halve once more.
inline double adaptive_parameter(const ConfigurationData& cfg, double tol) {
  std::vector<complex> pts;
  for (const auto& g : cfg.elements)
    for (const auto& p : {cfg.source_point, cfg.target_point}) {
      const complex z = apply(g, p).value();
      if (std::none_of(pts.begin(), pts.end(),
                       [&](complex w) { return std::abs(w - z) <= tol; }))
        pts.push_back(z);
    }
  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      sep = std::min(sep, std::abs(pts[i] - pts[j]));

  double r = 0.5;
  for (int iter = 0; iter < 40; ++iter, r /= 2.0) {
    try {
      const std::array<Circle, 2> seeds{
          invariant_circle(cfg.source, cfg.source_point, r, tol),
          invariant_circle(cfg.target, cfg.target_point, r, tol)};
      const auto orbit = orbit_of(cfg.elements, seeds, tol);
      if (orbit.size() == cfg.expected_orbit && min_pairwise_margin(orbit) >= 0.1 * sep)
        return r / 2.0;
    } catch (const degenerate_circle_error&) {
    }
  }
  throw computation_error("no admissible circle parameter found");
}

inline MoebiusMap pairing_candidate(const ConfigurationData& cfg, complex lambda,
                                    PairingForm form) {
  const MoebiusMap m = form == PairingForm::scale ? MoebiusMap(lambda, 0.0, 0.0, 1.0)
                                                  : MoebiusMap(0.0, lambda, 1.0, 0.0);
  return inverse(cfg.target_normalizer) * m * cfg.source_normalizer;
}

inline PairedCircles search(const ConfigurationData& cfg, double r,
                            std::span<const complex> grid,
                            std::span<const PairingForm> forms, double tol) {
  const Circle first = invariant_circle(cfg.source, cfg.source_point, r, tol);
  double best = -std::numeric_limits<double>::infinity();
  for (const complex lambda : grid) {
    for (const PairingForm form : forms) {
      const MoebiusMap t = pairing_candidate(cfg, lambda, form);
      if (classify(t, tol).kind != MapKind::loxodromic)
        continue;
      if (projective_distance(conjugate(t, cfg.source), cfg.target) > tol)
        continue;
      Circle image;
      try {
        image = image_circle(t, first);
      } catch (const degenerate_circle_error&) {
        continue;
      }
      PairedCircles pc{first, complement(image), t, cfg.source, cfg.target,
                       lambda, form, r};
      const auto cert = verify_combination(cfg.elements, pc, tol);
      if (!cert.degenerate)
        best = std::max(best, cert.pairwise_margin);
      if (cert.verdict)
        return pc;
    }
  }
  throw pairing_search_error(best);
}

}  // namespace detail

/// Elements of D_n = <A, B> in closure order.
inline std::vector<MoebiusMap> dihedral_elements(int n) {
  return detail::dihedral_data(n).elements;
}

inline std::vector<MoebiusMap> a4_elements() { return detail::a4_data().elements; }

inline double default_circle_parameter_dihedral(int n, double tol = kDefaultTolerance) {
  return detail::adaptive_parameter(detail::dihedral_data(n), tol);
}

inline double default_circle_parameter_a4(double tol = kDefaultTolerance) {
  return detail::adaptive_parameter(detail::a4_data(), tol);
}

/// Pairing T = h2^{-1} o m o h1 with h1 sending 1 -> 0, -1 -> inf (so
/// h1 B h1^{-1} = -w), h2 sending -zeta -> 0, zeta -> inf (h2 AB h2^{-1} = -w),
/// zeta = e^{i pi/n}. Returns the first grid candidate, scale form before
/// inversion form for each lambda, whose combination certificate holds.
inline PairedCircles find_pairing_dihedral(int n, double r, std::span<const complex> grid,
                                           double tol = kDefaultTolerance) {
  require(n >= 2, "dihedral pairing needs n >= 2");
  require(r > 0.0, "circle parameter must be positive");
  constexpr std::array forms{PairingForm::scale, PairingForm::inversion};
  return detail::search(detail::dihedral_data(n), r, grid, forms, tol);
}

inline PairedCircles find_pairing_dihedral(int n) {
  const auto grid = default_dihedral_grid();
  return find_pairing_dihedral(n, default_circle_parameter_dihedral(n), grid);
}

/// Pairing T = h^{-1} o (lambda w) o h with h sending the fixed points of A
/// (lexicographic order) to 0 and infinity, so T commutes with A. Only
/// |lambda| > 1 is admissible.
inline PairedCircles find_pairing_a4(double r, std::span<const complex> grid,
                                     double tol = kDefaultTolerance) {
  require(r > 0.0, "circle parameter must be positive");
  std::vector<complex> admissible;
  std::copy_if(grid.begin(), grid.end(), std::back_inserter(admissible),
               [](complex l) { return std::abs(l) > 1.0; });
  constexpr std::array forms{PairingForm::scale};
  return detail::search(detail::a4_data(), r, admissible, forms, tol);
}

inline PairedCircles find_pairing_a4() {
  const auto grid = default_a4_grid();
  return find_pairing_a4(default_circle_parameter_a4(), grid);
}

/// Pairing for a fixed lambda without searching; the result is not
/// certified. Used to probe configurations away from the search.
inline PairedCircles make_pairing_dihedral(int n, double r, complex lambda,
                                           PairingForm form = PairingForm::scale) {
  require(n >= 2, "dihedral pairing needs n >= 2");
  const auto cfg = detail::dihedral_data(n);
  const Circle first = invariant_circle(cfg.source, cfg.source_point, r);
  const MoebiusMap t = detail::pairing_candidate(cfg, lambda, form);
  return {first, complement(image_circle(t, first)), t, cfg.source, cfg.target,
          lambda, form, r};
}

inline PairedCircles make_pairing_a4(double r, complex lambda) {
  const auto cfg = detail::a4_data();
  const Circle first = invariant_circle(cfg.source, cfg.source_point, r);
  const MoebiusMap t = detail::pairing_candidate(cfg, lambda, PairingForm::scale);
  return {first, complement(image_circle(t, first)), t, cfg.source, cfg.target,
          lambda, PairingForm::scale, r};
}

}  // namespace origami
