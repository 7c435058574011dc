#pragma once

// Orbit enumeration for a certified group: group elements by word length,
// limit-set point clouds, circle nesting, and CSV/PPM export.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "origami/builder.hpp"
#include "origami/error.hpp"
#include "origami/geometry.hpp"
#include "origami/moebius.hpp"
#include "origami/word.hpp"

namespace origami {

inline constexpr int kMaxOrbitDepth = 8;
inline constexpr std::size_t kDefaultElementCap = 5'000'000;
inline constexpr double kFarPoint = 1e8;
inline constexpr double kPointResolution = 1e-9;

/// Letter names used for enumerated words: A, B, T as generators 0, 1, 2.
inline const std::vector<std::string>& orbit_letter_names() {
  static const std::vector<std::string> names{"A", "B", "T"};
  return names;
}

struct GroupElement {
  Word word;  // over (A, B, T)
  MoebiusMap map;
  int length = 0;
};

namespace detail {

/// Projective dedupe keyed by Frobenius norm, which is sign invariant and
/// moves by at most 2 delta when every coefficient moves by delta. Maps are
/// identified within tol relative to their size.
class ProjectiveSet {
public:
  explicit ProjectiveSet(double tol) : tol_(tol) {}

  bool insert(const MoebiusMap& m) {
    const double key = norm(m);
    const double slack = 4.0 * tol_ * std::max(1.0, m.max_abs());
    for (auto it = keys_.lower_bound(key - slack); it != keys_.end() && it->first <= key + slack;
         ++it) {
      const auto& other = maps_[it->second];
      if (projective_distance(other, m) <= tol_ * std::max({1.0, m.max_abs(), other.max_abs()}))
        return false;
    }
    keys_.emplace(key, maps_.size());
    maps_.push_back(m);
    return true;
  }

private:
  static double norm(const MoebiusMap& m) {
    double s = 0.0;
    for (const auto& c : m.coefficients())
      s += std::norm(c);
    return std::sqrt(s);
  }

  double tol_;
  std::multimap<double, std::size_t> keys_;
  std::vector<MoebiusMap> maps_;
};

}  // namespace detail

/// All distinct elements given by reduced words of length <= depth in
/// A^{+-1}, B^{+-1}, T^{+-1}, breadth first and lexicographic within a length
/// (letter order A, A^-1, B, B^-1, T, T^-1). An element is listed once, under
/// its first word.
inline std::vector<GroupElement> enumerate_elements(const OrigamiSchottkyGroup& k, int depth,
                                                    std::size_t cap = kDefaultElementCap,
                                                    double tol = kDefaultTolerance) {
  require(depth >= 0, "depth must be non-negative");
  const std::array<MoebiusMap, 3> gens{k.A, k.B, k.T};
  std::array<std::pair<Letter, MoebiusMap>, 6> letters;
  for (int g = 0; g < 3; ++g) {
    letters[static_cast<std::size_t>(2 * g)] = {letter(g), gens[static_cast<std::size_t>(g)]};
    letters[static_cast<std::size_t>(2 * g + 1)] = {letter(g, true),
                                                    inverse(gens[static_cast<std::size_t>(g)])};
  }
  detail::ProjectiveSet seen(tol);
  std::vector<GroupElement> out{{Word{}, MoebiusMap::identity(), 0}};
  seen.insert(out.front().map);
  std::size_t level_begin = 0;
  for (int d = 1; d <= depth; ++d) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const auto& [x, m] : letters) {
        const auto& parent = out[i];
        if (!parent.word.empty() && parent.word.letters().back() == -x)
          continue;
        const MoebiusMap prod = parent.map * m;
        if (!seen.insert(prod))
          continue;
        if (out.size() >= cap)
          throw enumeration_overflow_error("element enumeration exceeded cap", out.size());
        out.push_back({parent.word * Word{x}, prod, d});
      }
    }
    level_begin = level_end;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Limit points

struct OrbitPoint {
  complex position;
  int word_length = 0;

  friend bool operator==(const OrbitPoint&, const OrbitPoint&) = default;
};

struct LimitPoints {
  std::vector<OrbitPoint> points;
  std::size_t dropped_far = 0;
  std::size_t degenerate = 0;
};

inline bool point_less(const OrbitPoint& p, const OrbitPoint& q) {
  if (p.position.real() != q.position.real())
    return p.position.real() < q.position.real();
  if (p.position.imag() != q.position.imag())
    return p.position.imag() < q.position.imag();
  return p.word_length < q.word_length;
}

namespace detail {

/// Sorts and drops points within `resolution` of an earlier kept point.
inline std::vector<OrbitPoint> dedupe_points(std::vector<OrbitPoint> pts, double resolution) {
  std::sort(pts.begin(), pts.end(), point_less);
  std::vector<OrbitPoint> kept;
  std::size_t window = 0;
  for (const auto& p : pts) {
    while (window < kept.size() &&
           kept[window].position.real() < p.position.real() - resolution)
      ++window;
    bool dup = false;
    for (std::size_t j = window; j < kept.size() && !dup; ++j)
      dup = std::abs(kept[j].position - p.position) <= resolution;
    if (!dup)
      kept.push_back(p);
  }
  return kept;
}

inline void add_circle_centers(const MoebiusMap& g, const std::array<Circle, 2>& bases, int length,
                               std::vector<OrbitPoint>& pts, LimitPoints& out) {
  for (const auto& c : bases) {
    Circle img;
    try {
      img = image_circle(g, c);
    } catch (const degenerate_circle_error&) {
      ++out.degenerate;
      continue;
    }
    if (std::abs(img.center) > kFarPoint) {
      ++out.dropped_far;
      continue;
    }
    pts.push_back({img.center, length});
  }
}

}  // namespace detail

/// Centers of the image circles g(C1), g(C2) over the elements g first
/// reached at word length exactly `depth`.
inline LimitPoints limit_points(const OrigamiSchottkyGroup& k, int depth,
                                std::size_t cap = kDefaultElementCap) {
  require(depth >= 1, "depth must be at least 1");
  require(depth <= kMaxOrbitDepth, "depth must be at most 8");
  const std::array<Circle, 2> bases{k.pairing.first, k.pairing.second};
  LimitPoints out;
  std::vector<OrbitPoint> pts;
  for (const auto& e : enumerate_elements(k, depth, cap))
    if (e.length == depth)
      detail::add_circle_centers(e.map, bases, depth, pts, out);
  out.points = detail::dedupe_points(std::move(pts), kPointResolution);
  return out;
}

/// Union of limit_points over lengths 1..depth, sharing one enumeration.
/// Points are deduplicated within each length and sorted by (re, im, length).
inline LimitPoints limit_points_through(const OrigamiSchottkyGroup& k, int depth,
                                        std::size_t cap = kDefaultElementCap) {
  require(depth >= 1, "depth must be at least 1");
  require(depth <= kMaxOrbitDepth, "depth must be at most 8");
  const std::array<Circle, 2> bases{k.pairing.first, k.pairing.second};
  const auto elements = enumerate_elements(k, depth, cap);
  LimitPoints out;
  for (int d = 1; d <= depth; ++d) {
    std::vector<OrbitPoint> pts;
    for (const auto& e : elements)
      if (e.length == d)
        detail::add_circle_centers(e.map, bases, d, pts, out);
    const auto kept = detail::dedupe_points(std::move(pts), kPointResolution);
    out.points.insert(out.points.end(), kept.begin(), kept.end());
  }
  std::sort(out.points.begin(), out.points.end(), point_less);
  return out;
}

/// Whether z lies in the closed union of the certificate's orbit discs,
/// each inflated by `slack` times max(1, radius).
inline bool in_certified_discs(const CombinationCertificate& cert, complex z,
                               double slack = kDefaultTolerance) {
  return std::any_of(cert.orbit.begin(), cert.orbit.end(), [&](const OrbitCircle& o) {
    return in_closed_interior(o.circle, z, slack * std::max(1.0, o.circle.radius));
  });
}

inline std::size_t count_outside(const OrigamiSchottkyGroup& k,
                                 const std::vector<OrbitPoint>& pts,
                                 double slack = kDefaultTolerance) {
  return static_cast<std::size_t>(std::count_if(pts.begin(), pts.end(), [&](const OrbitPoint& p) {
    return !in_certified_discs(k.certificate, p.position, slack);
  }));
}

// ---------------------------------------------------------------------------
// Nesting

struct NestingReport {
  double initial_max_radius = 0.0;
  std::vector<double> max_radius;      // entry d-1 is for depth d
  std::vector<std::size_t> count;      // circles kept at depth d
  std::vector<std::size_t> rejected;   // degenerate images at depth d
};

/// Nested circle system of the combination. Every orbit disc D = h(C2) is
/// the image of ext(C1) under P = h T, and every D = h(C1) the image of
/// ext(C2) under P = h T^-1. Depth-d circles are P_1 ... P_d (D) over
/// sequences where each map is applied only to circles lying in the
/// exterior it pairs. Each depth-d circle sits inside a depth-(d-1) disc.
inline NestingReport nesting_report(const OrigamiSchottkyGroup& k, int depth,
                                    std::size_t cap = kDefaultElementCap,
                                    double tol = kDefaultTolerance) {
  require(depth >= 1, "depth must be at least 1");
  require(depth <= kMaxOrbitDepth, "depth must be at most 8");
  const auto& orbit = k.certificate.orbit;
  const std::size_t m = orbit.size();
  const Circle& c1 = k.pairing.first;
  const Circle& c2 = k.pairing.second;
  std::size_t c1_index = m, c2_index = m;
  for (std::size_t i = 0; i < m; ++i) {
    if (same_circle(orbit[i].circle, c1, tol))
      c1_index = i;
    if (same_circle(orbit[i].circle, c2, tol))
      c2_index = i;
  }
  if (c1_index == m || c2_index == m)
    throw computation_error("paired circles missing from the certificate orbit");

  std::vector<MoebiusMap> pairing(m);
  std::vector<std::size_t> excluded(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& h = k.finite_elements.at(orbit[i].element);
    if (orbit[i].base == 1) {
      pairing[i] = h * k.T;
      excluded[i] = c1_index;
    } else {
      pairing[i] = h * inverse(k.T);
      excluded[i] = c2_index;
    }
  }

  struct Node {
    Circle circle;
    std::size_t lead;  // orbit disc containing the circle
  };
  std::vector<Node> level;
  NestingReport rep;
  for (std::size_t i = 0; i < m; ++i) {
    level.push_back({orbit[i].circle, i});
    rep.initial_max_radius = std::max(rep.initial_max_radius, orbit[i].circle.radius);
  }
  for (int d = 1; d <= depth; ++d) {
    std::vector<Node> next;
    std::size_t rejected = 0;
    double max_r = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      for (const auto& node : level) {
        if (node.lead == excluded[i])
          continue;
        Circle img;
        try {
          img = image_circle(pairing[i], node.circle);
        } catch (const degenerate_circle_error&) {
          ++rejected;
          continue;
        }
        if (next.size() >= cap)
          throw enumeration_overflow_error("nesting circle count exceeded cap", next.size());
        max_r = std::max(max_r, img.radius);
        next.push_back({img, i});
      }
    rep.max_radius.push_back(max_r);
    rep.count.push_back(next.size());
    rep.rejected.push_back(rejected);
    level = std::move(next);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Export

inline std::string points_csv(const std::vector<OrbitPoint>& pts) {
  std::string out = "re,im,depth\n";
  char buf[96];
  for (const auto& p : pts) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d\n", p.position.real(), p.position.imag(),
                  p.word_length);
    out += buf;
  }
  return out;
}

struct RenderOptions {
  int width = 512;
  int height = 512;
  double xmin = -2.0, xmax = 2.0, ymin = -2.0, ymax = 2.0;
};

/// Plain (P3) image, white background, each point a 3x3 black splat.
inline std::string render_ppm(const std::vector<OrbitPoint>& pts, const RenderOptions& opt) {
  require(opt.width >= 1 && opt.height >= 1, "image size must be positive");
  require(opt.width <= 16384 && opt.height <= 16384, "image size must be at most 16384");
  require(opt.xmax > opt.xmin && opt.ymax > opt.ymin, "bounding box is empty");
  const auto w = static_cast<std::size_t>(opt.width);
  const auto h = static_cast<std::size_t>(opt.height);
  std::vector<unsigned char> pix(w * h, 255);
  for (const auto& p : pts) {
    const double fx = (p.position.real() - opt.xmin) / (opt.xmax - opt.xmin) * opt.width;
    const double fy = (opt.ymax - p.position.imag()) / (opt.ymax - opt.ymin) * opt.height;
    if (!(fx >= -1.0 && fx < opt.width + 1.0 && fy >= -1.0 && fy < opt.height + 1.0))
      continue;
    const long cx = static_cast<long>(std::floor(fx));
    const long cy = static_cast<long>(std::floor(fy));
    for (long y = cy - 1; y <= cy + 1; ++y)
      for (long x = cx - 1; x <= cx + 1; ++x)
        if (x >= 0 && y >= 0 && x < opt.width && y < opt.height)
          pix[static_cast<std::size_t>(y) * w + static_cast<std::size_t>(x)] = 0;
  }
  std::string out = "P3\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const std::string v = std::to_string(pix[y * w + x]);
      out += (x ? " " : "") + v + " " + v + " " + v;
    }
    out += '\n';
  }
  return out;
}

}  // namespace origami
