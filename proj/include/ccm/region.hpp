#ifndef CCM_REGION_HPP
#define CCM_REGION_HPP

// 2-D rate regions in the nonnegative (R1, R2) quadrant, stored as halfspace
// lists c1*R1 + c2*R2 <= bound. Vertices are derived on demand by clipping a
// large quadrant box against every halfspace; all geometric queries (frontier,
// hull of a union, containment, additive gap, multiplicative factor) reduce to
// vertex/halfspace tests on convex polygons.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccm {

struct RatePoint {
  double r1 = 0.0;
  double r2 = 0.0;
};

// c1*R1 + c2*R2 <= bound, (c1, c2) != (0, 0).
struct Halfspace {
  double c1 = 0.0;
  double c2 = 0.0;
  double bound = 0.0;
};

namespace detail {

inline constexpr double kClipBox = 1e6;     // generous cap on any rate in bits
inline constexpr double kGeomEps = 1e-12;

using Polygon = std::vector<RatePoint>;

// Sutherland-Hodgman clip of a convex polygon against c1*x + c2*y <= b.
inline Polygon clip(const Polygon& poly, double c1, double c2, double b) {
  Polygon out;
  const std::size_t n = poly.size();
  if (n == 0) return out;
  auto val = [&](const RatePoint& p) { return c1 * p.r1 + c2 * p.r2 - b; };
  for (std::size_t i = 0; i < n; ++i) {
    const RatePoint& cur = poly[i];
    const RatePoint& nxt = poly[(i + 1) % n];
    const double vc = val(cur);
    const double vn = val(nxt);
    if (vc <= kGeomEps) out.push_back(cur);
    if ((vc > kGeomEps) != (vn > kGeomEps)) {
      const double t = vc / (vc - vn);
      out.push_back({cur.r1 + t * (nxt.r1 - cur.r1), cur.r2 + t * (nxt.r2 - cur.r2)});
    }
  }
  return out;
}

inline double cross(const RatePoint& o, const RatePoint& a, const RatePoint& b) {
  return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

// Monotone-chain convex hull, CCW orientation, collinear points dropped.
inline Polygon convex_hull(Polygon pts) {
  std::sort(pts.begin(), pts.end(), [](const RatePoint& a, const RatePoint& b) {
    return a.r1 < b.r1 || (a.r1 == b.r1 && a.r2 < b.r2);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const RatePoint& a, const RatePoint& b) {
                          return std::abs(a.r1 - b.r1) <= kGeomEps &&
                                 std::abs(a.r2 - b.r2) <= kGeomEps;
                        }),
            pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;
  Polygon hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= kGeomEps) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= kGeomEps) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

inline Polygon dedupe(Polygon poly) {
  Polygon out;
  for (const RatePoint& p : poly) {
    if (out.empty() || std::abs(p.r1 - out.back().r1) > kGeomEps ||
        std::abs(p.r2 - out.back().r2) > kGeomEps) {
      out.push_back(p);
    }
  }
  if (out.size() > 1 && std::abs(out.front().r1 - out.back().r1) <= kGeomEps &&
      std::abs(out.front().r2 - out.back().r2) <= kGeomEps) {
    out.pop_back();
  }
  return out;
}

}  // namespace detail

class RateRegion {
 public:
  RateRegion() = default;
  explicit RateRegion(std::vector<Halfspace> halfspaces)
      : halfspaces_(std::move(halfspaces)) {
    for (const Halfspace& h : halfspaces_) {
      if (h.c1 == 0.0 && h.c2 == 0.0) {
        throw std::invalid_argument("halfspace with zero normal");
      }
    }
  }

  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

  // True iff the recession cone of the region (within the quadrant) is {0}.
  bool bounded() const {
    std::vector<RatePoint> dirs = {{1.0, 0.0}, {0.0, 1.0}};
    for (const Halfspace& h : halfspaces_) {
      for (const RatePoint d : {RatePoint{h.c2, -h.c1}, RatePoint{-h.c2, h.c1}}) {
        if (d.r1 >= -detail::kGeomEps && d.r2 >= -detail::kGeomEps) {
          const double norm = std::hypot(d.r1, d.r2);
          if (norm > 0.0) {
            dirs.push_back({std::max(d.r1, 0.0) / norm, std::max(d.r2, 0.0) / norm});
          }
        }
      }
    }
    for (const RatePoint& d : dirs) {
      bool recession = true;
      for (const Halfspace& h : halfspaces_) {
        if (h.c1 * d.r1 + h.c2 * d.r2 > detail::kGeomEps) {
          recession = false;
          break;
        }
      }
      if (recession) return false;
    }
    return true;
  }

  // Vertices of the polygon, CCW. Requires a bounded region.
  std::vector<RatePoint> vertices() const {
    if (!bounded()) throw std::runtime_error("unbounded region");
    detail::Polygon poly = {{0.0, 0.0},
                            {detail::kClipBox, 0.0},
                            {detail::kClipBox, detail::kClipBox},
                            {0.0, detail::kClipBox}};
    for (const Halfspace& h : halfspaces_) {
      poly = detail::clip(poly, h.c1, h.c2, h.bound);
      if (poly.empty()) break;
    }
    poly = detail::dedupe(poly);
    if (poly.empty()) poly.push_back({0.0, 0.0});  // bounds may pin to the origin
    return poly;
  }

  double r1_max() const {
    double m = 0.0;
    for (const RatePoint& v : vertices()) m = std::max(m, v.r1);
    return m;
  }

  double r2_max() const {
    double m = 0.0;
    for (const RatePoint& v : vertices()) m = std::max(m, v.r2);
    return m;
  }

  // Largest feasible r2 at the given r1 (0 when every halfspace pins r2 away).
  double r2_at(double r1) const {
    double r2 = detail::kClipBox;
    for (const Halfspace& h : halfspaces_) {
      if (h.c2 > detail::kGeomEps) {
        r2 = std::min(r2, (h.bound - h.c1 * r1) / h.c2);
      }
    }
    return std::max(r2, 0.0);
  }

  bool feasible(const RatePoint& p, double tol) const {
    if (p.r1 < -tol || p.r2 < -tol) return false;
    for (const Halfspace& h : halfspaces_) {
      if (h.bound - (h.c1 * p.r1 + h.c2 * p.r2) < -tol) return false;
    }
    return true;
  }

 private:
  std::vector<Halfspace> halfspaces_;
};

// Pareto frontier sampled at `resolution` points, R1 swept from 0 to its max.
inline std::vector<RatePoint> frontier(const RateRegion& region, int resolution) {
  if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
  if (!region.bounded()) throw std::runtime_error("unbounded region");
  const double r1max = region.r1_max();
  std::vector<RatePoint> pts;
  pts.reserve(static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) {
    const double r1 = r1max * static_cast<double>(i) / (resolution - 1);
    pts.push_back({r1, region.r2_at(r1)});
  }
  return pts;
}

namespace detail {

// Rebuild a halfspace list from hull vertices. Edges whose outward normal
// points away from the positive quadrant coincide with the implicit axes and
// are dropped.
inline std::vector<Halfspace> halfspaces_from_hull(const Polygon& hull) {
  std::vector<Halfspace> hs;
  if (hull.size() < 3) {
    double xmax = 0.0, ymax = 0.0;
    for (const RatePoint& p : hull) {
      xmax = std::max(xmax, p.r1);
      ymax = std::max(ymax, p.r2);
    }
    hs.push_back({1.0, 0.0, xmax});
    hs.push_back({0.0, 1.0, ymax});
    return hs;
  }
  const std::size_t n = hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RatePoint& p = hull[i];
    const RatePoint& q = hull[(i + 1) % n];
    double c1 = q.r2 - p.r2;
    double c2 = -(q.r1 - p.r1);
    const double scale = std::max(std::abs(c1), std::abs(c2));
    if (scale <= kGeomEps) continue;
    c1 /= scale;
    c2 /= scale;
    if (c1 <= kGeomEps && c2 <= kGeomEps) continue;  // implicit axis edge
    hs.push_back({c1, c2, c1 * p.r1 + c2 * p.r2});
  }
  if (hs.empty()) {  // hull degenerate against the axes
    hs.push_back({1.0, 0.0, 0.0});
    hs.push_back({0.0, 1.0, 0.0});
  }
  return hs;
}

}  // namespace detail

// Convex hull of the union, re-expressed as halfspaces.
inline RateRegion union_hull(const std::vector<RateRegion>& regions) {
  if (regions.empty()) throw std::invalid_argument("union_hull of empty list");
  detail::Polygon pts;
  for (const RateRegion& r : regions) {
    const auto verts = r.vertices();
    pts.insert(pts.end(), verts.begin(), verts.end());
  }
  pts.push_back({0.0, 0.0});
  const detail::Polygon hull = detail::convex_hull(std::move(pts));
  return RateRegion(detail::halfspaces_from_hull(hull));
}

// True iff every vertex of `inner` satisfies every halfspace of `outer` with
// slack >= -tol.
inline bool contains(const RateRegion& outer, const RateRegion& inner, double tol) {
  for (const RatePoint& v : inner.vertices()) {
    for (const Halfspace& h : outer.halfspaces()) {
      if (h.bound - (h.c1 * v.r1 + h.c2 * v.r2) < -tol) return false;
    }
  }
  return true;
}

namespace detail {

// Translate a polygon by (-g, -g) and clip to the quadrant.
inline Polygon translate_clip(const Polygon& poly, double g) {
  Polygon shifted;
  shifted.reserve(poly.size());
  for (const RatePoint& p : poly) shifted.push_back({p.r1 - g, p.r2 - g});
  shifted = clip(shifted, -1.0, 0.0, 0.0);
  shifted = clip(shifted, 0.0, -1.0, 0.0);
  return shifted;
}

inline bool polygon_inside(const Polygon& poly, const RateRegion& region, double tol) {
  for (const RatePoint& p : poly) {
    if (!region.feasible(p, tol)) return false;
  }
  return true;
}

}  // namespace detail

// Smallest g >= 0 such that `outer` translated by (-g, -g) and clipped to the
// quadrant fits inside `inner`. Bisection to 1e-6 bits.
inline double max_gap(const RateRegion& outer, const RateRegion& inner) {
  constexpr double kTol = 1e-9;
  constexpr double kAccuracy = 1e-6;
  if (!contains(outer, inner, kTol)) throw std::runtime_error("inner exceeds outer");
  const detail::Polygon outer_poly = outer.vertices();
  auto fits = [&](double g) {
    return detail::polygon_inside(detail::translate_clip(outer_poly, g), inner, kTol);
  };
  if (fits(0.0)) return 0.0;
  double lo = 0.0;
  double hi = std::max(outer.r1_max(), outer.r2_max());
  while (hi - lo > kAccuracy) {
    const double mid = 0.5 * (lo + hi);
    (fits(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

// Smallest c >= 1 such that `outer` scaled by 1/c fits inside `inner`.
// Returns +infinity when `inner` is the origin but `outer` is not.
inline double max_ratio(const RateRegion& outer, const RateRegion& inner) {
  constexpr double kTol = 1e-9;
  constexpr double kAccuracy = 1e-6;
  if (!contains(outer, inner, kTol)) throw std::runtime_error("inner exceeds outer");
  if (inner.r1_max() <= kTol && inner.r2_max() <= kTol) {
    if (outer.r1_max() <= kTol && outer.r2_max() <= kTol) return 1.0;
    return std::numeric_limits<double>::infinity();
  }
  const detail::Polygon outer_poly = outer.vertices();
  auto fits = [&](double c) {
    for (const RatePoint& p : outer_poly) {
      if (!inner.feasible({p.r1 / c, p.r2 / c}, kTol)) return false;
    }
    return true;
  };
  if (fits(1.0)) return 1.0;
  double hi = 2.0;
  while (!fits(hi)) {
    hi *= 2.0;
    if (hi > 1e12) return std::numeric_limits<double>::infinity();
  }
  double lo = 1.0;
  while (hi - lo > kAccuracy) {
    const double mid = 0.5 * (lo + hi);
    (fits(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace ccm

#endif  // CCM_REGION_HPP
