#ifndef HIDESEEK_GEOMETRY_HPP_
#define HIDESEEK_GEOMETRY_HPP_

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "hideseek/errors.hpp"

namespace hideseek {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;
using Point = Point2<double>;

/// Vertices closer than this (region-side units) are merged after clipping.
inline constexpr double kVertexTolerance = 1e-9;

/// 2D cross product of a and b.
template <typename Scalar>
Scalar cross(const Point2<Scalar>& a, const Point2<Scalar>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

template <typename Scalar>
Point2<Scalar> perp(const Point2<Scalar>& v) {
  return Point2<Scalar>(-v.y(), v.x());
}

/// Closed half-plane {z : normal . (z - anchor) >= 0}.
template <typename Scalar>
struct HalfPlane {
  Point2<Scalar> anchor = Point2<Scalar>::Zero();
  Point2<Scalar> normal = Point2<Scalar>::UnitX();

  HalfPlane() = default;
  /// `normal` is normalized here; it must be nonzero.
  HalfPlane(const Point2<Scalar>& anchor_, const Point2<Scalar>& normal_)
      : anchor(anchor_), normal(normal_) {
    const Scalar n = normal.norm();
    if (!(n > Scalar(0)) || !std::isfinite(static_cast<double>(n)))
      throw InvalidArgument("half-plane normal must be a finite nonzero vector");
    normal /= n;
  }

  Scalar signed_distance(const Point2<Scalar>& z) const { return normal.dot(z - anchor); }
  bool contains(const Point2<Scalar>& z, Scalar tol = Scalar(0)) const {
    return signed_distance(z) >= -tol;
  }
  HalfPlane flipped() const { return HalfPlane(anchor, -normal); }
};

/// Convex polygon with counterclockwise vertices. The empty region has no
/// vertices; a region with fewer than three vertices has zero area.
template <typename Scalar>
class ConvexRegion {
 public:
  using PointType = Point2<Scalar>;

  ConvexRegion() = default;

  /// Accepts either orientation; near-duplicate consecutive vertices are
  /// merged. Throws InvalidArgument if the polygon is not convex.
  explicit ConvexRegion(std::vector<PointType> vertices)
      : vertices_(std::move(vertices)) {
    dedupe();
    if (signed_area() < Scalar(0)) std::reverse(vertices_.begin(), vertices_.end());
    if (!is_convex()) throw InvalidArgument("vertex list is not a convex polygon");
  }

  static ConvexRegion rectangle(const PointType& lo, const PointType& hi) {
    return ConvexRegion(std::vector<PointType>{
        lo, PointType(hi.x(), lo.y()), hi, PointType(lo.x(), hi.y())});
  }
  static ConvexRegion square(Scalar side) {
    return rectangle(PointType::Zero(), PointType(side, side));
  }

  const std::vector<PointType>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const PointType& operator[](std::size_t i) const { return vertices_[i]; }

  Scalar signed_area() const {
    const std::size_t n = vertices_.size();
    if (n < 3) return Scalar(0);
    Scalar twice = 0;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) twice += cross(vertices_[j], vertices_[i]);
    return twice / Scalar(2);
  }

  bool is_convex() const {
    const std::size_t n = vertices_.size();
    if (n < 3) return true;
    for (std::size_t i = 0; i < n; ++i) {
      const PointType& a = vertices_[i];
      const PointType& b = vertices_[(i + 1) % n];
      const PointType& c = vertices_[(i + 2) % n];
      const Scalar turn = cross<Scalar>(b - a, c - b);
      const Scalar scale = (b - a).norm() * (c - b).norm();
      if (turn < -Scalar(1e-12) * scale) return false;
    }
    return true;
  }

 private:
  struct Trusted {};
  ConvexRegion(std::vector<PointType> vertices, Trusted) : vertices_(std::move(vertices)) {
    dedupe();
  }

  void dedupe() {
    std::vector<PointType> out;
    out.reserve(vertices_.size());
    for (const PointType& v : vertices_) {
      if (out.empty() || (v - out.back()).norm() > Scalar(kVertexTolerance)) out.push_back(v);
    }
    while (out.size() > 1 && (out.front() - out.back()).norm() <= Scalar(kVertexTolerance))
      out.pop_back();
    vertices_ = std::move(out);
  }

  std::vector<PointType> vertices_;

  template <typename S>
  friend ConvexRegion<S> clip(const ConvexRegion<S>&, const HalfPlane<S>&);
  template <typename S>
  friend ConvexRegion<S> convex_hull(std::vector<Point2<S>>);
};

template <typename Scalar>
Scalar area(const ConvexRegion<Scalar>& r) {
  return std::max(Scalar(0), r.signed_area());
}

/// Center of mass by triangle-fan decomposition from vertex 0.
template <typename Scalar>
Point2<Scalar> centroid(const ConvexRegion<Scalar>& r) {
  const auto& v = r.vertices();
  Scalar total = 0;
  Point2<Scalar> weighted = Point2<Scalar>::Zero();
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const Scalar a = cross<Scalar>(v[i] - v[0], v[i + 1] - v[0]) / Scalar(2);
    weighted += a * (v[0] + v[i] + v[i + 1]) / Scalar(3);
    total += a;
  }
  if (!(total > Scalar(0))) throw DegenerateRegion("centroid of a region with zero area");
  return weighted / total;
}

/// Intersection of a convex region with a closed half-plane (Sutherland-Hodgman
/// against one edge). Vertices within `tol` of the cut line count as inside,
/// which keeps clipping idempotent.
template <typename Scalar>
ConvexRegion<Scalar> clip(const ConvexRegion<Scalar>& r, const HalfPlane<Scalar>& h) {
  using P = Point2<Scalar>;
  const auto& v = r.vertices();
  const std::size_t n = v.size();
  if (n == 0) return r;
  const Scalar tol = Scalar(kVertexTolerance) * Scalar(1e-3);

  std::vector<Scalar> d(n);
  bool all_in = true;
  bool all_out = true;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = h.signed_distance(v[i]);
    all_in = all_in && d[i] >= -tol;
    all_out = all_out && d[i] < tol;
  }
  if (all_in) return r;
  if (all_out) return {};

  std::vector<P> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (d[i] >= -tol) out.push_back(v[i]);
    // Emit a cut point only when the edge strictly crosses the line.
    if ((d[i] > tol && d[j] < -tol) || (d[i] < -tol && d[j] > tol)) {
      const Scalar t = d[i] / (d[i] - d[j]);
      out.push_back(v[i] + t * (v[j] - v[i]));
    }
  }
  ConvexRegion<Scalar> result(std::move(out), typename ConvexRegion<Scalar>::Trusted{});
  if (result.size() < 3) return {};
  return result;
}

template <typename Scalar>
ConvexRegion<Scalar> clip(const ConvexRegion<Scalar>& r, const std::vector<HalfPlane<Scalar>>& hs) {
  ConvexRegion<Scalar> out = r;
  for (const auto& h : hs) out = clip(out, h);
  return out;
}

/// Point membership with slack `tol` (negative tol demands strict interior).
template <typename Scalar>
bool contains(const ConvexRegion<Scalar>& r, const Point2<Scalar>& z, Scalar tol = Scalar(0)) {
  const auto& v = r.vertices();
  const std::size_t n = v.size();
  if (n < 3) return false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2<Scalar> edge = v[i] - v[j];
    const Scalar len = edge.norm();
    if (cross<Scalar>(edge, z - v[j]) / len < -tol) return false;
  }
  return true;
}

/// Andrew's monotone chain; collinear points are dropped.
template <typename Scalar>
ConvexRegion<Scalar> convex_hull(std::vector<Point2<Scalar>> pts) {
  using P = Point2<Scalar>;
  std::sort(pts.begin(), pts.end(), [](const P& a, const P& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  if (pts.size() < 3) return ConvexRegion<Scalar>(std::move(pts), typename ConvexRegion<Scalar>::Trusted{});
  std::vector<P> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross<Scalar>(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross<Scalar>(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return ConvexRegion<Scalar>(std::move(hull), typename ConvexRegion<Scalar>::Trusted{});
}

template <typename Scalar>
Scalar diameter(const ConvexRegion<Scalar>& r) {
  Scalar best = 0;
  const auto& v = r.vertices();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) best = std::max(best, (v[i] - v[j]).norm());
  return best;
}

/// Rectangle with `axis` along the longer side: halfwidth >= halfheight.
template <typename Scalar>
struct OrientedRectangle {
  Point2<Scalar> center = Point2<Scalar>::Zero();
  Point2<Scalar> axis = Point2<Scalar>::UnitX();
  Scalar halfwidth = 0;
  Scalar halfheight = 0;

  Scalar area() const { return Scalar(4) * halfwidth * halfheight; }
  Scalar long_side() const { return Scalar(2) * halfwidth; }
  Scalar short_side() const { return Scalar(2) * halfheight; }

  /// Coordinates of z in the rectangle frame, measured from the corner
  /// (center - halfwidth*axis - halfheight*perp(axis)).
  Point2<Scalar> local(const Point2<Scalar>& z) const {
    const Point2<Scalar> d = z - center;
    return Point2<Scalar>(axis.dot(d) + halfwidth, perp(axis).dot(d) + halfheight);
  }

  std::vector<Point2<Scalar>> corners() const {
    const Point2<Scalar> u = halfwidth * axis;
    const Point2<Scalar> w = halfheight * perp(axis);
    return {center - u - w, center + u - w, center + u + w, center - u + w};
  }
};

/// Minimum-area enclosing rectangle. Tests the rectangle flush with every
/// edge; O(n^2) but n stays small here.
template <typename Scalar>
OrientedRectangle<Scalar> min_enclosing_rectangle(const ConvexRegion<Scalar>& r) {
  if (!(area(r) > Scalar(0))) throw DegenerateRegion("enclosing rectangle of a region with zero area");
  const auto& v = r.vertices();
  const std::size_t n = v.size();
  OrientedRectangle<Scalar> best;
  Scalar best_area = std::numeric_limits<Scalar>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2<Scalar> u = (v[(i + 1) % n] - v[i]).normalized();
    const Point2<Scalar> w = perp(u);
    Scalar umin = std::numeric_limits<Scalar>::infinity(), umax = -umin;
    Scalar wmin = umin, wmax = -umin;
    for (const auto& p : v) {
      const Scalar a = u.dot(p), b = w.dot(p);
      umin = std::min(umin, a);
      umax = std::max(umax, a);
      wmin = std::min(wmin, b);
      wmax = std::max(wmax, b);
    }
    const Scalar rect_area = (umax - umin) * (wmax - wmin);
    if (rect_area < best_area) {
      best_area = rect_area;
      best.center = u * (umin + umax) / Scalar(2) + w * (wmin + wmax) / Scalar(2);
      best.axis = u;
      best.halfwidth = (umax - umin) / Scalar(2);
      best.halfheight = (wmax - wmin) / Scalar(2);
    }
  }
  if (best.halfwidth < best.halfheight) {
    std::swap(best.halfwidth, best.halfheight);
    best.axis = perp(best.axis);
  }
  return best;
}

using HalfPlaned = HalfPlane<double>;
using ConvexRegiond = ConvexRegion<double>;
using OrientedRectangled = OrientedRectangle<double>;

}  // namespace hideseek

#endif  // HIDESEEK_GEOMETRY_HPP_
