#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "vec.hpp"

namespace polycalc {

// Convex polytope in dual representation: vertex list plus irredundant facet
// halfspaces.  Both lists are kept canonically ordered so that equal bodies
// built through different code paths compare equal.
//
// Lower-dimensional hulls (segments, flat polygons in 3D) are representable:
// full_dim is false, the facet list is empty and the vertices hold the
// boundary cycle of the flat hull.  Only support/hausdorff/subset/volume
// accept such bodies.
struct Polytope {
  int dim = 2;             // ambient dimension, 2 or 3
  int intrinsic_dim = 0;   // affine dimension of the body
  bool full_dim = false;
  std::vector<Vec> vertices;
  std::vector<HalfSpace> facets;                 // unit outer normals, offsets = support values
  std::vector<std::vector<int>> facet_vertices;  // per facet: incident vertex cycle (CCW from outside)

  bool empty() const { return vertices.empty(); }
};

// h_P(u) = max_{x in P} <x,u>; positively homogeneous of degree 1 in u.
inline double support(const Polytope& P, const Vec& u) {
  if (norm(u) < eps_geom()) throw ZeroDirection();
  if (P.vertices.empty()) throw EmptyInput("support of an empty body");
  if (u.dim != P.dim) throw DimensionMismatch();
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec& v : P.vertices) best = std::max(best, dot(v, u));
  return best;
}

// U(P): the irredundant facet normal set.  Determines P by re-intersection.
inline std::vector<Direction> facet_normals(const Polytope& P) {
  if (!P.full_dim) throw LowerDimensional("facet normals of a lower-dimensional body");
  std::vector<Direction> out;
  out.reserve(P.facets.size());
  for (const HalfSpace& h : P.facets) out.push_back(h.normal);
  return out;
}

inline double diameter(const Polytope& P) {
  double d = 0.0;
  for (size_t i = 0; i < P.vertices.size(); ++i)
    for (size_t j = i + 1; j < P.vertices.size(); ++j)
      d = std::max(d, dist(P.vertices[i], P.vertices[j]));
  return d;
}

namespace detail {

// Signed doubled area of the CCW vertex cycle, evaluated about vertices[0] so
// that tiny bodies far from the origin keep full relative precision.
inline double polygon_area2(const std::vector<Vec>& cycle) {
  if (cycle.size() < 3) return 0.0;
  const Vec& o = cycle[0];
  double s = 0.0;
  for (size_t i = 1; i + 1 < cycle.size(); ++i)
    s += cross2(cycle[i] - o, cycle[i + 1] - o);
  return s;
}

// Area of a flat polygon cycle embedded in 3D.
inline double polygon_area_3d(const std::vector<Vec>& cycle) {
  if (cycle.size() < 3) return 0.0;
  const Vec& o = cycle[0];
  Vec s = Vec::with(3, 0, 0, 0);
  for (size_t i = 1; i + 1 < cycle.size(); ++i)
    s += cross(cycle[i] - o, cycle[i + 1] - o);
  return 0.5 * norm(s);
}

inline double point_segment_dist(const Vec& p, const Vec& a, const Vec& b) {
  Vec ab = b - a;
  double len2 = norm2(ab);
  if (len2 == 0.0) return dist(p, a);
  double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return dist(p, a + ab * t);
}

// Distance from p to the (flat) polygon given by an ordered cycle with plane
// normal u.  Falls back to segment/point distance for short cycles.
inline double point_polygon_dist(const Vec& p, const std::vector<Vec>& cycle, const Vec& u) {
  if (cycle.size() == 1) return dist(p, cycle[0]);
  if (cycle.size() == 2) return point_segment_dist(p, cycle[0], cycle[1]);
  double plane_off = dot(p - cycle[0], u);
  Vec q = p - u * plane_off;
  bool inside = true;
  for (size_t i = 0; i < cycle.size() && inside; ++i) {
    const Vec& a = cycle[i];
    const Vec& b = cycle[(i + 1) % cycle.size()];
    Vec out_n = cross(b - a, u);  // in-plane outward normal for a CCW cycle
    if (dot(q - a, out_n) > 0.0) inside = false;
  }
  if (inside) return std::fabs(plane_off);
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < cycle.size(); ++i)
    best = std::min(best, point_segment_dist(p, cycle[i], cycle[(i + 1) % cycle.size()]));
  return best;
}

inline Vec flat_plane_normal(const std::vector<Vec>& cycle) {
  const Vec& o = cycle[0];
  for (size_t i = 1; i + 1 < cycle.size(); ++i) {
    Vec n = cross(cycle[i] - o, cycle[i + 1] - o);
    if (norm(n) > 1e-14) return unit(n);
  }
  return Vec::with(3, 0, 0, 1);
}

}  // namespace detail

// n-dimensional volume; 0 for lower-dimensional bodies.
inline double volume(const Polytope& P) {
  if (P.vertices.empty()) throw EmptyInput("volume of an empty body");
  if (!P.full_dim) return 0.0;
  if (P.dim == 2) return 0.5 * detail::polygon_area2(P.vertices);
  // 3D: fan of tetrahedra from vertices[0] over every facet cycle; facets
  // through the apex contribute zero.
  const Vec& o = P.vertices[0];
  double six_vol = 0.0;
  for (const auto& cyc : P.facet_vertices) {
    const Vec a = P.vertices[static_cast<size_t>(cyc[0])] - o;
    for (size_t i = 1; i + 1 < cyc.size(); ++i) {
      const Vec b = P.vertices[static_cast<size_t>(cyc[i])] - o;
      const Vec c = P.vertices[static_cast<size_t>(cyc[i + 1])] - o;
      six_vol += dot(cross(a, b), c);
    }
  }
  return six_vol / 6.0;
}

inline Vec centroid(const Polytope& P) {
  if (P.vertices.empty()) throw EmptyInput("centroid of an empty body");
  if (!P.full_dim) {
    Vec s = Vec::zero(P.dim);
    for (const Vec& v : P.vertices) s += v;
    return s * (1.0 / static_cast<double>(P.vertices.size()));
  }
  if (P.dim == 2) {
    const Vec& o = P.vertices[0];
    double a2 = 0.0;
    Vec acc = Vec::zero(2);
    for (size_t i = 1; i + 1 < P.vertices.size(); ++i) {
      Vec p = P.vertices[i] - o, q = P.vertices[i + 1] - o;
      double w = cross2(p, q);
      a2 += w;
      acc += (p + q) * (w / 3.0);
    }
    return o + acc * (1.0 / a2);
  }
  const Vec& o = P.vertices[0];
  double vol6 = 0.0;
  Vec acc = Vec::zero(3);
  for (const auto& cyc : P.facet_vertices) {
    const Vec a = P.vertices[static_cast<size_t>(cyc[0])] - o;
    for (size_t i = 1; i + 1 < cyc.size(); ++i) {
      const Vec b = P.vertices[static_cast<size_t>(cyc[i])] - o;
      const Vec c = P.vertices[static_cast<size_t>(cyc[i + 1])] - o;
      double w = dot(cross(a, b), c);
      vol6 += w;
      acc += (a + b + c) * (w / 4.0);
    }
  }
  return o + acc * (1.0 / vol6);
}

// Perimeter in 2D, total facet area in 3D.
inline double classical_surface(const Polytope& P) {
  if (!P.full_dim) throw LowerDimensional("surface area of a lower-dimensional body");
  if (P.dim == 2) {
    double s = 0.0;
    for (size_t i = 0; i < P.vertices.size(); ++i)
      s += dist(P.vertices[i], P.vertices[(i + 1) % P.vertices.size()]);
    return s;
  }
  double s = 0.0;
  for (const auto& cyc : P.facet_vertices) {
    std::vector<Vec> poly;
    poly.reserve(cyc.size());
    for (int id : cyc) poly.push_back(P.vertices[static_cast<size_t>(id)]);
    s += detail::polygon_area_3d(poly);
  }
  return s;
}

// Euclidean distance from a point to the body (0 inside).
inline double distance_to(const Polytope& P, const Vec& p) {
  if (P.vertices.empty()) throw EmptyInput("distance to an empty body");
  if (p.dim != P.dim) throw DimensionMismatch();
  if (P.vertices.size() == 1) return dist(p, P.vertices[0]);
  if (P.intrinsic_dim == 1) return detail::point_segment_dist(p, P.vertices.front(), P.vertices.back());
  if (P.dim == 2) {
    bool inside = P.full_dim;
    for (const HalfSpace& h : P.facets)
      if (h.violation(p) > 0.0) { inside = false; break; }
    if (inside) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < P.vertices.size(); ++i)
      best = std::min(best, detail::point_segment_dist(p, P.vertices[i], P.vertices[(i + 1) % P.vertices.size()]));
    return best;
  }
  if (!P.full_dim) {
    // flat polygon in 3D
    return detail::point_polygon_dist(p, P.vertices, detail::flat_plane_normal(P.vertices));
  }
  bool inside = true;
  for (const HalfSpace& h : P.facets)
    if (h.violation(p) > 0.0) { inside = false; break; }
  if (inside) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  std::vector<Vec> poly;
  for (size_t f = 0; f < P.facets.size(); ++f) {
    poly.clear();
    for (int id : P.facet_vertices[f]) poly.push_back(P.vertices[static_cast<size_t>(id)]);
    best = std::min(best, detail::point_polygon_dist(p, poly, P.facets[f].normal.vec()));
  }
  return best;
}

// Hausdorff distance between convex polytopes: for convex bodies the maximum
// boundary deviation is attained at vertices.
inline double hausdorff(const Polytope& P, const Polytope& Q) {
  if (P.dim != Q.dim) throw DimensionMismatch();
  double d = 0.0;
  for (const Vec& v : P.vertices) d = std::max(d, distance_to(Q, v));
  for (const Vec& v : Q.vertices) d = std::max(d, distance_to(P, v));
  return d;
}

// P subset of Q within tol: every vertex of P satisfies Q's facet
// inequalities (or lies within tol of Q when Q is lower-dimensional).
inline bool subset(const Polytope& P, const Polytope& Q, double tol) {
  if (P.dim != Q.dim) throw DimensionMismatch();
  if (Q.full_dim) {
    for (const Vec& v : P.vertices)
      for (const HalfSpace& h : Q.facets)
        if (h.violation(v) > tol) return false;
    return true;
  }
  for (const Vec& v : P.vertices)
    if (distance_to(Q, v) > tol) return false;
  return true;
}

// Largest constraint violation of P's vertices against Q's facets; negative
// margin means strict containment.
inline double max_violation(const Polytope& P, const Polytope& Q) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const Vec& v : P.vertices)
    for (const HalfSpace& h : Q.facets)
      worst = std::max(worst, h.violation(v));
  return worst;
}

inline bool bodies_equal(const Polytope& P, const Polytope& Q, double tol) {
  if (P.dim != Q.dim) return false;
  return hausdorff(P, Q) <= tol;
}

struct HomothetyWitness {
  double scale = 1.0;  // > 0
  Vec translation;
};

// Applies x -> scale*x + translation to every vertex (scale > 0).
Polytope homothet(const Polytope& P, double scale, const Vec& translation);

// Tests whether Q = alpha*P + x0 for some alpha > 0.  The scale candidate
// comes from the volume ratio, the translation from the centroid difference;
// the witness is confirmed by a Hausdorff test at eps_geom scaled by the body
// diameter.
inline std::optional<HomothetyWitness> detect_homothety(const Polytope& P, const Polytope& Q) {
  if (P.dim != Q.dim) throw DimensionMismatch();
  if (!P.full_dim || !Q.full_dim) throw LowerDimensional("homothety detection needs full-dimensional bodies");
  if (P.facets.size() != Q.facets.size()) return std::nullopt;
  const double ang_tol = 1e-7;  // normals of homothets agree to fp accuracy
  for (const HalfSpace& h : P.facets) {
    bool found = false;
    for (const HalfSpace& g : Q.facets)
      if (same_direction(h.normal.vec(), g.normal.vec(), ang_tol)) { found = true; break; }
    if (!found) return std::nullopt;
  }
  double alpha = std::pow(volume(Q) / volume(P), 1.0 / P.dim);
  Vec x0 = centroid(Q) - centroid(P) * alpha;
  const double tol = eps_geom() * std::max(1.0, diameter(Q));
  for (const HalfSpace& g : Q.facets) {
    double lhs = g.offset;
    double rhs = alpha * support(P, g.normal.vec()) + dot(x0, g.normal.vec());
    if (std::fabs(lhs - rhs) > tol) return std::nullopt;
  }
  if (hausdorff(homothet(P, alpha, x0), Q) > tol) return std::nullopt;
  HomothetyWitness w;
  w.scale = alpha;
  w.translation = x0;
  return w;
}

inline Polytope translate(const Polytope& P, const Vec& t) {
  Polytope R = P;
  for (Vec& v : R.vertices) v += t;
  for (HalfSpace& h : R.facets) h.offset += dot(t, h.normal.vec());
  return R;
}

inline Polytope homothet(const Polytope& P, double scale, const Vec& translation) {
  if (!(scale > 0.0)) throw BadParams("homothety scale must be positive");
  Polytope R = P;
  for (Vec& v : R.vertices) v = v * scale + translation;
  for (HalfSpace& h : R.facets) h.offset = scale * h.offset + dot(translation, h.normal.vec());
  return R;
}

inline Polytope scale_body(const Polytope& P, double s) { return homothet(P, s, Vec::zero(P.dim)); }

}  // namespace polycalc
