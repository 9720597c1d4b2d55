#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "polytope.hpp"

// Construction internals: convex hulls in 2D/3D and the canonical assembly of
// a Polytope from a point set.  Turn predicates use locally scaled tolerances
// so that very small bodies (inner parallel bodies close to the inradius)
// keep their shape.

namespace polycalc::detail {

inline double coord_scale(const std::vector<Vec>& pts) {
  double s = 1.0;
  for (const Vec& p : pts)
    for (double x : p.c) s = std::max(s, std::fabs(x));
  return s;
}

// Tolerance dedup through a grid hash; Minkowski sums feed thousands of
// points through here.
inline std::vector<Vec> dedup_points(const std::vector<Vec>& pts, double tol) {
  std::vector<Vec> out;
  std::map<std::array<long long, 3>, std::vector<int>> buckets;
  auto key_of = [tol](const Vec& p) {
    return std::array<long long, 3>{static_cast<long long>(std::floor(p.c[0] / tol)),
                                    static_cast<long long>(std::floor(p.c[1] / tol)),
                                    static_cast<long long>(std::floor(p.c[2] / tol))};
  };
  for (const Vec& p : pts) {
    auto k = key_of(p);
    bool dup = false;
    for (long long dx = -1; dx <= 1 && !dup; ++dx)
      for (long long dy = -1; dy <= 1 && !dup; ++dy)
        for (long long dz = -1; dz <= 1 && !dup; ++dz) {
          auto it = buckets.find({k[0] + dx, k[1] + dy, k[2] + dz});
          if (it == buckets.end()) continue;
          for (int id : it->second)
            if (dist(p, out[static_cast<size_t>(id)]) <= tol) { dup = true; break; }
        }
    if (!dup) {
      buckets[k].push_back(static_cast<int>(out.size()));
      out.push_back(p);
    }
  }
  return out;
}

// ---------------------------------------------------------------- 2D hull

// Monotone chain; strictly convex turns only, so collinear mid-edge points
// are dropped.  Returns the CCW cycle (a pair for segments, one point for a
// degenerate cloud).
inline std::vector<Vec> hull_2d(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
  });
  const size_t n = pts.size();
  if (n <= 2) return pts;
  auto turn_ok = [](const Vec& o, const Vec& a, const Vec& b) {
    // keep b only if o->a->b is a strict left turn at local scale
    Vec u = a - o, v = b - o;
    return cross2(u, v) > 1e-12 * norm(u) * norm(v);
  };
  std::vector<Vec> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && !turn_ok(h[k - 2], h[k - 1], pts[i])) --k;
    h[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && !turn_ok(h[k - 2], h[k - 1], pts[i])) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// ---------------------------------------------------------------- 3D hull

struct Tri {
  int a, b, c;
  Vec n;       // unit outward normal
  double off;  // support value
};

struct PlaneRec {
  Vec n;
  double off;
};

inline bool tri_plane(const std::vector<Vec>& pts, int a, int b, int c, const Vec& interior, Tri& out) {
  Vec u = pts[size_t(b)] - pts[size_t(a)], v = pts[size_t(c)] - pts[size_t(a)];
  Vec n = cross(u, v);
  if (norm(n) < 1e-14 * norm(u) * norm(v)) return false;
  n = unit(n);
  double off = dot(pts[size_t(a)], n);
  if (dot(interior, n) > off) {
    n = -n;
    off = -off;
    std::swap(b, c);
  }
  out = Tri{a, b, c, n, off};
  return true;
}

// Incremental hull over a deduplicated point set of affine rank 3.  Only used
// to find the boundary point set and candidate facet planes; coplanar points
// are treated as invisible so they never spawn triangles of their own.
inline std::vector<Tri> incremental_hull_3d(const std::vector<Vec>& pts, int s0, int s1, int s2, int s3) {
  const double scale = coord_scale(pts);
  const double eps_vis = 1e-12 * scale;
  Vec interior = (pts[size_t(s0)] + pts[size_t(s1)] + pts[size_t(s2)] + pts[size_t(s3)]) * 0.25;

  std::vector<Tri> tris;
  Tri t;
  const int seed[4][3] = {{s0, s1, s2}, {s0, s1, s3}, {s0, s2, s3}, {s1, s2, s3}};
  for (auto& f : seed)
    if (tri_plane(pts, f[0], f[1], f[2], interior, t)) tris.push_back(t);

  std::vector<bool> used(pts.size(), false);
  used[size_t(s0)] = used[size_t(s1)] = used[size_t(s2)] = used[size_t(s3)] = true;

  for (size_t p = 0; p < pts.size(); ++p) {
    if (used[p]) continue;
    used[p] = true;
    std::vector<char> vis(tris.size(), 0);
    bool any = false;
    for (size_t i = 0; i < tris.size(); ++i) {
      if (dot(pts[p], tris[i].n) - tris[i].off > eps_vis) {
        vis[i] = 1;
        any = true;
      }
    }
    if (!any) continue;
    // horizon: directed edges of visible triangles whose neighbor is hidden
    std::map<std::pair<int, int>, char> edge_vis;
    for (size_t i = 0; i < tris.size(); ++i) {
      const Tri& tr = tris[i];
      const int e[3][2] = {{tr.a, tr.b}, {tr.b, tr.c}, {tr.c, tr.a}};
      for (auto& ed : e) edge_vis[{ed[0], ed[1]}] = vis[i];
    }
    std::vector<std::pair<int, int>> horizon;
    for (size_t i = 0; i < tris.size(); ++i) {
      if (!vis[i]) continue;
      const Tri& tr = tris[i];
      const int e[3][2] = {{tr.a, tr.b}, {tr.b, tr.c}, {tr.c, tr.a}};
      for (auto& ed : e) {
        auto rev = edge_vis.find({ed[1], ed[0]});
        if (rev == edge_vis.end() || !rev->second) horizon.push_back({ed[0], ed[1]});
      }
    }
    std::vector<Tri> next;
    for (size_t i = 0; i < tris.size(); ++i)
      if (!vis[i]) next.push_back(tris[i]);
    for (auto& ed : horizon)
      if (tri_plane(pts, ed.first, ed.second, static_cast<int>(p), interior, t)) next.push_back(t);
    tris = std::move(next);
  }
  return tris;
}

// Rank of a set of vectors with a relative independence threshold
// (Gram-Schmidt).
inline int rank_of(const std::vector<Vec>& vs, double rel_tol = 1e-9) {
  std::vector<Vec> basis;
  for (Vec v : vs) {
    double n0 = norm(v);
    if (n0 < 1e-14) continue;
    for (const Vec& b : basis) v = v - b * dot(v, b);
    if (norm(v) > rel_tol * n0) basis.push_back(unit(v));
    if (basis.size() == 3) break;
  }
  return static_cast<int>(basis.size());
}

// Orders the corners incident to a facet into a CCW cycle seen from outside.
inline std::vector<int> order_facet_cycle(const std::vector<Vec>& verts, const std::vector<int>& inc,
                                          const Vec& n) {
  Vec centroid = Vec::with(3, 0, 0, 0);
  for (int id : inc) centroid += verts[size_t(id)];
  centroid = centroid * (1.0 / static_cast<double>(inc.size()));
  Vec ref = verts[size_t(inc[0])] - centroid;
  ref = ref - n * dot(ref, n);
  if (norm(ref) < 1e-14) ref = cross(n, Vec::with(3, 1, 0, 0));
  if (norm(ref) < 1e-14) ref = cross(n, Vec::with(3, 0, 1, 0));
  Vec e1 = unit(ref);
  Vec e2 = cross(n, e1);
  std::vector<std::pair<double, int>> ang;
  ang.reserve(inc.size());
  for (int id : inc) {
    Vec d = verts[size_t(id)] - centroid;
    ang.push_back({std::atan2(dot(d, e2), dot(d, e1)), id});
  }
  std::sort(ang.begin(), ang.end());
  std::vector<int> cycle;
  cycle.reserve(ang.size());
  for (auto& a : ang) cycle.push_back(a.second);
  return cycle;
}

// Facet planes from the hull triangulation: planes are trusted only when they
// come from a fat triangle, sliver triangles inside a merged facet contribute
// nothing.  Offsets are tightened to the support value over the boundary set.
inline std::vector<PlaneRec> planes_from_triangles(const std::vector<Tri>& tris,
                                                   const std::vector<Vec>& pts,
                                                   const std::vector<Vec>& bpts, double scale) {
  std::vector<std::pair<double, size_t>> by_area;
  for (size_t i = 0; i < tris.size(); ++i) {
    Vec u = pts[size_t(tris[i].b)] - pts[size_t(tris[i].a)];
    Vec v = pts[size_t(tris[i].c)] - pts[size_t(tris[i].a)];
    double sine = norm(cross(u, v)) / std::max(1e-300, norm(u) * norm(v));
    if (sine < 1e-6) continue;
    by_area.push_back({-norm(cross(u, v)), i});
  }
  std::sort(by_area.begin(), by_area.end());
  std::vector<PlaneRec> planes;
  for (auto& [negarea, id] : by_area) {
    const Tri& tr = tris[id];
    bool dup = false;
    for (const PlaneRec& q : planes)
      if (same_direction(tr.n, q.n, 3e-9) && std::fabs(tr.off - q.off) <= 3e-9 * scale) {
        dup = true;
        break;
      }
    if (dup) continue;
    double off = -std::numeric_limits<double>::infinity();
    for (const Vec& p : bpts) off = std::max(off, dot(p, tr.n));
    planes.push_back({tr.n, off});
  }
  return planes;
}

// Fallback facet discovery: every well-conditioned triple of boundary points
// that supports the whole boundary set is a facet plane.
inline std::vector<PlaneRec> planes_from_triples(const std::vector<Vec>& bpts, double scale) {
  const double band = 1e-9 * scale;
  std::vector<PlaneRec> planes;
  const size_t nb = bpts.size();
  for (size_t i = 0; i < nb; ++i)
    for (size_t j = i + 1; j < nb; ++j)
      for (size_t k = j + 1; k < nb; ++k) {
        Vec u = bpts[j] - bpts[i], v = bpts[k] - bpts[i];
        Vec n = cross(u, v);
        if (norm(n) < 1e-9 * norm(u) * norm(v)) continue;
        n = unit(n);
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (const Vec& p : bpts) {
          double s = dot(p, n);
          lo = std::min(lo, s);
          hi = std::max(hi, s);
        }
        double ref = dot(bpts[i], n);
        PlaneRec pl;
        if (hi - ref <= band) pl = {n, hi};
        else if (ref - lo <= band) pl = {-n, -lo};
        else continue;
        bool dup = false;
        for (const PlaneRec& q : planes)
          if (same_direction(pl.n, q.n, 3e-9) && std::fabs(pl.off - q.off) <= 3e-9 * scale) {
            dup = true;
            break;
          }
        if (!dup) planes.push_back(pl);
      }
  return planes;
}

// Corners, facet cycles, canonical ordering and cross-validation for the 3D
// full-dimensional case.
inline Polytope finish_3d(const std::vector<Vec>& raw, const std::vector<Vec>& bpts,
                          const std::vector<PlaneRec>& planes, double scale) {
  if (planes.size() < 4) throw ConstructionError("3D hull found fewer than 4 facet planes");
  const double band = 1e-9 * scale;

  std::vector<Vec> corner;
  std::vector<std::vector<int>> active;
  for (const Vec& p : bpts) {
    std::vector<int> act;
    std::vector<Vec> ns;
    for (size_t f = 0; f < planes.size(); ++f)
      if (std::fabs(dot(p, planes[f].n) - planes[f].off) <= band) {
        act.push_back(static_cast<int>(f));
        ns.push_back(planes[f].n);
      }
    if (rank_of(ns) == 3) {
      corner.push_back(p);
      active.push_back(act);
    }
  }
  if (corner.size() < 4) throw ConstructionError("3D hull found fewer than 4 corners");

  std::vector<int> order(corner.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lex_less(corner[size_t(a)], corner[size_t(b)]); });
  std::vector<int> pos(corner.size());
  for (size_t i = 0; i < order.size(); ++i) pos[size_t(order[i])] = static_cast<int>(i);

  Polytope P;
  P.dim = 3;
  P.intrinsic_dim = 3;
  P.full_dim = true;
  P.vertices.resize(corner.size());
  for (size_t i = 0; i < corner.size(); ++i) P.vertices[size_t(pos[i])] = corner[i];

  struct FRec {
    Vec n;
    double off;
    std::vector<int> cyc;
  };
  std::vector<FRec> fr;
  for (size_t f = 0; f < planes.size(); ++f) {
    std::vector<int> inc;
    for (size_t i = 0; i < corner.size(); ++i)
      for (int a : active[i])
        if (a == static_cast<int>(f)) {
          inc.push_back(pos[i]);
          break;
        }
    if (inc.size() < 3) throw ConstructionError("facet with fewer than 3 incident vertices");
    fr.push_back({planes[f].n, planes[f].off, order_facet_cycle(P.vertices, inc, planes[f].n)});
  }
  std::sort(fr.begin(), fr.end(), [](const FRec& a, const FRec& b) { return lex_less(a.n, b.n); });
  for (auto& f : fr) {
    P.facets.emplace_back(f.n, f.off);
    P.facet_vertices.push_back(f.cyc);
  }

  // cross-validation: hull of the vertices equals the facet intersection
  for (const Vec& p : raw)
    for (const HalfSpace& h : P.facets)
      if (h.violation(p) > eps_geom() * scale)
        throw ConstructionError("input point escapes a facet halfspace");

  // closed-surface checks catch facets the plane discovery missed: the
  // area-weighted normals of a closed boundary sum to zero and V - E + F = 2.
  Vec closure = Vec::with(3, 0, 0, 0);
  double total_area = 0.0;
  std::set<std::pair<int, int>> edge_set;
  for (size_t f = 0; f < P.facets.size(); ++f) {
    const auto& cyc = P.facet_vertices[f];
    const Vec& o = P.vertices[static_cast<size_t>(cyc[0])];
    Vec sum = Vec::with(3, 0, 0, 0);
    for (size_t i = 1; i + 1 < cyc.size(); ++i)
      sum += cross(P.vertices[static_cast<size_t>(cyc[i])] - o,
                   P.vertices[static_cast<size_t>(cyc[i + 1])] - o);
    closure += sum * 0.5;
    total_area += 0.5 * norm(sum);
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      edge_set.insert({std::min(a, b), std::max(a, b)});
    }
  }
  if (norm(closure) > 1e-7 * std::max(total_area, 1e-300))
    throw ConstructionError("facet normals do not close up");
  long long euler = static_cast<long long>(P.vertices.size()) -
                    static_cast<long long>(edge_set.size()) + static_cast<long long>(P.facets.size());
  if (euler != 2) throw ConstructionError("Euler characteristic is not 2");
  return P;
}

// ------------------------------------------------------------- assembly

// Builds the canonical Polytope of the convex hull of `raw`.  Degenerate
// inputs produce full_dim=false bodies carrying their flat hull cycle.
inline Polytope assemble_from_points(int dim, const std::vector<Vec>& raw) {
  if (raw.empty()) throw EmptyInput("hull of an empty point set");
  for (const Vec& p : raw) {
    if (p.dim != dim) throw DimensionMismatch();
    if (!is_finite(p)) throw BadParams("non-finite coordinate");
  }
  const double scale = coord_scale(raw);
  std::vector<Vec> pts = dedup_points(raw, 1e-12 * scale);

  Polytope P;
  P.dim = dim;

  if (dim == 2) {
    std::vector<Vec> cyc = hull_2d(pts);
    size_t best = 0;
    for (size_t i = 1; i < cyc.size(); ++i)
      if (lex_less(cyc[i], cyc[best])) best = i;
    std::rotate(cyc.begin(), cyc.begin() + static_cast<long>(best), cyc.end());
    P.vertices = cyc;
    P.intrinsic_dim = cyc.size() == 1 ? 0 : (cyc.size() == 2 ? 1 : 2);
    P.full_dim = P.intrinsic_dim == 2;
    if (!P.full_dim) return P;
    const size_t m = cyc.size();
    struct FRec {
      Vec n;
      double off;
      std::vector<int> cyc;
    };
    std::vector<FRec> fr;
    for (size_t i = 0; i < m; ++i) {
      Vec e = cyc[(i + 1) % m] - cyc[i];
      Vec n = unit(Vec(e[1], -e[0]));
      double off = std::max(dot(cyc[i], n), dot(cyc[(i + 1) % m], n));
      fr.push_back({n, off, {static_cast<int>(i), static_cast<int>((i + 1) % m)}});
    }
    std::sort(fr.begin(), fr.end(), [](const FRec& a, const FRec& b) { return lex_less(a.n, b.n); });
    for (auto& f : fr) {
      P.facets.emplace_back(f.n, f.off);
      P.facet_vertices.push_back(f.cyc);
    }
    for (const Vec& p : raw)
      for (const HalfSpace& h : P.facets)
        if (h.violation(p) > eps_geom() * scale)
          throw ConstructionError("input point escapes a facet halfspace");
    return P;
  }

  // --- 3D: affine rank probe by farthest-point seeding ---
  int s0 = 0;
  for (size_t i = 1; i < pts.size(); ++i)
    if (lex_less(pts[i], pts[size_t(s0)])) s0 = static_cast<int>(i);
  int s1 = -1;
  double d1 = 0.0;
  for (size_t i = 0; i < pts.size(); ++i) {
    double d = dist(pts[i], pts[size_t(s0)]);
    if (d > d1) {
      d1 = d;
      s1 = static_cast<int>(i);
    }
  }
  if (s1 < 0 || d1 <= 1e-12 * scale) {
    P.vertices = {pts[size_t(s0)]};
    P.intrinsic_dim = 0;
    return P;
  }
  Vec axis_dir = unit(pts[size_t(s1)] - pts[size_t(s0)]);
  int s2 = -1;
  double d2 = 0.0;
  for (size_t i = 0; i < pts.size(); ++i) {
    Vec w = pts[i] - pts[size_t(s0)];
    double d = norm(w - axis_dir * dot(w, axis_dir));
    if (d > d2) {
      d2 = d;
      s2 = static_cast<int>(i);
    }
  }
  if (s2 < 0 || d2 <= 1e-10 * std::max(scale, d1)) {
    double lo = 0.0, hi = 0.0;
    int ilo = s0, ihi = s0;
    for (size_t i = 0; i < pts.size(); ++i) {
      double t = dot(pts[i] - pts[size_t(s0)], axis_dir);
      if (t < lo) {
        lo = t;
        ilo = static_cast<int>(i);
      }
      if (t > hi) {
        hi = t;
        ihi = static_cast<int>(i);
      }
    }
    P.vertices = {pts[size_t(ilo)], pts[size_t(ihi)]};
    P.intrinsic_dim = 1;
    return P;
  }
  Vec plane_n = unit(cross(axis_dir, pts[size_t(s2)] - pts[size_t(s0)]));
  int s3 = -1;
  double d3 = 0.0;
  for (size_t i = 0; i < pts.size(); ++i) {
    double d = std::fabs(dot(pts[i] - pts[size_t(s0)], plane_n));
    if (d > d3) {
      d3 = d;
      s3 = static_cast<int>(i);
    }
  }
  if (s3 < 0 || d3 <= 1e-10 * std::max(scale, d1)) {
    // flat polygon: 2D hull in the plane basis
    Vec e1 = axis_dir, e2 = cross(plane_n, e1);
    std::vector<Vec> flat;
    flat.reserve(pts.size());
    for (const Vec& p : pts) {
      Vec w = p - pts[size_t(s0)];
      flat.push_back(Vec(dot(w, e1), dot(w, e2)));
    }
    std::vector<Vec> cyc2 = hull_2d(flat);
    P.intrinsic_dim = cyc2.size() == 1 ? 0 : (cyc2.size() == 2 ? 1 : 2);
    for (const Vec& q : cyc2) P.vertices.push_back(pts[size_t(s0)] + e1 * q[0] + e2 * q[1]);
    return P;
  }

  std::vector<Tri> tris = incremental_hull_3d(pts, s0, s1, s2, s3);
  std::set<int> bset;
  for (const Tri& tr : tris) {
    bset.insert(tr.a);
    bset.insert(tr.b);
    bset.insert(tr.c);
  }
  std::vector<Vec> bpts;
  bpts.reserve(bset.size());
  for (int id : bset) bpts.push_back(pts[size_t(id)]);

  try {
    return finish_3d(raw, bpts, planes_from_triangles(tris, pts, bpts, scale), scale);
  } catch (const ConstructionError&) {
    return finish_3d(raw, bpts, planes_from_triples(bpts, scale), scale);
  }
}

}  // namespace polycalc::detail
