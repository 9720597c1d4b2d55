#pragma once

#include <vector>

#include "hull.hpp"
#include "lp.hpp"

namespace polycalc {

// Convex hull with irredundant vertex and facet lists; full_dim is set by an
// affine rank test, degenerate clouds come back as segments/flat polygons.
inline Polytope hull(const std::vector<Vec>& points) {
  if (points.empty()) throw EmptyInput("hull of no points");
  return detail::assemble_from_points(points.front().dim, points);
}

namespace detail {

// Certificate LP: the directions fail to span positively exactly when some
// nonzero d has <t_i, d> <= 0 for every tip, i.e. when
//   max s  s.t.  <t_i, d> + s <= 0,  |d_j| <= 1
// has a strictly positive optimum.
inline bool spans_by_lp(const std::vector<Vec>& dirs, int dim) {
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  for (const Vec& t : dirs) {
    std::vector<double> row(static_cast<size_t>(dim) + 1, 1.0);
    for (int i = 0; i < dim; ++i) row[static_cast<size_t>(i)] = t[i];
    A.push_back(row);
    b.push_back(0.0);
  }
  for (int j = 0; j < dim; ++j) {
    for (double sgn : {1.0, -1.0}) {
      std::vector<double> row(static_cast<size_t>(dim) + 1, 0.0);
      row[static_cast<size_t>(j)] = sgn;
      A.push_back(row);
      b.push_back(1.0);
    }
  }
  std::vector<double> c(static_cast<size_t>(dim) + 1, 0.0);
  c.back() = 1.0;
  LpSolution sol = lp_maximize(A, b, c);
  return sol.feasible && sol.value <= 1e-9;
}

}  // namespace detail

// True when the origin lies in the interior of conv(dirs), i.e. the
// directions positively span the space.  A halfspace intersection is bounded
// exactly in this case.
inline bool positively_spans(const std::vector<Vec>& dirs, int dim) {
  if (dirs.size() < static_cast<size_t>(dim) + 1) return false;
  if (dim == 2) {
    // spanning iff no angular gap of pi or more between consecutive tips
    std::vector<double> ang;
    ang.reserve(dirs.size());
    for (const Vec& d : dirs) ang.push_back(std::atan2(d[1], d[0]));
    std::sort(ang.begin(), ang.end());
    double worst = ang.front() + 2.0 * 3.14159265358979323846 - ang.back();
    for (size_t i = 0; i + 1 < ang.size(); ++i) worst = std::max(worst, ang[i + 1] - ang[i]);
    return worst < 3.14159265358979323846 - 1e-9;
  }
  // 3D fast path: hull of the tips with the origin strictly inside; fall back
  // to the LP certificate when the tip hull is degenerate or borderline.
  try {
    Polytope H = detail::assemble_from_points(dim, dirs);
    if (H.full_dim) {
      double mn = std::numeric_limits<double>::infinity();
      for (const HalfSpace& h : H.facets) mn = std::min(mn, h.offset);
      if (mn >= 1e-9) return true;
    }
  } catch (const GeomError&) {
  }
  return detail::spans_by_lp(dirs, dim);
}

namespace detail {

// Chebyshev program: maximize r s.t. <x,u_i> + r <= alpha_i.  The value is
// negative exactly when the intersection is empty (within tolerance).
inline LpSolution chebyshev(const std::vector<HalfSpace>& hs, int dim) {
  std::vector<std::vector<double>> A;
  std::vector<double> b, c(static_cast<size_t>(dim) + 1, 0.0);
  c.back() = 1.0;
  for (const HalfSpace& h : hs) {
    std::vector<double> row(static_cast<size_t>(dim) + 1, 0.0);
    for (int i = 0; i < dim; ++i) row[static_cast<size_t>(i)] = h.normal[i];
    row.back() = 1.0;
    A.push_back(row);
    b.push_back(h.offset);
  }
  return lp_maximize(A, b, c);
}

inline double offset_scale(const std::vector<HalfSpace>& hs) {
  double s = 1.0;
  for (const HalfSpace& h : hs) s = std::max(s, std::fabs(h.offset));
  return s;
}

// Candidate vertices from n-subsets of boundary planes; exact and happy with
// degenerate (flat) intersections, used as the fallback path.
inline std::vector<Vec> vertices_by_enumeration(const std::vector<HalfSpace>& hs, int dim) {
  const int m = static_cast<int>(hs.size());
  const double feas_tol = 1e-11 * offset_scale(hs);
  std::vector<Vec> cand;
  std::vector<int> idx(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) idx[static_cast<size_t>(i)] = i;
  do {
    std::vector<std::vector<double>> M;
    std::vector<double> rhs;
    for (int i = 0; i < dim; ++i) {
      const HalfSpace& h = hs[static_cast<size_t>(idx[static_cast<size_t>(i)])];
      std::vector<double> row(static_cast<size_t>(dim));
      for (int j = 0; j < dim; ++j) row[static_cast<size_t>(j)] = h.normal[j];
      M.push_back(row);
      rhs.push_back(h.offset);
    }
    std::vector<double> x;
    if (!solve_square(M, rhs, x)) continue;
    Vec p = dim == 2 ? Vec(x[0], x[1]) : Vec(x[0], x[1], x[2]);
    bool ok = true;
    for (const HalfSpace& h : hs)
      if (h.violation(p) > feas_tol) { ok = false; break; }
    if (ok) cand.push_back(p);
  } while (next_combination(idx, m));
  return cand;
}

}  // namespace detail

// Vertex enumeration of the intersection of halfspaces.  2D goes through
// pairwise boundary-line intersection; 3D through the polar dual hull about a
// Chebyshev feasibility point, switching to plane-triple enumeration when the
// intersection is thin or (nearly) lower-dimensional.
inline Polytope intersect_halfspaces(const std::vector<HalfSpace>& hs) {
  if (hs.empty()) throw EmptyInput("no halfspaces");
  const int dim = hs.front().normal.vec().dim;
  if (hs.size() < static_cast<size_t>(dim) + 1) throw Unbounded();
  std::vector<Vec> normals;
  normals.reserve(hs.size());
  for (const HalfSpace& h : hs) {
    if (h.normal.vec().dim != dim) throw DimensionMismatch();
    normals.push_back(h.normal.vec());
  }
  if (!positively_spans(normals, dim)) throw Unbounded();

  const double oscale = detail::offset_scale(hs);
  LpSolution cheb = detail::chebyshev(hs, dim);
  if (!cheb.feasible || cheb.value < -1e-9 * oscale) throw EmptyBody();

  std::vector<Vec> cand;
  if (dim == 2) {
    cand = detail::vertices_by_enumeration(hs, 2);
  } else if (cheb.value > 1e-3 * oscale) {
    // Polar duality: halfspaces shifted to put the Chebyshev point at the
    // origin dualize to points, and dual hull facets map back to vertices.
    // The transform compresses features of thin bodies below working
    // precision, so it is reserved for well-rounded intersections.
    Vec p0(cheb.x[0], cheb.x[1], cheb.x[2]);
    std::vector<Vec> dual;
    dual.reserve(hs.size());
    for (const HalfSpace& h : hs) {
      double a = h.offset - dot(p0, h.normal.vec());
      if (a <= 0.0) continue;  // cannot happen for a strictly interior point
      dual.push_back(h.normal.vec() * (1.0 / a));
    }
    Polytope D = detail::assemble_from_points(3, dual);
    for (const HalfSpace& f : D.facets) {
      if (f.offset <= 0.0) continue;
      cand.push_back(p0 + f.normal.vec() * (1.0 / f.offset));
    }
  } else {
    cand = detail::vertices_by_enumeration(hs, 3);
  }
  if (cand.empty()) throw EmptyBody();
  return detail::assemble_from_points(dim, cand);
}

inline Polytope intersect_halfspaces(const std::vector<Vec>& normals, const std::vector<double>& offsets) {
  if (normals.size() != offsets.size()) throw BadParams("normals/offsets length mismatch");
  std::vector<HalfSpace> hs;
  hs.reserve(normals.size());
  for (size_t i = 0; i < normals.size(); ++i) hs.emplace_back(normals[i], offsets[i]);
  return intersect_halfspaces(hs);
}

// Minkowski sum: hull of pairwise vertex sums, so support functions add.
inline Polytope minkowski_sum(const Polytope& P, const Polytope& Q) {
  if (P.dim != Q.dim) throw DimensionMismatch();
  std::vector<Vec> sums;
  sums.reserve(P.vertices.size() * Q.vertices.size());
  for (const Vec& a : P.vertices)
    for (const Vec& b : Q.vertices) sums.push_back(a + b);
  return detail::assemble_from_points(P.dim, sums);
}

// Inner parallel body (Minkowski difference) P ~ tE.  Because U(P) determines
// P, the erosion is exactly the intersection of the inward-shifted facet
// halfspaces with new offsets h_P(u) - t*h_E(u).  The result may be
// lower-dimensional exactly at t = inr(P;E); past the inradius the
// intersection is empty.
inline Polytope erode(const Polytope& P, double t, const Polytope& E) {
  if (P.dim != E.dim) throw DimensionMismatch();
  if (!P.full_dim || !E.full_dim) throw LowerDimensional("erosion needs full-dimensional bodies");
  if (t < 0.0) throw BadParams("erosion distance must be nonnegative");
  if (t == 0.0) return P;
  std::vector<HalfSpace> hs;
  hs.reserve(P.facets.size());
  for (const HalfSpace& h : P.facets)
    hs.emplace_back(h.normal, h.offset - t * support(E, h.normal.vec()));
  return intersect_halfspaces(hs);
}

}  // namespace polycalc
