#pragma once

#include <array>
#include <cmath>
#include <limits>

#include "errors.hpp"

namespace polycalc {

// Single global tolerance for geometric predicates.  All analytic oracles in
// the test suite are closed-form, so floating-point noise stays far below it.
inline double& eps_geom() {
  static double e = 1e-9;
  return e;
}

// Relative tolerance for the Steiner polynomial consistency check.
inline double& eps_fit() {
  static double e = 1e-7;
  return e;
}

// Point/vector in R^n, n in {2,3}.  The z slot stays zero in 2D so the same
// arithmetic works in both dimensions.
struct Vec {
  int dim = 2;
  std::array<double, 3> c{0.0, 0.0, 0.0};

  Vec() = default;
  Vec(double x, double y) : dim(2), c{x, y, 0.0} {}
  Vec(double x, double y, double z) : dim(3), c{x, y, z} {}

  double operator[](int i) const { return c[static_cast<size_t>(i)]; }
  double& operator[](int i) { return c[static_cast<size_t>(i)]; }

  Vec operator+(const Vec& o) const { return with(dim, c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]); }
  Vec operator-(const Vec& o) const { return with(dim, c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2]); }
  Vec operator-() const { return with(dim, -c[0], -c[1], -c[2]); }
  Vec operator*(double s) const { return with(dim, s * c[0], s * c[1], s * c[2]); }
  Vec& operator+=(const Vec& o) { c[0] += o.c[0]; c[1] += o.c[1]; c[2] += o.c[2]; return *this; }

  static Vec with(int dim, double x, double y, double z) {
    Vec v;
    v.dim = dim;
    v.c = {x, y, z};
    return v;
  }
  static Vec zero(int dim) { return with(dim, 0.0, 0.0, 0.0); }
};

inline Vec operator*(double s, const Vec& v) { return v * s; }

inline void require_same_dim(const Vec& a, const Vec& b) {
  if (a.dim != b.dim) throw DimensionMismatch();
}

inline double dot(const Vec& a, const Vec& b) {
  return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2];
}

// 3D cross product; in 2D only the z component is meaningful.
inline Vec cross(const Vec& a, const Vec& b) {
  return Vec::with(3, a.c[1] * b.c[2] - a.c[2] * b.c[1], a.c[2] * b.c[0] - a.c[0] * b.c[2],
                   a.c[0] * b.c[1] - a.c[1] * b.c[0]);
}

inline double cross2(const Vec& a, const Vec& b) { return a.c[0] * b.c[1] - a.c[1] * b.c[0]; }

inline double norm2(const Vec& v) { return dot(v, v); }
inline double norm(const Vec& v) { return std::sqrt(norm2(v)); }
inline double dist(const Vec& a, const Vec& b) { return norm(a - b); }

inline bool is_finite(const Vec& v) {
  return std::isfinite(v.c[0]) && std::isfinite(v.c[1]) && std::isfinite(v.c[2]);
}

// Normalizes any representable nonzero vector; tiny norms are fine (cross
// products of micro-scale edges reach 1e-18 legitimately).
inline Vec unit(const Vec& v) {
  double n = norm(v);
  if (!(n > 1e-240)) throw ZeroDirection();
  return v * (1.0 / n);
}

// Unit vector on the sphere S^{n-1}.
struct Direction {
  Vec u;

  explicit Direction(const Vec& v) : u(unit(v)) {}
  const Vec& vec() const { return u; }
  double operator[](int i) const { return u[i]; }
};

// Closed halfspace {x : <x,u> <= offset} with unit outer normal u.
struct HalfSpace {
  Direction normal;
  double offset;

  HalfSpace(const Direction& n, double off) : normal(n), offset(off) {}
  HalfSpace(const Vec& n, double off) : normal(Direction(n)), offset(off) {}

  bool contains(const Vec& p, double tol) const { return dot(p, normal.vec()) <= offset + tol; }
  double violation(const Vec& p) const { return dot(p, normal.vec()) - offset; }
};

inline Vec axis(int dim, int i, double sign = 1.0) {
  Vec v = Vec::zero(dim);
  v[i] = sign;
  return v;
}

// Two directions are identified when their angle is below eps_geom (as unit
// vectors this is equivalent to a small coordinate difference).
inline bool same_direction(const Vec& a, const Vec& b, double tol) {
  return dist(a, b) <= tol;
}

inline bool lex_less(const Vec& a, const Vec& b) {
  for (int i = 0; i < 3; ++i) {
    if (a.c[size_t(i)] < b.c[size_t(i)]) return true;
    if (a.c[size_t(i)] > b.c[size_t(i)]) return false;
  }
  return false;
}

}  // namespace polycalc
