#pragma once

#include <cmath>
#include <numbers>

#include "algebra.hpp"

namespace polycalc {

inline Polytope box2(double x0, double y0, double x1, double y1) {
  return hull({Vec(x0, y0), Vec(x1, y0), Vec(x1, y1), Vec(x0, y1)});
}

inline Polytope unit_square() { return box2(0, 0, 1, 1); }

// conv{+-e1, +-e2}
inline Polytope diamond() { return hull({Vec(1, 0), Vec(-1, 0), Vec(0, 1), Vec(0, -1)}); }

inline Polytope box3(double x0, double y0, double z0, double x1, double y1, double z1) {
  return hull({Vec(x0, y0, z0), Vec(x1, y0, z0), Vec(x0, y1, z0), Vec(x1, y1, z0),
               Vec(x0, y0, z1), Vec(x1, y0, z1), Vec(x0, y1, z1), Vec(x1, y1, z1)});
}

inline Polytope unit_cube() { return box3(0, 0, 0, 1, 1, 1); }
inline Polytope sym_cube() { return box3(-1, -1, -1, 1, 1, 1); }

// conv{+-e1, +-e2, +-e3}
inline Polytope octahedron() {
  return hull({Vec(1, 0, 0), Vec(-1, 0, 0), Vec(0, 1, 0), Vec(0, -1, 0), Vec(0, 0, 1), Vec(0, 0, -1)});
}

// Regular m-gon circumscribed about the unit disk (apothem 1): all m facet
// support values equal 1, so these gauges approximate B_2 from outside and
// serve as polygonal stand-ins for the Euclidean ball.
inline Polytope regular_gauge_polygon(int m) {
  if (m < 3) throw BadParams("need at least 3 facets");
  const double pi = std::numbers::pi;
  std::vector<Vec> verts;
  double rad = 1.0 / std::cos(pi / m);
  for (int k = 0; k < m; ++k) {
    double a = (2.0 * k + 1.0) * pi / m;
    verts.push_back(Vec(rad * std::cos(a), rad * std::sin(a)));
  }
  return hull(verts);
}

// The octagon gauge with h(+-e_i) = 1 used in Wulff-family examples.
inline Polytope octagon_gauge() { return regular_gauge_polygon(8); }

}  // namespace polycalc
