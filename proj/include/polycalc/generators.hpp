#pragma once

#include <random>

#include "shapes.hpp"

namespace polycalc {

// Seeded random bodies for property tests and law suites.  All shapes are
// unit-scale (contained in a ball of radius ~1.5 about a point near the
// origin) so absolute tolerances stay meaningful.

inline Polytope random_polygon(std::mt19937_64& rng, int vmin = 5, int vmax = 12) {
  std::uniform_real_distribution<double> radius(0.55, 1.45);
  std::uniform_real_distribution<double> jitter(-0.25, 0.25);
  std::uniform_int_distribution<int> count(vmin, vmax);
  const double pi = 3.14159265358979323846;
  for (int attempt = 0; attempt < 256; ++attempt) {
    int m = count(rng);
    Vec shift(jitter(rng), jitter(rng));
    std::vector<double> angles;
    for (int i = 0; i < m; ++i) angles.push_back(std::uniform_real_distribution<double>(0, 2 * pi)(rng));
    std::sort(angles.begin(), angles.end());
    std::vector<Vec> pts;
    for (double a : angles) {
      double rad = radius(rng);
      pts.push_back(shift + Vec(rad * std::cos(a), rad * std::sin(a)));
    }
    Polytope P = hull(pts);
    if (P.full_dim && static_cast<int>(P.vertices.size()) >= vmin &&
        static_cast<int>(P.vertices.size()) <= vmax)
      return P;
  }
  throw ConstructionError("random polygon generation did not converge");
}

inline Polytope random_polytope_3d(std::mt19937_64& rng, int vmin = 6, int vmax = 14) {
  std::uniform_real_distribution<double> radius(0.6, 1.4);
  std::uniform_real_distribution<double> jitter(-0.2, 0.2);
  std::uniform_int_distribution<int> count(vmin + 2, vmax + 4);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int attempt = 0; attempt < 256; ++attempt) {
    int m = count(rng);
    Vec shift(jitter(rng), jitter(rng), jitter(rng));
    std::vector<Vec> pts;
    for (int i = 0; i < m; ++i) {
      Vec d(gauss(rng), gauss(rng), gauss(rng));
      if (norm(d) < 1e-6) continue;
      pts.push_back(shift + unit(d) * radius(rng));
    }
    if (pts.size() < 4) continue;
    Polytope P = hull(pts);
    if (P.full_dim && static_cast<int>(P.vertices.size()) >= vmin &&
        static_cast<int>(P.vertices.size()) <= vmax)
      return P;
  }
  throw ConstructionError("random polytope generation did not converge");
}

inline Polytope random_body(std::mt19937_64& rng, int dim) {
  return dim == 2 ? random_polygon(rng) : random_polytope_3d(rng);
}

inline std::pair<Polytope, Polytope> random_pair(std::mt19937_64& rng, int dim) {
  Polytope K = random_body(rng, dim);
  Polytope E = random_body(rng, dim);
  return {K, E};
}

}  // namespace polycalc
