#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <polycalc/polycalc.hpp>

using namespace polycalc;

TEST_CASE("support function on boxes and the diamond") {
  Polytope sq = unit_square();
  CHECK(support(sq, Vec(1, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(support(sq, Vec(1, 1)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(support(diamond(), Vec(1, 1)) == doctest::Approx(1.0).epsilon(1e-12));
  // positive homogeneity of degree 1
  CHECK(support(sq, Vec(3, 2)) == doctest::Approx(2.0 * support(sq, Vec(1.5, 1))).epsilon(1e-12));
  CHECK_THROWS_AS(support(sq, Vec(0, 0)), ZeroDirection);
}

TEST_CASE("facet normals of canonical bodies") {
  auto has_dir = [](const std::vector<Direction>& ns, const Vec& u) {
    for (const auto& d : ns)
      if (same_direction(d.vec(), unit(u), 1e-12)) return true;
    return false;
  };
  std::vector<Direction> sq = facet_normals(unit_square());
  CHECK(sq.size() == 4);
  CHECK(has_dir(sq, Vec(1, 0)));
  CHECK(has_dir(sq, Vec(-1, 0)));
  CHECK(has_dir(sq, Vec(0, 1)));
  CHECK(has_dir(sq, Vec(0, -1)));

  std::vector<Direction> dm = facet_normals(diamond());
  CHECK(dm.size() == 4);
  for (double sx : {1.0, -1.0})
    for (double sy : {1.0, -1.0}) CHECK(has_dir(dm, Vec(sx, sy)));

  std::vector<Direction> cube = facet_normals(unit_cube());
  CHECK(cube.size() == 6);
  CHECK(has_dir(cube, Vec(0, 0, 1)));
  CHECK(has_dir(cube, Vec(0, 0, -1)));

  Polytope seg = hull({Vec(0, 0), Vec(1, 1), Vec(2, 2)});
  CHECK_FALSE(seg.full_dim);
  CHECK_THROWS_AS(facet_normals(seg), LowerDimensional);
}

TEST_CASE("hausdorff distance") {
  Polytope a = unit_square();
  CHECK(hausdorff(a, a) == doctest::Approx(0.0));
  Polytope b = box2(0, 0, 2, 2);
  CHECK(hausdorff(a, b) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  Polytope c = translate(a, Vec(3, 0));
  CHECK(hausdorff(a, c) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK_THROWS_AS(hausdorff(a, unit_cube()), DimensionMismatch);
}

TEST_CASE("hausdorff triangle inequality on random triples") {
  std::mt19937_64 rng(0xB1A5ED);
  for (int it = 0; it < 50; ++it) {
    Polytope A = random_polygon(rng);
    Polytope B = random_polygon(rng);
    Polytope C = random_polygon(rng);
    CHECK(hausdorff(A, C) <= hausdorff(A, B) + hausdorff(B, C) + eps_geom());
  }
}

TEST_CASE("homothety detection") {
  Polytope K = unit_square();
  auto w = detect_homothety(K, homothet(K, 2.0, Vec(1, 1)));
  REQUIRE(w.has_value());
  CHECK(w->scale == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(w->translation[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(w->translation[1] == doctest::Approx(1.0).epsilon(1e-9));

  CHECK_FALSE(detect_homothety(K, box2(0, 0, 1, 2)).has_value());  // aspect ratios differ
  CHECK_FALSE(detect_homothety(diamond(), box2(-1, -1, 1, 1)).has_value());  // normal sets differ
  CHECK_THROWS_AS(detect_homothety(K, hull({Vec(0, 0), Vec(1, 0)})), LowerDimensional);
}

TEST_CASE("homothety recovery is accurate for random scales") {
  std::mt19937_64 rng(0xC0FFEE);
  std::uniform_real_distribution<double> alpha(0.1, 10.0);
  std::uniform_real_distribution<double> shift(-3.0, 3.0);
  for (int it = 0; it < 40; ++it) {
    Polytope P = it % 2 ? random_polygon(rng) : random_polytope_3d(rng);
    double a = alpha(rng);
    Vec t = P.dim == 2 ? Vec(shift(rng), shift(rng)) : Vec(shift(rng), shift(rng), shift(rng));
    auto w = detect_homothety(P, homothet(P, a, t));
    REQUIRE(w.has_value());
    CHECK(std::fabs(w->scale - a) / a < 1e-9);
    CHECK(dist(w->translation, t) < 1e-9 * std::max(1.0, norm(t)));
  }
}

TEST_CASE("subset predicate") {
  Polytope K = unit_square();
  CHECK(subset(K, K, eps_geom()));
  CHECK(subset(K, box2(-1, -1, 2, 2), eps_geom()));
  CHECK_FALSE(subset(box2(0, 0, 2, 2), K, eps_geom()));
  CHECK_THROWS_AS(subset(K, unit_cube(), eps_geom()), DimensionMismatch);
  // lower-dimensional containee
  Polytope seg = hull({Vec(0.2, 0.2), Vec(0.8, 0.8)});
  CHECK(subset(seg, K, eps_geom()));
}

TEST_CASE("support subadditivity on random inputs") {
  std::mt19937_64 rng(0x5EED5);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int it = 0; it < 60; ++it) {
    Polytope P = it % 2 ? random_polygon(rng) : random_polytope_3d(rng);
    for (int k = 0; k < 20; ++k) {
      Vec u = P.dim == 2 ? Vec(coord(rng), coord(rng)) : Vec(coord(rng), coord(rng), coord(rng));
      Vec v = P.dim == 2 ? Vec(coord(rng), coord(rng)) : Vec(coord(rng), coord(rng), coord(rng));
      if (norm(u) < 0.1 || norm(v) < 0.1 || norm(u + v) < 0.1) continue;
      CHECK(support(P, u + v) <= support(P, u) + support(P, v) + 1e-9);
    }
  }
}

TEST_CASE("hull/facet duality on random point clouds") {
  std::mt19937_64 rng(0xD0D0);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  for (int it = 0; it < 30; ++it) {
    int dim = it % 2 ? 3 : 2;
    std::vector<Vec> pts;
    int m = 8 + static_cast<int>(rng() % 20);
    for (int i = 0; i < m; ++i)
      pts.push_back(dim == 2 ? Vec(coord(rng), coord(rng)) : Vec(coord(rng), coord(rng), coord(rng)));
    Polytope H = hull(pts);
    if (!H.full_dim) continue;
    Polytope back = intersect_halfspaces(H.facets);
    CHECK(hausdorff(H, back) <= eps_geom() * std::max(1.0, diameter(H)));
  }
}

TEST_CASE("degenerate hulls stay usable for support/hausdorff/subset") {
  Polytope seg = hull({Vec(0, 0), Vec(1, 0), Vec(2, 0)});
  CHECK_FALSE(seg.full_dim);
  CHECK(seg.vertices.size() == 2);
  CHECK(support(seg, Vec(1, 0)) == doctest::Approx(2.0));
  CHECK(volume(seg) == doctest::Approx(0.0));
  Polytope flat = hull({Vec(0, 0, 0), Vec(1, 0, 0), Vec(0, 1, 0), Vec(1, 1, 0)});
  CHECK_FALSE(flat.full_dim);
  CHECK(flat.intrinsic_dim == 2);
  CHECK(hausdorff(flat, flat) == doctest::Approx(0.0));
  CHECK(distance_to(flat, Vec(0.5, 0.5, 2.0)) == doctest::Approx(2.0).epsilon(1e-12));
}
