// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line each.  Exit code = number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <polycalc/polycalc.hpp>

using namespace polycalc;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int id;
  std::string name;
  std::function<bool(std::ostringstream&)> run;
  double budget_seconds;  // 0 = no budget
};

bool approx(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

// 1. Classical quotients of K = [0,1]^2 and K_1 = [0,2]x[0,3] under the
//    rectangle gauge: 16 and 100/6.
bool c1_paper_remark(std::ostringstream& log) {
  Polytope K = unit_square();
  Polytope E = box2(0, 0, 1, 2);
  double i0 = classical_quotient(parallel_body(K, E, 0.0));
  double i1 = classical_quotient(parallel_body(K, E, 1.0));
  log << "I(K_0)=" << i0 << " I(K_1)=" << i1;
  return approx(i0, 16.0, 1e-12) && approx(i1, 100.0 / 6.0, 1e-12) && i0 < i1;
}

// 2. I(lambda) nonincreasing within 1e-7 relative rise on 200 seeded random
//    polygon pairs, 64-point grid over (-r+1e-6, 4r].
bool c2_monotonicity(std::ostringstream& log) {
  std::mt19937_64 rng(20240001);
  double worst = 0.0;
  for (int it = 0; it < 200; ++it) {
    Polytope K = random_polygon(rng);
    Polytope E = random_polygon(rng);
    double r = inradius(K, E).r;
    GridSpec gs;
    gs.lo = -r + 1e-6;
    gs.hi = 4.0 * r;
    gs.steps = 64;
    MonotoneResult m = monotone_check(sample_curve(K, E, make_grid(r, gs)), 1e-7);
    worst = std::max(worst, m.max_rise);
    if (!m.monotone) {
      log << "pair " << it << " rises by " << m.max_rise;
      return false;
    }
  }
  log << "200 pairs, worst rise " << worst;
  return true;
}

// 3. Tangential constancy for the square against the diamond gauge.
bool c3_tangential_constancy(std::ostringstream& log) {
  Polytope K = unit_square();
  Polytope E = diamond();
  std::vector<double> inner;
  for (int k = 0; k < 24; ++k) inner.push_back(-0.5 + 1e-6 + (0.5 - 1e-6) * k / 23.0);
  FamilyCurve ci = sample_curve(K, E, inner);
  for (const auto& s : ci.samples)
    if (!approx(s.I, 16.0, 1e-9 * 16.0)) {
      log << "I(" << s.lambda << ")=" << s.I;
      return false;
    }
  FamilyCurve co = sample_curve(K, E, std::vector<double>{0.1, 0.5, 1.0, 2.0, 5.0});
  for (size_t i = 0; i + 1 < co.samples.size(); ++i)
    if (!(co.samples[i + 1].I < co.samples[i].I)) {
      log << "not strictly decreasing at lambda=" << co.samples[i + 1].lambda;
      return false;
    }
  double far = isoperimetric_quotient(parallel_body(K, E, 1000.0), E);
  log << "I constant at 16 inside, I(1e3)=" << far << " vs limit 8";
  return std::fabs(far - 8.0) <= 0.01 * 8.0;
}

// 4. W_1 fit vs edge-sum oracle (100 pairs, 1e-9) and the quermassintegral
//    shift identity (50 pairs, lambda in {0.5,1,2}, 1e-8).
bool c4_cross_validation(std::ostringstream& log) {
  std::mt19937_64 rng(20240002);
  double worst_oracle = 0.0;
  for (int it = 0; it < 100; ++it) {
    Polytope K = random_polygon(rng);
    Polytope E = random_polygon(rng);
    double w1 = steiner_fit(K, E)[1];
    double oracle = mixed_area_oracle(K, E);
    double err = std::fabs(w1 - oracle) / std::max(1.0, std::fabs(oracle));
    worst_oracle = std::max(worst_oracle, err);
    if (err > 1e-9) {
      log << "oracle mismatch " << err << " at pair " << it;
      return false;
    }
  }
  double worst_shift = 0.0;
  for (int it = 0; it < 50; ++it) {
    int dim = it % 5 == 4 ? 3 : 2;
    Polytope K = random_body(rng, dim);
    Polytope E = random_body(rng, dim);
    QuermassVector q = steiner_fit(K, E);
    for (double lam : {0.5, 1.0, 2.0}) {
      QuermassVector ql = steiner_fit(minkowski_sum(K, scale_body(E, lam)), E);
      for (int i = 0; i <= dim; ++i) {
        double pred = 0.0;
        for (int k = 0; k <= dim - i; ++k) pred += binom(dim - i, k) * q[i + k] * std::pow(lam, k);
        double err = std::fabs(ql[i] - pred) / std::max(1.0, std::fabs(pred));
        worst_shift = std::max(worst_shift, err);
        if (err > 1e-8) {
          log << "shift mismatch " << err << " at pair " << it;
          return false;
        }
      }
    }
  }
  log << "worst oracle err " << worst_oracle << ", worst shift err " << worst_shift;
  return true;
}

// 5. Law suite on 50 seeded random instances in 2D and 10 in 3D per law.
bool c5_law_suite(std::ostringstream& log) {
  const LawId laws[] = {LawId::IN_OF_OUT,       LawId::FAMILY_CONCAVITY, LawId::BM_CONCAVITY,
                        LawId::DVOL_EQ_SURFACE, LawId::WULFF_SHIFT,      LawId::SUPPORT_AGREEMENT};
  for (LawId law : laws) {
    std::mt19937_64 rng(20240100 + static_cast<unsigned long long>(law));
    for (int it = 0; it < 60; ++it) {
      int dim = it < 50 ? 2 : 3;
      Polytope K = random_body(rng, dim);
      Polytope E = random_body(rng, dim);
      PassReport rep = law_check(law, K, E);
      if (!rep.pass) {
        log << law_name(law) << " failed on " << dim << "D instance " << it << ": " << rep.details;
        return false;
      }
    }
  }
  log << "6 laws x (50 2D + 10 3D) instances";
  return true;
}

// 6. Limit shapes of both families: decreasing over {10,100,1000} and within
//    1e-2 at lambda = 1e3.
bool c6_limit_shapes(std::ostringstream& log) {
  std::mt19937_64 rng(20240003);
  for (int it = 0; it < 14; ++it) {
    int dim = it < 10 ? 2 : 3;
    Polytope K = random_body(rng, dim);
    Polytope E = random_body(rng, dim);
    PassReport rep = law_check(LawId::LIMIT_SHAPE, K, E);
    if (!rep.pass) {
      log << "instance " << it << ": " << rep.details;
      return false;
    }
  }
  log << "10 2D + 4 3D instances";
  return true;
}

// 7. Minimizer corollary: boxes with axis normals against the octagon gauge.
bool c7_minimizer(std::ostringstream& log) {
  std::mt19937_64 rng(20240004);
  std::uniform_real_distribution<double> side(0.4, 2.5);
  std::uniform_real_distribution<double> off(-1.0, 1.0);
  Polytope e8 = octagon_gauge();
  DirectionSet axes = DirectionSet::axes(2);
  int squares = 0, rects = 0;
  for (int it = 0; it < 100; ++it) {
    bool make_square = it % 2 == 0;
    double a = side(rng);
    double b = make_square ? a : side(rng);
    if (!make_square && std::fabs(a - b) < 0.05) b = a + 0.05;
    double x0 = off(rng), y0 = off(rng);
    Polytope box = box2(x0, y0, x0 + a, y0 + b);
    double I = isoperimetric_quotient(box, e8);
    if (I < 16.0 - 1e-9) {
      log << "I=" << I << " below 16 for a=" << a << " b=" << b;
      return false;
    }
    bool equal = std::fabs(I - 16.0) <= 1e-9 * 16.0;
    if (equal != make_square) {
      log << "equality/squareness mismatch at a=" << a << " b=" << b << " I=" << I;
      return false;
    }
    LawParams prm;
    prm.omega = axes;
    PassReport rep = law_check(LawId::MINIMIZER, box, e8, prm);
    if (!rep.pass) {
      log << "MINIMIZER law failed: " << rep.details;
      return false;
    }
    (make_square ? squares : rects)++;
  }
  log << squares << " squares at the bound, " << rects << " rectangles strictly above";
  return true;
}

// 8. 3D tangential hierarchy and R_p classes for cube/octahedron, cube/cube.
bool c8_hierarchy(std::ostringstream& log) {
  Polytope cube = sym_cube();
  Polytope oct = octahedron();
  bool tang = tangential_test(cube, oct);
  bool p1 = p_tangential_test(cube, oct, 1);
  int rc_oct = r_class_estimate(cube, oct);
  int rc_self = r_class_estimate(cube, cube);
  log << "tangential=" << tang << " p1=" << p1 << " r_class(cube,oct)=" << rc_oct
      << " r_class(cube,cube)=" << rc_self;
  return tang && !p1 && rc_oct == 0 && rc_self == 2;
}

// 9. Wulff strictness: area(K(Omega,1)) > vol(K + E8).
bool c9_wulff_strict(std::ostringstream& log) {
  Polytope K = unit_square();
  Polytope e8 = octagon_gauge();
  double wulff_area = volume(wulff_body(K, e8, DirectionSet::axes(2), 1.0));
  double sum_vol = volume(minkowski_sum(K, e8));
  log << "area(K(Omega,1))=" << wulff_area << " vol(K+E8)=" << sum_vol;
  return wulff_area > sum_vol + 1e-9;
}

// 10. Negative control: an injected +1% rise must be rejected.
bool c10_negative_control(std::ostringstream& log) {
  FamilyCurve c = sample_curve(unit_square(), diamond(),
                               std::vector<double>{-0.4, -0.2, 0.0, 0.4, 0.9, 1.5});
  std::vector<double> vals = c.quotient_I();
  vals[3] = vals[2] * 1.01;
  MonotoneResult m = monotone_check(vals, 1e-7);
  log << "injected rise detected as " << m.max_rise;
  return !m.monotone && m.max_rise > 0.009;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "paper remark reproduction (I=16 vs 100/6)", c1_paper_remark, 1.0},
      {2, "relative monotonicity on 200 random pairs", c2_monotonicity, 30.0},
      {3, "tangential constancy for square/diamond", c3_tangential_constancy, 0.0},
      {4, "quermassintegral cross-validation", c4_cross_validation, 0.0},
      {5, "law suite (6 laws, 2D+3D)", c5_law_suite, 120.0},
      {6, "limit shapes of both families", c6_limit_shapes, 0.0},
      {7, "minimizer corollary for boxes vs E8", c7_minimizer, 0.0},
      {8, "3D tangential hierarchy and R_p classes", c8_hierarchy, 0.0},
      {9, "Wulff strictness at lambda=1", c9_wulff_strict, 0.0},
      {10, "negative control (corrupted curve rejected)", c10_negative_control, 0.0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::ostringstream log;
    auto t0 = Clock::now();
    bool ok = false;
    try {
      ok = c.run(log);
    } catch (const std::exception& e) {
      log << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.budget_seconds > 0.0 && secs > c.budget_seconds) {
      log << " [exceeded " << c.budget_seconds << " s budget]";
      ok = false;
    }
    std::printf("[%s] criterion %2d: %s (%s; %.2f s)\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                log.str().c_str(), secs);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all %zu criteria passed\n", criteria.size());
  return failures;
}
