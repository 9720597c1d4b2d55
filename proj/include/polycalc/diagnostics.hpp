#pragma once

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "families.hpp"

namespace polycalc {

// -------------------------------------------------------- monotonicity

struct MonotoneResult {
  bool monotone = true;
  double max_rise = 0.0;  // worst relative rise between consecutive samples
};

inline MonotoneResult monotone_check(const std::vector<double>& values, double tol_rel) {
  MonotoneResult res;
  for (size_t i = 0; i + 1 < values.size(); ++i) {
    double rise = (values[i + 1] - values[i]) / std::max(std::fabs(values[i]), 1e-300);
    res.max_rise = std::max(res.max_rise, rise);
  }
  res.monotone = res.max_rise <= tol_rel;
  return res;
}

inline MonotoneResult monotone_check(const FamilyCurve& curve, double tol_rel) {
  return monotone_check(curve.quotient_I(), tol_rel);
}

// -------------------------------------------------------- tangential tests

// K is a tangential body of E iff E fits inside K and every facet hyperplane
// of K also supports E.  For polytopes every boundary point lies on a facet,
// so checking facet supports is exhaustive.
inline bool tangential_test(const Polytope& K, const Polytope& E) {
  if (K.dim != E.dim) throw DimensionMismatch();
  if (!K.full_dim || !E.full_dim) throw LowerDimensional();
  const double tol = eps_geom() * std::max(1.0, diameter(K));
  if (!subset(E, K, tol)) return false;
  for (const HalfSpace& h : K.facets)
    if (std::fabs(support(E, h.normal.vec()) - h.offset) > tol) return false;
  return true;
}

namespace detail {

// Unique edges of a 3-polytope with their two incident facet indices.
inline std::vector<std::array<int, 4>> polytope_edges(const Polytope& P) {
  std::map<std::pair<int, int>, std::vector<int>> inc;
  for (size_t f = 0; f < P.facet_vertices.size(); ++f) {
    const auto& cyc = P.facet_vertices[f];
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      inc[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(f));
    }
  }
  std::vector<std::array<int, 4>> edges;
  for (auto& [vk, fs] : inc)
    if (fs.size() == 2) edges.push_back({vk.first, vk.second, fs[0], fs[1]});
  return edges;
}

// Support equality h_K = h_E on the 2D cone spanned by u1,u2.  Both are
// piecewise linear there, so equality is decided at the generators of the
// common refinement with E's normal fan: for every vertex v of E the piece
// where v maximizes is cut out of the (s,t) quadrant by homogeneous rows, and
// each piece's extreme rays lie on row boundaries.
inline bool support_equal_on_cone(const Polytope& K, const Polytope& E, const Vec& u1, const Vec& u2,
                                  double tol) {
  std::vector<std::pair<double, double>> rows = {{1.0, 0.0}, {0.0, 1.0}};
  for (const Vec& v : E.vertices) {
    std::vector<std::pair<double, double>> vrows = rows;
    for (const Vec& w : E.vertices) {
      Vec d = v - w;
      if (norm(d) < 1e-14) continue;
      vrows.push_back({dot(d, u1), dot(d, u2)});
    }
    for (const auto& [a, b] : vrows) {
      for (double sgn : {1.0, -1.0}) {
        double s = sgn * b, t = -sgn * a;  // boundary direction of the row
        double len = std::hypot(s, t);
        if (len < 1e-14) continue;
        s /= len;
        t /= len;
        bool feasible = true;
        for (const auto& [ra, rb] : vrows)
          if (ra * s + rb * t < -1e-12 * std::hypot(ra, rb)) {
            feasible = false;
            break;
          }
        if (!feasible) continue;
        Vec g = u1 * s + u2 * t;
        if (norm(g) < 1e-12) continue;
        g = unit(g);
        if (std::fabs(support(K, g) - support(E, g)) > tol) return false;
      }
    }
  }
  return true;
}

}  // namespace detail

// p-tangential bodies: every (n-p-1)-extreme supporting hyperplane of K must
// support E.  For a polytope the (n-p-1)-extreme normal directions are
// exactly the normal cones of faces of dimension >= p, so:
//   p = n-1  -> facet normals only (the plain tangential test),
//   p = 0    -> all directions, i.e. K = E,
//   p = 1, n = 3 -> facet normals plus the 2D normal cones of the edges.
inline bool p_tangential_test(const Polytope& K, const Polytope& E, int p) {
  if (K.dim != E.dim) throw DimensionMismatch();
  if (K.dim > 3) throw UnsupportedDimension();
  const int n = K.dim;
  if (p < 0 || p > n - 1) throw BadParams("p outside [0, n-1]");
  if (!K.full_dim || !E.full_dim) throw LowerDimensional();
  const double tol = eps_geom() * std::max(1.0, diameter(K));
  if (!subset(E, K, tol)) return false;
  if (p == 0) return subset(K, E, tol);
  if (!tangential_test(K, E)) return false;
  if (p == n - 1) return true;
  // n = 3, p = 1: edge normal cones
  for (const auto& e : detail::polytope_edges(K)) {
    const Vec& u1 = K.facets[static_cast<size_t>(e[2])].normal.vec();
    const Vec& u2 = K.facets[static_cast<size_t>(e[3])].normal.vec();
    if (!detail::support_equal_on_cone(K, E, u1, u2, tol)) return false;
  }
  return true;
}

// -------------------------------------------------------- R_p classes

// Largest p such that the derivative equalities d/dl W_i(l) = (n-i) W_{i+1}(l)
// hold numerically for all i <= p across the grid (central differences; grid
// points where left/right estimates disagree are treated as breakpoints and
// excluded, mirroring the one-sided-derivative behaviour at kinks).
inline int r_class_estimate(const Polytope& K, const Polytope& E, const std::vector<double>& grid,
                            double h, double tol) {
  const int n = K.dim;
  double r = inradius(K, E).r;
  std::vector<bool> ok(static_cast<size_t>(n), true);
  for (double lam : grid) {
    if (lam - h <= -r) continue;
    QuermassVector wm = steiner_fit(parallel_body(K, E, lam - h), E);
    QuermassVector w0 = steiner_fit(parallel_body(K, E, lam), E);
    QuermassVector wp = steiner_fit(parallel_body(K, E, lam + h), E);
    for (int i = 0; i < n; ++i) {
      double fwd = (wp[i] - w0[i]) / h;
      double bwd = (w0[i] - wm[i]) / h;
      double target = (n - i) * w0[i + 1];
      double sc = std::max(1.0, std::fabs(target));
      if (std::fabs(fwd - bwd) > 10.0 * tol * sc) continue;  // breakpoint
      double central = (wp[i] - wm[i]) / (2.0 * h);
      if (std::fabs(central - target) > tol * sc) ok[static_cast<size_t>(i)] = false;
    }
  }
  int p = n - 1;
  for (int i = 0; i < n; ++i)
    if (!ok[static_cast<size_t>(i)]) {
      p = i - 1;
      break;
    }
  return std::max(p, 0);  // i = 0 always holds: vol is differentiable with vol' = n W_1
}

inline int r_class_estimate(const Polytope& K, const Polytope& E) {
  double r = inradius(K, E).r;
  std::vector<double> grid;
  for (double f : {-0.8, -0.55, -0.3, -0.15}) grid.push_back(f * r);
  for (double f : {0.35, 0.9, 1.6}) grid.push_back(f * std::max(r, 0.5));
  std::sort(grid.begin(), grid.end());
  return r_class_estimate(K, E, grid, 1e-4 * std::max(1.0, r), 1e-3);
}

// -------------------------------------------------------- constancy diagnosis

struct DiagnosisReport {
  bool monotone = true;
  double max_rise = 0.0;
  std::vector<std::pair<double, double>> constancy_intervals;
  std::array<bool, 4> conditions{false, false, false, false};  // (i)..(iv)
  bool agree = false;
  std::optional<HomothetyWitness> homothety;  // witness for (ii)
  bool tangential_verdict = false;            // (iii)
  std::map<int, bool> p_tangential;
  int r_class = -1;
  bool gauge_homothety = false;        // lambda1 > 0: K homothetic to E
  bool constant_at_gauge_level = false;  // lambda1 > 0: I == n^n vol(E)
  std::string notes;
};

namespace detail {

// Least-squares fit of h_E(u) = alpha h_K(u) + <x0,u> over U(K); when the
// residual vanishes, alpha*K + x0 is a tangential body of E (supports agree on
// all of its facet normals and E fits inside).
inline std::optional<HomothetyWitness> tangential_homothet(const Polytope& K, const Polytope& E,
                                                           double tol) {
  const int n = K.dim;
  const int d = n + 1;
  std::vector<std::vector<double>> AtA(static_cast<size_t>(d), std::vector<double>(static_cast<size_t>(d), 0.0));
  std::vector<double> Atb(static_cast<size_t>(d), 0.0);
  for (const HalfSpace& hf : K.facets) {
    std::vector<double> row(static_cast<size_t>(d));
    row[0] = hf.offset;  // h_K(u)
    for (int i = 0; i < n; ++i) row[static_cast<size_t>(i + 1)] = hf.normal[i];
    double rhs = support(E, hf.normal.vec());
    for (int i = 0; i < d; ++i) {
      Atb[static_cast<size_t>(i)] += row[static_cast<size_t>(i)] * rhs;
      for (int j = 0; j < d; ++j)
        AtA[static_cast<size_t>(i)][static_cast<size_t>(j)] += row[static_cast<size_t>(i)] * row[static_cast<size_t>(j)];
    }
  }
  std::vector<double> sol;
  if (!solve_square(AtA, Atb, sol)) return std::nullopt;
  double alpha = sol[0];
  if (!(alpha > 1e-12)) return std::nullopt;
  Vec x0 = n == 2 ? Vec(sol[1], sol[2]) : Vec(sol[1], sol[2], sol[3]);
  for (const HalfSpace& hf : K.facets) {
    double lhs = support(E, hf.normal.vec());
    double rhs = alpha * hf.offset + dot(x0, hf.normal.vec());
    if (std::fabs(lhs - rhs) > tol) return std::nullopt;
  }
  if (!subset(E, homothet(K, alpha, x0), tol)) return std::nullopt;
  HomothetyWitness w;
  w.scale = alpha;
  w.translation = x0;
  return w;
}

}  // namespace detail

// Evaluates four independently computed constancy conditions at
// (lambda0, lambda1) and reports whether the verdicts agree (they are
// mathematically equivalent):
//   (i)  I(l0) = I(l1),
//   (ii) K_{l0} homothetic to K_{l1},
//   (iii) K_{l1} homothetic to a tangential body of E,
//   (iv) I constant on (-inr, l1].
// For lambda1 > 0 it additionally tests K ~ E and I == n^n vol(E).
inline DiagnosisReport constancy_diagnosis(const Polytope& K, const Polytope& E, double lambda0,
                                           double lambda1, double tol_rel = 1e-7) {
  const int n = K.dim;
  double r = inradius(K, E).r;
  if (!(-r < lambda0 && lambda0 < lambda1)) throw OutOfRange("need -inr < lambda0 < lambda1");
  DiagnosisReport rep;

  Polytope K0 = parallel_body(K, E, lambda0);
  Polytope K1 = parallel_body(K, E, lambda1);
  double I0 = isoperimetric_quotient(K0, E);
  double I1 = isoperimetric_quotient(K1, E);
  rep.conditions[0] = std::fabs(I1 - I0) <= tol_rel * std::max(std::fabs(I0), std::fabs(I1));

  rep.homothety = detect_homothety(K0, K1);
  rep.conditions[1] = rep.homothety.has_value();

  const double geom_tol = eps_geom() * std::max(1.0, diameter(K1));
  std::optional<HomothetyWitness> tw = detail::tangential_homothet(K1, E, geom_tol);
  rep.tangential_verdict = tw.has_value();
  rep.conditions[2] = rep.tangential_verdict;
  for (int p = 0; p <= n - 1; ++p) {
    if (tw)
      rep.p_tangential[p] = p_tangential_test(homothet(K1, tw->scale, tw->translation), E, p);
    else
      rep.p_tangential[p] = false;
  }
  rep.r_class = r_class_estimate(K, E);

  GridSpec gs;
  gs.hi = lambda1;
  gs.steps = 33;
  if (lambda1 <= 0.0) gs.log_refine = false, gs.lo = -r + 1e-6 * std::max(r, 1e-12);
  std::vector<double> grid = make_grid(r, gs);
  if (grid.back() < lambda1) grid.push_back(lambda1);
  FamilyCurve curve = sample_curve(K, E, grid);
  std::vector<double> I = curve.quotient_I();
  double imax = *std::max_element(I.begin(), I.end());
  double imin = *std::min_element(I.begin(), I.end());
  rep.conditions[3] = (imax - imin) <= tol_rel * std::max(std::fabs(imax), 1e-300);

  MonotoneResult mon = monotone_check(I, tol_rel);
  rep.monotone = mon.monotone;
  rep.max_rise = mon.max_rise;

  // maximal grid runs on which I stays constant within tolerance
  size_t run_start = 0;
  for (size_t i = 1; i <= I.size(); ++i) {
    bool breaks = i == I.size() ||
                  std::fabs(I[i] - I[run_start]) > tol_rel * std::max(std::fabs(I[run_start]), 1e-300);
    if (breaks) {
      if (i - run_start >= 2) rep.constancy_intervals.push_back({grid[run_start], grid[i - 1]});
      run_start = i;
    }
  }

  rep.agree = rep.conditions[0] == rep.conditions[1] && rep.conditions[1] == rep.conditions[2] &&
              rep.conditions[2] == rep.conditions[3];

  if (lambda1 > 0.0) {
    rep.gauge_homothety = detect_homothety(K, E).has_value();
    double level = std::pow(static_cast<double>(n), n) * volume(E);
    double dev = 0.0;
    for (double v : I) dev = std::max(dev, std::fabs(v - level));
    rep.constant_at_gauge_level = dev <= tol_rel * level;
  }
  rep.notes =
      "equality characterizations of the higher quotients I_i/I_{i,j} require a smooth gauge; "
      "polytopal gauges are never smooth, so those are advisory only";
  return rep;
}

// -------------------------------------------------------- law suite

enum class LawId {
  STEINER_SHIFT,
  IN_OF_OUT,
  FAMILY_CONCAVITY,
  BM_CONCAVITY,
  DVOL_EQ_SURFACE,
  WULFF_SHIFT,
  SUPPORT_AGREEMENT,
  LIMIT_SHAPE,
  OMEGA_COMPARE,
  MINIMIZER,
};

inline const char* law_name(LawId id) {
  switch (id) {
    case LawId::STEINER_SHIFT: return "STEINER_SHIFT";
    case LawId::IN_OF_OUT: return "IN_OF_OUT";
    case LawId::FAMILY_CONCAVITY: return "FAMILY_CONCAVITY";
    case LawId::BM_CONCAVITY: return "BM_CONCAVITY";
    case LawId::DVOL_EQ_SURFACE: return "DVOL_EQ_SURFACE";
    case LawId::WULFF_SHIFT: return "WULFF_SHIFT";
    case LawId::SUPPORT_AGREEMENT: return "SUPPORT_AGREEMENT";
    case LawId::LIMIT_SHAPE: return "LIMIT_SHAPE";
    case LawId::OMEGA_COMPARE: return "OMEGA_COMPARE";
    case LawId::MINIMIZER: return "MINIMIZER";
  }
  return "?";
}

inline std::optional<LawId> law_from_name(const std::string& s) {
  for (LawId id : {LawId::STEINER_SHIFT, LawId::IN_OF_OUT, LawId::FAMILY_CONCAVITY, LawId::BM_CONCAVITY,
                   LawId::DVOL_EQ_SURFACE, LawId::WULFF_SHIFT, LawId::SUPPORT_AGREEMENT, LawId::LIMIT_SHAPE,
                   LawId::OMEGA_COMPARE, LawId::MINIMIZER})
    if (s == law_name(id)) return id;
  return std::nullopt;
}

struct LawParams {
  std::optional<double> l0, l1, lambda, mu, h, tol;
  std::optional<DirectionSet> omega, omega2;
  unsigned long long seed = 1;
};

struct PassReport {
  LawId law;
  bool pass = false;
  double max_residual = 0.0;
  std::string details;
};

namespace detail {

inline double geom_tol_for(const Polytope& A, const Polytope& B) {
  return eps_geom() * std::max({1.0, diameter(A), diameter(B)});
}

}  // namespace detail

inline PassReport law_check(LawId law, const Polytope& K, const Polytope& E, const LawParams& prm = {}) {
  const int n = K.dim;
  const double r = inradius(K, E).r;
  PassReport rep;
  rep.law = law;
  std::ostringstream det;

  // parameters not pinned by the caller are drawn reproducibly from the seed
  std::mt19937_64 lrng(prm.seed);
  auto draw = [&lrng](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(lrng);
  };

  auto fail_if = [&rep](double resid, double tol) {
    rep.max_residual = std::max(rep.max_residual, resid);
    if (resid > tol) rep.pass = false;
  };
  rep.pass = true;

  switch (law) {
    case LawId::STEINER_SHIFT: {
      const double tol = prm.tol.value_or(1e-8);
      QuermassVector q = steiner_fit(K, E);
      for (double lam : {0.5, 1.0, 2.0}) {
        QuermassVector ql = steiner_fit(parallel_body(K, E, lam), E);
        for (int i = 0; i <= n; ++i) {
          double pred = 0.0;
          for (int k = 0; k <= n - i; ++k) pred += binom(n - i, k) * q[i + k] * std::pow(lam, k);
          fail_if(std::fabs(ql[i] - pred) / std::max(1.0, std::fabs(pred)), tol);
        }
      }
      det << "W_i(K+lE;E) vs shifted coefficients at l in {0.5,1,2}";
      break;
    }
    case LawId::IN_OF_OUT: {
      double l0 = prm.l0.value_or(draw(-0.7, -0.1) * r);
      double l1 = prm.l1.value_or(draw(0.3, 1.2) * std::max(r, 1.0));
      if (!(-r < l0 && l0 < l1)) throw BadParams("need -inr < l0 < l1");
      Polytope A = parallel_body(K, E, l0);
      Polytope B = erode(parallel_body(K, E, l1), l1 - l0, E);
      double resid = hausdorff(A, B);
      fail_if(resid, prm.tol.value_or(detail::geom_tol_for(A, B)));
      det << "K_{l0} vs (K_{l1} ~ |l0-l1|E), Hausdorff " << resid;
      break;
    }
    case LawId::FAMILY_CONCAVITY: {
      double l0 = prm.l0.value_or(draw(-0.8, -0.2) * r);
      double l1 = prm.l1.value_or(draw(0.4, 1.6) * std::max(r, 1.0));
      double mu = prm.mu.value_or(draw(0.2, 0.8));
      Polytope A = parallel_body(K, E, l0);
      Polytope B = parallel_body(K, E, l1);
      Polytope mix = minkowski_sum(scale_body(A, mu), scale_body(B, 1.0 - mu));
      Polytope target = parallel_body(K, E, mu * l0 + (1.0 - mu) * l1);
      double resid = max_violation(mix, target);
      fail_if(resid, prm.tol.value_or(detail::geom_tol_for(mix, target)));
      det << "mu K_{l0} + (1-mu) K_{l1} inside K_{mix}, violation " << resid;
      break;
    }
    case LawId::BM_CONCAVITY: {
      double l0 = prm.l0.value_or(draw(-0.7, -0.2) * r);
      double l1 = prm.l1.value_or(draw(0.4, 1.4) * std::max(r, 1.0));
      double mu = prm.mu.value_or(draw(0.25, 0.75));
      const double tol = prm.tol.value_or(1e-8);
      Polytope A = parallel_body(K, E, l0);
      Polytope B = parallel_body(K, E, l1);
      QuermassVector qa = steiner_fit(A, E), qb = steiner_fit(B, E);
      QuermassVector qm = steiner_fit(minkowski_sum(scale_body(A, mu), scale_body(B, 1.0 - mu)), E);
      for (int i = 0; i <= n - 1; ++i) {
        double ex = 1.0 / (n - i);
        double lhs = std::pow(qm[i], ex);
        double rhs = mu * std::pow(qa[i], ex) + (1.0 - mu) * std::pow(qb[i], ex);
        fail_if((rhs - lhs) / std::max(1.0, rhs), tol);
      }
      det << "W_i^{1/(n-i)} concavity under Minkowski combination";
      break;
    }
    case LawId::DVOL_EQ_SURFACE: {
      const double tol = prm.tol.value_or(1e-3);
      const double h = prm.h.value_or(1e-4 * std::max(1.0, r));
      std::vector<double> lams;
      if (prm.lambda) lams.push_back(*prm.lambda);
      else
        lams = {draw(-0.6, -0.4) * r, draw(-0.3, -0.1) * r, draw(0.2, 0.5) * std::max(r, 1.0),
                draw(0.7, 1.0) * std::max(r, 1.0)};
      int tested = 0, skipped = 0;
      for (double lam : lams) {
        if (lam - h <= -r) continue;
        double vm = volume(parallel_body(K, E, lam - h));
        double v0 = volume(parallel_body(K, E, lam));
        double vp = volume(parallel_body(K, E, lam + h));
        double S = rel_surface_area(parallel_body(K, E, lam), E);
        double sc = std::max(1.0, std::fabs(S));
        if (std::fabs((vp - v0) / h - (v0 - vm) / h) > 10.0 * tol * sc) {
          ++skipped;  // breakpoint: one-sided derivatives disagree
          continue;
        }
        ++tested;
        fail_if(std::fabs((vp - vm) / (2.0 * h) - S) / sc, tol);
      }
      if (tested == 0) rep.pass = false;
      det << "dvol/dl vs S(K_l;E), tested " << tested << ", breakpoints skipped " << skipped;
      break;
    }
    case LawId::WULFF_SHIFT: {
      DirectionSet omega = prm.omega.value_or(DirectionSet::of_normals(K));
      double L = prm.lambda.value_or(draw(0.5, 1.5) * std::max(r, 1.0));
      std::vector<double> lams = {-0.6 * r, -0.2 * r, 0.3 * L, 0.7 * L, L};
      if (prm.l0) lams.push_back(*prm.l0);
      Polytope WL = wulff_body(K, E, omega, L);
      for (double lam : lams) {
        if (!(lam > -r && lam <= L)) continue;
        Polytope lhs = wulff_body(K, E, omega, lam);
        Polytope rhs = parallel_body(WL, E, lam - L);
        fail_if(hausdorff(lhs, rhs), prm.tol.value_or(detail::geom_tol_for(lhs, rhs)));
      }
      det << "K(Omega,l) vs (K(Omega,L))_{l-L}";
      break;
    }
    case LawId::SUPPORT_AGREEMENT: {
      DirectionSet omega = prm.omega.value_or(DirectionSet::of_normals(K));
      double lam = prm.lambda.value_or(draw(0.4, 2.0));
      if (!(lam > 0.0)) throw BadParams("SUPPORT_AGREEMENT needs lambda > 0");
      Polytope W = wulff_body(K, E, omega, lam);
      const double tol = prm.tol.value_or(eps_geom() * std::max(1.0, diameter(W)));
      for (const Vec& u : omega.dirs)
        fail_if(std::fabs(support(W, u) - (support(K, u) + lam * support(E, u))), tol);
      det << "h_{K(Omega,l)} = h_K + l h_E on Omega at l=" << lam;
      break;
    }
    case LawId::LIMIT_SHAPE: {
      const double tol = prm.tol.value_or(1e-2);
      DirectionSet omega = prm.omega.value_or(DirectionSet::of_normals(K));
      Polytope envelope = gauge_envelope(E, omega);
      double prev = std::numeric_limits<double>::infinity();
      double prev_w = prev, last = 0.0, last_w = 0.0;
      for (double lam : {10.0, 100.0, 1000.0}) {
        last = hausdorff(scale_body(parallel_body(K, E, lam), 1.0 / lam), E);
        last_w = hausdorff(scale_body(wulff_body(K, E, omega, lam), 1.0 / lam), envelope);
        if (last > prev || last_w > prev_w) rep.pass = false;
        prev = last;
        prev_w = last_w;
      }
      fail_if(last, tol);
      fail_if(last_w, tol);
      det << "d((1/l)K_l, E)=" << last << ", d((1/l)K(Omega,l), E^Omega)=" << last_w << " at l=1e3";
      break;
    }
    case LawId::OMEGA_COMPARE: {
      DirectionSet o1 = prm.omega.value_or(DirectionSet::of_normals(K));
      DirectionSet o2 = prm.omega2.value_or(o1.merged(DirectionSet::of_normals(E, "U(E)")));
      const double tol = prm.tol.value_or(1e-9);
      for (double f : {-0.6, -0.25, -0.05}) {
        double lam = f * r;
        double i1 = isoperimetric_quotient(wulff_body(K, E, o1, lam), E);
        double i2 = isoperimetric_quotient(wulff_body(K, E, o2, lam), E);
        fail_if(std::fabs(i1 - i2) / std::max(1.0, std::fabs(i1)), tol);
      }
      det << "sign(I^{O1}-I^{O2}) for l>0:";
      for (double lam : {0.5, 1.0, 2.0}) {
        double i1 = isoperimetric_quotient(wulff_body(K, E, o1, lam), E);
        double i2 = isoperimetric_quotient(wulff_body(K, E, o2, lam), E);
        double d = i1 - i2;
        det << " l=" << lam << ":" << (d > tol ? "+" : (d < -tol ? "-" : "0"));
      }
      break;  // the open question itself is recorded, never asserted
    }
    case LawId::MINIMIZER: {
      DirectionSet omega = prm.omega.value_or(DirectionSet::of_normals(K));
      if (!determines(omega, K)) throw NotDetermining();
      Polytope envelope = gauge_envelope(E, omega);
      double bound = std::pow(static_cast<double>(n), n) * volume(envelope);
      double I = isoperimetric_quotient(K, E);
      const double tol = prm.tol.value_or(1e-9 * std::max(1.0, bound));
      bool homothetic = detect_homothety(K, envelope).has_value();
      bool equal = std::fabs(I - bound) <= tol;
      rep.max_residual = std::max(0.0, bound - I);
      rep.pass = I >= bound - tol && (homothetic == equal);
      det << "I(K;E)=" << I << " vs n^n vol(E^Omega)=" << bound
          << (homothetic ? ", equality case (homothetic)" : "");
      break;
    }
  }
  rep.details = det.str();
  return rep;
}

// Product formula: I_{i,j} factors through the intermediate quotients
// I_k = W_{k+1}^{n-k} / W_k^{n-k-1} with exponents (n-i)(n-j)/((n-k-1)(n-k)).
inline double quotient_product_formula(const QuermassVector& q, int i, int j) {
  const int n = q.n;
  double acc = 1.0;
  for (int k = i; k <= j - 1; ++k) {
    double Ik = std::pow(q[k + 1], n - k) / std::pow(q[k], n - k - 1);
    acc *= std::pow(Ik, static_cast<double>((n - i) * (n - j)) / ((n - k - 1) * (n - k)));
  }
  return acc;
}

}  // namespace polycalc
