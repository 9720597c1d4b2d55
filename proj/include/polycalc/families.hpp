#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "metrics.hpp"

namespace polycalc {

// Finite direction set containing the origin in the interior of its convex
// hull (positive spanning), deduplicated at the angular tolerance.
struct DirectionSet {
  int dim = 2;
  std::vector<Vec> dirs;  // unit
  std::string label;

  DirectionSet(int d, const std::vector<Vec>& raw, std::string lbl = "")
      : dim(d), label(std::move(lbl)) {
    for (const Vec& v : raw) {
      Vec u = unit(v);
      bool dup = false;
      for (const Vec& w : dirs)
        if (same_direction(u, w, eps_geom())) { dup = true; break; }
      if (!dup) dirs.push_back(u);
    }
    if (!positively_spans(dirs, dim))
      throw Unbounded("direction set does not positively span");
  }

  bool contains(const Vec& u, double tol) const {
    for (const Vec& w : dirs)
      if (same_direction(u, w, tol)) return true;
    return false;
  }

  static DirectionSet axes(int dim) {
    std::vector<Vec> ds;
    for (int i = 0; i < dim; ++i) {
      ds.push_back(axis(dim, i, 1.0));
      ds.push_back(axis(dim, i, -1.0));
    }
    return DirectionSet(dim, ds, "axes");
  }

  static DirectionSet of_normals(const Polytope& P, const std::string& lbl = "U(K)") {
    std::vector<Vec> ds;
    for (const Direction& d : facet_normals(P)) ds.push_back(d.vec());
    return DirectionSet(P.dim, ds, lbl);
  }

  DirectionSet merged(const DirectionSet& other) const {
    std::vector<Vec> ds = dirs;
    ds.insert(ds.end(), other.dirs.begin(), other.dirs.end());
    return DirectionSet(dim, ds, label + "+" + other.label);
  }
};

// Whether Omega determines K, i.e. U(K) is contained in Omega.
inline bool determines(const DirectionSet& omega, const Polytope& K) {
  for (const Direction& u : facet_normals(K))
    if (!omega.contains(u.vec(), eps_geom())) return false;
  return true;
}

// K_lambda: erosion for lambda < 0, Minkowski sum for lambda > 0.
inline Polytope parallel_body(const Polytope& K, const Polytope& E, double lambda) {
  if (K.dim != E.dim) throw DimensionMismatch();
  if (lambda == 0.0) return K;
  if (lambda > 0.0) return minkowski_sum(K, scale_body(E, lambda));
  double r = inradius(K, E).r;
  if (lambda < -r - eps_geom() * std::max(1.0, r))
    throw OutOfRange("lambda below -inr(K;E)");
  return erode(K, std::min(-lambda, r), E);
}

// Wulff shape K(Omega,lambda): intersection over u in Omega of halfspaces at
// offsets h_K(u) + lambda h_E(u).  Coincides with K_lambda for lambda <= 0
// and is a tangential body of K_lambda for lambda > 0.
inline Polytope wulff_body(const Polytope& K, const Polytope& E, const DirectionSet& omega,
                           double lambda) {
  if (K.dim != E.dim || omega.dim != K.dim) throw DimensionMismatch();
  if (!determines(omega, K)) throw NotDetermining("Omega does not contain U(K)");
  if (lambda < 0.0) {
    double r = inradius(K, E).r;
    if (lambda < -r - eps_geom() * std::max(1.0, r)) throw OutOfRange("lambda below -inr(K;E)");
    lambda = std::max(lambda, -r);
  }
  std::vector<HalfSpace> hs;
  hs.reserve(omega.dirs.size());
  for (const Vec& u : omega.dirs) hs.emplace_back(u, support(K, u) + lambda * support(E, u));
  return intersect_halfspaces(hs);
}

// E^Omega: the smallest tangential body of E determined by Omega.
inline Polytope gauge_envelope(const Polytope& E, const DirectionSet& omega) {
  if (E.dim != omega.dim) throw DimensionMismatch();
  std::vector<HalfSpace> hs;
  hs.reserve(omega.dirs.size());
  for (const Vec& u : omega.dirs) hs.emplace_back(u, support(E, u));
  Polytope env = intersect_halfspaces(hs);
  // postcondition: E sits inside its envelope and supports agree on Omega
  if (!subset(E, env, eps_geom() * std::max(1.0, diameter(E))))
    throw ConstructionError("gauge envelope does not contain the gauge");
  for (const Vec& u : omega.dirs)
    if (std::fabs(support(env, u) - support(E, u)) > eps_geom() * std::max(1.0, diameter(env)))
      throw ConstructionError("gauge envelope support mismatch on Omega");
  return env;
}

// Form body K* = E^{U(K)}.
inline Polytope form_body(const Polytope& K, const Polytope& E) {
  return gauge_envelope(E, DirectionSet::of_normals(K));
}

// Sampling grid for one-parameter families.  Default: points clustered
// geometrically near the inradius endpoint (where the curve bends), plus a
// uniform tail to lambda_max; -inr itself is excluded.
struct GridSpec {
  double lo = std::numeric_limits<double>::quiet_NaN();  // NaN: auto, -r + delta
  double hi = 1.0;
  int steps = 64;
  bool log_refine = true;
  double delta_frac = 1e-6;  // delta = delta_frac * r for the auto endpoint
};

inline std::vector<double> make_grid(double r, const GridSpec& g) {
  if (g.steps < 2) throw BadParams("grid needs at least 2 steps");
  double lo = std::isnan(g.lo) ? -r + g.delta_frac * std::max(r, 1e-12) : g.lo;
  if (lo <= -r) throw OutOfRange("grid reaches -inr(K;E)");
  if (g.hi <= lo) throw BadParams("grid upper end not above lower end");
  std::vector<double> out;
  if (g.log_refine && lo < 0.0 && g.hi > 0.0) {
    // geometric offsets from -r covering (lo, 0], then a uniform tail
    int m1 = g.steps / 2;
    double s0 = lo + r;  // offset from -r, > 0
    if (m1 == 1) out.push_back(lo);
    else
      for (int k = 0; k < m1; ++k)
        out.push_back(-r + s0 * std::pow(r / s0, static_cast<double>(k) / (m1 - 1)));
    int m2 = g.steps - m1;
    for (int k = 1; k <= m2; ++k) out.push_back(g.hi * static_cast<double>(k) / m2);
  } else {
    for (int k = 0; k < g.steps; ++k)
      out.push_back(lo + (g.hi - lo) * static_cast<double>(k) / (g.steps - 1));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct QuotientSelection {
  bool base = true;  // I
  bool omega = false;
  bool ii = false;
  bool iij = false;
};

struct CurveSample {
  double lambda = 0.0;
  QuermassVector W;
  double S = 0.0;
  double I = 0.0;
  std::optional<double> IOmega;
  std::vector<double> Ii;   // i = 0..n-2
  std::vector<double> Iij;  // pairs (i,j), 0 <= i < j < n, lexicographic
};

struct FamilyCurve {
  int dim = 2;
  std::vector<CurveSample> samples;
  Polytope K, E;
  std::optional<DirectionSet> omega;

  std::vector<double> lambdas() const {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back(s.lambda);
    return out;
  }
  std::vector<double> quotient_I() const {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back(s.I);
    return out;
  }
};

inline std::vector<std::pair<int, int>> quermass_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back({i, j});
  return out;
}

// One-parameter quotient curve sampled over explicit lambdas.
inline FamilyCurve sample_curve(const Polytope& K, const Polytope& E, const std::vector<double>& lambdas,
                                const std::optional<DirectionSet>& omega = std::nullopt,
                                const QuotientSelection& sel = {}) {
  if (lambdas.empty()) throw EmptyInput("no grid points");
  if (sel.omega && !omega) throw BadParams("I^Omega requested without a direction set");
  if (omega && !determines(*omega, K)) throw NotDetermining("Omega does not contain U(K)");
  const int n = K.dim;
  FamilyCurve curve;
  curve.dim = n;
  curve.K = K;
  curve.E = E;
  curve.omega = omega;
  double prev = -std::numeric_limits<double>::infinity();
  for (double lam : lambdas) {
    if (!(lam > prev)) throw BadParams("grid must be strictly increasing");
    prev = lam;
    Polytope B = parallel_body(K, E, lam);
    if (!B.full_dim) throw DomainError("sampled parallel body is lower-dimensional");
    CurveSample s;
    s.lambda = lam;
    s.W = steiner_fit(B, E);
    s.S = rel_surface_area(s.W);
    s.I = isoperimetric_quotient(s.W);
    if (!(s.I > 0.0) || !std::isfinite(s.I)) throw DomainError("quotient not finite/positive");
    if (sel.omega) {
      Polytope WB = wulff_body(K, E, *omega, lam);
      s.IOmega = isoperimetric_quotient(steiner_fit(WB, E));
    }
    if (sel.ii)
      for (int i = 0; i <= n - 2; ++i)
        s.Ii.push_back(std::pow(s.W[i + 1], n - i) / std::pow(s.W[i], n - i - 1));
    if (sel.iij)
      for (auto [i, j] : quermass_pairs(n))
        s.Iij.push_back(std::pow(s.W[j], n - i) / std::pow(s.W[i], n - j));
    curve.samples.push_back(std::move(s));
  }
  return curve;
}

inline FamilyCurve sample_curve(const Polytope& K, const Polytope& E, const GridSpec& grid,
                                const std::optional<DirectionSet>& omega = std::nullopt,
                                const QuotientSelection& sel = {}) {
  return sample_curve(K, E, make_grid(inradius(K, E).r, grid), omega, sel);
}

}  // namespace polycalc
