#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "algebra.hpp"

namespace polycalc {

struct InradiusResult {
  double r = 0.0;
  Vec center;
  std::vector<int> basis;  // active facet rows of the optimal LP basis
};

// Relative inradius inr(K;E): the largest r such that some translate x + rE
// fits inside K.  Solved as the LP  max r  s.t.  <x,u> + r h_E(u) <= h_K(u)
// over the facet normals u of K; E is re-centered first so that all h_E(u)
// stay positive and the feasible set is pointed.
inline InradiusResult inradius(const Polytope& K, const Polytope& E) {
  if (K.dim != E.dim) throw DimensionMismatch();
  if (!K.full_dim || !E.full_dim) throw LowerDimensional("inradius needs full-dimensional bodies");
  const int n = K.dim;
  const Vec ec = centroid(E);
  std::vector<std::vector<double>> A;
  std::vector<double> b, c(static_cast<size_t>(n) + 1, 0.0);
  c.back() = 1.0;
  for (const HalfSpace& h : K.facets) {
    std::vector<double> row(static_cast<size_t>(n) + 1, 0.0);
    for (int i = 0; i < n; ++i) row[static_cast<size_t>(i)] = h.normal[i];
    row.back() = support(E, h.normal.vec()) - dot(ec, h.normal.vec());
    A.push_back(row);
    b.push_back(h.offset);
  }
  LpSolution sol = lp_maximize(A, b, c);
  if (!sol.feasible) throw ConstructionError("inradius LP infeasible");
  InradiusResult res;
  res.r = std::max(0.0, sol.value);
  Vec x = n == 2 ? Vec(sol.x[0], sol.x[1]) : Vec(sol.x[0], sol.x[1], sol.x[2]);
  res.center = x - ec * res.r;  // undo the gauge re-centering
  res.basis = sol.basis;
  return res;
}

// A pair (K,E) with the cached data every relative computation needs.
struct GaugeContext {
  Polytope K, E;
  double r = 0.0;
  Vec incenter;
  std::vector<Direction> normalsK;
  std::vector<int> certificate;  // LP optimality basis for r

  GaugeContext(Polytope k, Polytope e) : K(std::move(k)), E(std::move(e)) {
    InradiusResult ir = inradius(K, E);
    r = ir.r;
    incenter = ir.center;
    certificate = ir.basis;
    normalsK = facet_normals(K);
  }
};

// W_0..W_n of a body relative to a fixed gauge.
struct QuermassVector {
  int n = 2;
  std::array<double, 4> W{0, 0, 0, 0};

  double operator[](int i) const { return W[static_cast<size_t>(i)]; }
  double& operator[](int i) { return W[static_cast<size_t>(i)]; }
};

inline double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Relative quermassintegrals by fitting the Steiner polynomial
// vol(K + t E) = sum_i binom(n,i) W_i t^i  at the nodes t = 0..n.  The t=0
// sample pins W_0 = vol(K) exactly; the remaining coefficients come from the
// (well-conditioned at n <= 3) Vandermonde system.  W_n must reproduce vol(E)
// within eps_fit or the fit is rejected.
inline QuermassVector steiner_fit(const Polytope& K, const Polytope& E) {
  if (K.dim != E.dim) throw DimensionMismatch();
  if (!K.full_dim || !E.full_dim) throw LowerDimensional("steiner_fit needs full-dimensional bodies");
  const int n = K.dim;

  // When K and E live at very different scales the small coefficients drown
  // in the sampled volumes.  W_i is homogeneous of degree n-i in K, so fit a
  // rescaled, recentered copy instead and undo the scaling afterwards.
  const double dK = diameter(K), dE = diameter(E);
  if (dK < 0.125 * dE || dK > 8.0 * dE) {
    const double mu = dE / dK;
    Vec c = centroid(K);
    QuermassVector qs = steiner_fit(homothet(K, mu, c * (-mu)), E);
    QuermassVector q;
    q.n = n;
    q[0] = volume(K);  // the exact lambda = 0 sample, untouched by scaling
    for (int i = 1; i <= n; ++i) q[i] = qs[i] / std::pow(mu, n - i);
    return q;
  }

  std::vector<double> vols(static_cast<size_t>(n) + 1);
  vols[0] = volume(K);
  for (int k = 1; k <= n; ++k)
    vols[static_cast<size_t>(k)] = volume(minkowski_sum(K, scale_body(E, static_cast<double>(k))));

  // solve for c_1..c_n of vol(K+tE) = c_0 + c_1 t + ... + c_n t^n, c_0 fixed
  std::vector<std::vector<double>> M(static_cast<size_t>(n));
  std::vector<double> rhs(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    std::vector<double> row(static_cast<size_t>(n));
    double t = 1.0;
    for (int i = 1; i <= n; ++i) {
      t *= k;
      row[static_cast<size_t>(i - 1)] = t;
    }
    M[static_cast<size_t>(k - 1)] = row;
    rhs[static_cast<size_t>(k - 1)] = vols[static_cast<size_t>(k)] - vols[0];
  }
  std::vector<double> coef;
  if (!detail::solve_square(M, rhs, coef)) throw FitInconsistent("singular Vandermonde system");

  QuermassVector q;
  q.n = n;
  q[0] = vols[0];
  for (int i = 1; i <= n; ++i) q[i] = coef[static_cast<size_t>(i - 1)] / binom(n, i);

  double volE = volume(E);
  if (std::fabs(q[n] - volE) > eps_fit() * std::max(1.0, volE))
    throw FitInconsistent("leading Steiner coefficient disagrees with vol(E)");
  return q;
}

// Independent 2D oracle for W_1: the mixed area V(K,E) = 1/2 sum_edges
// h_E(u_i) len_i over the edges of K, computed without any Minkowski sum.
inline double mixed_area_oracle(const Polytope& K, const Polytope& E) {
  if (K.dim != 2 || E.dim != 2) throw WrongDimension("edge-sum mixed area is 2D only");
  if (!K.full_dim || !E.full_dim) throw LowerDimensional();
  double acc = 0.0;
  const size_t m = K.vertices.size();
  for (size_t i = 0; i < m; ++i) {
    const Vec& a = K.vertices[i];
    const Vec& b = K.vertices[(i + 1) % m];
    Vec edge = b - a;
    Vec n = unit(Vec(edge[1], -edge[0]));
    acc += support(E, n) * norm(edge);
  }
  return 0.5 * acc;
}

// S(K;E) = n W_1(K;E), the surface area of K relative to the gauge E.
inline double rel_surface_area(const Polytope& K, const Polytope& E) {
  return K.dim * steiner_fit(K, E)[1];
}

inline double rel_surface_area(const QuermassVector& q) { return q.n * q[1]; }

// I(K;E) = S(K;E)^n / vol(K)^{n-1}.
inline double isoperimetric_quotient(const QuermassVector& q) {
  double S = rel_surface_area(q);
  return std::pow(S, q.n) / std::pow(q[0], q.n - 1);
}

inline double isoperimetric_quotient(const Polytope& K, const Polytope& E) {
  return isoperimetric_quotient(steiner_fit(K, E));
}

// Classical quotient (gauge = Euclidean ball): exact perimeter/facet areas,
// the ball itself is never materialized.
inline double classical_quotient(const Polytope& K) {
  double S = classical_surface(K);
  return std::pow(S, K.dim) / std::pow(volume(K), K.dim - 1);
}

}  // namespace polycalc
