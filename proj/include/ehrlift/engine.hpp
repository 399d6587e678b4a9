#pragma once

#include "ehrlift/series.hpp"
#include "ehrlift/weight.hpp"

namespace ehrlift {

// generators (rows) in Z^{D+1}, linearly independent, grading last and positive
struct SimplicialCone {
    ZMat gens;
};

// open_facets: generator indices whose opposite facet is excluded
struct HalfOpenCone {
    SimplicialCone cone;
    std::vector<int> open_facets;
};

// {(v,1) : v vertex of P}; requires lattice vertices
ZMat cone_over(const Polytope& p);

// Cones over the simplices of T, with facets removed according to a generic
// rational reference point so that the half-open cones partition cone(P).
std::vector<HalfOpenCone> half_open_decompose(const Triangulation& t);

// Flips every facet flag; the result partitions the relative interior of cone(P).
std::vector<HalfOpenCone> flip_open_facets(const std::vector<HalfOpenCone>& cones);

// Lattice points x = sum c_i g_i with 0 <= c_i < 1 (0 < c_i <= 1 on open facets).
ZMat parallelepiped_points(const HalfOpenCone& c);

// Sum over cones of (sum_{r in parallelepiped} z^r) / prod_i (1 - z^{g_i}),
// in variables (t_1..t_s, x); q-variables of vars are left untouched.
RationalSeries transform(const std::vector<HalfOpenCone>& cones, const VarSet& vars);

// F^{q,w}(q,t,x): transform of the half-open decomposition with t_i replaced
// by q_1^{w_1(e_i)} ... q_p^{w_p(e_i)} t_i.
RationalSeries q_weighted_series(const Polytope& p, const WeightSystem& w);

// F^{r,w} = sum over I subset of [p] of prod_{j in I}(-q_j) / prod_i(1-q_i)
// times F^{q,w} with q_k = 1 for k outside I.
RationalSeries r_weighted_series(const Polytope& p, const WeightSystem& w);

// F^{s,w} = (q d/dq F^{q,w}) at q = 1.
RationalSeries s_weighted_series(const Polytope& p, const LinearForm& w);

// Sum over interior cone points of q^{w(a)} t^a x^n (linear w: -w(-a) = w(a)).
RationalSeries interior_q_series(const Polytope& p, const WeightSystem& w);

// F^{q,w}(1/q,1/t,1/x) == (-1)^{s+1} * interior series; needs P full-dimensional.
bool reciprocity_check_q(const Polytope& p, const WeightSystem& w);

// Closed form of sum_{n>=0} P(n+shift) base^n z^{n y} (forward), or
// sum_{n>=1} P(-n+shift) base^{-n} z^{n y} (backward), summed over the terms.
// The caller owns any base^shift constant.
RationalSeries expo_poly_1d_series(const std::vector<ExpPolyTerm>& h, const Rat& shift,
                                   const ExpVec& y, bool backward, const VarSet& vars);

// Reciprocity of sum h(a,n) t^a x^n for separable exponential-polynomial h
// (one factor per coordinate of (a, n)); the interior side weights by h(-a,-n).
// Restricted to full-dimensional lattice polytopes.
bool s_reciprocity_check(const Polytope& p, const ExpPolyWeight& h);

// F^{s,h} itself (forward orientation); exposed for oracle tests.
RationalSeries s_expo_series(const Polytope& p, const ExpPolyWeight& h, bool interior);

}  // namespace ehrlift
