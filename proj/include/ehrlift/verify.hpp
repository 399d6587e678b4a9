#pragma once

#include <optional>
#include <string>

#include "ehrlift/engine.hpp"

namespace ehrlift {

// polynomial in one variable n, rational coefficients ascending
struct UniPoly {
    QVec coeffs;

    int degree() const;
    Rat eval(const Rat& n) const;
    Rat leading() const;
    std::string str() const;
    bool operator==(const UniPoly&) const = default;
};

UniPoly unipoly(QVec coeffs);  // strips trailing zeros

// numerator h(x) over (1-x)^{den_exp}
struct HStarData {
    QVec h;
    int den_exp = 0;

    std::string str() const;
};

// sum of f(a) over the lattice points of nP
Rat count_weighted(const Polytope& p, const Weight& f, long long n);

// sum of q^{w(a)} t^a over nP, in VarSet{p, s} layout (x exponent 0)
LaurentPoly count_q(const Polytope& p, const WeightSystem& w, long long n);

// sum over a of t^a * prod_i (1 + q_i + ... + q_i^{w_i(a)})
LaurentPoly count_r(const Polytope& p, const WeightSystem& w, long long n);

// the unique polynomial of degree <= dim(P) + deg(f) through the weighted
// counts at n = 0..dim+deg, validated at the next three nodes
UniPoly interpolate(const Polytope& p, const PolynomialWeight& f);

// h(x) = (1-x)^{deg+1} * sum_n E(n) x^n, with a round-trip check
HStarData series_from_poly(const UniPoly& e);

struct CheckResult {
    std::string name;
    std::string polytope_id;
    std::string weight_id;
    bool pass = false;
    std::string detail;
};

std::string render_report(const std::vector<CheckResult>& rs);
bool all_pass(const std::vector<CheckResult>& rs);

using Report = std::vector<CheckResult>;

// lattice point counts of the graph lift agree with P for n = 0..5, same dim
Report verify_q_lift(const Polytope& p, const WeightSystem& w, const std::string& pid,
                     const std::string& wid);

// counts of the box lift equal both the subset expansion and the
// prod(w_i + 1)-weighted counts for n = 0..5
Report verify_r_lift(const Polytope& p, const WeightSystem& w, const std::string& pid,
                     const std::string& wid);

// w_i = coordinate functions t_{coords[i]}; dim of the box lift is
// dim(P) + #{i : t_{coords[i]} not identically 0 on P}, degrees match
Report verify_dim_formula(const Polytope& p, const std::vector<int>& coords,
                          const std::string& pid, const std::string& wid);

// linear w >= 0: deg E^{s,w} = d+1, its h-vector is in N, and the h-vector
// of the box lift dominates the h-vector of P componentwise
Report verify_positivity(const Polytope& p, const LinearForm& w, const std::string& pid,
                         const std::string& wid);

// vertex extrema of w sandwich E^{s,w}(n) between c1*n*E(n) and c2*n*E(n);
// constant vertex weight k forces equality and vol of the lift = k*vol(P)
Report verify_bounds(const Polytope& p, const LinearForm& w, const std::string& pid,
                     const std::string& wid);

// leading coefficient of the interpolated weighted count equals the integral
// of the homogeneous weight over P
Report verify_leading_coefficient(const Polytope& p, const PolynomialWeight& f,
                                  const std::string& pid, const std::string& wid);

// first triangulation (deterministic order) whose simplices all carry the
// same multiset of vertex weight vectors; when found, the assembled series
// numerator over the common denominator is checked to be nonnegative
std::optional<Triangulation> compatible_triangulation_search(const Polytope& p,
                                                             const WeightSystem& w,
                                                             PointConfig config, Report& out,
                                                             const std::string& pid,
                                                             const std::string& wid);

// (k^2, k) is irreducible in the semigroup {(sum of squares, sum)} for all
// k = 1..K, witnessing an infinite minimal generating set; guard K <= 60
Report verify_non_noetherian_witness(long long k_max);

// cross-checks hilbert_basis of the cone over the box lift against the
// fiber expansion of the hilbert basis of the cone over P
Report verify_hilbert_expansion(const Polytope& p, const WeightSystem& w, const std::string& pid,
                                const std::string& wid);

struct BatteryEntry {
    std::string id;
    Polytope poly;
    std::vector<std::pair<std::string, WeightSystem>> weights;  // linear systems
};

std::vector<BatteryEntry> battery();

// the full deterministic check suite over the battery
Report verify_all();

}  // namespace ehrlift
