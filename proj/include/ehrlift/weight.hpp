#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "ehrlift/polytope.hpp"

namespace ehrlift {

struct LinearForm {
    ZVec coeffs;  // w(a) = sum c_j a_j
};

struct MonomialWeight {
    ZVec exps;  // w(a) = prod a_j^{e_j}
};

struct PolynomialWeight {
    std::vector<std::pair<Rat, MonomialWeight>> terms;
};

// one summand P(n) * base^n of an exponential-polynomial factor
struct ExpPolyTerm {
    QVec poly;  // coefficients of P, ascending degree
    Rat base;   // nonzero
};

// h(a) = prod_i ( sum_j P_ij(a_i) * base_ij^{a_i} ), one factor per coordinate
struct ExpPolyWeight {
    std::vector<std::vector<ExpPolyTerm>> coords;
};

using Weight = std::variant<LinearForm, MonomialWeight, PolynomialWeight, ExpPolyWeight>;

struct WeightSystem {
    std::vector<Weight> ws;
    int arity() const { return (int)ws.size(); }
};

Rat eval(const Weight& w, const ZVec& a);
Rat eval_linear(const LinearForm& w, const ZVec& a);

// all weights as LinearForms; throws if any is not linear
std::vector<LinearForm> linear_forms(const WeightSystem& w);

// degree of each coordinate weight; polynomial arithmetic on weights
PolynomialWeight to_poly(const Weight& w);  // throws on ExpPolyWeight
PolynomialWeight poly_add(const PolynomialWeight& a, const PolynomialWeight& b);
PolynomialWeight poly_mul(const PolynomialWeight& a, const PolynomialWeight& b);
PolynomialWeight poly_const(const Rat& c, int dim);
int poly_degree(const PolynomialWeight& a);

// conv{(v, w_1(v), ..., w_p(v))}: same dimension and lattice counts as P
Polytope lift_q(const Polytope& p, const WeightSystem& w);

// conv of all partial lifts (v,0) + sum_{j in S} w_j(v) e_{s+j}, S subset of [p]
Polytope lift_r(const Polytope& p, const WeightSystem& w);

struct HilbertBasis {
    ZMat elements;  // (c_i, d_i) with grading last, lex sorted
    long long bound = 0;
    bool certified = false;
};

// Irreducible semigroup elements of the cone spanned by the generators
// (grading = last coordinate, positive on every generator) up to the given
// grading bound; certified iff they regenerate every cone point up to 2*bound.
HilbertBasis hilbert_basis(const ZMat& generators, long long bound);

// {(c_i, b, d_i) : 0 <= b_j <= w_j(c_i)} for each (c_i, d_i) of H_P
HilbertBasis construct_H_Pw(const HilbertBasis& h_p, const WeightSystem& w);

// e irreducible in the semigroup decided by the membership oracle
bool is_irreducible(const ZVec& e, const std::function<bool(const ZVec&)>& member);

}  // namespace ehrlift
