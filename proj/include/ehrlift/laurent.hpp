#pragma once

#include <map>
#include <string>
#include <vector>

#include "ehrlift/rational.hpp"

namespace ehrlift {

// Exponent vector; one entry per variable of the governing VarSet.
using ExpVec = std::vector<long long>;

// Fixed variable universe for one computation: q1..qp, t1..ts, x (in that order).
struct VarSet {
    int p = 0;  // number of q variables
    int s = 0;  // number of t variables

    int size() const { return p + s + 1; }
    int q_index(int i) const { return i; }          // 0-based
    int t_index(int i) const { return p + i; }      // 0-based
    int x_index() const { return p + s; }
    std::string name(int idx) const;

    bool operator==(const VarSet&) const = default;
};

ExpVec unit_exp(int width, int idx);

// Multivariate Laurent polynomial: exponent vector -> nonzero coefficient.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(int width) : width_(width) {}
    static LaurentPoly constant(int width, const Rat& c);
    static LaurentPoly monomial(const ExpVec& e, const Rat& c = 1);

    int width() const { return width_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExpVec, Rat>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void add_term(const ExpVec& e, const Rat& c);
    Rat coeff(const ExpVec& e) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly scaled(const Rat& c) const;
    bool operator==(const LaurentPoly& o) const;

    // Multiply by the monomial c * z^e.
    LaurentPoly times_monomial(const ExpVec& e, const Rat& c = 1) const;

    // var -> z^m (m given over the full VarSet). z^e maps to z^{e + e_var*(m - u_var)}.
    LaurentPoly substitute_monomial(int var, const ExpVec& m) const;

    // Sets variable var to 1 (drops its exponent).
    LaurentPoly set_var_one(int var) const;

    // theta operator: z^e -> e_var * z^e  (i.e. var * d/d var).
    LaurentPoly theta(int var) const;

    // Exact division; throws std::domain_error if the quotient is not a
    // Laurent polynomial. divides() is the non-throwing probe.
    LaurentPoly exact_divide(const LaurentPoly& b) const;
    bool divides(const LaurentPoly& b, LaurentPoly* quotient_out = nullptr) const;

    // Coefficient of x^k when the poly is read as a polynomial in variable var;
    // the returned poly keeps full width with var-exponent zero.
    LaurentPoly coeff_of(int var, long long k) const;
    long long min_exp(int var) const;  // 0 for the zero poly
    long long max_exp(int var) const;

    std::string str(const VarSet& vars) const;

private:
    int width_ = 0;
    std::map<ExpVec, Rat> terms_;
};

std::string monomial_str(const VarSet& vars, const ExpVec& e);

}  // namespace ehrlift
