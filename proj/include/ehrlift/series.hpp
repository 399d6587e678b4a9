#pragma once

#include <set>
#include <vector>

#include "ehrlift/laurent.hpp"

namespace ehrlift {

// One denominator factor (1 - coeff * z^expo). expo is never the zero vector.
struct BinomialFactor {
    Rat coeff = 1;
    ExpVec expo;

    bool operator==(const BinomialFactor&) const = default;
    bool operator<(const BinomialFactor& o) const {
        if (expo != o.expo) return expo < o.expo;
        return coeff < o.coeff;
    }
    LaurentPoly poly() const;  // 1 - coeff*z^expo as a LaurentPoly
};

// num / prod of binomial factors, expanded as a power series in ascending x.
// Denominators stay factored; equality is decided by cross-multiplication.
class RationalSeries {
public:
    RationalSeries() = default;
    RationalSeries(VarSet vars, LaurentPoly num, std::vector<BinomialFactor> den);
    static RationalSeries zero(const VarSet& vars);
    static RationalSeries constant(const VarSet& vars, const Rat& c);

    const VarSet& vars() const { return vars_; }
    const LaurentPoly& num() const { return num_; }
    const std::vector<BinomialFactor>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalSeries operator+(const RationalSeries& o) const;
    RationalSeries operator-(const RationalSeries& o) const;
    RationalSeries operator*(const RationalSeries& o) const;
    RationalSeries scaled(const Rat& c) const;
    RationalSeries times_monomial(const ExpVec& e, const Rat& c = 1) const;

    // Cancels denominator factors that exactly divide the numerator.
    RationalSeries simplified() const;

    LaurentPoly den_expanded() const;

    std::string str() const;

private:
    VarSet vars_;
    LaurentPoly num_;
    std::vector<BinomialFactor> den_;

    void canonicalize();
};

// A.num * prod(B.den) == B.num * prod(A.den). Throws on VarSet mismatch.
bool series_equal(const RationalSeries& a, const RationalSeries& b);

// z -> 1/z for each selected variable; factors are rewritten so the
// denominator again contains only canonical binomials.
RationalSeries invert_variables(const RationalSeries& a, const std::set<int>& vars);
RationalSeries invert_all_variables(const RationalSeries& a);

// var -> z^m (composite exponent map, see LaurentPoly::substitute_monomial).
RationalSeries substitute_monomial(const RationalSeries& a, int var, const ExpVec& m);

// Sets var to 1 everywhere. A denominator factor that vanishes must cancel
// against the numerator first; otherwise std::domain_error.
RationalSeries set_var_one(const RationalSeries& a, int var);

// (var * d/d var A) with var then set to 1.
RationalSeries q_derivative_at_one(const RationalSeries& a, int var);

// Coefficients of x^0..x^N as LaurentPolys in the remaining variables.
std::vector<LaurentPoly> truncate(const RationalSeries& a, int n);

}  // namespace ehrlift
