#include "ehrlift/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ehrlift {

LaurentPoly BinomialFactor::poly() const {
    LaurentPoly r = LaurentPoly::constant((int)expo.size(), 1);
    r.add_term(expo, -coeff);
    return r;
}

RationalSeries::RationalSeries(VarSet vars, LaurentPoly num, std::vector<BinomialFactor> den)
    : vars_(vars), num_(std::move(num)), den_(std::move(den)) {
    if (num_.width() != vars_.size()) throw std::invalid_argument("numerator width mismatch");
    canonicalize();
}

RationalSeries RationalSeries::zero(const VarSet& vars) {
    return RationalSeries(vars, LaurentPoly(vars.size()), {});
}

RationalSeries RationalSeries::constant(const VarSet& vars, const Rat& c) {
    return RationalSeries(vars, LaurentPoly::constant(vars.size(), c), {});
}

void RationalSeries::canonicalize() {
    int w = vars_.size();
    int xi = vars_.x_index();
    std::vector<BinomialFactor> keep;
    keep.reserve(den_.size());
    for (auto f : den_) {
        if ((int)f.expo.size() != w) throw std::invalid_argument("factor width mismatch");
        bool zero_expo = std::all_of(f.expo.begin(), f.expo.end(), [](long long v) { return v == 0; });
        if (f.coeff == 0 || zero_expo) {
            // constant factor 1 - c: fold into the numerator
            Rat c = Rat(1) - (zero_expo ? f.coeff : Rat(0));
            if (c == 0) throw std::domain_error("vanishing denominator factor");
            num_ = num_.scaled(Rat(1) / c);
            continue;
        }
        // orient so the factor reads as 1 - c*z^g with g ahead in the series
        // order: positive x power, or x-free with first nonzero exponent positive.
        bool flip;
        if (f.expo[xi] != 0) {
            flip = f.expo[xi] < 0;
        } else {
            long long lead = 0;
            for (long long v : f.expo)
                if (v != 0) { lead = v; break; }
            flip = lead < 0;
        }
        if (flip) {
            // 1 - c*z^g = (-c*z^g) * (1 - (1/c)*z^{-g})
            ExpVec neg(w);
            for (int i = 0; i < w; ++i) neg[i] = -f.expo[i];
            num_ = num_.times_monomial(neg, Rat(-1) / f.coeff);
            f.expo = neg;
            f.coeff = Rat(1) / f.coeff;
        }
        keep.push_back(std::move(f));
    }
    den_ = std::move(keep);
    std::sort(den_.begin(), den_.end());
    if (num_.is_zero()) den_.clear();
}

LaurentPoly RationalSeries::den_expanded() const {
    LaurentPoly r = LaurentPoly::constant(vars_.size(), 1);
    for (auto& f : den_) r = r * f.poly();
    return r;
}

namespace {

using FactorCount = std::map<BinomialFactor, int>;

FactorCount count_factors(const std::vector<BinomialFactor>& v) {
    FactorCount m;
    for (auto& f : v) ++m[f];
    return m;
}

}  // namespace

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
    if (!(vars_ == o.vars_)) throw std::invalid_argument("VarSet mismatch");
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    FactorCount ca = count_factors(den_), cb = count_factors(o.den_);
    std::vector<BinomialFactor> den;
    LaurentPoly ext_a = LaurentPoly::constant(vars_.size(), 1);
    LaurentPoly ext_b = ext_a;
    FactorCount all = ca;
    for (auto& [f, n] : cb) all[f] = std::max(all[f], n);
    for (auto& [f, n] : all) {
        for (int i = 0; i < n; ++i) den.push_back(f);
        for (int i = ca[f]; i < n; ++i) ext_a = ext_a * f.poly();
        for (int i = cb[f]; i < n; ++i) ext_b = ext_b * f.poly();
    }
    return RationalSeries(vars_, num_ * ext_a + o.num_ * ext_b, std::move(den));
}

RationalSeries RationalSeries::operator-(const RationalSeries& o) const {
    return *this + o.scaled(-1);
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
    if (!(vars_ == o.vars_)) throw std::invalid_argument("VarSet mismatch");
    std::vector<BinomialFactor> den = den_;
    den.insert(den.end(), o.den_.begin(), o.den_.end());
    return RationalSeries(vars_, num_ * o.num_, std::move(den));
}

RationalSeries RationalSeries::scaled(const Rat& c) const {
    return RationalSeries(vars_, num_.scaled(c), den_);
}

RationalSeries RationalSeries::times_monomial(const ExpVec& e, const Rat& c) const {
    return RationalSeries(vars_, num_.times_monomial(e, c), den_);
}

RationalSeries RationalSeries::simplified() const {
    LaurentPoly num = num_;
    std::vector<BinomialFactor> den = den_;
    bool progress = true;
    while (progress && !num.is_zero()) {
        progress = false;
        for (size_t i = 0; i < den.size(); ++i) {
            LaurentPoly q;
            if (num.divides(den[i].poly(), &q)) {
                num = std::move(q);
                den.erase(den.begin() + i);
                progress = true;
                break;
            }
        }
    }
    return RationalSeries(vars_, std::move(num), std::move(den));
}

std::string RationalSeries::str() const {
    std::ostringstream os;
    os << "(" << num_.str(vars_) << ")";
    if (!den_.empty()) {
        os << "/(";
        for (auto& f : den_) os << "(" << f.poly().str(vars_) << ")";
        os << ")";
    }
    return os.str();
}

bool series_equal(const RationalSeries& a, const RationalSeries& b) {
    if (!(a.vars() == b.vars())) throw std::invalid_argument("VarSet mismatch");
    // cancel the shared denominator factors before cross-multiplying
    FactorCount ca = count_factors(a.den()), cb = count_factors(b.den());
    LaurentPoly da = LaurentPoly::constant(a.vars().size(), 1);
    LaurentPoly db = da;
    for (auto& [f, n] : ca) {
        int extra = n - (cb.count(f) ? cb[f] : 0);
        for (int i = 0; i < extra; ++i) da = da * f.poly();
    }
    for (auto& [f, n] : cb) {
        int extra = n - (ca.count(f) ? ca[f] : 0);
        for (int i = 0; i < extra; ++i) db = db * f.poly();
    }
    return a.num() * db == b.num() * da;
}

RationalSeries invert_variables(const RationalSeries& a, const std::set<int>& vars) {
    int w = a.vars().size();
    LaurentPoly num(w);
    for (auto& [e, c] : a.num().terms()) {
        ExpVec e2 = e;
        for (int v : vars) e2[v] = -e2[v];
        num.add_term(e2, c);
    }
    std::vector<BinomialFactor> den = a.den();
    for (auto& f : den)
        for (int v : vars) f.expo[v] = -f.expo[v];
    return RationalSeries(a.vars(), std::move(num), std::move(den));
}

RationalSeries invert_all_variables(const RationalSeries& a) {
    std::set<int> all;
    for (int i = 0; i < a.vars().size(); ++i) all.insert(i);
    return invert_variables(a, all);
}

RationalSeries substitute_monomial(const RationalSeries& a, int var, const ExpVec& m) {
    LaurentPoly num = a.num().substitute_monomial(var, m);
    std::vector<BinomialFactor> den = a.den();
    for (auto& f : den) {
        long long k = f.expo[var];
        ExpVec e = f.expo;
        for (size_t i = 0; i < e.size(); ++i) e[i] += k * m[i];
        e[var] -= k;
        f.expo = std::move(e);
    }
    return RationalSeries(a.vars(), std::move(num), std::move(den));
}

RationalSeries set_var_one(const RationalSeries& a, int var) {
    LaurentPoly num = a.num();
    std::vector<BinomialFactor> den;
    for (auto f : a.den()) {
        bool only_var = true;
        for (size_t i = 0; i < f.expo.size(); ++i)
            if ((int)i != var && f.expo[i] != 0) only_var = false;
        if (only_var && f.coeff == 1) {
            // factor dies at var = 1; it must divide the numerator
            num = num.exact_divide(f.poly());
            continue;
        }
        f.expo[var] = 0;
        den.push_back(std::move(f));  // canonicalize folds surviving constants
    }
    return RationalSeries(a.vars(), num.set_var_one(var), std::move(den));
}

RationalSeries q_derivative_at_one(const RationalSeries& a, int var) {
    // theta(N/prod F_i) = theta(N)/prod F_i + N * sum_i c_i g_{i,var} z^{g_i} / (F_i * prod F_j)
    RationalSeries acc(a.vars(), a.num().theta(var), a.den());
    for (size_t i = 0; i < a.den().size(); ++i) {
        const BinomialFactor& f = a.den()[i];
        if (f.expo[var] == 0) continue;
        std::vector<BinomialFactor> den = a.den();
        den.push_back(f);
        acc = acc + RationalSeries(a.vars(),
                                   a.num().times_monomial(f.expo, f.coeff * Rat((long)f.expo[var])),
                                   std::move(den));
    }
    return set_var_one(acc, var);
}

std::vector<LaurentPoly> truncate(const RationalSeries& a, int n) {
    int w = a.vars().size();
    int xi = a.vars().x_index();
    LaurentPoly dfree = LaurentPoly::constant(w, 1);
    LaurentPoly dx = dfree;
    for (auto& f : a.den()) {
        if (f.expo[xi] == 0)
            dfree = dfree * f.poly();
        else if (f.expo[xi] > 0)
            dx = dx * f.poly();
        else
            throw std::domain_error("not a power series in x");
    }
    long long lo = a.num().is_zero() ? 0 : a.num().min_exp(xi);
    if (lo > 0) lo = 0;
    // dx has x-constant term 1; solve dfree * dx * sum C_k x^k = num layer by layer
    std::map<long long, LaurentPoly> c;
    for (long long k = lo; k <= n; ++k) {
        LaurentPoly rhs = a.num().coeff_of(xi, k);
        for (auto& [j, ck] : c) {
            if (j >= k) break;
            LaurentPoly dj = dx.coeff_of(xi, k - j);
            if (!dj.is_zero()) rhs = rhs - dfree * dj * ck;
        }
        LaurentPoly ck = rhs.is_zero() ? LaurentPoly(w) : rhs.exact_divide(dfree);
        if (k < 0 && !ck.is_zero()) throw std::domain_error("negative x powers in series");
        c.emplace(k, std::move(ck));
    }
    std::vector<LaurentPoly> out;
    out.reserve(n + 1);
    for (long long k = 0; k <= n; ++k) out.push_back(c.count(k) ? c[k] : LaurentPoly(w));
    return out;
}

}  // namespace ehrlift
