#include "ehrlift/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ehrlift {

std::string VarSet::name(int idx) const {
    if (idx < p) return "q" + std::to_string(idx + 1);
    if (idx < p + s) return "t" + std::to_string(idx - p + 1);
    if (idx == p + s) return "x";
    throw std::out_of_range("VarSet::name");
}

ExpVec unit_exp(int width, int idx) {
    ExpVec e(width, 0);
    e[idx] = 1;
    return e;
}

LaurentPoly LaurentPoly::constant(int width, const Rat& c) {
    LaurentPoly r(width);
    r.add_term(ExpVec(width, 0), c);
    return r;
}

LaurentPoly LaurentPoly::monomial(const ExpVec& e, const Rat& c) {
    LaurentPoly r((int)e.size());
    r.add_term(e, c);
    return r;
}

void LaurentPoly::add_term(const ExpVec& e, const Rat& c) {
    if ((int)e.size() != width_) throw std::invalid_argument("exponent width mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat LaurentPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (width_ != o.width_) throw std::invalid_argument("width mismatch");
    LaurentPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    if (width_ != o.width_) throw std::invalid_argument("width mismatch");
    LaurentPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (width_ != o.width_) throw std::invalid_argument("width mismatch");
    LaurentPoly r(width_);
    ExpVec e(width_);
    for (auto& [ea, ca] : terms_) {
        for (auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < width_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(width_);
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
    LaurentPoly r(width_);
    if (c == 0) return r;
    for (auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return width_ == o.width_ && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::times_monomial(const ExpVec& m, const Rat& c) const {
    if ((int)m.size() != width_) throw std::invalid_argument("width mismatch");
    LaurentPoly r(width_);
    if (c == 0) return r;
    ExpVec e(width_);
    for (auto& [ea, ca] : terms_) {
        for (int i = 0; i < width_; ++i) e[i] = ea[i] + m[i];
        r.terms_.emplace(e, ca * c);
    }
    return r;
}

LaurentPoly LaurentPoly::substitute_monomial(int var, const ExpVec& m) const {
    if ((int)m.size() != width_) throw std::invalid_argument("width mismatch");
    LaurentPoly r(width_);
    ExpVec e(width_);
    for (auto& [ea, ca] : terms_) {
        long long k = ea[var];
        for (int i = 0; i < width_; ++i) e[i] = ea[i] + k * m[i];
        e[var] -= k;  // remove the original var power; m may re-introduce it
        r.add_term(e, ca);
    }
    return r;
}

LaurentPoly LaurentPoly::set_var_one(int var) const {
    return substitute_monomial(var, ExpVec(width_, 0));
}

LaurentPoly LaurentPoly::theta(int var) const {
    LaurentPoly r(width_);
    for (auto& [e, c] : terms_) {
        if (e[var] != 0) r.terms_.emplace(e, c * Rat((long)e[var]));
    }
    return r;
}

bool LaurentPoly::divides(const LaurentPoly& b, LaurentPoly* quotient_out) const {
    // *this / b, long division on the lex-max term. Laurent exponents make
    // inexact divisions non-terminating, so cap the number of steps.
    if (b.is_zero()) return false;
    LaurentPoly rem = *this;
    LaurentPoly quot(width_);
    auto lead_b = std::prev(b.terms_.end());
    size_t cap = 4 * (terms_.size() + 1) * (b.terms_.size() + 1) + 4096;
    ExpVec e(width_);
    for (size_t step = 0; !rem.is_zero(); ++step) {
        if (step > cap) return false;
        auto lead_r = std::prev(rem.terms_.end());
        for (int i = 0; i < width_; ++i) e[i] = lead_r->first[i] - lead_b->first[i];
        Rat c = lead_r->second / lead_b->second;
        quot.add_term(e, c);
        rem = rem - b.times_monomial(e, c);
    }
    if (quotient_out) *quotient_out = quot;
    return true;
}

LaurentPoly LaurentPoly::exact_divide(const LaurentPoly& b) const {
    LaurentPoly q(width_);
    if (!divides(b, &q)) throw std::domain_error("inexact Laurent division");
    return q;
}

LaurentPoly LaurentPoly::coeff_of(int var, long long k) const {
    LaurentPoly r(width_);
    for (auto& [e, c] : terms_) {
        if (e[var] == k) {
            ExpVec e2 = e;
            e2[var] = 0;
            r.terms_.emplace(e2, c);
        }
    }
    return r;
}

long long LaurentPoly::min_exp(int var) const {
    long long m = 0;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (first || e[var] < m) m = e[var];
        first = false;
    }
    return m;
}

long long LaurentPoly::max_exp(int var) const {
    long long m = 0;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (first || e[var] > m) m = e[var];
        first = false;
    }
    return m;
}

std::string monomial_str(const VarSet& vars, const ExpVec& e) {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < (int)e.size(); ++i) {
        if (e[i] == 0) continue;
        if (any) os << "*";
        os << vars.name(i);
        if (e[i] != 1) os << "^" << e[i];
        any = true;
    }
    return any ? os.str() : std::string("1");
}

std::string LaurentPoly::str(const VarSet& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string m = monomial_str(vars, e);
        if (m == "1") {
            os << rat_str(a);
        } else {
            if (a != 1) os << rat_str(a) << "*";
            os << m;
        }
        first = false;
    }
    return os.str();
}

}  // namespace ehrlift
