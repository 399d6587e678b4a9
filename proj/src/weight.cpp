#include "ehrlift/weight.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ehrlift {

Rat eval_linear(const LinearForm& w, const ZVec& a) {
    if (w.coeffs.size() != a.size()) throw std::invalid_argument("eval: dimension mismatch");
    return Rat((long)dotzz(w.coeffs, a));
}

Rat eval(const Weight& w, const ZVec& a) {
    if (auto* l = std::get_if<LinearForm>(&w)) return eval_linear(*l, a);
    if (auto* m = std::get_if<MonomialWeight>(&w)) {
        if (m->exps.size() != a.size()) throw std::invalid_argument("eval: dimension mismatch");
        Rat r = 1;
        for (size_t j = 0; j < a.size(); ++j) r *= rat_pow(Rat((long)a[j]), m->exps[j]);
        return r;
    }
    if (auto* p = std::get_if<PolynomialWeight>(&w)) {
        Rat r = 0;
        for (auto& [c, m] : p->terms) r += c * eval(Weight(m), a);
        return r;
    }
    const auto& h = std::get<ExpPolyWeight>(w);
    if (h.coords.size() != a.size()) throw std::invalid_argument("eval: dimension mismatch");
    Rat r = 1;
    for (size_t i = 0; i < a.size(); ++i) {
        Rat factor = 0;
        for (auto& term : h.coords[i]) {
            Rat pv = 0, pw = 1;
            for (auto& c : term.poly) {
                pv += c * pw;
                pw *= (long)a[i];
            }
            factor += pv * rat_pow(term.base, a[i]);
        }
        r *= factor;
    }
    return r;
}

std::vector<LinearForm> linear_forms(const WeightSystem& w) {
    std::vector<LinearForm> out;
    for (auto& wi : w.ws) {
        auto* l = std::get_if<LinearForm>(&wi);
        if (!l) throw std::domain_error("weight system must be linear here");
        out.push_back(*l);
    }
    return out;
}

namespace {

PolynomialWeight normalized(std::map<ZVec, Rat> acc) {
    PolynomialWeight r;
    for (auto& [e, c] : acc)
        if (c != 0) r.terms.push_back({c, MonomialWeight{e}});
    return r;
}

}  // namespace

PolynomialWeight to_poly(const Weight& w) {
    if (auto* l = std::get_if<LinearForm>(&w)) {
        std::map<ZVec, Rat> acc;
        for (size_t j = 0; j < l->coeffs.size(); ++j) {
            if (l->coeffs[j] == 0) continue;
            ZVec e(l->coeffs.size(), 0);
            e[j] = 1;
            acc[e] = Rat((long)l->coeffs[j]);
        }
        return normalized(std::move(acc));
    }
    if (auto* m = std::get_if<MonomialWeight>(&w)) return {{{Rat(1), *m}}};
    if (auto* p = std::get_if<PolynomialWeight>(&w)) {
        std::map<ZVec, Rat> acc;
        for (auto& [c, m] : p->terms) acc[m.exps] += c;
        return normalized(std::move(acc));
    }
    throw std::domain_error("not a polynomial weight");
}

PolynomialWeight poly_add(const PolynomialWeight& a, const PolynomialWeight& b) {
    std::map<ZVec, Rat> acc;
    for (auto& [c, m] : a.terms) acc[m.exps] += c;
    for (auto& [c, m] : b.terms) acc[m.exps] += c;
    return normalized(std::move(acc));
}

PolynomialWeight poly_mul(const PolynomialWeight& a, const PolynomialWeight& b) {
    std::map<ZVec, Rat> acc;
    for (auto& [ca, ma] : a.terms)
        for (auto& [cb, mb] : b.terms) {
            ZVec e(ma.exps.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ma.exps[i] + mb.exps[i];
            acc[e] += ca * cb;
        }
    return normalized(std::move(acc));
}

PolynomialWeight poly_const(const Rat& c, int dim) {
    if (c == 0) return {};
    return {{{c, MonomialWeight{ZVec(dim, 0)}}}};
}

int poly_degree(const PolynomialWeight& a) {
    int d = 0;
    for (auto& [c, m] : a.terms) {
        long long t = 0;
        for (auto e : m.exps) t += e;
        d = std::max(d, (int)t);
    }
    return d;
}

namespace {

void check_liftable(const Polytope& p, const std::vector<LinearForm>& ws) {
    if (!p.lattice_vertices()) throw std::domain_error("lift needs lattice vertices");
    for (auto& w : ws) {
        if ((int)w.coeffs.size() != p.ambient_dim())
            throw std::invalid_argument("weight dimension mismatch");
        for (auto c : w.coeffs)
            if (c < 0) throw std::domain_error("lift needs w(e_j) >= 0");
    }
}

}  // namespace

Polytope lift_q(const Polytope& p, const WeightSystem& w) {
    auto ws = linear_forms(w);
    check_liftable(p, ws);
    std::vector<QVec> pts;
    for (auto& v : p.vertices()) {
        QVec x = v;
        for (auto& wi : ws) x.push_back(eval_linear(wi, to_zvec(v)));
        pts.push_back(std::move(x));
    }
    return Polytope(pts);
}

Polytope lift_r(const Polytope& p, const WeightSystem& w) {
    auto ws = linear_forms(w);
    check_liftable(p, ws);
    int pn = (int)ws.size();
    std::set<QVec> pts;
    for (auto& v : p.vertices()) {
        ZVec zv = to_zvec(v);
        for (int mask = 0; mask < (1 << pn); ++mask) {
            QVec x = v;
            for (int j = 0; j < pn; ++j)
                x.push_back(mask >> j & 1 ? eval_linear(ws[j], zv) : Rat(0));
            pts.insert(std::move(x));
        }
    }
    return Polytope(std::vector<QVec>(pts.begin(), pts.end()));
}

HilbertBasis hilbert_basis(const ZMat& generators, long long bound) {
    if (generators.empty()) throw std::invalid_argument("no generators");
    if (bound < 1) throw std::invalid_argument("bound must be positive");
    int k = (int)generators[0].size();
    std::vector<QVec> base_pts;
    for (auto& g : generators) {
        if (g.back() <= 0) throw std::domain_error("grading must be positive on generators");
        QVec q(k - 1);
        for (int j = 0; j + 1 < k; ++j) q[j] = rat_frac(g[j], g.back());
        base_pts.push_back(std::move(q));
    }
    Polytope slice(base_pts);  // cone = cone over this rational polytope at level 1

    long long certify_to = 2 * bound;
    std::vector<std::set<ZVec>> level(certify_to + 1);  // cone points per grading level
    for (long long n = 1; n <= certify_to; ++n)
        for (auto& z : lattice_points(slice, n)) level[n].insert(z);

    auto in_cone = [&](const ZVec& x, long long n) {
        return n >= 1 && n <= certify_to && level[n].count(x);
    };

    HilbertBasis hb;
    hb.bound = bound;
    for (long long n = 1; n <= bound; ++n) {
        for (auto& z : level[n]) {
            bool irred = true;
            for (long long m = 1; irred && 2 * m <= n; ++m) {
                for (auto& f : level[m]) {
                    ZVec rest(z.size());
                    for (size_t i = 0; i < z.size(); ++i) rest[i] = z[i] - f[i];
                    if (in_cone(rest, n - m)) {
                        irred = false;
                        break;
                    }
                }
            }
            if (irred) {
                ZVec e = z;
                e.push_back(n);
                hb.elements.push_back(std::move(e));
            }
        }
    }
    std::sort(hb.elements.begin(), hb.elements.end());

    // regeneration: every cone point of level <= 2*bound is an N-combination
    std::vector<std::set<ZVec>> gen(certify_to + 1);
    hb.certified = true;
    for (long long n = 1; n <= certify_to && hb.certified; ++n) {
        for (auto& z : level[n]) {
            bool ok = false;
            for (auto& e : hb.elements) {
                long long m = e.back();
                if (m > n) continue;
                if (m == n) {
                    if (std::equal(z.begin(), z.end(), e.begin())) { ok = true; break; }
                    continue;
                }
                ZVec rest(z.size());
                for (size_t i = 0; i < z.size(); ++i) rest[i] = z[i] - e[i];
                if (gen[n - m].count(rest)) { ok = true; break; }
            }
            if (ok) gen[n].insert(z);
        }
        if (gen[n].size() != level[n].size()) hb.certified = false;
    }
    return hb;
}

HilbertBasis construct_H_Pw(const HilbertBasis& h_p, const WeightSystem& w) {
    auto ws = linear_forms(w);
    int pn = (int)ws.size();
    HilbertBasis out;
    out.bound = h_p.bound;
    out.certified = h_p.certified;
    for (auto& e : h_p.elements) {
        ZVec c(e.begin(), e.end() - 1);
        ZVec lim(pn);
        for (int j = 0; j < pn; ++j) lim[j] = rat_to_long(eval_linear(ws[j], c));
        ZVec b(pn, 0);
        while (true) {
            ZVec x = c;
            x.insert(x.end(), b.begin(), b.end());
            x.push_back(e.back());
            out.elements.push_back(std::move(x));
            int j = pn - 1;
            while (j >= 0 && b[j] == lim[j]) b[j--] = 0;
            if (j < 0) break;
            ++b[j];
        }
    }
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

bool is_irreducible(const ZVec& e, const std::function<bool(const ZVec&)>& member) {
    bool zero = std::all_of(e.begin(), e.end(), [](long long v) { return v == 0; });
    if (zero || !member(e)) return false;
    ZVec f(e.size(), 0);
    while (true) {
        bool fzero = std::all_of(f.begin(), f.end(), [](long long v) { return v == 0; });
        bool fe = f == e;
        if (!fzero && !fe && member(f)) {
            ZVec g(e.size());
            for (size_t i = 0; i < e.size(); ++i) g[i] = e[i] - f[i];
            if (member(g)) return false;
        }
        int j = (int)e.size() - 1;
        while (j >= 0 && f[j] == e[j]) f[j--] = 0;
        if (j < 0) break;
        ++f[j];
    }
    return true;
}

}  // namespace ehrlift
