#include "ehrlift/engine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ehrlift {

ZMat cone_over(const Polytope& p) {
    if (!p.lattice_vertices()) throw std::domain_error("cone_over needs lattice vertices");
    ZMat g;
    for (auto& v : p.vertices()) {
        ZVec z = to_zvec(v);
        z.push_back(1);
        g.push_back(std::move(z));
    }
    return g;
}

namespace {

QMat gens_transposed(const ZMat& gens) {
    int w = (int)gens[0].size();
    QMat gt(w, QVec(gens.size()));
    for (size_t i = 0; i < gens.size(); ++i)
        for (int j = 0; j < w; ++j) gt[j][i] = Rat((long)gens[i][j]);
    return gt;
}

// generator coordinates of x within the span of the cone
std::optional<QVec> cone_coords(const ZMat& gens, const QVec& x) {
    return solve_linear(gens_transposed(gens), x);
}

}  // namespace

std::vector<HalfOpenCone> half_open_decompose(const Triangulation& t) {
    std::vector<SimplicialCone> cones;
    for (auto& s : t.simplices) {
        ZMat g;
        for (int i : s.verts) {
            ZVec z = to_zvec(t.points[i]);
            z.push_back(1);
            g.push_back(std::move(z));
        }
        cones.push_back({std::move(g)});
    }
    // generic reference point: perturbed interior point of the first cone
    int k = (int)cones[0].gens.size();
    int w = (int)cones[0].gens[0].size();
    for (long m = 5;; m *= 3) {
        QVec ref(w, 0);
        Rat eps = rat_frac(1, m), pw = 1;
        for (int i = 0; i < k; ++i) {
            pw *= eps;
            for (int j = 0; j < w; ++j) ref[j] += (Rat(1) + pw) * (long)cones[0].gens[i][j];
        }
        std::vector<HalfOpenCone> out;
        bool generic = true;
        for (auto& c : cones) {
            auto lam = cone_coords(c.gens, ref);
            if (!lam) throw std::logic_error("reference point outside cone span");
            std::vector<int> open;
            for (int i = 0; i < (int)lam->size(); ++i) {
                if ((*lam)[i] == 0) { generic = false; break; }
                if ((*lam)[i] < 0) open.push_back(i);
            }
            if (!generic) break;
            out.push_back({c, std::move(open)});
        }
        if (generic) return out;
    }
}

std::vector<HalfOpenCone> flip_open_facets(const std::vector<HalfOpenCone>& cones) {
    std::vector<HalfOpenCone> out;
    for (auto& c : cones) {
        std::vector<int> open;
        for (int i = 0; i < (int)c.cone.gens.size(); ++i)
            if (std::find(c.open_facets.begin(), c.open_facets.end(), i) == c.open_facets.end())
                open.push_back(i);
        out.push_back({c.cone, std::move(open)});
    }
    return out;
}

ZMat parallelepiped_points(const HalfOpenCone& c) {
    const ZMat& g = c.cone.gens;
    int k = (int)g.size();
    int w = (int)g[0].size();
    QMat gt = gens_transposed(g);
    if (mat_rank(gt) != k) throw std::invalid_argument("rank-deficient generators");
    ZVec lo(w, 0), hi(w, 0);
    for (int j = 0; j < w; ++j)
        for (int i = 0; i < k; ++i) {
            if (g[i][j] < 0) lo[j] += g[i][j];
            if (g[i][j] > 0) hi[j] += g[i][j];
        }
    std::vector<bool> open(k, false);
    for (int i : c.open_facets) open[i] = true;
    ZMat out;
    ZVec x = lo;
    while (true) {
        auto co = cone_coords(g, to_qvec(x));
        if (co) {
            bool ok = true;
            for (int i = 0; i < k; ++i) {
                const Rat& ci = (*co)[i];
                if (open[i] ? (ci <= 0 || ci > 1) : (ci < 0 || ci >= 1)) { ok = false; break; }
            }
            // x must really lie in the span (solve_linear ignores extra rows only
            // when consistent, which it checks)
            if (ok) out.push_back(x);
        }
        int j = w - 1;
        while (j >= 0 && x[j] == hi[j]) {
            x[j] = lo[j];
            --j;
        }
        if (j < 0) break;
        ++x[j];
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

ExpVec cone_to_exp(const VarSet& vars, const ZVec& v) {
    ExpVec e(vars.size(), 0);
    for (int i = 0; i < vars.s; ++i) e[vars.t_index(i)] = v[i];
    e[vars.x_index()] = v[vars.s];
    return e;
}

}  // namespace

RationalSeries transform(const std::vector<HalfOpenCone>& cones, const VarSet& vars) {
    RationalSeries total = RationalSeries::zero(vars);
    for (auto& c : cones) {
        if ((int)c.cone.gens[0].size() != vars.s + 1)
            throw std::invalid_argument("cone width does not match variable set");
        LaurentPoly num(vars.size());
        for (auto& r : parallelepiped_points(c)) num.add_term(cone_to_exp(vars, r), 1);
        std::vector<BinomialFactor> den;
        for (auto& g : c.cone.gens) den.push_back({1, cone_to_exp(vars, g)});
        total = total + RationalSeries(vars, std::move(num), std::move(den));
    }
    return total;
}

namespace {

RationalSeries weighted_series(const Polytope& p, const WeightSystem& w, bool interior) {
    auto ws = linear_forms(w);
    int pn = (int)ws.size();
    int s = p.ambient_dim();
    for (auto& wi : ws)
        if ((int)wi.coeffs.size() != s) throw std::invalid_argument("weight dimension mismatch");
    VarSet vars{pn, s};
    auto cones = half_open_decompose(triangulate(p, PointConfig::kVertices));
    if (interior) {
        if (p.dim() != s) throw std::domain_error("interior series needs a full-dimensional cone");
        cones = flip_open_facets(cones);
    }
    RationalSeries f = transform(cones, vars);
    for (int i = 0; i < s; ++i) {
        ExpVec m(vars.size(), 0);
        m[vars.t_index(i)] = 1;
        bool trivial = true;
        for (int j = 0; j < pn; ++j) {
            m[vars.q_index(j)] = ws[j].coeffs[i];
            if (ws[j].coeffs[i] != 0) trivial = false;
        }
        if (!trivial) f = substitute_monomial(f, vars.t_index(i), m);
    }
    return f;
}

}  // namespace

RationalSeries q_weighted_series(const Polytope& p, const WeightSystem& w) {
    return weighted_series(p, w, false);
}

RationalSeries interior_q_series(const Polytope& p, const WeightSystem& w) {
    return weighted_series(p, w, true);
}

RationalSeries r_weighted_series(const Polytope& p, const WeightSystem& w) {
    RationalSeries fq = q_weighted_series(p, w);
    const VarSet& vars = fq.vars();
    int pn = vars.p;
    RationalSeries total = RationalSeries::zero(vars);
    for (int mask = 0; mask < (1 << pn); ++mask) {
        RationalSeries term = fq;
        for (int k = 0; k < pn; ++k)
            if (!(mask >> k & 1)) term = set_var_one(term, vars.q_index(k));
        ExpVec e(vars.size(), 0);
        int bits = 0;
        for (int j = 0; j < pn; ++j)
            if (mask >> j & 1) {
                e[vars.q_index(j)] = 1;
                ++bits;
            }
        total = total + term.times_monomial(e, bits % 2 ? Rat(-1) : Rat(1));
    }
    std::vector<BinomialFactor> den;
    for (int i = 0; i < pn; ++i) den.push_back({1, unit_exp(vars.size(), vars.q_index(i))});
    return total * RationalSeries(vars, LaurentPoly::constant(vars.size(), 1), std::move(den));
}

RationalSeries s_weighted_series(const Polytope& p, const LinearForm& w) {
    RationalSeries fq = q_weighted_series(p, WeightSystem{{Weight(w)}});
    return q_derivative_at_one(fq, fq.vars().q_index(0));
}

bool reciprocity_check_q(const Polytope& p, const WeightSystem& w) {
    int s = p.ambient_dim();
    if (p.dim() != s) throw std::domain_error("reciprocity needs a full-dimensional cone");
    RationalSeries lhs = invert_all_variables(q_weighted_series(p, w));
    RationalSeries rhs = interior_q_series(p, w).scaled((s + 1) % 2 ? Rat(-1) : Rat(1));
    return series_equal(lhs, rhs);
}

namespace {

Rat poly_eval(const QVec& coeffs, const Rat& x) {
    Rat v = 0, pw = 1;
    for (auto& c : coeffs) {
        v += c * pw;
        pw *= x;
    }
    return v;
}

Rat binom(int n, int k) {
    Rat r = 1;
    for (int i = 0; i < k; ++i) r *= rat_frac(n - i, i + 1);
    return r;
}

}  // namespace

RationalSeries expo_poly_1d_series(const std::vector<ExpPolyTerm>& h, const Rat& shift,
                                   const ExpVec& y, bool backward, const VarSet& vars) {
    RationalSeries total = RationalSeries::zero(vars);
    for (auto& term : h) {
        if (term.base == 0) throw std::domain_error("zero base");
        int deg = (int)term.poly.size() - 1;
        while (deg >= 0 && term.poly[deg] == 0) --deg;
        if (deg < 0) continue;
        // sum_{n>=0} Q(n) u^n = N(u)/(1-u)^{deg+1} with
        // N_j = sum_i (-1)^i C(deg+1, i) Q(j-i)
        auto q_at = [&](long n) {
            Rat arg = backward ? Rat(shift - n) : Rat(shift + n);
            return poly_eval(term.poly, arg);
        };
        Rat base = backward ? Rat(1) / term.base : term.base;
        LaurentPoly num(vars.size());
        Rat bp = 1;
        for (int j = 0; j <= deg + (backward ? 1 : 0); ++j) {
            Rat nj = 0;
            for (int i = 0; i <= std::min(j, deg + 1); ++i) {
                Rat c = binom(deg + 1, i) * q_at(j - i);
                nj += (i % 2 ? -c : c);
            }
            if (backward && j == 0) nj = 0;  // the series starts at n = 1
            if (backward && j > 0) {
                // subtract Q(0) * (1-u)^{deg+1}
                Rat c = binom(deg + 1, j) * q_at(0);
                nj -= (j % 2 ? -c : c);
            }
            if (nj != 0) {
                ExpVec e(vars.size(), 0);
                for (size_t t = 0; t < y.size(); ++t) e[t] = j * y[t];
                num.add_term(e, nj * bp);
            }
            bp *= base;
        }
        std::vector<BinomialFactor> den(deg + 1, BinomialFactor{base, y});
        total = total + RationalSeries(vars, std::move(num), std::move(den));
    }
    return total;
}

namespace {

using MPoly = std::map<std::vector<int>, Rat>;  // polynomial in m_1..m_k

MPoly mpoly_mul(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r[e] += ca * cb;
        }
    return r;
}

ExpPolyWeight negate_argument(const ExpPolyWeight& h) {
    ExpPolyWeight out;
    for (auto& coord : h.coords) {
        std::vector<ExpPolyTerm> terms;
        for (auto& t : coord) {
            ExpPolyTerm nt;
            nt.base = Rat(1) / t.base;
            nt.poly = t.poly;
            for (size_t k = 1; k < nt.poly.size(); k += 2) nt.poly[k] = -nt.poly[k];
            terms.push_back(std::move(nt));
        }
        out.coords.push_back(std::move(terms));
    }
    return out;
}

}  // namespace

RationalSeries s_expo_series(const Polytope& p, const ExpPolyWeight& h_in, bool interior) {
    int s = p.ambient_dim();
    if (p.dim() != s) throw std::domain_error("needs a full-dimensional polytope");
    if (!p.lattice_vertices()) throw std::domain_error("needs lattice vertices");
    if ((int)h_in.coords.size() != s + 1)
        throw std::invalid_argument("weight must cover all cone coordinates");
    ExpPolyWeight h = interior ? negate_argument(h_in) : h_in;
    VarSet vars{0, s};
    auto cones = half_open_decompose(triangulate(p, PointConfig::kVertices));
    if (interior) cones = flip_open_facets(cones);

    RationalSeries total = RationalSeries::zero(vars);
    std::vector<int> choice(s + 1, 0);
    for (auto& c : cones) {
        const ZMat& g = c.cone.gens;
        int k = (int)g.size();
        for (auto& r : parallelepiped_points(c)) {
            // pick one term per coordinate factor
            std::fill(choice.begin(), choice.end(), 0);
            while (true) {
                Rat constant = 1;
                QVec bases(k, Rat(1));  // per-generator geometric base
                MPoly poly{{std::vector<int>(k, 0), Rat(1)}};
                for (int cd = 0; cd <= s && constant != 0; ++cd) {
                    const ExpPolyTerm& t = h.coords[cd][choice[cd]];
                    constant *= rat_pow(t.base, r[cd]);
                    for (int i = 0; i < k; ++i) bases[i] *= rat_pow(t.base, g[i][cd]);
                    // P(r_cd + sum_i g_i[cd] * m_i)
                    MPoly lin{{std::vector<int>(k, 0), Rat((long)r[cd])}};
                    for (int i = 0; i < k; ++i) {
                        if (g[i][cd] == 0) continue;
                        std::vector<int> e(k, 0);
                        e[i] = 1;
                        lin[e] = Rat((long)g[i][cd]);
                    }
                    MPoly pv{{std::vector<int>(k, 0), t.poly.empty() ? Rat(0) : t.poly[0]}};
                    MPoly lp = lin;
                    for (size_t dg = 1; dg < t.poly.size(); ++dg) {
                        if (t.poly[dg] != 0)
                            for (auto& [e, cf] : lp) pv[e] += t.poly[dg] * cf;
                        if (dg + 1 < t.poly.size()) lp = mpoly_mul(lp, lin);
                    }
                    poly = mpoly_mul(poly, pv);
                }
                if (constant != 0) {
                    for (auto& [e, cf] : poly) {
                        if (cf == 0) continue;
                        RationalSeries term(vars,
                                            LaurentPoly::monomial(cone_to_exp(vars, r), cf * constant),
                                            {});
                        for (int i = 0; i < k; ++i) {
                            QVec mono(e[i] + 1, 0);
                            mono[e[i]] = 1;  // m^{e_i}
                            term = term * expo_poly_1d_series({{mono, bases[i]}}, 0,
                                                              cone_to_exp(vars, g[i]), false, vars);
                        }
                        total = total + term;
                    }
                }
                int cd = s;
                while (cd >= 0 && choice[cd] + 1 == (int)h.coords[cd].size()) choice[cd--] = 0;
                if (cd < 0) break;
                ++choice[cd];
            }
        }
    }
    return total;
}

bool s_reciprocity_check(const Polytope& p, const ExpPolyWeight& h) {
    int s = p.ambient_dim();
    RationalSeries lhs = invert_all_variables(s_expo_series(p, h, false));
    RationalSeries rhs = s_expo_series(p, h, true).scaled((s + 1) % 2 ? Rat(-1) : Rat(1));
    return series_equal(lhs, rhs);
}

}  // namespace ehrlift
