#include "ehrlift/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ehrlift {

namespace {

Rat binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    Rat r = 1;
    for (long i = 0; i < k; ++i) r *= Rat(n - i) / Rat(i + 1);
    return r;
}

std::vector<QVec> qpts(const std::vector<ZVec>& zs) {
    std::vector<QVec> r;
    for (auto& z : zs) r.push_back(to_qvec(z));
    return r;
}

std::string rat_paren(const Rat& c) {
    std::string s = rat_str(c);
    if (s.find('/') != std::string::npos) return "(" + s + ")";
    return s;
}

CheckResult make(const std::string& name, const std::string& pid, const std::string& wid,
                 bool pass, const std::string& detail) {
    return {name, pid, wid, pass, detail};
}

}  // namespace

int UniPoly::degree() const { return (int)coeffs.size() - 1; }

Rat UniPoly::eval(const Rat& n) const {
    Rat r = 0;
    for (size_t i = coeffs.size(); i-- > 0;) r = r * n + coeffs[i];
    return r;
}

Rat UniPoly::leading() const { return coeffs.empty() ? Rat(0) : coeffs.back(); }

std::string UniPoly::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        Rat c = coeffs[i];
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        Rat a = abs(c);
        if (i == 0) {
            out << rat_paren(a);
        } else {
            if (a != 1) out << rat_paren(a) << "*";
            out << "n";
            if (i > 1) out << "^" << i;
        }
    }
    if (first) return "0";
    return out.str();
}

UniPoly unipoly(QVec coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return UniPoly{std::move(coeffs)};
}

std::string HStarData::str() const {
    std::ostringstream out;
    out << "(";
    bool first = true;
    for (size_t i = 0; i < h.size(); ++i) {
        if (h[i] == 0) continue;
        Rat a = abs(h[i]);
        if (first) {
            if (h[i] < 0) out << "-";
        } else {
            out << (h[i] < 0 ? " - " : " + ");
        }
        first = false;
        if (a != 1 || i == 0) out << rat_paren(a);
        if (i > 0) {
            if (a != 1) out << "*";
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    if (first) out << "0";
    out << ")";
    if (den_exp > 0) {
        out << "/(1-x)";
        if (den_exp > 1) out << "^" << den_exp;
    }
    return out.str();
}

Rat count_weighted(const Polytope& p, const Weight& f, long long n) {
    Rat total = 0;
    for (auto& a : lattice_points(p, n)) total += eval(f, a);
    return total;
}

LaurentPoly count_q(const Polytope& p, const WeightSystem& w, long long n) {
    auto ws = linear_forms(w);
    VarSet v{w.arity(), p.ambient_dim()};
    LaurentPoly out(v.size());
    for (auto& a : lattice_points(p, n)) {
        ExpVec e(v.size(), 0);
        for (int j = 0; j < v.p; ++j) e[v.q_index(j)] = dotzz(ws[j].coeffs, a);
        for (int i = 0; i < v.s; ++i) e[v.t_index(i)] = a[i];
        out.add_term(e, 1);
    }
    return out;
}

LaurentPoly count_r(const Polytope& p, const WeightSystem& w, long long n) {
    auto ws = linear_forms(w);
    VarSet v{w.arity(), p.ambient_dim()};
    LaurentPoly out(v.size());
    for (auto& a : lattice_points(p, n)) {
        ZVec lim(v.p);
        for (int j = 0; j < v.p; ++j) {
            lim[j] = dotzz(ws[j].coeffs, a);
            if (lim[j] < 0) throw std::domain_error("negative weight value in box count");
        }
        ZVec b(v.p, 0);
        while (true) {
            ExpVec e(v.size(), 0);
            for (int j = 0; j < v.p; ++j) e[v.q_index(j)] = b[j];
            for (int i = 0; i < v.s; ++i) e[v.t_index(i)] = a[i];
            out.add_term(e, 1);
            int j = v.p - 1;
            while (j >= 0 && b[j] == lim[j]) b[j--] = 0;
            if (j < 0) break;
            ++b[j];
        }
    }
    return out;
}

UniPoly interpolate(const Polytope& p, const PolynomialWeight& f) {
    int deg = p.dim() + poly_degree(f);
    Weight wf{f};
    QMat a(deg + 1, QVec(deg + 1));
    QVec rhs(deg + 1);
    for (long n = 0; n <= deg; ++n) {
        Rat pw = 1;
        for (int j = 0; j <= deg; ++j) {
            a[n][j] = pw;
            pw *= Rat(n);
        }
        rhs[n] = count_weighted(p, wf, n);
    }
    auto sol = solve_linear(a, rhs);
    if (!sol) throw std::logic_error("interpolation system inconsistent");
    UniPoly e = unipoly(*sol);
    for (long n = deg + 1; n <= deg + 3; ++n)
        if (e.eval(Rat(n)) != count_weighted(p, wf, n))
            throw std::logic_error("interpolation validation failed");
    return e;
}

HStarData series_from_poly(const UniPoly& e) {
    int deg = std::max(e.degree(), 0);
    QVec h(deg + 2, Rat(0));
    for (int j = 0; j <= deg + 1; ++j)
        for (int i = 0; i <= std::min((long)j, (long)deg + 1); ++i) {
            Rat c = binom(deg + 1, i) * e.eval(Rat(j - i));
            h[j] += (i % 2 ? -c : c);
        }
    while (!h.empty() && h.back() == 0) h.pop_back();
    // round trip: coefficients of h(x)/(1-x)^{deg+1} reproduce e
    for (long n = 0; n <= deg + 3; ++n) {
        Rat s = 0;
        for (int j = 0; j < (int)h.size() && j <= n; ++j) s += h[j] * binom(n - j + deg, deg);
        if (s != e.eval(Rat(n))) throw std::logic_error("series round trip failed");
    }
    return HStarData{std::move(h), deg + 1};
}

std::string render_report(const std::vector<CheckResult>& rs) {
    std::ostringstream out;
    for (auto& r : rs)
        out << "CHECK " << r.name << " " << r.polytope_id << " " << r.weight_id << " "
            << (r.pass ? "PASS" : "FAIL") << " " << r.detail << "\n";
    return out.str();
}

bool all_pass(const std::vector<CheckResult>& rs) {
    return std::all_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.pass; });
}

Report verify_q_lift(const Polytope& p, const WeightSystem& w, const std::string& pid,
                     const std::string& wid) {
    try {
        Polytope lifted = lift_q(p, w);
        if (lifted.dim() != p.dim())
            return {make("q_lift", pid, wid, false,
                         "dim " + std::to_string(lifted.dim()) + " != " + std::to_string(p.dim()))};
        for (long long n = 0; n <= 5; ++n) {
            size_t a = lattice_points(p, n).size();
            size_t b = lattice_points(lifted, n).size();
            if (a != b)
                return {make("q_lift", pid, wid, false,
                             "n=" + std::to_string(n) + " counts " + std::to_string(a) + " vs " +
                                 std::to_string(b))};
        }
        return {make("q_lift", pid, wid, true, "counts and dim agree for n<=5")};
    } catch (const std::exception& e) {
        return {make("q_lift", pid, wid, false, e.what())};
    }
}

Report verify_r_lift(const Polytope& p, const WeightSystem& w, const std::string& pid,
                     const std::string& wid) {
    try {
        Polytope lifted = lift_r(p, w);
        int s = p.ambient_dim();
        // prod_i (w_i + 1) and its subset expansion
        PolynomialWeight prod = poly_const(Rat(1), s);
        for (auto& wi : w.ws) prod = poly_mul(prod, poly_add(to_poly(wi), poly_const(Rat(1), s)));
        int pn = w.arity();
        for (long long n = 0; n <= 5; ++n) {
            Rat direct = Rat((long)lattice_points(lifted, n).size());
            Rat via_prod = count_weighted(p, Weight(prod), n);
            Rat via_subsets = 0;
            for (int mask = 0; mask < (1 << pn); ++mask) {
                PolynomialWeight g = poly_const(Rat(1), s);
                for (int j = 0; j < pn; ++j)
                    if (mask & (1 << j)) g = poly_mul(g, to_poly(w.ws[j]));
                via_subsets += count_weighted(p, Weight(g), n);
            }
            if (direct != via_prod || direct != via_subsets)
                return {make("r_lift", pid, wid, false,
                             "n=" + std::to_string(n) + " " + rat_str(direct) + " vs " +
                                 rat_str(via_prod) + " vs " + rat_str(via_subsets))};
        }
        return {make("r_lift", pid, wid, true, "lift counts match weighted counts for n<=5")};
    } catch (const std::exception& e) {
        return {make("r_lift", pid, wid, false, e.what())};
    }
}

Report verify_dim_formula(const Polytope& p, const std::vector<int>& coords,
                          const std::string& pid, const std::string& wid) {
    try {
        int s = p.ambient_dim();
        WeightSystem w;
        int r = 0;
        for (int c : coords) {
            ZVec cf(s, 0);
            cf[c] = 1;
            w.ws.push_back(Weight(LinearForm{cf}));
            for (auto& v : p.vertices())
                if (v[c] != 0) {
                    ++r;
                    break;
                }
        }
        Polytope lifted = lift_r(p, w);
        int want = p.dim() + r;
        if (lifted.dim() != want)
            return {make("dim_formula", pid, wid, false,
                         "lift dim " + std::to_string(lifted.dim()) + " != " + std::to_string(want))};
        UniPoly e = interpolate(lifted, poly_const(Rat(1), lifted.ambient_dim()));
        if (e.degree() != want)
            return {make("dim_formula", pid, wid, false,
                         "lift count degree " + std::to_string(e.degree()) + " != " +
                             std::to_string(want))};
        if (r == (int)coords.size()) {
            ZVec exps(s, 0);
            for (int c : coords) ++exps[c];
            PolynomialWeight mono{{{Rat(1), MonomialWeight{exps}}}};
            UniPoly es = interpolate(p, mono);
            if (es.degree() != p.dim() + (int)coords.size())
                return {make("dim_formula", pid, wid, false,
                             "weighted degree " + std::to_string(es.degree()))};
        }
        return {make("dim_formula", pid, wid, true,
                     "dim and degree = " + std::to_string(want))};
    } catch (const std::exception& e) {
        return {make("dim_formula", pid, wid, false, e.what())};
    }
}

Report verify_positivity(const Polytope& p, const LinearForm& w, const std::string& pid,
                         const std::string& wid) {
    try {
        int d = p.dim();
        UniPoly e = interpolate(p, to_poly(Weight(w)));
        if (e.degree() != d + 1)
            return {make("positivity", pid, wid, false,
                         "degree " + std::to_string(e.degree()) + " != " + std::to_string(d + 1))};
        HStarData h = series_from_poly(e);
        for (auto& c : h.h)
            if (c < 0 || c.get_den() != 1)
                return {make("positivity", pid, wid, false, "numerator coefficient " + rat_str(c))};
        HStarData hp = series_from_poly(interpolate(p, poly_const(Rat(1), p.ambient_dim())));
        Polytope lifted = lift_r(p, WeightSystem{{Weight(w)}});
        HStarData hw =
            series_from_poly(interpolate(lifted, poly_const(Rat(1), lifted.ambient_dim())));
        for (size_t i = 0; i < hp.h.size(); ++i) {
            Rat big = i < hw.h.size() ? hw.h[i] : Rat(0);
            if (big < hp.h[i])
                return {make("positivity", pid, wid, false,
                             "h[" + std::to_string(i) + "] " + rat_str(big) + " < " +
                                 rat_str(hp.h[i]))};
        }
        return {make("positivity", pid, wid, true, "numerator " + h.str())};
    } catch (const std::exception& e) {
        return {make("positivity", pid, wid, false, e.what())};
    }
}

Report verify_bounds(const Polytope& p, const LinearForm& w, const std::string& pid,
                     const std::string& wid) {
    try {
        bool have = false;
        Rat c1 = 0, c2 = 0;
        for (auto& v : p.vertices()) {
            Rat wv = 0;
            for (size_t i = 0; i < v.size(); ++i) wv += Rat((long)w.coeffs[i]) * v[i];
            if (!have || wv < c1) c1 = wv;
            if (!have || wv > c2) c2 = wv;
            have = true;
        }
        for (long long n = 0; n <= 8; ++n) {
            Rat ep = Rat((long)lattice_points(p, n).size());
            Rat es = count_weighted(p, Weight(w), n);
            Rat lo = c1 * Rat((long)n) * ep, hi = c2 * Rat((long)n) * ep;
            if (es < lo || es > hi)
                return {make("bounds", pid, wid, false,
                             "n=" + std::to_string(n) + " value " + rat_str(es) + " outside [" +
                                 rat_str(lo) + "," + rat_str(hi) + "]")};
            if (c1 == c2 && es != c1 * Rat((long)n) * ep)
                return {make("bounds", pid, wid, false,
                             "constant weight equality fails at n=" + std::to_string(n))};
        }
        if (c1 == c2 && c1 > 0) {
            Polytope lifted = lift_r(p, WeightSystem{{Weight(w)}});
            if (volume(lifted) != c1 * volume(p))
                return {make("bounds", pid, wid, false,
                             "lift volume " + rat_str(volume(lifted)) + " != " +
                                 rat_str(c1 * volume(p)))};
        }
        return {make("bounds", pid, wid, true,
                     "ratio within [" + rat_str(c1) + "," + rat_str(c2) + "] for n<=8")};
    } catch (const std::exception& e) {
        return {make("bounds", pid, wid, false, e.what())};
    }
}

Report verify_leading_coefficient(const Polytope& p, const PolynomialWeight& f,
                                  const std::string& pid, const std::string& wid) {
    try {
        UniPoly e = interpolate(p, f);
        Rat integral = 0;
        for (auto& [c, m] : f.terms) integral += c * integrate_monomial(p, m.exps);
        if (e.degree() != p.dim() + poly_degree(f))
            return {make("leading_coefficient", pid, wid, false,
                         "degree " + std::to_string(e.degree()))};
        if (e.leading() != integral)
            return {make("leading_coefficient", pid, wid, false,
                         rat_str(e.leading()) + " != integral " + rat_str(integral))};
        return {make("leading_coefficient", pid, wid, true,
                     "leading coefficient = integral = " + rat_str(integral))};
    } catch (const std::exception& e) {
        return {make("leading_coefficient", pid, wid, false, e.what())};
    }
}

std::optional<Triangulation> compatible_triangulation_search(const Polytope& p,
                                                             const WeightSystem& w,
                                                             PointConfig config, Report& out,
                                                             const std::string& pid,
                                                             const std::string& wid) {
    try {
        auto ws = linear_forms(w);
        std::vector<QVec> points =
            config == PointConfig::kVertices ? p.vertices() : qpts(lattice_points(p, 1));
        auto weight_vec = [&](const QVec& v) {
            QVec r(ws.size());
            for (size_t j = 0; j < ws.size(); ++j) {
                r[j] = 0;
                for (size_t i = 0; i < v.size(); ++i) r[j] += Rat((long)ws[j].coeffs[i]) * v[i];
            }
            return r;
        };
        auto tris = all_triangulations(points);
        size_t index = 0;
        for (auto& t : tris) {
            ++index;
            std::vector<std::vector<QVec>> msets;
            for (auto& s : t.simplices) {
                std::vector<QVec> m;
                for (int vi : s.verts) m.push_back(weight_vec(t.points[vi]));
                std::sort(m.begin(), m.end());
                msets.push_back(std::move(m));
            }
            bool ok = true;
            for (auto& m : msets)
                if (m != msets[0]) ok = false;
            if (!ok) continue;
            // assemble the weighted series from this triangulation: the common
            // denominator is shared by every cone and the numerator collects
            // nonnegative parallelepiped contributions
            VarSet v{w.arity(), p.ambient_dim()};
            auto cones = half_open_decompose(t);
            LaurentPoly num(v.size());
            std::vector<BinomialFactor> den;
            auto qexp = [&](const ZVec& pt) {
                ExpVec e(v.size(), 0);
                for (int j = 0; j < v.p; ++j) e[v.q_index(j)] = dotzz(ws[j].coeffs, pt);
                e[v.x_index()] = pt[v.s];
                return e;
            };
            for (size_t ci = 0; ci < cones.size(); ++ci) {
                for (auto& r : parallelepiped_points(cones[ci])) num.add_term(qexp(r), 1);
                if (ci == 0)
                    for (auto& g : cones[ci].cone.gens) den.push_back({1, qexp(g)});
            }
            std::sort(den.begin(), den.end());
            bool den_match = true;
            for (auto& c : cones) {
                std::vector<BinomialFactor> dc;
                for (auto& g : c.cone.gens) dc.push_back({1, qexp(g)});
                std::sort(dc.begin(), dc.end());
                if (dc != den) den_match = false;
            }
            bool nonneg = true;
            for (auto& [e, c] : num.terms())
                if (c < 0) nonneg = false;
            RationalSeries assembled(v, num, den);
            RationalSeries engine_side = q_weighted_series(p, w);
            for (int i = 0; i < v.s; ++i) engine_side = set_var_one(engine_side, v.t_index(i));
            bool agree = series_equal(assembled, engine_side);
            bool pass = den_match && nonneg && agree;
            out.push_back(make("compatible_triangulation", pid, wid, pass,
                               pass ? "found at index " + std::to_string(index) +
                                          ", nonnegative numerator"
                                    : "assembly check failed"));
            if (pass) return t;
            return std::nullopt;
        }
        out.push_back(make("compatible_triangulation", pid, wid, true,
                           "none among " + std::to_string(tris.size()) + " triangulations"));
        return std::nullopt;
    } catch (const std::exception& e) {
        out.push_back(make("compatible_triangulation", pid, wid, false, e.what()));
        return std::nullopt;
    }
}

Report verify_non_noetherian_witness(long long k_max) {
    if (k_max < 1 || k_max > 60) throw std::domain_error("witness guard: 1 <= K <= 60");
    long long maxn = k_max, maxm = k_max * k_max;
    std::vector<std::vector<bool>> reach(maxm + 1, std::vector<bool>(maxn + 1, false));
    reach[0][0] = true;
    for (long long j = 1; j <= maxn; ++j)
        for (long long n = j; n <= maxn; ++n)
            for (long long m = j * j; m <= maxm; ++m)
                if (reach[m - j * j][n - j]) reach[m][n] = true;
    auto member = [&](const ZVec& v) {
        if (v[0] < 0 || v[1] < 0 || v[0] > maxm || v[1] > maxn) return false;
        return (bool)reach[v[0]][v[1]];
    };
    for (long long k = 1; k <= k_max; ++k)
        if (!is_irreducible({k * k, k}, member))
            return {make("non_noetherian_witness", "squares", "a1^2", false,
                         "k=" + std::to_string(k) + " reducible")};
    return {make("non_noetherian_witness", "squares", "a1^2", true,
                 "(k^2,k) irreducible for k<=" + std::to_string(k_max))};
}

Report verify_hilbert_expansion(const Polytope& p, const WeightSystem& w, const std::string& pid,
                                const std::string& wid) {
    try {
        auto graded = [](const Polytope& q) {
            ZMat g;
            for (auto& v : q.vertices()) {
                ZVec z = to_zvec(v);
                z.push_back(1);
                g.push_back(z);
            }
            return g;
        };
        HilbertBasis base = hilbert_basis(graded(p), p.dim() + 1);
        Polytope lifted = lift_r(p, w);
        HilbertBasis direct = hilbert_basis(graded(lifted), lifted.dim() + 1);
        if (!base.certified || !direct.certified)
            return {make("hilbert_expansion", pid, wid, false, "basis not certified")};
        HilbertBasis expanded = construct_H_Pw(base, w);
        std::set<ZVec> a(direct.elements.begin(), direct.elements.end());
        std::set<ZVec> b(expanded.elements.begin(), expanded.elements.end());
        if (a != b)
            return {make("hilbert_expansion", pid, wid, false,
                         "sets differ: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()))};
        return {make("hilbert_expansion", pid, wid, true,
                     std::to_string(a.size()) + " elements match")};
    } catch (const std::exception& e) {
        return {make("hilbert_expansion", pid, wid, false, e.what())};
    }
}

std::vector<BatteryEntry> battery() {
    auto P = [](std::vector<ZVec> zs) {
        std::vector<QVec> q;
        for (auto& z : zs) q.push_back(to_qvec(z));
        return Polytope(q);
    };
    WeightSystem t1_1{{Weight(LinearForm{{1}})}};
    WeightSystem w1{{Weight(LinearForm{{1, 1}})}};
    WeightSystem w2{{Weight(LinearForm{{2, 3}})}};
    WeightSystem w3{{Weight(LinearForm{{1, 0}})}};
    WeightSystem w1w2{{Weight(LinearForm{{1, 1}}), Weight(LinearForm{{2, 3}})}};
    WeightSystem sum3{{Weight(LinearForm{{1, 1, 1}})}};
    std::vector<BatteryEntry> b;
    b.push_back({"segment1", P({{0}, {1}}), {{"t1", t1_1}}});
    b.push_back({"segment2", P({{0}, {2}}), {{"t1", t1_1}}});
    b.push_back({"square",
                 P({{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
                 {{"w1", w1}, {"w2", w2}, {"w3", w3}, {"w1w2", w1w2}}});
    b.push_back({"triangle", P({{0, 0}, {1, 0}, {1, 1}}), {{"t1", w3}}});
    std::vector<ZVec> cube;
    for (int i = 0; i < 8; ++i) cube.push_back({i & 1, (i >> 1) & 1, (i >> 2) & 1});
    b.push_back({"cube", P(cube), {{"sum", sum3}}});
    b.push_back({"skew5",
                 P({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {2, 1, 1}}),
                 {{"sum", sum3}}});
    return b;
}

Report verify_all() {
    Report out;
    auto append = [&](Report r) { out.insert(out.end(), r.begin(), r.end()); };
    for (auto& entry : battery()) {
        // unweighted sanity: numerator of the point-count series is in N
        try {
            HStarData h = series_from_poly(
                interpolate(entry.poly, poly_const(Rat(1), entry.poly.ambient_dim())));
            bool ok = true;
            for (auto& c : h.h)
                if (c < 0 || c.get_den() != 1) ok = false;
            out.push_back(make("hstar_nonnegative", entry.id, "-", ok, h.str()));
        } catch (const std::exception& e) {
            out.push_back(make("hstar_nonnegative", entry.id, "-", false, e.what()));
        }
        for (auto& [wid, ws] : entry.weights) {
            append(verify_q_lift(entry.poly, ws, entry.id, wid));
            append(verify_r_lift(entry.poly, ws, entry.id, wid));
            if (ws.arity() <= 2) append(verify_hilbert_expansion(entry.poly, ws, entry.id, wid));
            // truncation of the engine series against direct counts
            try {
                RationalSeries f = q_weighted_series(entry.poly, ws);
                auto c = truncate(f, 6);
                bool ok = true;
                long long bad = -1;
                for (long long n = 0; n <= 6 && ok; ++n)
                    if (c[n] != count_q(entry.poly, ws, n)) ok = false, bad = n;
                out.push_back(make("q_series_oracle", entry.id, wid, ok,
                                   ok ? "orders 0..6" : "mismatch at n=" + std::to_string(bad)));
                RationalSeries r = r_weighted_series(entry.poly, ws);
                auto cr = truncate(r, 6);
                ok = true;
                for (long long n = 0; n <= 6 && ok; ++n)
                    if (cr[n] != count_r(entry.poly, ws, n)) ok = false, bad = n;
                out.push_back(make("r_series_oracle", entry.id, wid, ok,
                                   ok ? "orders 0..6" : "mismatch at n=" + std::to_string(bad)));
            } catch (const std::exception& e) {
                out.push_back(make("q_series_oracle", entry.id, wid, false, e.what()));
            }
            out.push_back(make("q_reciprocity", entry.id, wid,
                               reciprocity_check_q(entry.poly, ws), "inverted series identity"));
            if (ws.arity() == 1) {
                const LinearForm& lf = std::get<LinearForm>(ws.ws[0]);
                append(verify_positivity(entry.poly, lf, entry.id, wid));
                append(verify_bounds(entry.poly, lf, entry.id, wid));
            }
        }
    }
    // coordinate-product degree checks
    {
        auto b = battery();
        append(verify_dim_formula(b[2].poly, {0, 1}, "square", "t1t2"));
        append(verify_dim_formula(b[3].poly, {0}, "triangle", "t1"));
    }
    // leading coefficients on the square
    {
        Polytope sq = battery()[2].poly;
        append(verify_leading_coefficient(sq, to_poly(Weight(LinearForm{{1, 1}})), "square", "w1"));
        append(verify_leading_coefficient(sq, to_poly(Weight(LinearForm{{2, 3}})), "square", "w2"));
        append(verify_leading_coefficient(sq, PolynomialWeight{{{Rat(1), MonomialWeight{{1, 1}}}}},
                                          "square", "t1t2"));
    }
    // compatible triangulations: the square has one, the skewed 3-polytope has none
    {
        auto b = battery();
        compatible_triangulation_search(b[2].poly, b[2].weights[0].second,
                                        PointConfig::kVertices, out, "square", "w1");
        compatible_triangulation_search(b[5].poly, b[5].weights[0].second,
                                        PointConfig::kVertices, out, "skew5", "sum");
    }
    append(verify_non_noetherian_witness(30));
    return out;
}

}  // namespace ehrlift
