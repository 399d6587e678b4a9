#include "ehrlift/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace ehrlift {

QVec to_qvec(const ZVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat((long)v[i]);
    return r;
}

ZVec to_zvec(const QVec& v) {
    ZVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) throw std::domain_error("to_zvec: not integral");
        if (!v[i].get_num().fits_slong_p()) throw std::overflow_error("to_zvec: too large");
        r[i] = v[i].get_num().get_si();
    }
    return r;
}

namespace {

// all k-subsets of {0..n-1}, lexicographic
void for_subsets(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == k) {
            fn(idx);
            return;
        }
        for (int i = start; i <= n - (k - pos); ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

// hyperplane through the given affinely independent points of R^d;
// returns false if they do not span a unique hyperplane
bool hyperplane_through(const std::vector<QVec>& ys, const std::vector<int>& sub, int d,
                        QVec* normal, Rat* offset) {
    QMat diffs;
    for (size_t i = 1; i < sub.size(); ++i) {
        QVec r(d);
        for (int j = 0; j < d; ++j) r[j] = ys[sub[i]][j] - ys[sub[0]][j];
        diffs.push_back(std::move(r));
    }
    QMat ns;
    if (diffs.empty()) {
        if (d != 1) return false;
        ns = {{Rat(1)}};
    } else {
        ns = nullspace(diffs);
    }
    if ((int)ns.size() != 1) return false;
    *normal = ns[0];
    *offset = dot(ns[0], ys[sub[0]]);
    return true;
}

Rat det(QMat m) {
    int n = (int)m.size();
    Rat d = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        Rat inv = Rat(1) / m[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] * inv;
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

Rat simplex_volume(const std::vector<QVec>& ys, const std::vector<int>& verts) {
    int d = (int)verts.size() - 1;
    if (d == 0) return 1;
    QMat m;
    for (int i = 1; i <= d; ++i) {
        QVec r(d);
        for (int j = 0; j < d; ++j) r[j] = ys[verts[i]][j] - ys[verts[0]][j];
        m.push_back(std::move(r));
    }
    Rat v = det(m);
    if (v < 0) v = -v;
    Rat fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    return v / fact;
}

}  // namespace

Polytope::Polytope(std::vector<QVec> pts) {
    if (pts.empty()) throw std::invalid_argument("empty point list");
    amb_ = (int)pts[0].size();
    for (auto& p : pts)
        if ((int)p.size() != amb_) throw std::invalid_argument("inconsistent ambient dimension");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    gens_ = std::move(pts);
    base_ = gens_[0];
    int m = (int)gens_.size();

    QMat diffs;
    for (int i = 1; i < m; ++i) {
        QVec r(amb_);
        for (int j = 0; j < amb_; ++j) r[j] = gens_[i][j] - base_[j];
        diffs.push_back(std::move(r));
    }
    dim_ = diffs.empty() ? 0 : mat_rank(diffs);

    // affine-hull equations and the lattice basis of the direction space
    ZMat eq_normals;
    if (dim_ < amb_) {
        QMat ns = diffs.empty() ? QMat() : nullspace(diffs);
        if (diffs.empty())
            for (int j = 0; j < amb_; ++j) ns.push_back(to_qvec(unit_ll(amb_, j)));
        for (auto& v : ns) {
            ZVec a = primitive(v);
            facets_.eqs.push_back({a, dotz(a, base_)});
            eq_normals.push_back(a);
        }
        lat_ = integer_kernel(eq_normals);
    } else {
        for (int j = 0; j < amb_; ++j) lat_.push_back(unit_ll(amb_, j));
    }
    if ((int)lat_.size() != dim_) throw std::logic_error("lattice basis rank mismatch");

    lattice_ = true;
    for (auto& p : gens_)
        for (auto& c : p)
            if (c.get_den() != 1) lattice_ = false;

    // brute-force V -> H in affine coordinates
    std::vector<QVec> ys(m);
    for (int i = 0; i < m; ++i) ys[i] = affine_coords(gens_[i]);
    std::map<std::pair<ZVec, Rat>, std::pair<ZVec, Rat>> found;  // affine key -> ambient facet
    QMat latq;
    for (auto& r : lat_) latq.push_back(to_qvec(r));
    if (dim_ > 0) for_subsets(m, dim_, [&](const std::vector<int>& sub) {
        QVec alpha;
        Rat beta;
        if (!hyperplane_through(ys, sub, dim_, &alpha, &beta)) return;
        bool le = true, ge = true;
        for (auto& y : ys) {
            Rat v = dot(alpha, y);
            if (v > beta) le = false;
            if (v < beta) ge = false;
        }
        if (le == ge) return;  // cuts through, or everything on it
        if (ge) {
            for (auto& c : alpha) c = -c;
            beta = -beta;
        }
        ZVec ap = primitive(alpha);
        int nz = 0;
        while (alpha[nz] == 0) ++nz;
        Rat scale = Rat((long)ap[nz]) / alpha[nz];
        Rat bp = beta * scale;
        auto key = std::make_pair(ap, bp);
        if (found.count(key)) return;
        // pull the affine-coordinate normal back to the ambient space
        auto amb = solve_linear(latq, to_qvec(ap));
        if (!amb) throw std::logic_error("facet pullback failed");
        ZVec aa = primitive(*amb);
        int nz2 = 0;
        while ((*amb)[nz2] == 0) ++nz2;
        Rat s2 = Rat((long)aa[nz2]) / (*amb)[nz2];
        found.emplace(key, std::make_pair(aa, s2 * (dot(*amb, base_) + bp)));
    });
    for (auto& [k, f] : found) facets_.ineqs.push_back({f.first, f.second});

    // vertices: points whose active facet normals span the direction space
    std::map<std::pair<ZVec, Rat>, QVec> aff_normals;
    for (auto& [k, f] : found) aff_normals.emplace(k, to_qvec(k.first));
    for (int i = 0; i < m; ++i) {
        QMat active;
        for (auto& [k, f] : found)
            if (dot(aff_normals[k], ys[i]) == k.second) active.push_back(aff_normals[k]);
        if (dim_ == 0 || mat_rank(active) == dim_) verts_.push_back(gens_[i]);
    }
}

QVec Polytope::affine_coords(const QVec& x) const {
    // solve lat^T y = x - base
    QMat a(amb_, QVec(dim_));
    QVec b(amb_);
    for (int i = 0; i < amb_; ++i) {
        for (int j = 0; j < dim_; ++j) a[i][j] = Rat((long)lat_[j][i]);
        b[i] = x[i] - base_[i];
    }
    auto y = solve_linear(a, b);
    if (!y) throw std::domain_error("point outside affine hull");
    return *y;
}

bool Polytope::contains(const QVec& x) const {
    for (auto& f : facets_.eqs)
        if (dotz(f.a, x) != f.b) return false;
    for (auto& f : facets_.ineqs)
        if (dotz(f.a, x) > f.b) return false;
    return true;
}

bool Polytope::contains_relint(const QVec& x) const {
    for (auto& f : facets_.eqs)
        if (dotz(f.a, x) != f.b) return false;
    for (auto& f : facets_.ineqs)
        if (dotz(f.a, x) >= f.b) return false;
    return dim_ > 0 || contains(x);
}

namespace {

std::vector<ZVec> enumerate_dilation(const Polytope& p, long long n, bool strict) {
    int d = p.ambient_dim();
    ZVec lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
        Rat mn = p.gens()[0][j], mx = mn;
        for (auto& v : p.gens()) {
            if (v[j] < mn) mn = v[j];
            if (v[j] > mx) mx = v[j];
        }
        lo[j] = rat_ceil_ll(mn * (long)n);
        hi[j] = rat_floor_ll(mx * (long)n);
        if (lo[j] > hi[j]) return {};
    }
    // integer fast path: a.x <= n*b  <=>  den(b)*(a.x) <= n*num(b)
    struct FastFacet {
        ZVec a;
        long long num, den;
    };
    std::vector<FastFacet> eqs, ineqs;
    for (auto* src : {&p.facets().eqs, &p.facets().ineqs}) {
        for (auto& f : *src) {
            if (!f.b.get_num().fits_slong_p() || !f.b.get_den().fits_slong_p())
                throw std::overflow_error("facet offset too large");
            (src == &p.facets().eqs ? eqs : ineqs)
                .push_back({f.a, f.b.get_num().get_si(), f.b.get_den().get_si()});
        }
    }
    std::vector<ZVec> out;
    ZVec x = lo;
    while (true) {
        bool ok = true;
        for (auto& f : eqs)
            if (f.den * dotzz(f.a, x) != n * f.num) { ok = false; break; }
        if (ok)
            for (auto& f : ineqs) {
                long long lhs = f.den * dotzz(f.a, x);
                long long rhs = n * f.num;
                if (strict ? lhs >= rhs : lhs > rhs) { ok = false; break; }
            }
        if (ok) out.push_back(x);
        int j = d - 1;
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

}  // namespace

std::vector<ZVec> lattice_points(const Polytope& p, long long n) {
    if (n < 0) throw std::invalid_argument("negative dilation");
    return enumerate_dilation(p, n, false);
}

std::vector<ZVec> interior_lattice_points(const Polytope& p, long long n) {
    if (n < 1) throw std::invalid_argument("dilation must be positive");
    if (p.dim() == 0) return lattice_points(p, n);  // relative interior of a point
    return enumerate_dilation(p, n, true);
}

namespace {

// boundary (d-1)-faces of a simplicial complex: faces hitting exactly one simplex
std::map<std::vector<int>, int> boundary_faces(const std::vector<Simplex>& simplices) {
    std::map<std::vector<int>, std::pair<int, int>> count;  // face -> (hits, owner)
    for (int si = 0; si < (int)simplices.size(); ++si) {
        const auto& v = simplices[si].verts;
        for (size_t drop = 0; drop < v.size(); ++drop) {
            std::vector<int> face;
            for (size_t i = 0; i < v.size(); ++i)
                if (i != drop) face.push_back(v[i]);
            auto& e = count[face];
            ++e.first;
            e.second = si;
        }
    }
    std::map<std::vector<int>, int> out;
    for (auto& [face, e] : count)
        if (e.first == 1) out.emplace(face, e.second);
    return out;
}

// barycentric coordinates of y w.r.t. the simplex, or nullopt if outside
std::optional<QVec> barycentric(const std::vector<QVec>& ys, const std::vector<int>& verts,
                                const QVec& y, int d) {
    QMat a(d + 1, QVec(verts.size()));
    QVec b(d + 1);
    for (size_t k = 0; k < verts.size(); ++k) {
        for (int i = 0; i < d; ++i) a[i][k] = ys[verts[k]][i];
        a[d][k] = 1;
    }
    for (int i = 0; i < d; ++i) b[i] = y[i];
    b[d] = 1;
    auto lam = solve_linear(a, b);
    if (!lam) return std::nullopt;
    for (auto& l : *lam)
        if (l < 0) return std::nullopt;
    return lam;
}

Triangulation placing_triangulation(const std::vector<QVec>& pts, const std::vector<QVec>& ys,
                                    int d) {
    int m = (int)pts.size();
    // greedy initial simplex in lex order
    std::vector<int> init{0};
    QMat diffs;
    for (int i = 1; i < m && (int)init.size() < d + 1; ++i) {
        QVec r(d);
        for (int j = 0; j < d; ++j) r[j] = ys[i][j] - ys[0][j];
        diffs.push_back(r);
        if (mat_rank(diffs) == (int)diffs.size())
            init.push_back(i);
        else
            diffs.pop_back();
    }
    if ((int)init.size() != d + 1) throw std::invalid_argument("points do not span");
    std::set<int> used(init.begin(), init.end());
    std::vector<Simplex> simplices{{init}};
    for (int i = 0; i < m; ++i) {
        if (used.count(i)) continue;
        bool attached = false;
        for (auto& [face, owner] : boundary_faces(simplices)) {
            QVec alpha;
            Rat beta;
            if (!hyperplane_through(ys, face, d, &alpha, &beta))
                throw std::logic_error("degenerate boundary face");
            int opp = -1;
            for (int v : simplices[owner].verts)
                if (std::find(face.begin(), face.end(), v) == face.end()) opp = v;
            if (dot(alpha, ys[opp]) > beta) {
                for (auto& c : alpha) c = -c;
                beta = -beta;
            }
            if (dot(alpha, ys[i]) > beta) {  // visible
                std::vector<int> nv = face;
                nv.push_back(i);
                std::sort(nv.begin(), nv.end());
                simplices.push_back({nv});
                attached = true;
            }
        }
        if (!attached) {
            // interior point: stellar subdivision of every simplex containing it
            std::vector<Simplex> next;
            for (auto& s : simplices) {
                auto lam = barycentric(ys, s.verts, ys[i], d);
                if (!lam) {
                    next.push_back(s);
                    continue;
                }
                for (size_t k = 0; k < s.verts.size(); ++k) {
                    if ((*lam)[k] == 0) continue;
                    std::vector<int> nv;
                    for (size_t j = 0; j < s.verts.size(); ++j)
                        if (j != k) nv.push_back(s.verts[j]);
                    nv.push_back(i);
                    std::sort(nv.begin(), nv.end());
                    next.push_back({nv});
                }
            }
            simplices = std::move(next);
        }
    }
    std::sort(simplices.begin(), simplices.end(),
              [](const Simplex& a, const Simplex& b) { return a.verts < b.verts; });
    return {pts, std::move(simplices)};
}

}  // namespace

Triangulation triangulate(const Polytope& p, PointConfig config) {
    std::vector<QVec> pts;
    if (config == PointConfig::kVertices) {
        pts = p.vertices();
    } else {
        if (!p.lattice_vertices()) throw std::domain_error("lattice configuration needs lattice vertices");
        for (auto& z : lattice_points(p, 1)) pts.push_back(to_qvec(z));
    }
    if (p.dim() == 0) return {pts, {Simplex{{0}}}};
    std::vector<QVec> ys(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) ys[i] = p.affine_coords(pts[i]);
    return placing_triangulation(pts, ys, p.dim());
}

namespace {

// do the interiors of two full-dimensional simplices in R^d intersect?
bool interiors_meet(const std::vector<QVec>& ys, const std::vector<int>& sa,
                    const std::vector<int>& sb, int d) {
    // facet inequalities of both simplices
    std::vector<std::pair<QVec, Rat>> ineqs;
    for (auto* s : {&sa, &sb}) {
        for (size_t drop = 0; drop < s->size(); ++drop) {
            std::vector<int> face;
            for (size_t i = 0; i < s->size(); ++i)
                if (i != drop) face.push_back((*s)[i]);
            QVec alpha;
            Rat beta;
            if (!hyperplane_through(ys, face, d, &alpha, &beta))
                throw std::logic_error("degenerate simplex facet");
            if (dot(alpha, ys[(*s)[drop]]) > beta) {
                for (auto& c : alpha) c = -c;
                beta = -beta;
            }
            ineqs.emplace_back(std::move(alpha), beta);
        }
    }
    // vertices of the intersection polytope = feasible basic solutions
    std::vector<QVec> verts;
    for_subsets((int)ineqs.size(), d, [&](const std::vector<int>& sub) {
        QMat a;
        QVec b;
        for (int i : sub) {
            a.push_back(ineqs[i].first);
            b.push_back(ineqs[i].second);
        }
        if (mat_rank(a) != d) return;
        auto x = solve_linear(a, b);
        if (!x) return;
        for (auto& [alpha, beta] : ineqs)
            if (dot(alpha, *x) > beta) return;
        verts.push_back(*x);
    });
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if ((int)verts.size() < d + 1) return false;
    QMat diffs;
    for (size_t i = 1; i < verts.size(); ++i) {
        QVec r(d);
        for (int j = 0; j < d; ++j) r[j] = verts[i][j] - verts[0][j];
        diffs.push_back(std::move(r));
    }
    return mat_rank(diffs) == d;
}

}  // namespace

std::vector<Triangulation> all_triangulations(const std::vector<QVec>& points) {
    if (points.size() > 12) throw std::invalid_argument("all_triangulations: too many points");
    Polytope hull(points);
    std::vector<QVec> pts = hull.gens();  // deduped, sorted
    int m = (int)pts.size();
    int d = hull.dim();
    std::vector<QVec> ys(m);
    for (int i = 0; i < m; ++i) ys[i] = hull.affine_coords(pts[i]);
    if (d == 0) return {{pts, {Simplex{{0}}}}};

    std::vector<std::vector<int>> cands;
    std::vector<Rat> vols;
    for_subsets(m, d + 1, [&](const std::vector<int>& sub) {
        Rat v = simplex_volume(ys, sub);
        if (v == 0) return;
        cands.push_back(sub);
        vols.push_back(v);
    });
    Rat total = volume(hull);

    std::map<std::pair<int, int>, bool> memo;
    auto disjoint = [&](int i, int j) {
        auto key = std::minmax(i, j);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool r = !interiors_meet(ys, cands[i], cands[j], d);
        memo.emplace(key, r);
        return r;
    };

    std::vector<Triangulation> out;
    std::vector<int> chosen;
    std::function<void(int, Rat)> rec = [&](int start, Rat vol) {
        if (vol == total) {
            std::vector<Simplex> ss;
            for (int c : chosen) ss.push_back({cands[c]});
            out.push_back({pts, std::move(ss)});
            return;
        }
        for (int i = start; i < (int)cands.size(); ++i) {
            if (vol + vols[i] > total) continue;
            bool ok = true;
            for (int c : chosen)
                if (!disjoint(c, i)) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(i);
            rec(i + 1, vol + vols[i]);
            chosen.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

Rat volume(const Polytope& p) {
    if (p.dim() == 0) return 1;
    Triangulation t = triangulate(p, PointConfig::kVertices);
    std::vector<QVec> ys(t.points.size());
    for (size_t i = 0; i < t.points.size(); ++i) ys[i] = p.affine_coords(t.points[i]);
    Rat v = 0;
    for (auto& s : t.simplices) v += simplex_volume(ys, s.verts);
    return v;
}

namespace {

// polynomial in k variables as exponent -> coefficient
using Poly = std::map<std::vector<int>, Rat>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r[e] += ca * cb;
        }
    return r;
}

}  // namespace

Rat integrate_monomial(const Polytope& p, const ZVec& b) {
    if ((int)b.size() != p.ambient_dim()) throw std::invalid_argument("exponent width mismatch");
    int d = p.dim();
    if (d == 0) return 0;
    // express x^b as a polynomial in the affine coordinates y
    Poly mono{{std::vector<int>(d, 0), Rat(1)}};
    for (int j = 0; j < p.ambient_dim(); ++j) {
        if (b[j] == 0) continue;
        Poly lin{{std::vector<int>(d, 0), p.base()[j]}};
        for (int i = 0; i < d; ++i) {
            if (p.lattice_basis()[i][j] == 0) continue;
            std::vector<int> e(d, 0);
            e[i] = 1;
            lin[e] += Rat((long)p.lattice_basis()[i][j]);
        }
        for (long long k = 0; k < b[j]; ++k) mono = poly_mul(mono, lin);
    }
    Triangulation t = triangulate(p, PointConfig::kVertices);
    std::vector<QVec> ys(t.points.size());
    for (size_t i = 0; i < t.points.size(); ++i) ys[i] = p.affine_coords(t.points[i]);
    Rat total = 0;
    for (auto& s : t.simplices) {
        Rat vol = simplex_volume(ys, s.verts);
        // substitute y = sum lambda_k u_k and integrate monomials in lambda:
        // int over the simplex of prod lambda^J = vol * d! * prod J! / (d + |J|)!
        for (auto& [e, c] : mono) {
            Poly lam{{std::vector<int>(d + 1, 0), Rat(1)}};
            for (int i = 0; i < d; ++i) {
                Poly lin;
                for (int k = 0; k <= d; ++k) {
                    if (ys[s.verts[k]][i] == 0) continue;
                    std::vector<int> u(d + 1, 0);
                    u[k] = 1;
                    lin[u] = ys[s.verts[k]][i];
                }
                for (int rep = 0; rep < e[i]; ++rep) lam = poly_mul(lam, lin);
            }
            for (auto& [j, cj] : lam) {
                Rat num = 1;
                long tot = d;
                for (int jk : j) {
                    for (int f = 2; f <= jk; ++f) num *= f;
                    tot += jk;
                }
                Rat den = 1;
                for (long f = d + 1; f <= tot; ++f) den *= f;
                total += c * cj * vol * num / den;
            }
        }
    }
    return total;
}

}  // namespace ehrlift
