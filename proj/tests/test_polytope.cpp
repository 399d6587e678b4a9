#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ehrlift/polytope.hpp"

using namespace ehrlift;

namespace {

std::vector<QVec> qpts(const std::vector<ZVec>& zs) {
    std::vector<QVec> r;
    for (auto& z : zs) r.push_back(to_qvec(z));
    return r;
}

Polytope unit_square() { return Polytope(qpts({{0, 0}, {1, 0}, {0, 1}, {1, 1}})); }
Polytope unit_cube() {
    std::vector<ZVec> v;
    for (int i = 0; i < 8; ++i) v.push_back({i & 1, (i >> 1) & 1, (i >> 2) & 1});
    return Polytope(qpts(v));
}
Polytope segment01() { return Polytope(qpts({{0}, {1}})); }
Polytope segment02() { return Polytope(qpts({{0}, {2}})); }
Polytope tri011() { return Polytope(qpts({{0, 0}, {1, 0}, {1, 1}})); }
Polytope cy2() {
    return Polytope(qpts({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {2, 1, 1}}));
}

}  // namespace

TEST_CASE("linalg basics") {
    QMat a = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK(mat_rank(a) == 1);
    auto x = solve_linear({{Rat(2), Rat(0)}, {Rat(0), Rat(3)}}, {Rat(4), Rat(6)});
    REQUIRE(x);
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 2);
    CHECK_FALSE(solve_linear({{Rat(1)}, {Rat(1)}}, {Rat(0), Rat(1)}));
    QMat ns = nullspace({{Rat(1), Rat(1), Rat(0)}});
    CHECK(ns.size() == 2);
    CHECK(primitive({Rat(1, 2), Rat(-1, 3)}) == ZVec{3, -2});
    // kernel of (1 1 2) over Z
    ZMat k = integer_kernel({{1, 1, 2}});
    REQUIRE(k.size() == 2);
    for (auto& v : k) CHECK(v[0] + v[1] + 2 * v[2] == 0);
}

TEST_CASE("facets of the unit square and segment") {
    Polytope p = unit_square();
    CHECK(p.dim() == 2);
    CHECK(p.facets().ineqs.size() == 4);
    CHECK(p.facets().eqs.empty());
    CHECK(p.vertices().size() == 4);
    CHECK(p.contains(to_qvec({0, 1})));
    CHECK_FALSE(p.contains(to_qvec({2, 0})));
    CHECK(p.contains_relint({Rat(1, 2), Rat(1, 2)}));
    CHECK_FALSE(p.contains_relint(to_qvec({0, 0})));

    Polytope s = segment01();
    CHECK(s.dim() == 1);
    CHECK(s.facets().ineqs.size() == 2);
}

TEST_CASE("facets of the example 3-polytope") {
    Polytope p = cy2();
    CHECK(p.dim() == 3);
    CHECK(p.vertices().size() == 5);
    // every facet is supported by at least 3 vertices and all vertices satisfy it
    for (auto& f : p.facets().ineqs) {
        int tight = 0;
        for (auto& v : p.vertices()) {
            Rat d = dotz(f.a, v);
            CHECK(d <= f.b);
            if (d == f.b) ++tight;
        }
        CHECK(tight >= 3);
    }
}

TEST_CASE("degenerate hull gets equations") {
    // segment embedded in the plane x1 = x2
    Polytope p(qpts({{0, 0}, {2, 2}}));
    CHECK(p.dim() == 1);
    CHECK(p.facets().eqs.size() == 1);
    CHECK(p.facets().ineqs.size() == 2);
    CHECK(p.contains(to_qvec({1, 1})));
    CHECK_FALSE(p.contains(to_qvec({1, 0})));
    // lattice basis of the diagonal line is (1,1), so relative volume is 2
    CHECK(volume(p) == 2);
}

TEST_CASE("lattice point counts") {
    Polytope sq = unit_square();
    for (long long n = 0; n <= 4; ++n)
        CHECK((long long)lattice_points(sq, n).size() == (n + 1) * (n + 1));
    CHECK(lattice_points(sq, 0) == std::vector<ZVec>{{0, 0}});
    CHECK(lattice_points(cy2(), 1).size() == 5);
    Polytope cube = unit_cube();
    CHECK(lattice_points(cube, 2).size() == 27);
    // rational vertices accepted
    Polytope half(std::vector<QVec>{{Rat(0)}, {Rat(1, 2)}});
    CHECK(lattice_points(half, 1).size() == 1);
    CHECK(lattice_points(half, 2).size() == 2);
}

TEST_CASE("interior lattice points") {
    Polytope sq = unit_square();
    CHECK(interior_lattice_points(sq, 1).empty());
    CHECK(interior_lattice_points(sq, 2) == std::vector<ZVec>{{1, 1}});
    for (long long n = 1; n <= 5; ++n)
        CHECK((long long)interior_lattice_points(sq, n).size() == (n - 1) * (n - 1));
    CHECK(interior_lattice_points(segment01(), 3) == std::vector<ZVec>{{1}, {2}});
    for (long long n = 1; n <= 4; ++n) {
        auto in = interior_lattice_points(cy2(), n);
        auto all = lattice_points(cy2(), n);
        std::set<ZVec> alls(all.begin(), all.end());
        for (auto& z : in) CHECK(alls.count(z));
    }
}

TEST_CASE("placing triangulation") {
    Triangulation t = triangulate(unit_square(), PointConfig::kVertices);
    CHECK(t.simplices.size() == 2);
    Triangulation s = triangulate(segment02(), PointConfig::kAllLatticePoints);
    REQUIRE(s.simplices.size() == 2);
    CHECK(s.points.size() == 3);
    // chengyang-style polytope: simplex volumes add up to the hull volume
    Polytope p = cy2();
    Triangulation tc = triangulate(p, PointConfig::kVertices);
    Rat total = 0;
    for (auto& sx : tc.simplices) {
        std::vector<QVec> pts;
        for (int i : sx.verts) pts.push_back(tc.points[i]);
        total += volume(Polytope(pts));
    }
    CHECK(total == volume(p));
    Triangulation c = triangulate(unit_cube(), PointConfig::kVertices);
    Rat ctotal = 0;
    for (auto& sx : c.simplices) {
        std::vector<QVec> pts;
        for (int i : sx.verts) pts.push_back(c.points[i]);
        ctotal += volume(Polytope(pts));
    }
    CHECK(ctotal == 1);
}

TEST_CASE("all triangulations") {
    auto sq = all_triangulations(qpts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    CHECK(sq.size() == 2);
    auto tri = all_triangulations(qpts({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(tri.size() == 1);
    auto seg = all_triangulations(qpts({{0}, {1}, {2}}));
    CHECK(seg.size() == 2);
    // duplicate-free and each member tiles the full volume
    for (auto& t : sq) {
        Rat v = 0;
        for (auto& sx : t.simplices) {
            std::vector<QVec> pts;
            for (int i : sx.verts) pts.push_back(t.points[i]);
            v += volume(Polytope(pts));
        }
        CHECK(v == 1);
    }
    CHECK_THROWS(all_triangulations(std::vector<QVec>(13, QVec{Rat(0)})));
}

TEST_CASE("volume") {
    CHECK(volume(unit_square()) == 1);
    CHECK(volume(tri011()) == Rat(1, 2));
    CHECK(volume(unit_cube()) == 1);
    CHECK(volume(segment02()) == 2);
    CHECK(volume(cy2()) == Rat(1, 3));  // two unimodular tetrahedra
}

TEST_CASE("monomial integration") {
    Polytope sq = unit_square();
    CHECK(integrate_monomial(sq, {1, 0}) == Rat(1, 2));
    CHECK(integrate_monomial(sq, {0, 0}) == 1);
    CHECK(integrate_monomial(sq, {1, 1}) == Rat(1, 4));
    // int over conv((0,0),(1,0),(0,1)) of x1*x2 = 1/24 (iterated-integral value)
    Polytope t(qpts({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(integrate_monomial(t, {1, 1}) == Rat(1, 24));
    CHECK(integrate_monomial(t, {1, 0}) == Rat(1, 6));
    CHECK(integrate_monomial(segment02(), {2}) == Rat(8, 3));
}

TEST_CASE("ehrhart count matches interpolation nodes") {
    // (n+1)(n+2)/2 for the standard triangle
    Polytope t(qpts({{0, 0}, {1, 0}, {0, 1}}));
    for (long long n = 0; n <= 8; ++n)
        CHECK((long long)lattice_points(t, n).size() == (n + 1) * (n + 2) / 2);
    Polytope c = unit_cube();
    for (long long n = 0; n <= 4; ++n)
        CHECK((long long)lattice_points(c, n).size() == (n + 1) * (n + 1) * (n + 1));
}
