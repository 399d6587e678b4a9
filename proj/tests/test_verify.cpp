#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ehrlift/verify.hpp"

using namespace ehrlift;

namespace {

std::vector<QVec> qpts(const std::vector<ZVec>& zs) {
    std::vector<QVec> r;
    for (auto& z : zs) r.push_back(to_qvec(z));
    return r;
}

Polytope unit_square() { return Polytope(qpts({{0, 0}, {1, 0}, {0, 1}, {1, 1}})); }
Polytope skew5() {
    return Polytope(qpts({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {2, 1, 1}}));
}

PolynomialWeight lin(const ZVec& c) { return to_poly(Weight(LinearForm{c})); }

}  // namespace

TEST_CASE("weighted point counts") {
    Polytope sq = unit_square();
    CHECK(count_weighted(sq, Weight(LinearForm{{1, 1}}), 2) == 18);
    CHECK(count_weighted(sq, Weight(poly_const(Rat(1), 2)), 3) == 16);
    // product of the three sample weights at n = 1
    PolynomialWeight f = poly_mul(lin({1, 1}), poly_mul(lin({2, 3}), lin({1, 0})));
    CHECK(count_weighted(sq, Weight(f), 1) == 12);
    CHECK(count_weighted(sq, Weight(f), 0) == 0);
}

TEST_CASE("box and monomial counts at fixed dilation") {
    WeightSystem w{{Weight(LinearForm{{1, 1, 1}})}};
    LaurentPoly q1 = count_q(skew5(), w, 1);
    // sum over the five points of the first dilation, t -> 1: 1+q+q^2+q^3+q^4
    Rat total = 0;
    std::set<long long> qexps;
    for (auto& [e, c] : q1.terms()) {
        total += c;
        qexps.insert(e[0]);
    }
    CHECK(total == 5);
    CHECK(qexps == std::set<long long>{0, 1, 2, 3, 4});
    CHECK(count_q(skew5(), w, 0) == LaurentPoly::constant(5, 1));
    WeightSystem w2{{Weight(LinearForm{{1, 1}})}};
    LaurentPoly r1 = count_r(unit_square(), w2, 1);
    Rat rtotal = 0;
    for (auto& [e, c] : r1.terms()) rtotal += c;
    CHECK(rtotal == 8);
}

TEST_CASE("interpolation of weighted counts") {
    Polytope sq = unit_square();
    CHECK(interpolate(sq, poly_const(Rat(1), 2)) == unipoly({1, 2, 1}));
    CHECK(interpolate(sq, lin({1, 1})) == unipoly({0, 1, 2, 1}));
    CHECK(interpolate(sq, lin({2, 3})) ==
          unipoly({0, rat_frac(5, 2), 5, rat_frac(5, 2)}));
    CHECK(interpolate(sq, lin({1, 0})) ==
          unipoly({0, rat_frac(1, 2), 1, rat_frac(1, 2)}));
    CHECK(interpolate(sq, poly_mul(lin({1, 1}), lin({2, 3}))) ==
          unipoly({0, rat_frac(5, 6), rat_frac(55, 12), rat_frac(20, 3), rat_frac(35, 12)}));
    UniPoly p = interpolate(sq, lin({1, 1}));
    CHECK(p.degree() == 3);
    CHECK(p.leading() == 1);
    CHECK(p.str() == "n^3 + 2*n^2 + n");
    CHECK(unipoly({0, rat_frac(5, 2), 5, rat_frac(5, 2)}).str() ==
          "(5/2)*n^3 + 5*n^2 + (5/2)*n");
    CHECK(unipoly({}).str() == "0");
}

TEST_CASE("numerator extraction from a counting polynomial") {
    HStarData h = series_from_poly(unipoly({1, 2, 1}));  // (n+1)^2
    CHECK(h.h == QVec{1, 1});
    CHECK(h.den_exp == 3);
    CHECK(h.str() == "(1 + x)/(1-x)^3");
    HStarData one = series_from_poly(unipoly({1}));
    CHECK(one.h == QVec{1});
    CHECK(one.den_exp == 1);
    CHECK(one.str() == "(1)/(1-x)");
    // counting polynomial of the fully lifted square with all three weights
    Polytope sq = unit_square();
    WeightSystem w{{Weight(LinearForm{{1, 1}}), Weight(LinearForm{{2, 3}}),
                    Weight(LinearForm{{1, 0}})}};
    Polytope lifted = lift_r(sq, w);
    UniPoly e = interpolate(lifted, poly_const(Rat(1), 5));
    CHECK(e == unipoly({1, rat_frac(22, 3), rat_frac(71, 4), rat_frac(58, 3), rat_frac(39, 4),
                        rat_frac(11, 6)}));
    HStarData hw = series_from_poly(e);
    CHECK(hw.h == QVec{1, 51, 129, 39});
    CHECK(hw.den_exp == 6);
}

TEST_CASE("report rendering") {
    Report r = {{"q_lift", "square", "w1", true, "ok"},
                {"bounds", "cube", "sum", false, "n=2"}};
    CHECK(render_report(r) ==
          "CHECK q_lift square w1 PASS ok\nCHECK bounds cube sum FAIL n=2\n");
    CHECK_FALSE(all_pass(r));
    CHECK(all_pass({r[0]}));
}

TEST_CASE("lift checks on samples") {
    Polytope sq = unit_square();
    WeightSystem w1{{Weight(LinearForm{{1, 1}})}};
    CHECK(all_pass(verify_q_lift(sq, w1, "square", "w1")));
    CHECK(all_pass(verify_q_lift(sq, WeightSystem{}, "square", "-")));
    CHECK(all_pass(verify_q_lift(skew5(), WeightSystem{{Weight(LinearForm{{1, 1, 1}})}}, "skew5",
                                 "sum")));
    CHECK_FALSE(all_pass(verify_q_lift(sq, WeightSystem{{Weight(LinearForm{{-1, 0}})}}, "square",
                                       "bad")));
    CHECK(all_pass(verify_r_lift(sq, w1, "square", "w1")));
    Polytope seg(qpts({{0}, {1}}));
    CHECK(all_pass(verify_r_lift(seg, WeightSystem{{Weight(LinearForm{{1}})}}, "segment1", "t1")));
    // the lift of the segment by t1 is a triangle: counts (n+1)(n+2)/2
    Polytope tri = lift_r(seg, WeightSystem{{Weight(LinearForm{{1}})}});
    for (long long n = 0; n <= 5; ++n)
        CHECK((long long)lattice_points(tri, n).size() == (n + 1) * (n + 2) / 2);
}

TEST_CASE("dimension formula checks") {
    CHECK(all_pass(verify_dim_formula(unit_square(), {0, 1}, "square", "t1t2")));
    Polytope sq = unit_square();
    WeightSystem w{{Weight(LinearForm{{1, 0}}), Weight(LinearForm{{0, 1}})}};
    CHECK(lift_r(sq, w).dim() == 4);
    CHECK(interpolate(sq, PolynomialWeight{{{Rat(1), MonomialWeight{{1, 1}}}}}).degree() == 4);
    // a coordinate that vanishes on the polytope does not raise the dimension
    Polytope flat(qpts({{0, 0}, {0, 1}}));
    CHECK(all_pass(verify_dim_formula(flat, {0}, "flat", "t1")));
    CHECK(lift_r(flat, WeightSystem{{Weight(LinearForm{{1, 0}})}}).dim() == flat.dim());
}

TEST_CASE("positivity bounds and leading coefficient checks") {
    Polytope sq = unit_square();
    CHECK(all_pass(verify_positivity(sq, LinearForm{{1, 1}}, "square", "w1")));
    CHECK(all_pass(verify_bounds(sq, LinearForm{{1, 1}}, "square", "w1")));
    // constant vertex weight: equality branch
    Polytope off(qpts({{1, 0}, {1, 1}}));
    CHECK(all_pass(verify_bounds(off, LinearForm{{1, 0}}, "offseg", "t1")));
    CHECK(all_pass(verify_bounds(off, LinearForm{{0, 0}}, "offseg", "zero")));
    CHECK(all_pass(verify_leading_coefficient(sq, lin({1, 1}), "square", "w1")));
    CHECK(all_pass(verify_leading_coefficient(
        sq, PolynomialWeight{{{Rat(1), MonomialWeight{{1, 1}}}}}, "square", "t1t2")));
    CHECK(interpolate(sq, lin({2, 3})).leading() == rat_frac(5, 2));
    CHECK(integrate_monomial(sq, {1, 1}) == rat_frac(1, 4));
}

TEST_CASE("compatible triangulation search") {
    Report rep;
    auto found = compatible_triangulation_search(
        unit_square(), WeightSystem{{Weight(LinearForm{{1, 1}})}}, PointConfig::kVertices, rep,
        "square", "w1");
    CHECK(found.has_value());
    CHECK(all_pass(rep));
    rep.clear();
    auto none = compatible_triangulation_search(
        skew5(), WeightSystem{{Weight(LinearForm{{1, 1, 1}})}}, PointConfig::kVertices, rep,
        "skew5", "sum");
    CHECK_FALSE(none.has_value());
    CHECK(all_pass(rep));
    CHECK(rep[0].detail.find("none") == 0);
    // the single-simplex triangle is trivially compatible
    rep.clear();
    auto tri = compatible_triangulation_search(
        Polytope(qpts({{0, 0}, {1, 0}, {1, 1}})), WeightSystem{{Weight(LinearForm{{1, 0}})}},
        PointConfig::kVertices, rep, "triangle", "t1");
    CHECK(tri.has_value());
    CHECK(all_pass(rep));
}

TEST_CASE("infinite minimal generating set witness") {
    CHECK(all_pass(verify_non_noetherian_witness(8)));
    CHECK_THROWS(verify_non_noetherian_witness(61));
    CHECK_THROWS(verify_non_noetherian_witness(0));
}

TEST_CASE("hilbert expansion check") {
    Polytope seg(qpts({{0}, {1}}));
    CHECK(all_pass(verify_hilbert_expansion(seg, WeightSystem{{Weight(LinearForm{{1}})}},
                                            "segment1", "t1")));
    CHECK(all_pass(verify_hilbert_expansion(unit_square(),
                                            WeightSystem{{Weight(LinearForm{{1, 1}})}}, "square",
                                            "w1")));
}

TEST_CASE("weighted counts are linear in the weight") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (auto& entry : battery()) {
        int s = entry.poly.ambient_dim();
        for (int trial = 0; trial < 3; ++trial) {
            // random polynomial with monomial exponents <= 2
            PolynomialWeight f;
            std::vector<std::pair<Rat, MonomialWeight>> monos;
            for (int m = 0; m < 3; ++m) {
                ZVec e(s);
                for (int i = 0; i < s; ++i) e[i] = std::uniform_int_distribution<int>(0, 2)(rng);
                f.terms.push_back({Rat(coeff(rng)), MonomialWeight{e}});
            }
            UniPoly whole = interpolate(entry.poly, f);
            UniPoly combo = unipoly({});
            QVec acc(whole.coeffs.size() + 4, Rat(0));
            for (auto& [mu, mono] : f.terms) {
                UniPoly part = interpolate(entry.poly, PolynomialWeight{{{Rat(1), mono}}});
                for (size_t i = 0; i < part.coeffs.size(); ++i) acc[i] += mu * part.coeffs[i];
            }
            CHECK(whole == unipoly(acc));
        }
    }
}

TEST_CASE("full battery report") {
    Report all = verify_all();
    CHECK(all.size() > 40);
    for (auto& r : all) {
        INFO(r.name, " ", r.polytope_id, " ", r.weight_id, " ", r.detail);
        CHECK(r.pass);
    }
    // deterministic rendering
    CHECK(render_report(all) == render_report(verify_all()));
}
