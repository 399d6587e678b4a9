// command line front end: weighted lattice point counting, generating series,
// weight lifts, hilbert bases, triangulations, and the verification battery
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "ehrlift/verify.hpp"

using namespace ehrlift;
using nlohmann::json;

namespace {

Rat json_rat(const json& j) {
    if (j.is_number_integer()) return Rat((long)j.get<long long>());
    if (j.is_string()) return rat_parse(j.get<std::string>());
    throw std::invalid_argument("expected integer or \"p/q\" string");
}

ZVec json_zvec(const json& j) {
    ZVec v;
    for (auto& e : j) v.push_back(e.get<long long>());
    return v;
}

Weight parse_weight(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "linear") return Weight(LinearForm{json_zvec(j.at("coeffs"))});
    if (kind == "monomial") return Weight(MonomialWeight{json_zvec(j.at("exps"))});
    if (kind == "polynomial") {
        PolynomialWeight p;
        for (auto& t : j.at("terms"))
            p.terms.push_back({json_rat(t.at("coeff")), MonomialWeight{json_zvec(t.at("exps"))}});
        return Weight(p);
    }
    if (kind == "exppoly") {
        ExpPolyWeight h;
        for (auto& coord : j.at("coords")) {
            std::vector<ExpPolyTerm> terms;
            for (auto& t : coord) {
                QVec poly;
                for (auto& c : t.at("poly")) poly.push_back(json_rat(c));
                terms.push_back({poly, json_rat(t.at("base"))});
            }
            h.coords.push_back(std::move(terms));
        }
        return Weight(h);
    }
    throw std::invalid_argument("unknown weight kind: " + kind);
}

struct Problem {
    Polytope poly;
    WeightSystem weights;
    json options;
};

Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j = json::parse(in);
    std::vector<QVec> verts;
    for (auto& row : j.at("vertices")) {
        QVec v;
        for (auto& c : row) v.push_back(json_rat(c));
        verts.push_back(std::move(v));
    }
    if (verts.empty()) throw std::invalid_argument("empty vertex list");
    WeightSystem ws;
    if (j.contains("weights"))
        for (auto& w : j["weights"]) ws.ws.push_back(parse_weight(w));
    Problem p{Polytope(std::move(verts)), std::move(ws),
              j.contains("options") ? j["options"] : json::object()};
    return p;
}

PolynomialWeight product_weight(const Problem& p) {
    PolynomialWeight f = poly_const(Rat(1), p.poly.ambient_dim());
    for (auto& w : p.weights.ws) f = poly_mul(f, to_poly(w));
    return f;
}

ZMat graded_gens(const Polytope& p) {
    ZMat g;
    for (auto& v : p.vertices()) {
        ZVec z = to_zvec(v);
        z.push_back(1);
        g.push_back(z);
    }
    return g;
}

std::string row_str(const QVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += rat_str(v[i]);
    }
    return s;
}

std::string zrow_str(const ZVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(v[i]);
    }
    return s;
}

RationalSeries specialize(RationalSeries f, bool t_one, bool q_one) {
    const VarSet v = f.vars();
    if (t_one)
        for (int i = 0; i < v.s; ++i) f = set_var_one(f, v.t_index(i));
    if (q_one)
        for (int j = 0; j < v.p; ++j) f = set_var_one(f, v.q_index(j));
    return f;
}

int dispatch(const std::string& cmd, const std::string& spec, const std::string& kind,
             long long n, bool t_one, bool q_one, const std::string& points, long long bound,
             bool compatible) {
    if (cmd == "verify") {
        Report all = verify_all();
        std::cout << render_report(all);
        return all_pass(all) ? 0 : 1;
    }
    Problem p = load_problem(spec);
    PointConfig config = points == "all" ? PointConfig::kAllLatticePoints : PointConfig::kVertices;
    if (points != "all" && points != "vertices")
        throw std::invalid_argument("points must be vertices or all");

    if (cmd == "count") {
        if (n < 0) throw std::invalid_argument("n must be nonnegative");
        if (kind == "plain") {
            std::cout << lattice_points(p.poly, n).size() << "\n";
        } else if (kind == "q" || kind == "r") {
            LaurentPoly c = kind == "q" ? count_q(p.poly, p.weights, n)
                                        : count_r(p.poly, p.weights, n);
            VarSet v{p.weights.arity(), p.poly.ambient_dim()};
            std::cout << c.str(v) << "\n";
        } else if (kind == "s") {
            std::cout << rat_str(count_weighted(p.poly, Weight(product_weight(p)), n)) << "\n";
        } else {
            throw std::invalid_argument("count kind must be plain|q|r|s");
        }
        return 0;
    }
    if (cmd == "poly") {
        std::cout << interpolate(p.poly, product_weight(p)).str() << "\n";
        return 0;
    }
    if (cmd == "series") {
        RationalSeries f;
        if (kind == "q") {
            f = q_weighted_series(p.poly, p.weights);
        } else if (kind == "r") {
            f = r_weighted_series(p.poly, p.weights);
        } else if (kind == "s") {
            if (p.weights.arity() < 1) throw std::invalid_argument("s series needs a weight");
            f = s_weighted_series(p.poly, linear_forms(p.weights)[0]);
        } else {
            throw std::invalid_argument("series kind must be q|r|s");
        }
        std::cout << specialize(f, t_one, q_one).str() << "\n";
        return 0;
    }
    if (cmd == "lift") {
        if (kind != "q" && kind != "r") throw std::invalid_argument("lift kind must be q|r");
        Polytope lifted =
            kind == "r" ? lift_r(p.poly, p.weights) : lift_q(p.poly, p.weights);
        for (auto& v : lifted.vertices()) std::cout << row_str(v) << "\n";
        return 0;
    }
    if (cmd == "hilbert") {
        long long b = bound > 0 ? bound : p.poly.dim() + 1;
        HilbertBasis hb = hilbert_basis(graded_gens(p.poly), b);
        for (auto& e : hb.elements) std::cout << zrow_str(e) << "\n";
        std::cout << "certified " << (hb.certified ? "true" : "false") << "\n";
        return hb.certified ? 0 : 1;
    }
    if (cmd == "triangulate") {
        if (compatible) {
            Report rep;
            auto found = compatible_triangulation_search(p.poly, p.weights, config, rep, "input",
                                                         "spec");
            std::cout << render_report(rep);
            if (found) {
                for (auto& s : found->simplices) {
                    std::string line;
                    for (int i : s.verts) line += (line.empty() ? "" : " ") + std::to_string(i);
                    std::cout << line << "\n";
                }
            } else {
                std::cout << "none\n";
            }
            return all_pass(rep) ? 0 : 1;
        }
        Triangulation t = triangulate(p.poly, config);
        for (auto& pt : t.points) std::cout << row_str(pt) << "\n";
        for (auto& s : t.simplices) {
            std::string line = "simplex";
            for (int i : s.verts) line += " " + std::to_string(i);
            std::cout << line << "\n";
        }
        return 0;
    }
    if (cmd == "reciprocity") {
        bool ok;
        if (kind == "s") {
            if (p.weights.arity() < 1 || !std::holds_alternative<ExpPolyWeight>(p.weights.ws[0]))
                throw std::invalid_argument("s reciprocity needs an exppoly weight");
            ok = s_reciprocity_check(p.poly, std::get<ExpPolyWeight>(p.weights.ws[0]));
        } else if (kind == "q" || kind == "plain") {
            ok = reciprocity_check_q(p.poly, kind == "q" ? p.weights : WeightSystem{});
        } else {
            throw std::invalid_argument("reciprocity kind must be q|s");
        }
        std::cout << (ok ? "PASS" : "FAIL") << "\n";
        return ok ? 0 : 1;
    }
    if (cmd == "hstar") {
        UniPoly e = interpolate(p.poly, poly_const(Rat(1), p.poly.ambient_dim()));
        std::cout << series_from_poly(e).str() << "\n";
        return 0;
    }
    if (cmd == "integrate") {
        PolynomialWeight f = product_weight(p);
        Rat total = 0;
        for (auto& [c, m] : f.terms) total += c * integrate_monomial(p.poly, m.exps);
        std::cout << rat_str(total) << "\n";
        return 0;
    }
    throw std::invalid_argument("unknown command: " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact weighted lattice point counting and rational generating series.\n"
        "Input specs are JSON: {\"vertices\": [[..]], \"weights\": [{\"kind\": \"linear\", "
        "\"coeffs\": [..]}, ..]}; rationals as \"p/q\" strings.\n"
        "EHRLIFT_THREADS is accepted as a parallelism hint and has no effect on output."};
    app.require_subcommand(1);

    std::string spec, kind = "plain", points = "vertices";
    long long n = 0, bound = 0;
    bool t_one = false, q_one = false, compatible = false;

    auto add_spec = [&](CLI::App* c, bool required = true) {
        auto* opt = c->add_option("spec", spec, "JSON problem description file");
        if (required) opt->required();
    };

    auto* c_count = app.add_subcommand("count", "lattice point count or weighted count at dilation n");
    add_spec(c_count);
    c_count->add_option("--kind", kind, "plain|q|r|s (default plain)");
    c_count->add_option("--n", n, "dilation factor")->required();

    auto* c_poly = app.add_subcommand("poly", "interpolated counting polynomial in n");
    add_spec(c_poly);

    auto* c_series = app.add_subcommand("series", "rational generating series");
    add_spec(c_series);
    c_series->add_option("--kind", kind, "q|r|s")->required();
    c_series->add_flag_callback("--set-t", [&] { t_one = true; }, "substitute every t variable by 1");
    c_series->add_flag_callback("--set-q", [&] { q_one = true; }, "substitute every q variable by 1");

    auto* c_lift = app.add_subcommand("lift", "vertices of the weight lifting polytope");
    add_spec(c_lift);
    c_lift->add_option("--kind", kind, "q (graph lift) or r (box lift)")->required();

    auto* c_hilbert = app.add_subcommand("hilbert", "hilbert basis of the cone over the polytope");
    add_spec(c_hilbert);
    c_hilbert->add_option("--bound", bound, "grading bound (default dim+1)");

    auto* c_tri = app.add_subcommand("triangulate", "triangulation, or compatible-triangulation search");
    add_spec(c_tri);
    c_tri->add_option("--points", points, "vertices|all (point configuration)");
    c_tri->add_flag("--compatible", compatible, "search for a weight-compatible triangulation");

    auto* c_rec = app.add_subcommand("reciprocity", "interior/inverted series identity check");
    add_spec(c_rec);
    c_rec->add_option("--kind", kind, "q|s")->required();

    auto* c_hstar = app.add_subcommand("hstar", "numerator of the point-count series over (1-x)^{d+1}");
    add_spec(c_hstar);

    auto* c_verify = app.add_subcommand("verify", "run the full built-in check battery");
    (void)c_verify;

    auto* c_int = app.add_subcommand("integrate", "exact integral of the weight product over the polytope");
    add_spec(c_int);

    // parallelism hint only; results never depend on it
    (void)std::getenv("EHRLIFT_THREADS");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        std::string cmd = app.get_subcommands().front()->get_name();
        return dispatch(cmd, spec, kind, n, t_one, q_one, points, bound, compatible);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
