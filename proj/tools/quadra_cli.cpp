#include "quadra/bessel.hpp"
#include "quadra/curves.hpp"
#include "quadra/fixtures.hpp"
#include "quadra/io.hpp"
#include "quadra/newton_polygon.hpp"
#include "quadra/quadrature.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace quadra;

/// Thrown when a check ran and answered "no"; mapped to exit code 1.
/// Malformed or unusable input is mapped to exit code 2.
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

void emit(const Json& j) { std::cout << canonical_dump(j); }

Json polygon_to_json(const NewtonPolygon& np) {
    Json j;
    j["points"] = Json::array();
    for (const auto& [k, v] : np.points) {
        Json pt = Json::array();
        pt.push_back(k);
        if (v.is_infinite())
            pt.push_back("inf");
        else
            pt.push_back(v.value());
        j["points"].push_back(std::move(pt));
    }
    j["vertices"] = Json::array();
    for (const auto& [k, v] : np.vertices) j["vertices"].push_back(Json::array({k, v}));
    j["slopes"] = Json::array();
    for (const auto& e : np.edges) j["slopes"].push_back(e.slope.str());
    return j;
}

Json formula_json(const QuadratureFormula& f) {
    FormulaDocument doc;
    doc.formula = f;
    return formula_to_json(doc);
}

std::vector<QuadFieldElement> parse_nodes(const std::string& list, long d) {
    std::vector<QuadFieldElement> nodes;
    for (const auto& tok : split_list(list)) nodes.push_back(parse_field_token(tok, d));
    return nodes;
}

long checked_disc(long d) {
    if (d >= 0 || !is_squarefree(d))
        throw ParseError("--disc must be a negative squarefree integer");
    return d;
}

void run_verify(const std::string& file, const std::string& fixture, std::optional<long> cap_flag,
                std::optional<int> expect) {
    FormulaDocument doc;
    if (!fixture.empty()) {
        auto found = fixture_by_label(fixture);
        if (!found) throw ParseError("unknown fixture '" + fixture + "'");
        doc = *found;
    } else if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw ParseError("cannot open '" + file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        Json j;
        try {
            j = Json::parse(buf.str());
        } catch (const std::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        doc = formula_from_json(j);
    } else {
        throw ParseError("verify needs --file or --fixture");
    }

    std::optional<long> cap = cap_flag;
    if (!cap) {
        if (const char* env = std::getenv("QUADRA_CAP")) {
            try {
                cap = std::stol(env);
            } catch (const std::exception&) {
                throw ParseError("QUADRA_CAP must be an integer");
            }
        }
    }

    const int degree = verify_degree(doc.formula, cap);
    Json out;
    out["degree"] = degree;
    emit(out);
    std::cerr << "verified degree " << degree << " (cap "
              << cap.value_or(2 * static_cast<long>(doc.formula.size())) << ")\n";
    if (expect && degree < *expect)
        throw CheckFailed("degree " + std::to_string(degree) + " below expected " +
                          std::to_string(*expect));
}

void run_two_node(long d) {
    auto result = two_node_degree2(checked_disc(d));
    if (std::holds_alternative<QuadratureFormula>(result)) {
        const auto& f = std::get<QuadratureFormula>(result);
        emit(formula_json(f));
        std::cerr << "unique two-node formula over Q(sqrt(" << d << ")), degree "
                  << verify_degree(f) << "\n";
        return;
    }
    const auto& no = std::get<NonExistence>(result);
    Json out;
    out["exists"] = false;
    out["witness"] = no.witness.str();
    out["reason"] = no.reason;
    emit(out);
    throw CheckFailed(no.reason);
}

ValuationContext resolve_prime(const std::string& choice, unsigned r) {
    if (choice == "auto") return prime_for_r(r);
    if (choice == "2+i") return ValuationContext::gaussian_prime_two_plus_i();
    long p = 0;
    try {
        p = std::stol(choice);
    } catch (const std::exception&) {
        throw ParseError("--prime must be 'auto', '2+i' or a prime number");
    }
    if (p % 4 == 3) return ValuationContext::inert_prime(p);
    return ValuationContext::rational_prime(p);
}

std::uint64_t certify_seed(unsigned r, std::size_t samples) {
    return 0x9E3779B97F4A7C15ull ^ (static_cast<std::uint64_t>(r) * 1000003ull) ^
           static_cast<std::uint64_t>(samples);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quadrature formulas, certificates and curves for the Bessel weight"};
    app.require_subcommand(1);

    // moments
    {
        auto* cmd = app.add_subcommand("moments", "print the first N moments");
        auto count = std::make_shared<long>(1);
        cmd->add_option("--count", *count, "how many moments")->required()->check(CLI::PositiveNumber);
        cmd->callback([count]() {
            Json arr = Json::array();
            for (long j = 0; j < *count; ++j) arr.push_back(moment(static_cast<unsigned>(j)).str());
            emit(arr);
        });
    }
    // bessel
    {
        auto* cmd = app.add_subcommand("bessel", "print y_n (or monic phi_n) by ascending degree");
        auto n = std::make_shared<long>(0);
        auto monic = std::make_shared<bool>(false);
        cmd->add_option("--n", *n, "degree")->required()->check(CLI::NonNegativeNumber);
        cmd->add_flag("--monic", *monic, "divide by the leading coefficient");
        cmd->callback([n, monic]() {
            Json arr = Json::array();
            if (*monic) {
                const auto phi = monic_phi(static_cast<unsigned>(*n));
                for (int k = 0; k <= phi.degree(); ++k)
                    arr.push_back(phi.coefficient(static_cast<std::size_t>(k)).str());
                std::cerr << "phi_" << *n << "(z) = " << polynomial_display(phi) << "\n";
            } else {
                const auto y = bessel_y(static_cast<unsigned>(*n));
                for (int k = 0; k <= y.degree(); ++k)
                    arr.push_back(y.coefficient(static_cast<std::size_t>(k)).get_str());
                std::cerr << "y_" << *n << "(z) = " << polynomial_display(y) << "\n";
            }
            emit(arr);
        });
    }
    // verify
    {
        auto* cmd = app.add_subcommand("verify", "exact verified degree of a formula document");
        auto file = std::make_shared<std::string>();
        auto fixture = std::make_shared<std::string>();
        auto cap = std::make_shared<long>(-1);
        auto expect = std::make_shared<int>(-1);
        auto* cap_opt = cmd->add_option("--cap", *cap, "largest degree to scan");
        auto* expect_opt = cmd->add_option("--expect", *expect, "fail (exit 1) below this degree");
        cmd->add_option("--file", *file, "formula JSON file");
        cmd->add_option("--fixture", *fixture, "bundled fixture label");
        cmd->callback([file, fixture, cap, expect, cap_opt, expect_opt]() {
            run_verify(*file, *fixture,
                       cap_opt->count() ? std::optional<long>(*cap) : std::nullopt,
                       expect_opt->count() ? std::optional<int>(*expect) : std::nullopt);
        });
    }
    // decompose
    {
        auto* cmd = app.add_subcommand("decompose",
                                       "quasi-orthogonal decomposition of the node polynomial");
        auto nodes = std::make_shared<std::string>();
        auto disc = std::make_shared<long>(-1);
        cmd->add_option("--nodes", *nodes, "comma-separated nodes")->required();
        cmd->add_option("--disc", *disc, "field discriminant d < 0 (default -1)");
        cmd->callback([nodes, disc]() {
            const auto pts = parse_nodes(*nodes, checked_disc(*disc));
            if (pts.empty()) throw ParseError("need at least one node");
            const auto theta = expand_from_roots(pts);
            const auto dec = decompose(theta);
            Json out;
            out["r"] = dec.r;
            out["b"] = Json::array();
            for (const auto& b : dec.b) out["b"].push_back(qfe_to_json(b));
            out["order"] = dec.order;
            out["k"] = dec.k;
            out["guaranteed_degree"] = dec.guaranteed_degree;
            emit(out);
        });
    }
    // construct {gauss-type | mt3 | two-node}
    {
        auto* grp = app.add_subcommand("construct", "build a quadrature formula");
        grp->require_subcommand(1);
        {
            auto* cmd = grp->add_subcommand("gauss-type", "weights for given distinct nodes");
            auto nodes = std::make_shared<std::string>();
            auto disc = std::make_shared<long>(-1);
            cmd->add_option("--nodes", *nodes, "comma-separated nodes")->required();
            cmd->add_option("--disc", *disc, "field discriminant d < 0 (default -1)");
            cmd->callback([nodes, disc]() {
                const auto pts = parse_nodes(*nodes, checked_disc(*disc));
                if (pts.empty()) throw ParseError("need at least one node");
                QuadratureFormula f;
                try {
                    f = construct_degree_r(pts);
                } catch (const std::invalid_argument& e) {
                    throw ParseError(e.what());
                }
                emit(formula_json(f));
                std::cerr << "verified degree " << verify_degree(f) << "\n";
            });
        }
        {
            auto* cmd = grp->add_subcommand(
                "mt3", "extend r rational nodes to an (r+1)-node formula of degree r+1");
            auto nodes = std::make_shared<std::string>();
            cmd->add_option("--nodes", *nodes, "comma-separated rational nodes (may be empty)");
            cmd->callback([nodes]() {
                std::vector<Rational> partial;
                for (const auto& tok : split_list(*nodes)) {
                    try {
                        partial.push_back(Rational::parse(tok));
                    } catch (const std::exception& e) {
                        throw ParseError(e.what());
                    }
                }
                QuadratureFormula f;
                try {
                    f = construct_degree_r_plus_1(partial);
                } catch (const std::invalid_argument& e) {
                    throw ParseError(e.what());
                } catch (const std::domain_error& e) {
                    throw ParseError(e.what());
                }
                emit(formula_json(f));
                std::cerr << "verified degree " << verify_degree(f) << "\n";
            });
        }
        {
            auto* cmd = grp->add_subcommand("two-node", "the unique two-node degree-2 candidate");
            auto disc = std::make_shared<long>(0);
            cmd->add_option("--disc", *disc, "field discriminant d < 0")->required();
            cmd->callback([disc]() { run_two_node(*disc); });
        }
    }
    // top-level alias, used by scripts
    {
        auto* cmd = app.add_subcommand("two-node", "the unique two-node degree-2 candidate");
        auto disc = std::make_shared<long>(0);
        cmd->add_option("--disc", *disc, "field discriminant d < 0")->required();
        cmd->callback([disc]() { run_two_node(*disc); });
    }
    // polygon
    {
        auto* cmd = app.add_subcommand("polygon", "Newton polygon of t*y_{r+1} + s*y_r");
        auto r = std::make_shared<long>(0);
        auto s = std::make_shared<std::string>("0");
        auto t = std::make_shared<std::string>("1");
        auto prime = std::make_shared<std::string>("auto");
        cmd->add_option("--r", *r, "parameter r >= 1")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--s", *s, "Gaussian integer s (e.g. '2+i')");
        cmd->add_option("--t", *t, "Gaussian integer t (e.g. '1')");
        cmd->add_option("--prime", *prime, "'auto', a prime, or '2+i'");
        cmd->callback([r, s, t, prime]() {
            const GaussianInt gs = parse_gaussian_token(*s);
            const GaussianInt gt = parse_gaussian_token(*t);
            ValuationContext ctx = resolve_prime(*prime, static_cast<unsigned>(*r));
            std::vector<GaussianInt> coeffs;
            try {
                coeffs = quasi_bessel_descending(static_cast<unsigned>(*r), gs, gt);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
            const NewtonPolygon np = polygon_of(coeffs, ctx);
            Json out;
            out["r"] = *r;
            out["s"] = gs.str();
            out["t"] = gt.str();
            out["prime"] = ctx.description();
            Json pj = polygon_to_json(np);
            out["points"] = pj["points"];
            out["vertices"] = pj["vertices"];
            out["slopes"] = pj["slopes"];
            const bool nonintegral = !slopes_integral(np);
            out["verdict"] = nonintegral ? "NON-INTEGRAL" : "INTEGRAL";
            emit(out);
            if (!nonintegral) throw CheckFailed("all slopes integral: no certificate");
            std::cerr << "non-integral slope found\n";
        });
    }
    // certify
    {
        auto* cmd = app.add_subcommand(
            "certify", "Newton-polygon nonexistence certificates over random coprime (s, t)");
        auto r = std::make_shared<long>(0);
        auto samples = std::make_shared<long>(200);
        auto bound = std::make_shared<long>(20);
        cmd->add_option("--r", *r, "parameter r >= 3")->required();
        cmd->add_option("--samples", *samples, "number of sampled pairs")->check(CLI::PositiveNumber);
        cmd->add_option("--bound", *bound, "component bound for s, t")->check(CLI::PositiveNumber);
        cmd->callback([r, samples, bound]() {
            if (*r < 3) throw ParseError("--r must be >= 3");
            const auto pairs = sample_coprime_pairs(
                static_cast<std::size_t>(*samples),
                certify_seed(static_cast<unsigned>(*r), static_cast<std::size_t>(*samples)),
                *bound);
            Json failures = Json::array();
            std::string prime;
            for (const auto& [s, t] : pairs) {
                const auto rep = nonexistence_certificate(static_cast<unsigned>(*r), s, t);
                prime = rep.prime;
                if (!rep.nonintegral_found && failures.size() < 10) {
                    Json f;
                    f["s"] = s.str();
                    f["t"] = t.str();
                    failures.push_back(std::move(f));
                }
            }
            Json out;
            out["r"] = *r;
            out["samples"] = *samples;
            out["prime"] = prime;
            out["all_nonintegral"] = failures.empty();
            out["failures"] = failures;
            emit(out);
            if (!failures.empty()) throw CheckFailed("some sampled pair had integral slopes");
            std::cerr << "all " << *samples << " certificates found non-integral slopes\n";
        });
    }
    // curve {search | from-point}
    {
        auto* grp = app.add_subcommand("curve", "quartic curve point search and formulas");
        grp->require_subcommand(1);
        auto which = std::make_shared<std::string>("cdk");
        grp->add_option("--which", *which, "'cdk' or 'mt2'")->check(CLI::IsMember({"cdk", "mt2"}));
        {
            auto* cmd = grp->add_subcommand("search", "bounded-height rational point search");
            auto height = std::make_shared<long>(0);
            auto gaussian = std::make_shared<bool>(false);
            cmd->add_option("--height", *height, "height bound")->required()->check(CLI::PositiveNumber);
            cmd->add_flag("--gaussian", *gaussian, "also accept purely imaginary w");
            cmd->callback([which, height, gaussian]() {
                const QuarticCurve curve = (*which == "mt2") ? curve_mt2() : curve_cdk_r2();
                const auto mode = *gaussian ? SquareMode::gaussian : SquareMode::rational_only;
                const auto pts = search_points(curve, *height, mode);
                Json out;
                out["curve"] = *which;
                out["height"] = *height;
                out["mode"] = *gaussian ? "gaussian" : "rational";
                out["count"] = pts.size();
                out["points"] = Json::array();
                for (const auto& p : pts) {
                    Json pj;
                    pj["y"] = p.y.str();
                    pj["w"] = qfe_to_json(p.w);
                    out["points"].push_back(std::move(pj));
                }
                emit(out);
            });
        }
        {
            auto* cmd = grp->add_subcommand(
                "from-point", "three-node degree-4 formula from a curve point (cdk only)");
            auto y = std::make_shared<std::string>();
            auto wim = std::make_shared<std::string>();
            cmd->add_option("--y", *y, "rational y coordinate")->required();
            cmd->add_option("--w-im", *wim, "imaginary part of w")->required();
            cmd->callback([which, y, wim]() {
                if (*which != "cdk") throw ParseError("from-point applies to the cdk curve");
                CurvePoint p;
                try {
                    p.y = Rational::parse(*y);
                    p.w = QuadFieldElement(Rational(0), Rational::parse(*wim), -1);
                } catch (const std::exception& e) {
                    throw ParseError(e.what());
                }
                QuadratureFormula f;
                try {
                    f = nodes_from_point(p);
                } catch (const std::invalid_argument& e) {
                    throw ParseError(e.what());
                }
                emit(formula_json(f));
                std::cerr << "verified degree " << verify_degree(f) << "\n";
            });
        }
    }
    // compat
    {
        auto* cmd = app.add_subcommand("compat", "pairwise kernel compatibility of nodes");
        auto nodes = std::make_shared<std::string>();
        auto disc = std::make_shared<long>(-1);
        auto r = std::make_shared<long>(-1);
        cmd->add_option("--nodes", *nodes, "comma-separated nodes")->required();
        cmd->add_option("--disc", *disc, "field discriminant d < 0 (default -1)");
        cmd->add_option("--r", *r, "kernel degree (default: node count - 1)");
        cmd->callback([nodes, disc, r]() {
            const auto pts = parse_nodes(*nodes, checked_disc(*disc));
            if (pts.empty()) throw ParseError("need at least one node");
            const long rr = *r >= 0 ? *r : static_cast<long>(pts.size()) - 1;
            bool ok = false;
            try {
                ok = pairwise_compatible(pts, static_cast<unsigned>(rr));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
            Json out;
            out["r"] = rr;
            out["nodes"] = pts.size();
            out["compatible"] = ok;
            emit(out);
            if (!ok) throw CheckFailed("nodes are not pairwise compatible");
        });
    }
    // fixtures
    {
        auto* cmd = app.add_subcommand("fixtures", "bundled formula documents");
        auto name = std::make_shared<std::string>();
        cmd->add_option("--name", *name, "fixture label");
        cmd->callback([name]() {
            if (!name->empty()) {
                auto doc = fixture_by_label(*name);
                if (!doc) throw ParseError("unknown fixture '" + *name + "'");
                emit(formula_to_json(*doc));
                return;
            }
            Json arr = Json::array();
            for (const auto& doc : bundled_fixtures()) arr.push_back(formula_to_json(doc));
            emit(arr);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const CheckFailed& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
