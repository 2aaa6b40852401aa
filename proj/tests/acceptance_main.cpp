// Acceptance suite: one pass/fail line per criterion, exact comparisons
// throughout. argv[1] must point at the quadra CLI binary; criteria that
// specify command-line behavior run the real executable.

#include "quadra/bessel.hpp"
#include "quadra/curves.hpp"
#include "quadra/fixtures.hpp"
#include "quadra/io.hpp"
#include "quadra/newton_polygon.hpp"
#include "quadra/quadrature.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace quadra;

namespace {

std::string g_cli;
int g_failures = 0;

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " 2>/dev/null";
    CmdResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, n);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    return res;
}

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    if (ok) {
        std::cout << "[PASS] criterion " << number << ": " << name << "\n";
    } else {
        ++g_failures;
        std::cout << "[FAIL] criterion " << number << ": " << name
                  << (detail.empty() ? "" : " -- " + detail) << "\n";
    }
}

bool expect(bool cond, std::string& detail, const std::string& msg) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

Rational rat(const char* s) { return Rational::parse(s); }

std::string node_str(const Json& j, std::size_t i, const char* part) {
    return j.at("nodes").at(i).at(part).get<std::string>();
}
std::string weight_str(const Json& j, std::size_t i, const char* part) {
    return j.at("weights").at(i).at(part).get<std::string>();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];
    if (g_cli.empty()) {
        std::cerr << "usage: quadra_acceptance <path-to-quadra-cli>\n";
        return 2;
    }

    criterion(1, "moments match (-2)^j/(j+1)! for j = 0..12", [](std::string& detail) {
        bool ok = true;
        for (unsigned j = 0; j <= 12; ++j) {
            Int num;
            mpz_ui_pow_ui(num.get_mpz_t(), 2, j);
            if (j % 2 == 1) num = -num;
            ok = ok && expect(moment(j) == Rational(num, factorial(j + 1)), detail,
                              "closed form mismatch at j=" + std::to_string(j));
        }
        ok = ok && expect(moment(0) == Rational(1), detail, "mu_0");
        ok = ok && expect(moment(1) == Rational(-1), detail, "mu_1");
        ok = ok && expect(moment(2) == rat("2/3"), detail, "mu_2");
        const auto cli = run_cli("moments --count 13");
        ok = ok && expect(cli.exit_code == 0, detail, "CLI moments failed");
        const Json arr = Json::parse(cli.out);
        ok = ok && expect(arr.size() == 13 && arr.at(2).get<std::string>() == "2/3", detail,
                          "CLI moments content");
        return ok;
    });

    criterion(2, "orthogonality and nonvanishing h_n through n = 8", [](std::string& detail) {
        bool ok = true;
        for (unsigned m = 0; m <= 8 && ok; ++m)
            for (unsigned n = m + 1; n <= 8 && ok; ++n)
                ok = expect(moment_functional(monic_phi(m) * monic_phi(n)) == Rational(0), detail,
                            "L[phi_" + std::to_string(m) + " phi_" + std::to_string(n) + "] != 0");
        for (unsigned n = 0; n <= 8; ++n)
            ok = ok && expect(h_value(n) != Rational(0), detail,
                              "h_" + std::to_string(n) + " vanished");
        return ok;
    });

    criterion(3, "degree-4 formula from the curve point, bit-exact, degree exactly 4",
              [](std::string& detail) {
        const auto cli = run_cli("curve from-point --y -264/743 --w-im 377866/552049");
        bool ok = expect(cli.exit_code == 0, detail, "from-point exit code");
        if (!ok) return false;
        const Json j = Json::parse(cli.out);
        const char* nodes[3][2] = {{"-264/743", "0"},
                                   {"-253754/863405", "188933/863405"},
                                   {"-253754/863405", "-188933/863405"}};
        const char* weights[3][2] = {
            {"304758098401/73863713379", "0"},
            {"-115447192511/73863713379", "28870417761487643/27910585919669214"},
            {"-115447192511/73863713379", "-28870417761487643/27910585919669214"}};
        for (std::size_t i = 0; i < 3; ++i) {
            ok = ok && expect(node_str(j, i, "a") == nodes[i][0] &&
                                  node_str(j, i, "b") == nodes[i][1],
                              detail, "node " + std::to_string(i) + " not bit-exact");
            ok = ok && expect(weight_str(j, i, "a") == weights[i][0] &&
                                  weight_str(j, i, "b") == weights[i][1],
                              detail, "weight " + std::to_string(i) + " not bit-exact");
        }

        // determinism: identical invocation, identical bytes
        const auto again = run_cli("curve from-point --y -264/743 --w-im 377866/552049");
        ok = ok && expect(again.out == cli.out, detail, "output not byte-deterministic");

        // verify through the CLI on the emitted document
        const auto tmp = std::filesystem::temp_directory_path() / "quadra_accept_example.json";
        std::ofstream(tmp) << cli.out;
        const auto ver = run_cli("verify --file " + tmp.string() + " --expect 4");
        ok = ok && expect(ver.exit_code == 0, detail, "verify --expect 4 exit code");
        ok = ok && expect(Json::parse(ver.out).at("degree").get<int>() == 4, detail,
                          "verified degree != 4");

        // failure at j = 5 is computed: the moment sum misses mu_5
        const auto doc = formula_from_json(Json::parse(cli.out));
        QuadFieldElement sum5;
        for (std::size_t i = 0; i < doc.formula.size(); ++i) {
            QuadFieldElement p(Rational(1));
            for (int e = 0; e < 5; ++e) p = p * doc.formula.nodes[i];
            sum5 = sum5 + doc.formula.weights[i] * p;
        }
        ok = ok && expect(sum5 != QuadFieldElement(moment(5)), detail,
                          "degree-5 equation unexpectedly holds");
        ok = ok && expect(verify_degree(doc.formula) == 4, detail, "library degree != 4");
        return ok;
    });

    criterion(4, "rational three-node extension: node -27/44 and its weights, degree exactly 3",
              [](std::string& detail) {
        const auto cli = run_cli("construct mt3 --nodes 1/2,1/5");
        bool ok = expect(cli.exit_code == 0, detail, "construct mt3 exit code");
        if (!ok) return false;
        const Json j = Json::parse(cli.out);
        ok = ok && expect(node_str(j, 2, "a") == "-27/44", detail, "third node");
        ok = ok && expect(weight_str(j, 0, "a") == "172/441", detail, "weight 0");
        ok = ok && expect(weight_str(j, 1, "a") == "-1625/1611", detail, "weight 1");
        ok = ok && expect(weight_str(j, 2, "a") == "42592/26313", detail, "weight 2");
        const auto again = run_cli("construct mt3 --nodes 1/2,1/5");
        ok = ok && expect(again.out == cli.out, detail, "output not byte-deterministic");
        const auto doc = formula_from_json(j);
        ok = ok && expect(verify_degree(doc.formula) == 3, detail, "degree != 3");
        return ok;
    });

    criterion(5, "two-node rule over sqrt(-11); nonexistence over sqrt(-1) and sqrt(-3)",
              [](std::string& detail) {
        const auto cli = run_cli("two-node --disc -11");
        bool ok = expect(cli.exit_code == 0, detail, "disc -11 exit code");
        if (!ok) return false;
        const Json j = Json::parse(cli.out);
        ok = ok && expect(node_str(j, 0, "a") == "-5/6" && node_str(j, 0, "b") == "1/6", detail,
                          "node 0");
        ok = ok && expect(node_str(j, 1, "a") == "-5/6" && node_str(j, 1, "b") == "-1/6", detail,
                          "node 1");
        ok = ok && expect(weight_str(j, 0, "a") == "1/2" && weight_str(j, 0, "b") == "1/22",
                          detail, "weight 0");
        ok = ok && expect(weight_str(j, 1, "a") == "1/2" && weight_str(j, 1, "b") == "-1/22",
                          detail, "weight 1");
        ok = ok && expect(verify_degree(formula_from_json(j).formula) == 2, detail,
                          "degree != 2");

        const auto no1 = run_cli("two-node --disc -1");
        ok = ok && expect(no1.exit_code == 1, detail, "disc -1 should exit 1");
        ok = ok && expect(Json::parse(no1.out).at("reason").get<std::string>() ==
                              "sqrt(11)/6 irrational",
                          detail, "disc -1 witness");
        const auto no3 = run_cli("two-node --disc -3");
        ok = ok && expect(no3.exit_code == 1, detail, "disc -3 should exit 1");
        ok = ok && expect(Json::parse(no3.out).at("exists").get<bool>() == false, detail,
                          "disc -3 exists flag");
        return ok;
    });

    criterion(6, "bundled sqrt(-3) formula verifies to exactly degree 3", [](std::string& detail) {
        const auto doc = fixture_by_label("q3-three-node-degree3");
        bool ok = expect(doc.has_value(), detail, "fixture missing");
        ok = ok && expect(verify_degree(doc->formula) == 3, detail, "library degree != 3");
        const auto cli = run_cli("verify --fixture q3-three-node-degree3 --expect 3");
        ok = ok && expect(cli.exit_code == 0, detail, "CLI verify exit code");
        ok = ok && expect(Json::parse(cli.out).at("degree").get<int>() == 3, detail,
                          "CLI degree != 3");
        return ok;
    });

    criterion(7, "Newton polygons: the P2P5 edge, 200-sample certificates for r = 3..10, "
                 "hull vs oracle on 1000 point sets",
              [](std::string& detail) {
        const auto np = polygon_of(quasi_bessel_descending(4, GaussianInt(0), GaussianInt(1)),
                                   prime_for_r(4));
        bool ok = expect(np.edges.size() == 2, detail, "edge count");
        ok = ok && expect(np.edges[0].slope == Rational(-1) &&
                              np.edges[0].from == std::make_pair(0L, 3L) &&
                              np.edges[0].to == std::make_pair(2L, 1L),
                          detail, "first edge");
        ok = ok && expect(np.edges[1].slope == Rational(Int(-1), Int(3)) &&
                              np.edges[1].from == std::make_pair(2L, 1L) &&
                              np.edges[1].to == std::make_pair(5L, 0L),
                          detail, "second edge (P2 to P5)");

        // certificates over sampled coprime pairs, pi = 2+i for r = 5, 6
        for (unsigned r = 3; r <= 10 && ok; ++r) {
            const auto pairs = sample_coprime_pairs(200, 0xACCEu + r, 20);
            for (const auto& [s, t] : pairs) {
                const auto rep = nonexistence_certificate(r, s, t);
                if (!rep.nonintegral_found) {
                    ok = expect(false, detail,
                                "integral slopes at r=" + std::to_string(r) + ", s=" + s.str() +
                                    ", t=" + t.str());
                    break;
                }
                if (r == 5 || r == 6)
                    ok = ok && expect(rep.prime == "2+i", detail, "wrong prime at r=5,6");
            }
        }
        for (unsigned r = 3; r <= 10 && ok; ++r) {
            const auto cli = run_cli("certify --r " + std::to_string(r) + " --samples 200");
            ok = expect(cli.exit_code == 0, detail, "CLI certify failed at r=" + std::to_string(r));
            ok = ok && expect(Json::parse(cli.out).at("all_nonintegral").get<bool>(), detail,
                              "CLI certify reported a failure");
        }

        // hull against a from-scratch gift-wrapping oracle
        std::mt19937_64 rng(0x41CE);
        std::uniform_int_distribution<int> npts(2, 12);
        std::uniform_int_distribution<long> val(0, 10);
        std::uniform_int_distribution<int> inf_roll(0, 9);
        for (int it = 0; it < 1000 && ok; ++it) {
            std::vector<std::pair<long, Valuation>> pts;
            const int n = npts(rng);
            for (int k = 0; k < n; ++k)
                pts.emplace_back(k, inf_roll(rng) == 0 ? Valuation::infinity()
                                                       : Valuation::of(val(rng)));
            pts.front().second = Valuation::of(val(rng));
            pts.back().second = Valuation::of(val(rng));

            std::vector<std::pair<long, long>> finite;
            for (const auto& [k, v] : pts)
                if (!v.is_infinite()) finite.emplace_back(k, v.value());
            std::vector<std::pair<long, long>> chain{finite.front()};
            while (chain.back() != finite.back()) {
                const auto cur = chain.back();
                std::pair<long, long> best{0, 0};
                bool have = false;
                for (const auto& p : finite) {
                    if (p.first <= cur.first) continue;
                    if (!have) {
                        best = p;
                        have = true;
                        continue;
                    }
                    const long lhs = (p.second - cur.second) * (best.first - cur.first);
                    const long rhs = (best.second - cur.second) * (p.first - cur.first);
                    if (lhs < rhs || (lhs == rhs && p.first > best.first)) best = p;
                }
                chain.push_back(best);
            }
            const auto hull = polygon_from_points(pts);
            ok = expect(hull.vertices == chain, detail,
                        "hull mismatch at iteration " + std::to_string(it));
            // every segment of the hull must support all finite points
            for (const auto& e : hull.edges) {
                const long dk = e.to.first - e.from.first;
                const long dv = e.to.second - e.from.second;
                for (const auto& p : finite)
                    ok = ok && expect((p.second - e.from.second) * dk >=
                                          dv * (p.first - e.from.first),
                                      detail, "edge fails the lower-support property");
            }
        }
        return ok;
    });

    criterion(8, "point search at height 100 finds exactly the six known points, under 10 s",
              [](std::string& detail) {
        const auto start = std::chrono::steady_clock::now();
        const auto cli = run_cli("curve --which mt2 search --height 100");
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = expect(cli.exit_code == 0, detail, "search exit code");
        if (!ok) return false;
        const Json j = Json::parse(cli.out);
        ok = ok && expect(j.at("count").get<int>() == 6, detail,
                          "expected 6 points, got " + j.at("count").dump());
        const char* expected[6][2] = {{"-1", "0"},      {"1", "0"},      {"-1/2", "3"},
                                      {"-1/2", "-3"},   {"-9/10", "19/25"}, {"-9/10", "-19/25"}};
        for (std::size_t i = 0; i < 6 && ok; ++i) {
            ok = expect(j.at("points").at(i).at("y").get<std::string>() == expected[i][0] &&
                            j.at("points").at(i).at("w").at("a").get<std::string>() ==
                                expected[i][1] &&
                            j.at("points").at(i).at("w").at("b").get<std::string>() == "0",
                        detail, "point " + std::to_string(i));
        }
        const auto again = run_cli("curve --which mt2 search --height 100");
        ok = ok && expect(again.out == cli.out, detail, "output not byte-deterministic");
        ok = ok && expect(secs < 10.0, detail, "took " + std::to_string(secs) + " s");
        return ok;
    });

    criterion(9, "random constructors: degree floors hold and the ceiling 2m is never reached",
              [](std::string& detail) {
        std::mt19937_64 rng(0xC0FFEE);
        std::uniform_int_distribution<long> num(-20, 20);
        std::uniform_int_distribution<long> den(1, 20);
        std::uniform_int_distribution<std::size_t> size(1, 6);
        auto draw_distinct = [&](std::size_t n) {
            std::vector<Rational> out;
            while (out.size() < n) {
                const Rational z = Rational(Int(num(rng)), Int(den(rng)));
                bool dup = false;
                for (const auto& w : out) dup = dup || w == z;
                if (!dup) out.push_back(z);
            }
            return out;
        };

        bool ok = true;
        for (int it = 0; it < 100 && ok; ++it) {
            const std::size_t m = size(rng);
            const auto rationals = draw_distinct(m);
            std::vector<QuadFieldElement> nodes;
            for (const auto& z : rationals) nodes.emplace_back(z);
            const auto f = construct_degree_r(nodes);
            const int deg = verify_degree(f);
            ok = expect(deg >= static_cast<int>(m) - 1, detail,
                        "gauss-type below floor at iteration " + std::to_string(it));
            ok = ok && expect(deg < 2 * static_cast<int>(m), detail,
                              "gauss-type reached 2m at iteration " + std::to_string(it));
        }
        for (int it = 0; it < 100 && ok; ++it) {
            const std::size_t r = size(rng) - 1;
            QuadratureFormula f;
            for (;;) {
                try {
                    f = construct_degree_r_plus_1(draw_distinct(r));
                    break;
                } catch (const std::domain_error&) {
                    // degenerate draw; redraw nodes
                }
            }
            const int deg = verify_degree(f);
            ok = expect(deg >= static_cast<int>(r) + 1, detail,
                        "extension below floor at iteration " + std::to_string(it));
            ok = ok && expect(deg < 2 * static_cast<int>(r + 1), detail,
                              "extension reached 2m at iteration " + std::to_string(it));
        }
        return ok;
    });

    criterion(10, "kernel compatibility separates the curve nodes from {0, 1, 2}; f_2 is exact",
              [](std::string& detail) {
        const auto doc = fixture_by_label("qi-three-node-degree4");
        bool ok = expect(doc.has_value(), detail, "fixture missing");
        ok = ok && expect(pairwise_compatible(doc->formula.nodes, 2), detail,
                          "curve nodes reported incompatible");
        ok = ok && expect(!pairwise_compatible({QuadFieldElement(Rational(0)),
                                                QuadFieldElement(Rational(1)),
                                                QuadFieldElement(Rational(2))},
                                               2),
                          detail, "{0,1,2} reported compatible");
        auto ypoly = [](std::vector<long> asc) {
            std::vector<Rational> c;
            for (long v : asc) c.emplace_back(v);
            return Polynomial<Rational>(std::move(c));
        };
        const BivariatePolynomial expected(std::vector<Polynomial<Rational>>{
            ypoly({3, 12, 15}), ypoly({12, 42, 45}), ypoly({15, 45, 45})});
        ok = ok && expect(f_poly(2) == expected, detail, "f_2 differs from its displayed form");
        const auto cli = run_cli(
            "compat --nodes -264/743,-253754/863405+188933/863405i,"
            "-253754/863405-188933/863405i --r 2");
        ok = ok && expect(cli.exit_code == 0 && Json::parse(cli.out).at("compatible").get<bool>(),
                          detail, "CLI compat on curve nodes");
        const auto bad = run_cli("compat --nodes 0,1,2 --r 2");
        ok = ok && expect(bad.exit_code == 1, detail, "CLI compat on {0,1,2} should exit 1");
        return ok;
    });

    criterion(11, "decomposition round-trips random b and reproduces the r = 2 basis matrix",
              [](std::string& detail) {
        std::mt19937_64 rng(0xB0B);
        std::uniform_int_distribution<long> num(-15, 15);
        std::uniform_int_distribution<long> den(1, 10);
        bool ok = true;
        for (unsigned r = 0; r <= 5 && ok; ++r) {
            for (int it = 0; it < 20 && ok; ++it) {
                std::vector<Rational> b;
                for (unsigned i = 1; i <= r + 1; ++i) b.emplace_back(Int(num(rng)), Int(den(rng)));
                Polynomial<Rational> theta = monic_phi(r + 1);
                for (unsigned i = 1; i <= r + 1; ++i)
                    theta = theta + monic_phi(r + 1 - i) * b[i - 1];
                ok = expect(decompose(theta).b == b, detail,
                            "round trip failed at r=" + std::to_string(r));
            }
        }
        const auto A = BasisMatrix::build(2);
        const char* expected[4][4] = {{"1", "0", "0", "0"},
                                      {"1", "1", "0", "0"},
                                      {"2/5", "1", "1", "0"},
                                      {"1/15", "1/3", "1", "1"}};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                ok = ok && expect(A.entry(i, j) == rat(expected[i][j]), detail,
                                  "basis matrix entry (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
        return ok;
    });

    std::cout << (g_failures == 0 ? "all criteria passed\n"
                                  : std::to_string(g_failures) + " criteria failed\n");
    return g_failures == 0 ? 0 : 1;
}
