// Command-line front end: zero searches, the Laurent-recursion walk, the
// asymptotic-modulus table and the verification checks, with JSON/CSV/text
// reports on stdout and diagnostics on stderr.

#include "nhairy/laurent.hpp"
#include "nhairy/series.hpp"
#include "nhairy/special.hpp"
#include "nhairy/transform.hpp"
#include "nhairy/zero_finder.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

using nlohmann::json;
using namespace nhairy;

namespace {

struct GlobalOpts {
    std::string a = "0", b = "0", c = "0", deriv = "1";
    unsigned print_digits = 15;
    int terms = 80;
    std::string format = "json";
    unsigned precision = 40; // working digits, NHAIRY_DIGITS overrides
};

Complex parse_complex(const std::string& s, unsigned digits) {
    PrecisionGuard guard(digits + 10);
    auto comma = s.find(',');
    try {
        if (comma == std::string::npos) return Complex(Real(s));
        return Complex(Real(s.substr(0, comma)), Real(s.substr(comma + 1)));
    } catch (const std::exception&) {
        throw CLI::ValidationError("cannot parse '" + s + "' as a number");
    }
}

json complex_json(const Complex& z, unsigned digits) {
    return json{{"re", z.re.str(digits)}, {"im", z.im.str(digits)}};
}

json zero_json(const ZeroRecord& zr, unsigned digits) {
    const char* method = nullptr;
    switch (zr.method) {
    case ZeroMethod::bisection: method = "bisection"; break;
    case ZeroMethod::newton: method = "newton"; break;
    case ZeroMethod::argument_principle: method = "argument_principle"; break;
    case ZeroMethod::recursion_walk: method = "recursion_walk"; break;
    }
    return json{{"location", complex_json(zr.location, digits)},
                {"multiplicity", zr.multiplicity},
                {"residual", zr.residual.str(6)},
                {"method", method}};
}

const char* diag_name(WalkDiag d) {
    switch (d) {
    case WalkDiag::converged: return "converged";
    case WalkDiag::oscillating_2_periodic: return "oscillating_2_periodic";
    case WalkDiag::diverging: return "diverging";
    case WalkDiag::max_terms: return "max_terms";
    }
    return "unknown";
}

void emit(const json& report, const GlobalOpts& g) {
    if (g.format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    if (g.format == "csv") {
        // flat CSV of the results section (RFC 4180 line endings)
        const json& res = report.at("results");
        if (res.is_array() && !res.empty() && res[0].is_object()) {
            bool first = true;
            for (auto it = res[0].begin(); it != res[0].end(); ++it) {
                if (!first) std::cout << ",";
                std::cout << it.key();
                first = false;
            }
            std::cout << "\r\n";
            for (const auto& row : res) {
                first = true;
                for (auto it = row.begin(); it != row.end(); ++it) {
                    std::cout << (first ? "" : ",");
                    if (it->is_string())
                        std::cout << it->get<std::string>();
                    else
                        std::cout << it->dump();
                    first = false;
                }
                std::cout << "\r\n";
            }
        }
        return;
    }
    // text
    std::cout << report.at("command").get<std::string>() << "\n";
    std::cout << report.at("results").dump(2) << "\n";
}

json base_report(const std::string& command, const GlobalOpts& g) {
    return json{{"command", command},
                {"params",
                 {{"a", g.a}, {"b", g.b}, {"c", g.c}, {"deriv", g.deriv}}},
                {"settings", {{"digits", g.precision}, {"terms", g.terms}}},
                {"results", json::array()},
                {"diagnostics", json::array()}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zeros of solutions of y'' = (a z + b) y + c"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("NHAIRY_DIGITS"))
        g.precision = static_cast<unsigned>(std::max(30L, std::atol(env)));

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--a", g.a, "coefficient a");
        cmd->add_option("--b", g.b, "coefficient b");
        cmd->add_option("--c", g.c, "inhomogeneity c");
        cmd->add_option("--deriv", g.deriv, "derivative at the reference zero");
        cmd->add_option("--digits", g.print_digits, "printed digit count");
        cmd->add_option("--terms", g.terms, "Laurent recursion terms N");
        cmd->add_option("--precision", g.precision, "working decimal digits");
        cmd->add_option("--format", g.format, "json|csv|text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
    };

    // zeros
    auto* cmd_zeros = app.add_subcommand("zeros", "locate and classify zeros");
    std::string real_range;
    bool rays = false;
    int max_k = 3;
    std::string double_at;
    add_common(cmd_zeros);
    cmd_zeros->add_option("--real", real_range, "real interval LO:HI");
    cmd_zeros->add_flag("--rays", rays, "ray zeros of the double-zero family");
    cmd_zeros->add_option("--max-k", max_k, "number of zero triples / zeros");
    cmd_zeros->add_option("--double-at", double_at,
                          "center of the double zero (rays require 0)");

    // laurent-walk
    auto* cmd_walk = app.add_subcommand("laurent-walk", "ratio-limit zero walk");
    int steps = 8;
    add_common(cmd_walk);
    cmd_walk->add_option("--steps", steps, "maximum walk steps");

    // table-za
    auto* cmd_table = app.add_subcommand("table-za", "asymptotic modulus table");
    add_common(cmd_table);
    cmd_table->add_option("--max-k", max_k, "largest k");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "identity checks");
    std::string check = "all";
    bool check_all = false;
    std::string lambda_s = "2";
    add_common(cmd_verify);
    cmd_verify->add_option("--check", check,
                           "transform|quasiperiod|homogeneity|energy|scorer|polya|lommel");
    cmd_verify->add_flag("--all", check_all, "run every check");
    cmd_verify->add_option("--lambda", lambda_s, "scaling for homogeneity");

    // scorer
    auto* cmd_scorer = app.add_subcommand("scorer", "Scorer functions Hi/Gi");
    std::string kind = "Gi", z_s = "0";
    add_common(cmd_scorer);
    cmd_scorer->add_option("--kind", kind, "Hi|Gi")
        ->check(CLI::IsMember({"Hi", "Gi"}));
    cmd_scorer->add_option("--z", z_s, "evaluation point");

    // hyp1f2
    auto* cmd_hyp = app.add_subcommand("hyp1f2", "generalized hypergeometric 1F2");
    std::string a1_s = "1", b1_s = "1.3333333333333333333333333333333333",
                b2_s = "1.6666666666666666666666666666666667", x_s = "0";
    add_common(cmd_hyp);
    cmd_hyp->add_option("--a1", a1_s, "upper parameter");
    cmd_hyp->add_option("--b1", b1_s, "first lower parameter");
    cmd_hyp->add_option("--b2", b2_s, "second lower parameter");
    cmd_hyp->add_option("--x", x_s, "argument (re or re,im)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    json report;
    bool ok = true;
    try {
        PrecisionGuard guard(g.precision + 10);
        Parameters params;
        params.a = parse_complex(g.a, g.precision);
        params.b = parse_complex(g.b, g.precision);
        params.c = parse_complex(g.c, g.precision);
        params.deriv_norm = parse_complex(g.deriv, g.precision);

        if (cmd_zeros->parsed()) {
            report = base_report("zeros", g);
            if (rays) {
                if (!double_at.empty() &&
                    !parse_complex(double_at, g.precision).is_zero())
                    throw CLI::ValidationError("--rays requires --double-at 0");
                auto zs = ray_zeros(params.a, max_k, eps10(g.precision / 2),
                                    g.precision);
                for (const auto& zr : zs)
                    report["results"].push_back(zero_json(zr, g.print_digits));
            } else if (!real_range.empty()) {
                auto colon = real_range.find(':');
                if (colon == std::string::npos)
                    throw CLI::ValidationError("--real expects LO:HI");
                Real lo(real_range.substr(0, colon)), hi(real_range.substr(colon + 1));
                auto zs = real_zeros(params, lo, hi,
                                     eps10(static_cast<long>(g.precision) - 10),
                                     g.precision);
                for (const auto& zr : zs)
                    report["results"].push_back(zero_json(zr, g.print_digits));
            } else {
                throw CLI::ValidationError("zeros: pass --real LO:HI or --rays");
            }
        } else if (cmd_walk->parsed()) {
            report = base_report("laurent-walk", g);
            WalkState st = walk_zeros(params, steps, g.terms, g.precision);
            for (const auto& z : st.step_history)
                report["results"].push_back(complex_json(z, g.print_digits));
            report["diagnostics"].push_back(diag_name(st.diagnostics));
        } else if (cmd_table->parsed()) {
            report = base_report("table-za", g);
            auto zs = ray_zeros(Complex(1), max_k, eps10(g.precision / 2),
                                g.precision);
            for (int k = 1; k <= max_k; ++k) {
                Real exact = abs(zs[3 * (k - 1)].location);
                Real approx = asymptotic_modulus(k, g.precision);
                Real rel = fabs(1 - approx / exact);
                report["results"].push_back(
                    json{{"k", k},
                         {"exact", exact.str(g.print_digits)},
                         {"asymptotic", approx.str(g.print_digits)},
                         {"rel_error", rel.str(6)}});
            }
        } else if (cmd_verify->parsed()) {
            report = base_report("verify", g);
            if (check_all) check = "all";
            unsigned d = g.precision;
            auto want = [&](const char* name) {
                return check == "all" || check == name;
            };
            auto push = [&](const char* name, const Real& resid, const Real& tol) {
                bool pass = resid <= tol;
                ok = ok && pass;
                report["results"].push_back(json{{"check", name},
                                                 {"max_residual", resid.str(6)},
                                                 {"tolerance", tol.str(3)},
                                                 {"pass", pass}});
            };
            if (want("transform")) {
                TransformSpec spec{Complex(Real("1.5")), Complex(Real("0.5"))};
                std::vector<Complex> pts;
                for (int i = -4; i <= 5; ++i) pts.push_back(Complex(Real(i) / 2));
                Real r = transform_residual(spec, params, Complex(0),
                                            params.deriv_norm, pts, d);
                push("transform", r, eps10(static_cast<long>(d) - 12));
            }
            if (want("quasiperiod")) {
                auto rep = verify_quasi_periodicity(params, 1, 3, eps10(20), d);
                push("quasiperiod", rep.max_distance, eps10(20));
            }
            if (want("homogeneity")) {
                Complex lambda = parse_complex(lambda_s, d);
                std::vector<Complex> pts{Complex(Real("0.5")), Complex(1),
                                         Complex(Real("1.5")), Complex(2)};
                Real r = verify_homogeneity(params.a, params.b, lambda, pts, d);
                push("homogeneity", r, eps10(static_cast<long>(d) - 12));
            }
            if (want("energy")) {
                Real worst(0);
                for (int i = 1; i <= 4; ++i) {
                    Real r = energy_identity_residual(params.a.re, params.b.re,
                                                      params.c.re, Real(i) / 2,
                                                      eps10(20), d);
                    if (r > worst) worst = r;
                }
                push("energy", worst, eps10(12));
            }
            if (want("scorer")) {
                Real worst(0);
                for (int i = -2; i <= 2; ++i) {
                    Complex z{Real(i)};
                    Real r = abs(scorer(ScorerKind::Gi, z, d) +
                                 scorer(ScorerKind::Hi, z, d) -
                                 airy_homogeneous(AiryKind::Bi, z, d));
                    if (r > worst) worst = r;
                }
                push("scorer", worst, eps10(20));
            }
            if (want("polya")) {
                Real nu(Real(1) / 3);
                Real prev(-1);
                bool mono = true, positive = true;
                for (int i = 1; i < 10000; ++i) {
                    Real w = polya_weight(nu, Real(i) / 10000);
                    positive = positive && w > 0;
                    mono = mono && w > prev;
                    prev = w;
                }
                push("polya", mono && positive ? Real(0) : Real(1), Real(0));
            }
            if (want("lommel")) {
                Real worst(0);
                for (double zv : {0.5, 2.0, 5.0}) {
                    Real z(zv);
                    Real s = lommel_series({Real(0), Real(1) / 3}, Complex(z), d).re;
                    Real i1 = lommel_integral(Real(1) / 3, z, eps10(25));
                    Real diff = fabs(s - i1);
                    if (diff > worst) worst = diff;
                }
                push("lommel", worst, eps10(15));
            }
            if (report["results"].empty())
                throw CLI::ValidationError("verify: unknown --check " + check);
        } else if (cmd_scorer->parsed()) {
            report = base_report("scorer", g);
            Complex z = parse_complex(z_s, g.precision);
            Complex v = scorer(kind == "Hi" ? ScorerKind::Hi : ScorerKind::Gi, z,
                               g.precision);
            report["results"].push_back(complex_json(v, g.print_digits));
        } else if (cmd_hyp->parsed()) {
            report = base_report("hyp1f2", g);
            PrecisionGuard inner(g.precision + 10);
            Hyp1F2Args args{Real(a1_s), Real(b1_s), Real(b2_s)};
            Complex v = hyp1f2(args, parse_complex(x_s, g.precision), g.precision);
            report["results"].push_back(complex_json(v, g.print_digits));
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        if (!report.is_null()) {
            report["diagnostics"].push_back(e.what());
            emit(report, g);
        }
        return 3;
    }

    auto t1 = std::chrono::steady_clock::now();
    report["walltime_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    emit(report, g);
    return ok ? 0 : 1;
}
