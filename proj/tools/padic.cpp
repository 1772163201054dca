#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <string>

#include "padic/blocks.hpp"
#include "padic/conway.hpp"
#include "padic/curves.hpp"
#include "padic/dyadic.hpp"
#include "padic/errors.hpp"
#include "padic/exact.hpp"
#include "padic/selfaffine.hpp"
#include "padic/selftest.hpp"
#include "padic/towers.hpp"

namespace {

using namespace padic;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitCheckFailure = 3;

struct Options {
    std::uint64_t seed = 20250823;
    std::string out;
    std::string format = "csv";
    bool exact = false;

    std::ostream& stream() {
        if (!out.empty() && !file) {
            file = std::make_unique<std::ofstream>(out);
            if (!*file) throw CLI::ValidationError("--out", "cannot open " + out);
        }
        return file ? *file : std::cout;
    }
    std::unique_ptr<std::ofstream> file;
};

std::string num(const Options& opt, const Rational& q) {
    return opt.exact ? to_exact_string(q) : to_decimal_string(q);
}

DyadicFunction load_g(const std::string& path) {
    try {
        return DyadicFunction::load(path);
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--g", e.what());
    }
}

void emit_samples(Options& opt, const CurveSamples& c) {
    std::ostream& os = opt.stream();
    if (opt.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (std::size_t i = 0; i < c.size(); ++i)
            j.push_back({num(opt, c.ts[i]), num(opt, c.values[i])});
        os << j.dump() << "\n";
        return;
    }
    os << "t,value\n";
    for (std::size_t i = 0; i < c.size(); ++i)
        os << num(opt, c.ts[i]) << "," << num(opt, c.values[i]) << "\n";
}

nlohmann::json array_json(const Options& opt, const TriangularArray& a) {
    nlohmann::json lines = nlohmann::json::array();
    for (int i = 0; i <= a.depth(); ++i) {
        nlohmann::json line = nlohmann::json::array();
        for (int j = 0; j <= i; ++j) line.push_back({num(opt, a.x(i, j)), num(opt, a.y(i, j))});
        lines.push_back(std::move(line));
    }
    return lines;
}

// phi^g sampled on a uniform grid, with the R and h constants computed once.
CurveSamples sampled_phi_g(const DyadicFunction& g, const BlockId& id, int samples) {
    Rational r = renorm_Rg(g, id).value;
    Rational h = eval_Fg(g, id, binomial(id.n, id.k));
    CurveSamples c;
    for (int i = 0; i <= samples; ++i) {
        Rational t = make_rational(i, samples);
        c.ts.push_back(t);
        c.values.push_back((eval_Fg_at(g, id, t) - t * h) / r);
    }
    return c;
}

CurveSamples sampled_phi(const BlockId& id, int samples) {
    CurveSamples c;
    for (int i = 0; i <= samples; ++i) {
        Rational t = make_rational(i, samples);
        c.ts.push_back(t);
        c.values.push_back(phi(id, t));
    }
    return c;
}

int cmd_word(Options& opt, std::uint64_t n, std::int64_t k, int alphabet) {
    std::ostream& os = opt.stream();
    if (alphabet <= 1) {
        os << materialize({n, k}) << "\n";
    } else {
        GeneralizedBlocks blocks(alphabet);
        bool first = true;
        for (int letter : blocks.materialize({n, k})) {
            os << (first ? "a" : " a") << letter;
            first = false;
        }
        os << "\n";
    }
    return kExitOk;
}

int cmd_curve(Options& opt, std::uint64_t n, std::int64_t k, const std::string& gfile,
              int samples) {
    if (gfile.empty()) {
        emit_samples(opt, sampled_phi({n, k}, samples));
    } else {
        emit_samples(opt, sampled_phi_g(load_g(gfile), {n, k}, samples));
    }
    return kExitOk;
}

int cmd_blancmange(Options& opt, const std::string& p_str, int samples, double eps) {
    Rational p = parse_rational(p_str);
    if (sgn(p) <= 0 || p >= 1) throw std::domain_error("blancmange: p must be in (0,1)");
    if (samples < 1) throw std::invalid_argument("blancmange: samples must be >= 1");
    std::ostream& os = opt.stream();
    os << "t,value\n";
    for (int i = 0; i <= samples; ++i) {
        Rational t = make_rational(i, samples);
        os << num(opt, t) << "," << to_decimal_string(eval_Mp(p, t, eps)) << "\n";
    }
    return kExitOk;
}

int cmd_array(Options& opt, const std::string& kind, const std::string& p_str, int m, int s,
              int i0) {
    TriangularArray a;
    if (kind == "canonical")
        a = canonical_array(parse_rational(p_str), m);
    else if (kind == "transition")
        a = transition_array(m);
    else if (kind == "family")
        a = family_array(parse_rational(p_str), s, m);
    else
        throw CLI::ValidationError("--kind", "unknown kind " + kind);
    if (i0 > 0) a = renormalized_tail_array(a, i0);
    opt.stream() << array_json(opt, a).dump() << "\n";
    return kExitOk;
}

int cmd_orbit(Options& opt, const std::string& x_str, int steps, const std::string& gfile) {
    Point x = Point::from_string(x_str);
    DyadicFunction g =
        gfile.empty() ? DyadicFunction::ab_indicator() : load_g(gfile);
    emit_samples(opt, orbit_curve(g, x, steps));
    return kExitOk;
}

int cmd_towers(Options& opt, int n) {
    nlohmann::json j = nlohmann::json::array();
    for (const Tower& t : shared_towers().level(n)) {
        j.push_back({{"n", t.n}, {"k", t.k}, {"rungs", t.rungs}});
    }
    opt.stream() << j.dump() << "\n";
    return kExitOk;
}

int cmd_poly(Options& opt, const std::string& gfile) {
    Polynomial p = polynomial_Pg(load_g(gfile));
    nlohmann::json j = nlohmann::json::array();
    for (const Rational& c : p.coefficients()) j.push_back(num(opt, c));
    opt.stream() << nlohmann::json{{"coefficients", j}}.dump() << "\n";
    return kExitOk;
}

int cmd_cohomology(Options& opt, const std::string& gfile) {
    auto res = cohomology_test(load_g(gfile));
    std::ostream& os = opt.stream();
    if (!res) {
        os << "not cohomologous to a constant\n";
        return kExitOk;
    }
    os << "cohomologous to constant C = " << num(opt, res->constant) << "\n";
    os << "transfer f = " << res->transfer.to_json() << "\n";
    return kExitOk;
}

int cmd_conway(Options& opt, int max_j, bool verify, int lines) {
    std::ostream& os = opt.stream();
    if (verify) {
        std::int64_t mis = concatenation_mismatch(lines);
        if (mis < 0) {
            os << "PASS: D matches the concatenated words through line " << lines << "\n";
            return kExitOk;
        }
        os << "FAIL: first mismatch at position " << mis << "\n";
        return kExitCheckFailure;
    }
    std::vector<std::uint64_t> c = conway_sequence(static_cast<std::size_t>(max_j));
    os << "j,C,D\n";
    for (int j = 1; j <= max_j; ++j) {
        os << j << "," << c[static_cast<std::size_t>(j)];
        if (j >= 3)
            os << ","
               << 2 * static_cast<int>(c[static_cast<std::size_t>(j)] -
                                       c[static_cast<std::size_t>(j - 1)]) -
                      1;
        os << "\n";
    }
    return kExitOk;
}

int cmd_converge(Options& opt, const std::string& p_str, std::vector<std::uint64_t> n_list,
                 const std::string& gfile) {
    Rational p = parse_rational(p_str);
    if (sgn(p) <= 0 || p >= 1) throw CLI::ValidationError("--p", "need 0 < p < 1");
    std::optional<DyadicFunction> g;
    int sign = 1;
    double norm = 1;
    if (!gfile.empty()) {
        g = load_g(gfile);
        Polynomial pg = polynomial_Pg(*g);
        sign = pg.sign_at(p);
        if (sign == 0)
            std::cerr << "warning: P^g(p)=0: transition regime, no M_p limit is predicted\n";
        norm = to_double(canonical_array(p, 14).to_polyline().max_abs());
    }
    std::ostream& os = opt.stream();
    os << "n,k,sup_distance,nR_over_C\n";
    for (std::uint64_t n : n_list) {
        std::int64_t k = rational_floor(p * static_cast<long>(n)).get_si();
        BlockId id{n, k};
        double dist;
        Rational r;
        if (!g) {
            dist = phi_Mp_distance(id, p, 512);
            r = renorm_Rg(DyadicFunction::ab_indicator(), id).value;
        } else {
            CurveSamples c = sampled_phi_g(*g, id, 512);
            dist = 0;
            for (std::size_t i = 0; i < c.size(); ++i) {
                double target = sign * eval_Mp(p, c.ts[i], 1e-9) / norm;
                dist = std::max(dist, std::fabs(to_double(c.values[i]) - target));
            }
            r = renorm_Rg(*g, id).value;
        }
        os << n << "," << k << "," << to_decimal_string(dist) << ","
           << num(opt, Rational(n) * r / Rational(binomial(n, k))) << "\n";
    }
    return kExitOk;
}

int cmd_figure(Options& opt, const std::string& name) {
    std::ostream& os = opt.stream();
    if (name == "fig2") {
        BlockId id{6, 3};
        os << "l,F\n";
        for (long l = 0; l <= 20; ++l) os << l << "," << eval_F(id, l).get_str() << "\n";
    } else if (name == "fig3") {
        os << "p,t,value\n";
        for (long pd : {2L, 5L}) {
            Rational p = pd == 2 ? make_rational(1, 2) : make_rational(4, 5);
            std::uint64_t n = 160;
            std::int64_t k = rational_floor(p * 160L).get_si();
            for (int i = 0; i <= 512; ++i) {
                Rational t = make_rational(i, 512);
                os << num(opt, p) << "," << num(opt, t) << "," << num(opt, phi({n, k}, t)) << "\n";
            }
        }
    } else if (name == "fig4") {
        os << "m,t,value\n";
        for (int m = 1; m <= 4; ++m) {
            CurveSamples c = canonical_array(make_rational(2, 5), m).to_polyline();
            for (std::size_t i = 0; i < c.size(); ++i)
                os << m << "," << num(opt, c.ts[i]) << "," << num(opt, c.values[i]) << "\n";
        }
    } else if (name == "fig5") {
        TriangularArray a = canonical_array(make_rational(1, 2), 3);
        nlohmann::json j;
        j["lines"] = array_json(opt, a);
        CurveSamples c = a.to_polyline();
        nlohmann::json poly = nlohmann::json::array();
        for (std::size_t i = 0; i < c.size(); ++i)
            poly.push_back({num(opt, c.ts[i]), num(opt, c.values[i])});
        j["polyline"] = std::move(poly);
        os << j.dump() << "\n";
    } else if (name == "fig6") {
        // Depth 16 rather than 24: the exact polyline has 2^m breakpoints and
        // 2^24 exact rationals are far past any useful plot resolution.
        CurveSamples c = renormalized_tail_array(transition_array(16), 0).to_polyline();
        os << "t,value\n";
        for (std::size_t i = 0; i < c.size(); ++i)
            os << num(opt, c.ts[i]) << "," << num(opt, c.values[i]) << "\n";
    } else {
        throw CLI::ValidationError("--name", "unknown figure " + name);
    }
    return kExitOk;
}

int cmd_selftest(Options& opt, bool inject_fault) {
    if (inject_fault) set_binomial_fault(true);
    std::vector<CheckResult> results = run_acceptance(opt.seed);
    set_binomial_fault(false);
    std::ostream& os = opt.stream();
    int failures = 0;
    for (const CheckResult& r : results) {
        // No timings here: reports must be byte-identical across runs with the same seed.
        os << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail << "\n";
        failures += !r.pass;
    }
    os << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
       << "\n";
    return failures == 0 ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pascal-adic transformation toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--seed", opt.seed, "RNG seed for sampling commands");
    app.add_option("--out", opt.out, "output file (default: stdout)");
    app.add_option("--format", opt.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--exact", opt.exact, "print exact num/den rationals instead of decimals");

    std::uint64_t n = 6;
    std::int64_t k = 3;
    int alphabet = 1, samples = 256, steps = 64, m = 8, s = 1, i0 = 0, max_j = 100, lines = 14;
    int tower_n = 4;
    double eps = 1e-9;
    std::string gfile, p_str = "1/2", kind = "canonical", x_str, fig_name;
    std::vector<std::uint64_t> n_list{40, 80, 160, 320};
    bool verify_concat = false, inject_fault = false;

    CLI::App* c_word = app.add_subcommand("word", "print the basic block B_{n,k}");
    c_word->add_option("--n", n)->required();
    c_word->add_option("--k", k)->required();
    c_word->add_option("--alphabet", alphabet, "alphabet level N0 for generalized blocks");

    CLI::App* c_curve = app.add_subcommand("curve", "renormalized ergodic-sum curve phi or phi^g");
    c_curve->add_option("--n", n)->required();
    c_curve->add_option("--k", k)->required();
    c_curve->add_option("--g", gfile, "DyadicFunction JSON file");
    c_curve->add_option("--samples", samples);

    CLI::App* c_bl = app.add_subcommand("blancmange", "sample the self-affine curve M_p");
    c_bl->add_option("--p", p_str)->required();
    c_bl->add_option("--samples", samples);
    c_bl->add_option("--eps", eps);

    CLI::App* c_arr = app.add_subcommand("array", "triangular arrays as JSON");
    c_arr->add_option("--kind", kind, "canonical|transition|family");
    c_arr->add_option("--p", p_str);
    c_arr->add_option("--m", m)->required();
    c_arr->add_option("--s", s, "family parameter");
    c_arr->add_option("--i0", i0, "renormalized tail starting line");

    CLI::App* c_orb = app.add_subcommand("orbit", "pointwise curve along the T-orbit of x");
    c_orb->add_option("--x", x_str, "dyadic point, e.g. 0.0110")->required();
    c_orb->add_option("--steps", steps);
    c_orb->add_option("--g", gfile);

    CLI::App* c_tow = app.add_subcommand("towers", "rung index lists per tower");
    c_tow->add_option("--n", tower_n)->required();

    CLI::App* c_poly = app.add_subcommand("poly", "coefficients of P^g");
    c_poly->add_option("--g", gfile)->required();

    CLI::App* c_coh = app.add_subcommand("cohomology", "cohomologous-to-constant verdict");
    c_coh->add_option("--g", gfile)->required();

    CLI::App* c_con = app.add_subcommand("conway", "Conway sequence and its word identity");
    c_con->add_option("--max", max_j);
    c_con->add_flag("--verify-concat", verify_concat);
    c_con->add_option("--lines", lines);

    CLI::App* c_cv = app.add_subcommand("converge", "sup-distance to the limiting curve per n");
    c_cv->add_option("--p", p_str)->required();
    c_cv->add_option("--n-list", n_list)->delimiter(',');
    c_cv->add_option("--g", gfile);

    CLI::App* c_fig = app.add_subcommand("figure", "emit plot data files");
    c_fig->add_option("--name", fig_name, "fig2|fig3|fig4|fig5|fig6")->required();

    CLI::App* c_st = app.add_subcommand("selftest", "run the acceptance checks");
    c_st->add_flag("--inject-binomial-fault", inject_fault,
                   "corrupt one binomial value to prove the checks can fail");

    // Allow the global options (--format, --exact, ...) after the subcommand too.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (c_word->parsed()) return cmd_word(opt, n, k, alphabet);
        if (c_curve->parsed()) return cmd_curve(opt, n, k, gfile, samples);
        if (c_bl->parsed()) return cmd_blancmange(opt, p_str, samples, eps);
        if (c_arr->parsed()) return cmd_array(opt, kind, p_str, m, s, i0);
        if (c_orb->parsed()) return cmd_orbit(opt, x_str, steps, gfile);
        if (c_tow->parsed()) return cmd_towers(opt, tower_n);
        if (c_poly->parsed()) return cmd_poly(opt, gfile);
        if (c_coh->parsed()) return cmd_cohomology(opt, gfile);
        if (c_con->parsed()) return cmd_conway(opt, max_j, verify_concat, lines);
        if (c_cv->parsed()) return cmd_converge(opt, p_str, n_list, gfile);
        if (c_fig->parsed()) return cmd_figure(opt, fig_name);
        if (c_st->parsed()) return cmd_selftest(opt, inject_fault);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const UndefinedAtDepth& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitValidation;
}
