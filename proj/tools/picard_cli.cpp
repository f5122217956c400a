#include "picard/fj.hpp"
#include "picard/json_io.hpp"
#include "picard/locus.hpp"
#include "picard/semiab.hpp"
#include "picard/suites.hpp"
#include "picard/unitary.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace picard;

json report_to_json(const SuiteReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"id", c.id}, {"anchor", c.anchor}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"suite", rep.suite}, {"seed", rep.seed},      {"trials", rep.trials},
                {"overall", rep.overall()}, {"checks", checks}};
}

void print_report(const SuiteReport& rep) {
    std::cout << "suite " << rep.suite << " (seed " << rep.seed << ")\n";
    for (const auto& c : rep.checks) {
        std::cout << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.id;
        if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << "\n        " << c.anchor << "\n";
    }
    std::cout << "  => " << (rep.overall() ? "all checks passed" : "FAILURES PRESENT") << "\n";
}

/// "a" or "a,b" with rational components: the element a + b sqrt(d).
KElem parse_kelem(const FieldCtx& ctx, const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) return KElem(ctx, rat_from_string(text), Rational(0));
    return KElem(ctx, rat_from_string(text.substr(0, comma)), rat_from_string(text.substr(comma + 1)));
}

/// "x,y" (principal ideal on x + y sqrt d) or "x1,y1;x2,y2" (Z-basis).
FracIdeal parse_ideal(const FieldCtx& ctx, const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos) return FracIdeal::principal(parse_kelem(ctx, text));
    return FracIdeal::from_zbasis(
        ctx, {parse_kelem(ctx, text.substr(0, semi)), parse_kelem(ctx, text.substr(semi + 1))});
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for the unitary-surface theta calculus"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    bool as_json = false;
    std::uint64_t seed = 0;
    long trials = 0;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--seed", seed, "seed for randomized sweeps (default 0)");
    app.add_option("--trials", trials, "override trial counts of randomized sweeps");

    long trunc = 64;
    if (const char* env = std::getenv("PICARD_TRUNC")) trunc = std::atol(env);

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string which = "all";
    long v_p = 3, v_d = -1, v_N = 4;
    verify->add_option("suite", which, "all|qfield|unitary|frame|dieudonne|deform|fj")->required();
    verify->add_option("--p", v_p, "inert prime (default 3)");
    verify->add_option("--d", v_d, "field parameter d < 0 squarefree (default -1)");
    verify->add_option("--N", v_N, "even level (default 4)");

    // stratify
    auto* strat = app.add_subcommand("stratify", "classify a module from JSON");
    std::string strat_in;
    strat->add_option("--in", strat_in, "module JSON file")->required();

    // theta
    auto* th = app.add_subcommand("theta", "apply the theta operator to an expansion");
    std::string th_in, th_out;
    long th_iters = 1;
    th->add_option("--in", th_in, "expansion JSON file")->required();
    th->add_option("--iters", th_iters, "number of applications (default 1)");
    th->add_option("--out", th_out, "output JSON file (default: stdout)");

    // cycle
    auto* cyc = app.add_subcommand("cycle", "print a theta cycle weight table");
    long cyc_p = 3, cyc_k = 2;
    std::string cyc_drop = "last";
    cyc->add_option("--p", cyc_p, "prime")->required();
    cyc->add_option("--k", cyc_k, "base filtration")->required();
    cyc->add_option("--drop", cyc_drop, "drop index in [0,p-2], or 'last'")->required();

    // fermat
    auto* fer = app.add_subcommand("fermat", "count points on the degree p+1 plane curve");
    long fer_p = 3, fer_d = -1;
    fer->add_option("--p", fer_p, "prime <= 11")->required();
    fer->add_option("--d", fer_d, "field parameter (default -1; must be inert at p)");

    // width
    auto* wid = app.add_subcommand("width", "cusp width M");
    long wid_d = -1, wid_N = 4;
    wid->add_option("--d", wid_d, "field parameter")->required();
    wid->add_option("--N", wid_N, "even level")->required();

    // split
    auto* spl = app.add_subcommand("split", "semi-abelian splitting test");
    long spl_d = -1;
    std::string spl_a, spl_b, spl_u;
    spl->add_option("--d", spl_d, "field parameter")->required();
    spl->add_option("--a", spl_a, "ideal a: 'x,y' (principal) or 'x1,y1;x2,y2'")->required();
    spl->add_option("--b", spl_b, "ideal b")->required();
    spl->add_option("--u", spl_u, "extension parameter u: 'a,b' meaning a + b sqrt(d)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // help is success; any parse failure is a usage error
    }

    if (verify->parsed()) {
        SuiteParams params;
        params.p = v_p;
        params.d = v_d;
        params.N = v_N;
        params.seed = seed;
        params.trials = trials;
        params.trunc = trunc;
        std::vector<SuiteReport> reports;
        if (which == "all") reports = run_all_suites(params);
        else if (which == "qfield") reports = {run_qfield_suite(params)};
        else if (which == "unitary") reports = {run_unitary_suite(params)};
        else if (which == "frame") reports = {run_frame_suite(params)};
        else if (which == "dieudonne") reports = {run_dieudonne_suite(params)};
        else if (which == "deform") reports = {run_deform_suite(params)};
        else if (which == "fj") reports = {run_fj_suite(params)};
        else {
            std::cerr << "unknown suite '" << which << "'\n";
            return 2;
        }
        bool all = true;
        for (const auto& r : reports) all = all && r.overall();
        if (as_json) {
            json out = json::array();
            for (const auto& r : reports) out.push_back(report_to_json(r));
            std::cout << json{{"reports", out}, {"overall", all}}.dump(2) << "\n";
        } else {
            for (const auto& r : reports) print_report(r);
            std::cout << (all ? "ALL SUITES PASS" : "SUITE FAILURES") << "\n";
        }
        return all ? 0 : 1;
    }

    if (strat->parsed()) {
        UnitaryDModule D = module_from_json(load_json_file(strat_in));
        std::string verdict;
        try {
            verdict = stratum_name(stratify(D));
        } catch (const std::invalid_argument& e) {
            verdict = e.what();
        }
        if (as_json) std::cout << json{{"stratum", verdict}}.dump() << "\n";
        else std::cout << verdict << "\n";
        return 0;
    }

    if (th->parsed()) {
        QExpansion f = qexp_from_json(load_json_file(th_in));
        QExpansion g = theta_iter(f, th_iters);
        json out = qexp_to_json(g);
        if (th_out.empty()) {
            std::cout << out.dump(2) << "\n";
        } else {
            std::ofstream os(th_out);
            if (!os) throw std::invalid_argument("cannot write " + th_out);
            os << out.dump(2) << "\n";
        }
        return 0;
    }

    if (cyc->parsed()) {
        long drop = (cyc_drop == "last") ? cyc_p - 2 : std::stol(cyc_drop);
        std::vector<long> w = theta_cycle({cyc_p, cyc_k, drop});
        if (as_json) {
            std::cout << json{{"p", cyc_p}, {"base", cyc_k}, {"drop", drop}, {"weights", w}}.dump() << "\n";
        } else {
            std::cout << "i  weight  step\n";
            for (size_t i = 0; i < w.size(); ++i) {
                long inc = cyc_p + 1 - (static_cast<long>(i) == drop ? cyc_p * cyc_p - 1 : 0);
                std::cout << i << "  " << w[i] << "  " << (inc > 0 ? "+" : "") << inc
                          << (static_cast<long>(i) == drop ? "  <- drop" : "") << "\n";
            }
            std::cout << "closes back to " << cyc_k << "\n";
        }
        return 0;
    }

    if (fer->parsed()) {
        FqCtx ctx(fer_p, fer_d);
        long got = fermat_count(ctx);
        long want = fer_p * fer_p * fer_p + 1;
        if (as_json) std::cout << json{{"p", fer_p}, {"count", got}, {"expected", want}}.dump() << "\n";
        else std::cout << got << " (expected " << want << " = p^3+1)\n";
        return got == want ? 0 : 1;
    }

    if (wid->parsed()) {
        FieldCtx ctx(wid_d);
        long M = cusp_width(wid_N, ctx);
        if (as_json) std::cout << json{{"d", wid_d}, {"N", wid_N}, {"M", M}}.dump() << "\n";
        else std::cout << M << "\n";
        return 0;
    }

    if (spl->parsed()) {
        FieldCtx ctx(spl_d);
        FracIdeal a = parse_ideal(ctx, spl_a);
        FracIdeal b = parse_ideal(ctx, spl_b);
        KElem u = parse_kelem(ctx, spl_u);
        bool split = semiab_split({a, b, u});
        if (as_json) std::cout << json{{"split", split}}.dump() << "\n";
        else std::cout << (split ? "split" : "nonsplit") << "\n";
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
