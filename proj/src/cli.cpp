#include "ffsolve/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ffsolve/report.hpp"

namespace ffsolve {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const CommandResult& r, bool json, std::ostream& out) {
    if (json)
        out << r.json.dump(2) << "\n";
    else
        out << r.text;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact linear-system toolkit over commutative rings"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "machine-readable JSON output");

    // solve
    auto* solve = app.add_subcommand("solve", "solve one system file");
    std::string solve_file, alg = "onepass";
    bool keep_tabs = false;
    solve->add_option("file", solve_file, "system file")->required();
    solve->add_option("--alg", alg, "dodgson|bareiss|fb|onepass|modular (default onepass)");
    solve->add_flag("--tableaux", keep_tabs, "retain intermediate minor tables");

    // verify
    auto* verify = app.add_subcommand("verify", "cross-check all algorithms and the oracle");
    std::string verify_file;
    bool vrandom = false;
    int vn = 4, vm = 0, trials = 100;
    uint64_t seed = 1;
    verify->add_option("file", verify_file, "system file");
    verify->add_flag("--random", vrandom, "verify random integer systems instead of a file");
    verify->add_option("-n", vn, "rows for --random (default 4)");
    verify->add_option("-m", vm, "columns for --random (default n+1)");
    verify->add_option("--trials", trials, "number of random systems (default 100)");
    verify->add_option("--seed", seed, "random seed (default 1)");

    // predict
    auto* predict = app.add_subcommand("predict", "closed-form counts, times and ratios");
    long long pn = 0, pm = 0;
    std::string ringkind = "unit";
    CostScenario scen;
    bool tm_set = false, td_set = false, ta_set = false;
    long long tm = 1, td = 1, ta = 1;
    predict->add_option("-n", pn, "rows")->required();
    predict->add_option("-m", pm, "columns (default n+1)");
    predict->add_option("--ring", ringkind, "unit|real-poly|int-poly|modular (default unit)");
    predict->add_option("-r", scen.r, "polynomial variable count (default 0)");
    predict->add_option("-p", scen.p, "degree per variable (default 1)");
    predict->add_option("-l", scen.l, "coefficient length in words (default 1)");
    predict->add_option("--mbits", scen.modulus_bits, "bits per modulus (default 31)");
    predict->add_option("--tm", tm, "single-precision multiply time")->each([&](const std::string&) { tm_set = true; });
    predict->add_option("--td", td, "single-precision divide time")->each([&](const std::string&) { td_set = true; });
    predict->add_option("--ta", ta, "single-precision add time")->each([&](const std::string&) { ta_set = true; });

    // bench
    auto* bench = app.add_subcommand("bench", "measure operation counts on random systems");
    int bn = 4, bm = 0, btrials = 3;
    std::string bring = "int";
    uint64_t bseed = 1, pmod = 0;
    bench->add_option("-n", bn, "rows (default 4)");
    bench->add_option("-m", bm, "columns (default n+1)");
    bench->add_option("--ring", bring, "int|zp (default int)");
    bench->add_option("--pmod", pmod, "modulus for --ring zp (default 1000003)");
    bench->add_option("--trials", btrials, "systems per shape (default 3)");
    bench->add_option("--seed", bseed, "random seed (default 1)");

    std::vector<const char*> argv;
    argv.push_back("ffsolve");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        CommandResult res;
        if (*solve) {
            AnySystem sys = parse_system(read_file(solve_file));
            res = run_solve(sys, alg, keep_tabs);
        } else if (*verify) {
            if (vrandom) {
                res = run_verify_random(vn, vm, trials, seed);
            } else {
                if (verify_file.empty()) throw std::invalid_argument("verify: give a file or --random");
                AnySystem sys = parse_system(read_file(verify_file));
                res = run_verify(sys);
            }
        } else if (*predict) {
            CostScenario defaults = CostScenario::for_kind(cost_kind_from_string(ringkind));
            scen.kind = defaults.kind;
            scen.tm = tm_set ? tm : defaults.tm;
            scen.td = td_set ? td : defaults.td;
            scen.ta = ta_set ? ta : defaults.ta;
            if (pm == 0) pm = pn + 1;
            res = run_predict(pn, pm, scen);
        } else if (*bench) {
            if (bm == 0) bm = bn + 1;
            res = run_bench(bn, bm, bring, pmod, btrials, bseed);
        }
        emit(res, json, out);
        return res.exit_code;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const SolveError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotExact& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const RingError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace ffsolve
