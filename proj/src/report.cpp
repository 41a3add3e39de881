#include "ffsolve/report.hpp"

#include <chrono>
#include <sstream>

#include "ffsolve/modular.hpp"
#include "ffsolve/oracle.hpp"
#include "ffsolve/pivot.hpp"
#include "ffsolve/solvers.hpp"

namespace ffsolve {

uint64_t rng_next(uint64_t& state) {
    // splitmix64; fully specified, unlike the standard distributions
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Matrix<bigint> random_int_matrix(size_t n, size_t m, uint64_t& state, long long magnitude) {
    Matrix<bigint> a(n, m, bigint(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j)
            a(i, j) = (long long)(rng_next(state) % (2 * (uint64_t)magnitude + 1)) - magnitude;
    return a;
}

namespace {

template <class F>
auto visit_system(const AnySystem& sys, F&& f) {
    switch (sys.kind) {
        case AnySystem::Kind::integer: {
            IntegerRing r;
            return f(r, std::get<Matrix<bigint>>(sys.mat));
        }
        case AnySystem::Kind::prime_field: {
            PrimeField r(sys.p);
            return f(r, std::get<Matrix<uint64_t>>(sys.mat));
        }
        case AnySystem::Kind::polynomial: {
            PolynomialRing r(sys.nvars);
            return f(r, std::get<Matrix<Polynomial>>(sys.mat));
        }
    }
    throw std::logic_error("unhandled ring kind");
}

ojson counts_json(const OpCounts& c) {
    return ojson{{"mul", c.mul}, {"div", c.div}, {"addsub", c.addsub}};
}

ojson perm_json(const PivotRecord& perm, size_t n) {
    ojson arr = ojson::array();
    if (perm.order.empty())
        for (size_t i = 1; i <= n; ++i) arr.push_back(i);
    else
        for (size_t s : perm.order) arr.push_back(s + 1);
    return arr;
}

template <class R>
ojson minors_json(const R& ring, const MinorTable<R>& t) {
    ojson rows = ojson::array();
    for (size_t i = 1; i <= t.n; ++i) {
        ojson row = ojson::array();
        for (size_t j = t.n + 1; j <= t.m; ++j) row.push_back(ring.to_string(t.rhs_minor(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class R>
ojson tableaux_json(const R& ring, const MinorTable<R>& t) {
    ojson arr = ojson::array();
    for (const auto& tab : t.tableaux) {
        ojson entry;
        entry["order"] = tab.order;
        entry["row_lo"] = tab.row_lo;
        entry["col_lo"] = tab.col_lo;
        ojson vals = ojson::array();
        for (size_t i = 0; i < tab.vals.rows(); ++i) {
            ojson row = ojson::array();
            for (size_t j = 0; j < tab.vals.cols(); ++j) row.push_back(ring.to_string(tab.vals(i, j)));
            vals.push_back(std::move(row));
        }
        entry["values"] = std::move(vals);
        arr.push_back(std::move(entry));
    }
    return arr;
}

std::string alg_token(Algo a) { return algo_name(a); }

Algo algo_from_string(const std::string& s) {
    if (s == "dodgson") return Algo::dodgson;
    if (s == "bareiss") return Algo::bareiss;
    if (s == "fb") return Algo::forward_backup;
    if (s == "onepass") return Algo::one_pass;
    throw std::invalid_argument("unknown algorithm '" + s + "' (dodgson|bareiss|fb|onepass|modular)");
}

// Renders "x1 = (10 - 4*x2)/2" for parametric systems.
template <class R>
std::string parametric_value_str(const R& ring, const Solution<R>& s, size_t i) {
    std::ostringstream out;
    const size_t nf = s.m - 1 - s.n;
    out << "(" << ring.to_string(s.const_num[i - 1]);
    for (size_t j = 0; j < nf; ++j) {
        const auto& c = s.free_coef(i - 1, j);
        if (ring.is_zero(c)) continue;
        out << " - " << ring.to_string(c) << "*x" << (s.n + 1 + j);
    }
    out << ")/" << ring.to_string(s.delta);
    return out.str();
}

template <class R>
ojson solution_json(const R& ring, const Solution<R>& s) {
    ojson sol;
    ojson num = ojson::array();
    for (const auto& v : s.const_num) num.push_back(ring.to_string(v));
    sol["num"] = std::move(num);
    sol["den"] = ring.to_string(s.delta);
    if (s.parametric()) {
        ojson fc = ojson::array();
        for (size_t i = 0; i < s.n; ++i) {
            ojson row = ojson::array();
            for (size_t j = 0; j + s.n + 1 < s.m; ++j)
                row.push_back(ring.to_string(s.free_coef(i, j)));
            fc.push_back(std::move(row));
        }
        sol["free_coeffs"] = std::move(fc);
        ojson fv = ojson::array();
        for (size_t j = s.n + 1; j < s.m; ++j) fv.push_back("x" + std::to_string(j));
        sol["free_vars"] = std::move(fv);
    } else {
        ojson vals = ojson::array();
        for (const auto& v : s.values) vals.push_back(fraction_str(ring, v));
        sol["values"] = std::move(vals);
    }
    return sol;
}

template <class R>
void render_solution_text(std::ostream& out, const R& ring, const Solution<R>& s) {
    if (s.parametric()) {
        for (size_t i = 1; i <= s.n; ++i)
            out << "x" << i << " = " << parametric_value_str(ring, s, i) << "\n";
        out << "free variables: ";
        for (size_t j = s.n + 1; j < s.m; ++j) out << "x" << j << (j + 1 < s.m ? " " : "\n");
    } else {
        for (size_t i = 1; i <= s.n; ++i)
            out << "x" << i << " = " << fraction_str(ring, s.values[i - 1]) << "\n";
    }
}

} // namespace

CommandResult run_solve(const AnySystem& sys, const std::string& alg, bool keep_tableaux) {
    if (alg == "modular") {
        if (sys.kind != AnySystem::Kind::integer)
            throw std::invalid_argument("--alg modular applies to integer systems only");
        const auto& a = std::get<Matrix<bigint>>(sys.mat);
        OpCounts tally;
        ModularResult mr = modular_solve(a, {}, &tally);
        IntegerRing ring;
        Counted<IntegerRing> counted(ring, nullptr);
        Solution<IntegerRing> sol = assemble_solution(counted, mr.table);

        CommandResult res;
        res.json["schema"] = 1;
        res.json["algorithm"] = "modular";
        res.json["ring"] = sys.ring_name();
        res.json["n"] = mr.table.n;
        res.json["m"] = mr.table.m;
        res.json["permutation"] = perm_json(mr.table.perm, mr.table.n);
        res.json["sign"] = mr.table.perm.sign;
        res.json["delta"] = ring.to_string(mr.table.delta);
        res.json["minors"] = minors_json(ring, mr.table);
        res.json["solution"] = solution_json(ring, sol);
        res.json["counts"] = counts_json(tally);
        ojson plan;
        plan["bound"] = mr.plan.bound.str();
        plan["primes"] = mr.plan.primes;
        plan["unlucky"] = mr.plan.unlucky;
        res.json["plan"] = std::move(plan);

        std::ostringstream out;
        out << "algorithm: modular (one-pass per prime)\n";
        out << "ring: int  n=" << mr.table.n << " m=" << mr.table.m << "\n";
        out << "hadamard bound = " << mr.plan.bound.str() << "\n";
        out << "primes:";
        for (uint64_t p : mr.plan.primes) out << " " << p;
        out << "\n";
        if (!mr.plan.unlucky.empty()) {
            out << "unlucky:";
            for (uint64_t p : mr.plan.unlucky) out << " " << p;
            out << "\n";
        }
        out << "delta = " << ring.to_string(mr.table.delta) << "\n";
        for (size_t i = 1; i <= mr.table.n; ++i)
            for (size_t j = mr.table.n + 1; j <= mr.table.m; ++j)
                out << "delta[" << i << "][" << j << "] = "
                    << ring.to_string(mr.table.rhs_minor(i, j)) << "\n";
        render_solution_text(out, ring, sol);
        out << "counts (residue field ops): " << tally.str() << "\n";
        res.text = out.str();
        return res;
    }

    Algo algo = algo_from_string(alg);
    return visit_system(sys, [&](const auto& ring, const auto& a) -> CommandResult {
        using R = std::decay_t<decltype(ring)>;
        OpCounts tally;
        Counted<R> counted(ring, &tally);
        SolveOptions opts;
        opts.keep_tableaux = keep_tableaux;

        CommandResult res;
        res.json["schema"] = 1;
        res.json["algorithm"] = alg_token(algo);
        res.json["ring"] = sys.ring_name();
        res.json["n"] = a.rows();
        res.json["m"] = a.cols();

        MinorTable<R> table;
        Solution<R> sol;
        if (algo == Algo::dodgson) {
            // no pivoting: condensation is tied to the given row order
            DodgsonResult<R> dr = dodgson_solve(counted, a, opts);
            sol = std::move(dr.solution);
            table = std::move(dr.condensation);
            table.rhs = Matrix<typename R::Element>(table.n, 1, ring.zero());
            for (size_t i = 1; i <= table.n; ++i) table.rhs(i - 1, 0) = sol.const_num[i - 1];
        } else {
            auto piv = pivot_permute(counted, a);
            switch (algo) {
                case Algo::bareiss: table = bareiss_solve(counted, piv.matrix, opts, piv.perm); break;
                case Algo::forward_backup:
                    table = forward_backup_solve(counted, piv.matrix, opts, piv.perm);
                    break;
                case Algo::one_pass: table = one_pass_solve(counted, piv.matrix, opts, piv.perm); break;
                default: throw std::logic_error("unreachable");
            }
            sol = assemble_solution(counted, table);
        }

        res.json["permutation"] = perm_json(table.perm, table.n);
        res.json["sign"] = table.perm.sign;
        res.json["delta"] = ring.to_string(table.delta);
        res.json["minors"] = minors_json(ring, table);
        res.json["solution"] = solution_json(ring, sol);
        res.json["counts"] = counts_json(tally);
        if (keep_tableaux) res.json["tableaux"] = tableaux_json(ring, table);

        std::ostringstream out;
        out << "algorithm: " << alg_token(algo) << "\n";
        out << "ring: " << sys.ring_name() << "  n=" << table.n << " m=" << table.m << "\n";
        if (!table.perm.is_identity()) {
            out << "row order:";
            for (size_t s : table.perm.order) out << " " << s + 1;
            out << " (sign " << (table.perm.sign > 0 ? "+1" : "-1") << ")\n";
        }
        out << "delta = " << ring.to_string(table.delta) << "\n";
        for (size_t i = 1; i <= table.n; ++i)
            for (size_t j = table.n + 1; j <= table.m; ++j)
                out << "delta[" << i << "][" << j << "] = " << ring.to_string(table.rhs_minor(i, j))
                    << "\n";
        render_solution_text(out, ring, sol);
        out << "counts: " << tally.str() << "\n";
        if (keep_tableaux) {
            for (const auto& tab : table.tableaux) {
                out << "order-" << tab.order << " table (rows from " << tab.row_lo
                    << ", cols from " << tab.col_lo << "):\n";
                for (size_t i = 0; i < tab.vals.rows(); ++i) {
                    out << " ";
                    for (size_t j = 0; j < tab.vals.cols(); ++j)
                        out << " " << ring.to_string(tab.vals(i, j));
                    out << "\n";
                }
            }
        }
        res.text = out.str();
        return res;
    });
}

// ---------------------------------------------------------------------------

namespace {

struct VerifyOutcome {
    bool ok = true;
    int exit_code = 0;
    std::vector<std::string> lines;
    ojson algorithms = ojson::array();
    std::string oracle_status = "ok";
    std::string summary;
};

template <class R>
VerifyOutcome verify_core(const R& ring, const Matrix<typename R::Element>& a) {
    using E = typename R::Element;
    VerifyOutcome out;
    Counted<R> counted(ring, nullptr);
    const size_t n = a.rows(), m = a.cols();

    auto piv = pivot_permute(counted, a);
    MinorTable<R> tb = bareiss_solve(counted, piv.matrix, {}, piv.perm);
    MinorTable<R> tf = forward_backup_solve(counted, piv.matrix, {}, piv.perm);
    MinorTable<R> to = one_pass_solve(counted, piv.matrix, {}, piv.perm);

    auto tables_equal = [&](const MinorTable<R>& x, const MinorTable<R>& y) {
        if (!ring.eq(x.delta, y.delta)) return false;
        for (size_t i = 1; i <= n; ++i)
            for (size_t j = n + 1; j <= m; ++j)
                if (!ring.eq(x.rhs_minor(i, j), y.rhs_minor(i, j))) return false;
        return true;
    };

    bool oracle_on = n <= 8;
    E odelta = ring.zero();
    Matrix<E> ominors;
    if (oracle_on) {
        odelta = corner_minor(ring, piv.matrix, (int)n);
        ominors = Matrix<E>(n, m - n, ring.zero());
        for (size_t i = 1; i <= n; ++i)
            for (size_t j = n + 1; j <= m; ++j)
                ominors(i - 1, j - n - 1) = substituted_minor(ring, piv.matrix, (int)n, (int)i, (int)j);
    } else {
        out.oracle_status = "skipped (n > 8)";
    }

    int algorithms_agreeing = 0;
    auto check_table = [&](const char* name, const MinorTable<R>& t) {
        bool good = tables_equal(to, t);
        if (oracle_on && good) {
            good = ring.eq(t.delta, odelta);
            for (size_t i = 1; good && i <= n; ++i)
                for (size_t j = n + 1; good && j <= m; ++j)
                    good = ring.eq(t.rhs_minor(i, j), ominors(i - 1, j - n - 1));
        }
        ojson entry;
        entry["name"] = name;
        entry["status"] = good ? "ok" : "mismatch";
        out.algorithms.push_back(std::move(entry));
        if (good) {
            ++algorithms_agreeing;
            out.lines.push_back(std::string(name) + ": ok");
        } else {
            out.ok = false;
            out.lines.push_back(std::string(name) + ": MISMATCH");
        }
    };
    check_table("bareiss", tb);
    check_table("fb", tf);
    check_table("onepass", to);

    bool dodgson_applicable = (m == n + 1);
    if (dodgson_applicable) {
        try {
            DodgsonResult<R> dr = dodgson_solve(counted, a, {});
            // row order independent: compare solution values over the fraction field
            Solution<R> sref = assemble_solution(counted, to);
            bool good = true;
            for (size_t i = 0; i < n; ++i)
                if (!fraction_eq(ring, dr.solution.values[i], sref.values[i])) good = false;
            if (oracle_on && good) {
                // dodgson ran on the original row order; check its minors there
                good = ring.eq(dr.solution.delta, corner_minor(ring, a, (int)n));
                for (size_t i = 1; good && i <= n; ++i)
                    good = ring.eq(dr.solution.const_num[i - 1],
                                   substituted_minor(ring, a, (int)n, (int)i, (int)m));
            }
            ojson entry;
            entry["name"] = "dodgson";
            entry["status"] = good ? "ok" : "mismatch";
            out.algorithms.push_back(std::move(entry));
            if (good) {
                ++algorithms_agreeing;
                out.lines.push_back("dodgson: ok");
            } else {
                out.ok = false;
                out.lines.push_back("dodgson: MISMATCH");
            }
        } catch (const CondensationBreakdown& e) {
            ojson entry;
            entry["name"] = "dodgson";
            entry["status"] = "breakdown";
            entry["at"] = {e.k, e.i, e.j};
            out.algorithms.push_back(std::move(entry));
            out.lines.push_back("dodgson: breakdown at (" + std::to_string(e.k) + "," +
                                std::to_string(e.i) + "," + std::to_string(e.j) + ")");
        }
    }

    if (out.ok) {
        std::string osuffix = oracle_on ? " + oracle agree" : " agree (oracle skipped, n > 8)";
        if (dodgson_applicable && algorithms_agreeing == 3)
            out.summary = "others agree"; // dodgson reported its breakdown above
        else
            out.summary = std::to_string(algorithms_agreeing) + " algorithms" + osuffix;
    } else {
        out.summary = "DISAGREEMENT detected";
        out.exit_code = 3;
    }
    return out;
}

} // namespace

CommandResult run_verify(const AnySystem& sys) {
    return visit_system(sys, [&](const auto& ring, const auto& a) -> CommandResult {
        VerifyOutcome v = verify_core(ring, a);
        CommandResult res;
        res.exit_code = v.exit_code;
        res.json["schema"] = 1;
        res.json["mode"] = "file";
        res.json["ring"] = sys.ring_name();
        res.json["n"] = a.rows();
        res.json["m"] = a.cols();
        res.json["algorithms"] = v.algorithms;
        res.json["oracle"] = v.oracle_status;
        res.json["agree"] = v.ok;
        res.json["summary"] = v.summary;
        std::ostringstream out;
        for (const auto& l : v.lines) out << l << "\n";
        out << v.summary << "\n";
        res.text = out.str();
        return res;
    });
}

CommandResult run_verify_random(int n, int m, int trials, uint64_t seed) {
    if (m <= 0) m = n + 1;
    if (n < 1 || m <= n) throw std::invalid_argument("verify --random: need n >= 1 and m > n");
    IntegerRing ring;
    Counted<IntegerRing> counted(ring, nullptr);
    uint64_t state = seed;
    int pass = 0, fail = 0;
    std::vector<std::string> fail_lines;
    for (int t = 0; t < trials; ++t) {
        Matrix<bigint> a;
        for (;;) { // redraw singular systems; corner minors must be fixable by pivoting
            a = random_int_matrix((size_t)n, (size_t)m, state);
            try {
                pivot_permute(counted, a);
                break;
            } catch (const NoValidPivot&) {
            }
        }
        VerifyOutcome v = verify_core(ring, a);
        if (v.ok) {
            ++pass;
        } else {
            ++fail;
            if (fail_lines.size() < 5) fail_lines.push_back("trial " + std::to_string(t) + " failed");
        }
    }
    CommandResult res;
    res.exit_code = fail == 0 ? 0 : 3;
    res.json["schema"] = 1;
    res.json["mode"] = "random";
    res.json["n"] = n;
    res.json["m"] = m;
    res.json["trials"] = trials;
    res.json["seed"] = seed;
    res.json["pass"] = pass;
    res.json["fail"] = fail;
    std::ostringstream out;
    for (const auto& l : fail_lines) out << l << "\n";
    out << "trials=" << trials << " pass=" << pass << " fail=" << fail << " (n=" << n << ", m=" << m
        << ", seed=" << seed << ")\n";
    res.text = out.str();
    return res;
}

// ---------------------------------------------------------------------------

namespace {

std::string rat_str(const bigrat& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

double rat_double(const bigrat& r) { return r.convert_to<double>(); }

} // namespace

CommandResult run_predict(long long n, long long m, const CostScenario& s) {
    s.validate();
    CommandResult res;
    std::ostringstream out;

    res.json["schema"] = 1;
    res.json["n"] = n;
    res.json["m"] = m;
    res.json["scenario"] = ojson{{"kind", cost_kind_name(s.kind)}, {"r", s.r},      {"p", s.p},
                                 {"l", s.l},                       {"tm", s.tm},    {"td", s.td},
                                 {"ta", s.ta},                     {"modulus_bits", s.modulus_bits}};

    // exact operation counts
    ojson counts;
    out << "operation counts (n=" << n << ", m=" << m << "):\n";
    out << "  algorithm   mul        div        addsub\n";
    const bool square = (m == n + 1);
    if (square) {
        OpCounts c = count_formulas(Algo::dodgson, n, m);
        long long corrected = dodgson_divisions_corrected(n);
        counts["dodgson"] = ojson{{"mul", c.mul},
                                  {"div_printed", c.div},
                                  {"div_corrected", corrected},
                                  {"addsub", c.addsub}};
        out << "  dodgson     " << c.mul << "  div(printed) " << c.div << " / (corrected) "
            << corrected << "  " << c.addsub << "\n";
    }
    for (Algo a : {Algo::bareiss, Algo::forward_backup, Algo::one_pass}) {
        OpCounts c = count_formulas(a, n, m);
        counts[algo_name(a)] = counts_json(c);
        out << "  " << algo_name(a) << (std::string("           ").substr(0, 12 - std::string(algo_name(a)).size()))
            << c.mul << "  " << c.div << "  " << c.addsub << "\n";
    }
    res.json["counts"] = std::move(counts);

    // evaluated T sums for this scenario
    ojson times;
    out << "predicted times (" << cost_kind_name(s.kind) << " scenario):\n";
    for (Algo a : {Algo::dodgson, Algo::bareiss, Algo::forward_backup, Algo::one_pass}) {
        if (a == Algo::dodgson && !square) continue;
        bigrat t = predict_time(a, n, m, s);
        times[algo_name(a)] = rat_str(t);
        out << "  T(" << algo_name(a) << ") = " << rat_str(t) << "\n";
    }
    res.json["times"] = std::move(times);

    res.json["sigma"] = rat_str(sigma_value(n, s));
    res.json["rho"] = rat_str(rho_value(n, s));
    res.json["psi"] = rat_str(psi_value(n, s));

    ojson nr, nz;
    for (Algo a : {Algo::dodgson, Algo::bareiss, Algo::forward_backup, Algo::one_pass}) {
        if (a == Algo::dodgson && !square) continue;
        nr[algo_name(a)] = rat_str(n_r(a, n, m, s));
        nz[algo_name(a)] = rat_str(n_z(a, n, m, s));
    }
    res.json["n_r"] = std::move(nr);
    res.json["n_z"] = std::move(nz);

    if (square) {
        bigrat sg = sigma_value(n, s), ps = psi_value(n, s);
        ojson rr = ojson::array(), rz = ojson::array();
        out << "N^R/sigma ratios (target 3 : 2r+3 : 2 : 2r+1):";
        for (Algo a : {Algo::dodgson, Algo::bareiss, Algo::forward_backup, Algo::one_pass}) {
            double v = rat_double(n_r(a, n, m, s) / sg);
            rr.push_back(v);
            out << " " << v;
        }
        out << "\nN^Z/psi ratios (target 3 : 2r+5 : 2 : 2r+3):";
        for (Algo a : {Algo::dodgson, Algo::bareiss, Algo::forward_backup, Algo::one_pass}) {
            double v = rat_double(n_z(a, n, m, s) / ps);
            rz.push_back(v);
            out << " " << v;
        }
        out << "\n";
        res.json["n_r_over_sigma"] = std::move(rr);
        res.json["n_z_over_psi"] = std::move(rz);
    }

    long long mu = modulus_count(n, s);
    res.json["mu"] = mu;
    res.json["nu"] = rat_str(nu_value(n, s));
    out << "mu (moduli) = " << mu << ", nu = " << rat_str(nu_value(n, s)) << "\n";
    if (square) {
        ojson nzm;
        out << "N^ZM:";
        for (Algo a : {Algo::dodgson, Algo::bareiss, Algo::forward_backup, Algo::one_pass}) {
            bigrat v = n_zm(a, n, s);
            nzm[algo_name(a)] = rat_str(v);
            out << " " << algo_name(a) << "=" << rat_str(v);
        }
        out << "\n";
        res.json["n_zm"] = std::move(nzm);
    }

    res.text = out.str();
    return res;
}

// ---------------------------------------------------------------------------

CommandResult run_bench(int n, int m, const std::string& ring, uint64_t pmod, int trials,
                        uint64_t seed) {
    if (n < 2 || m <= n) throw std::invalid_argument("bench: need n >= 2 and m > n");
    if (trials < 1) trials = 1;
    CommandResult res;
    std::ostringstream out;
    res.json["schema"] = 1;
    res.json["n"] = n;
    res.json["m"] = m;
    res.json["ring"] = ring;
    res.json["trials"] = trials;
    res.json["seed"] = seed;

    uint64_t state = seed;
    ojson algs;
    out << "bench n=" << n << " m=" << m << " ring=" << ring << " trials=" << trials << "\n";

    auto bench_ring = [&](const auto& rg) {
        using R = std::decay_t<decltype(rg)>;
        using E = typename R::Element;
        Counted<R> plain(rg, nullptr);
        std::vector<Matrix<E>> systems;
        for (int t = 0; t < trials; ++t) {
            for (;;) {
                Matrix<bigint> zi = random_int_matrix((size_t)n, (size_t)m, state);
                Matrix<E> a((size_t)n, (size_t)m, rg.zero());
                for (size_t i = 0; i < (size_t)n; ++i)
                    for (size_t j = 0; j < (size_t)m; ++j) {
                        if constexpr (std::is_same_v<R, IntegerRing>)
                            a(i, j) = zi(i, j);
                        else
                            a(i, j) = rg.from_long(zi(i, j).template convert_to<long long>());
                    }
                try {
                    auto piv = pivot_permute(plain, a);
                    systems.push_back(piv.matrix);
                    break;
                } catch (const NoValidPivot&) {
                }
            }
        }
        for (Algo algo : {Algo::dodgson, Algo::bareiss, Algo::forward_backup, Algo::one_pass}) {
            if (algo == Algo::dodgson && m != n + 1) continue;
            OpCounts measured;
            bool varies = false;
            auto t0 = std::chrono::steady_clock::now();
            int runs = 0, breakdowns = 0;
            for (const auto& a : systems) {
                OpCounts tally;
                Counted<R> counted(rg, &tally);
                try {
                    switch (algo) {
                        case Algo::dodgson: dodgson_solve(counted, a); break;
                        case Algo::bareiss: bareiss_solve(counted, a); break;
                        case Algo::forward_backup: forward_backup_solve(counted, a); break;
                        case Algo::one_pass: one_pass_solve(counted, a); break;
                    }
                } catch (const CondensationBreakdown&) {
                    ++breakdowns;
                    continue;
                }
                // shape determines the counts, except for dodgson runs that
                // fall back to fraction carrying
                if (runs > 0 && !(measured == tally)) varies = true;
                measured = tally;
                ++runs;
            }
            auto t1 = std::chrono::steady_clock::now();
            double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            ojson entry;
            entry["measured"] = counts_json(measured);
            entry["count_varies"] = varies;
            entry["runs"] = runs;
            entry["breakdowns"] = breakdowns;
            entry["ms_total"] = ms;
            std::string formula_note;
            if (algo != Algo::dodgson) {
                OpCounts f = count_formulas(algo, n, m);
                entry["formula"] = counts_json(f);
                entry["matches_formula"] = (runs > 0 && f == measured);
                formula_note = (runs > 0 && f == measured) ? "  == formula" : "  != formula";
            } else {
                OpCounts f = count_formulas(Algo::dodgson, n, m);
                entry["table_row"] = ojson{{"mul", f.mul},
                                           {"div_printed", f.div},
                                           {"div_corrected", dodgson_divisions_corrected(n)},
                                           {"addsub", f.addsub}};
            }
            algs[algo_name(algo)] = std::move(entry);
            out << "  " << algo_name(algo) << ": measured " << measured.str() << formula_note
                << "  (" << ms << " ms";
            if (breakdowns) out << ", " << breakdowns << " breakdowns skipped";
            out << ")\n";
        }
    };

    if (ring == "int") {
        IntegerRing rg;
        bench_ring(rg);
    } else if (ring == "zp") {
        PrimeField rg(pmod ? pmod : 1000003);
        bench_ring(rg);
    } else {
        throw std::invalid_argument("bench: ring must be int or zp");
    }
    res.json["algorithms"] = std::move(algs);
    res.text = out.str();
    return res;
}

} // namespace ffsolve
