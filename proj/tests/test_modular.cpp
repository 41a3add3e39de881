#include <doctest.h>

#include <algorithm>

#include "ffsolve/modular.hpp"
#include "ffsolve/pivot.hpp"
#include "ffsolve/report.hpp"
#include "test_support.hpp"

using namespace ffsolve;
using namespace ffsolve::testing;

TEST_CASE("hadamard bound") {
    CHECK(hadamard_bound(e1()) == 42); // ceil(sqrt(14)*sqrt(122))
    CHECK(hadamard_bound(mat({{1, 0, 0}, {0, 1, 0}})) == 1);
    CHECK(hadamard_bound(mat({{0, 0, 0}, {0, 0, 0}})) == 0);
    // soundness on the fixtures
    CHECK(bigint(3) <= hadamard_bound(e1()));
    CHECK(hadamard_bound(e2()) >= 6);
}

TEST_CASE("select_primes") {
    CHECK(select_primes(15, 8) == std::vector<uint64_t>{7, 5}); // 35 > 30
    CHECK(select_primes(0, 8) == std::vector<uint64_t>{7});
    CHECK(select_primes(1000000) == std::vector<uint64_t>{2147483647}); // top 31-bit prime
    // the product check, not a prime-count heuristic
    {
        auto ps = select_primes(bigint("123456789123456789123456789"));
        bigint prod = 1;
        for (auto p : ps) prod *= p;
        CHECK(prod > 2 * bigint("123456789123456789123456789"));
    }
    CHECK_THROWS_AS(select_primes(100, 3), InsufficientPrimes); // only {2} below 3
}

TEST_CASE("solve_mod_p") {
    CHECK(solve_mod_p(e1(), 7).value().delta == 4); // -3 mod 7
    CHECK_FALSE(solve_mod_p(e1(), 3).has_value()); // 3 divides delta = -3
    CHECK(solve_mod_p(e2(), 5).value().delta == 2);
    // a prime dividing a leading pivot but not delta is still usable after
    // its own pivoting...
    Matrix<bigint> a = mat({{5, 1, 2}, {1, 0, 1}});
    CHECK(solve_mod_p(a, 5).has_value());
    // ...but not when the row order is fixed by the caller
    CHECK_FALSE(solve_mod_p_fixed(a, 5).has_value());
}

TEST_CASE("crt_combine") {
    IntegerRing zring;
    Counted<IntegerRing> zi(zring, nullptr);

    auto residue_table = [&](const Matrix<bigint>& a, uint64_t p) {
        return solve_mod_p_fixed(a, p).value();
    };

    SUBCASE("signed reconstruction from two residues") {
        ModularPlan plan;
        plan.bound = 3; // |delta| and all |minors| of E1
        plan.primes = {7, 5};
        plan.residues = {residue_table(e1(), 7), residue_table(e1(), 5)};
        MinorTable<IntegerRing> t = crt_combine(plan);
        CHECK(t.delta == -3); // 32 mod 35, symmetric range
        CHECK(t.rhs_minor(1, 3) == -3);
        CHECK(t.rhs_minor(2, 3) == -3);

        SUBCASE("order independence") {
            ModularPlan swapped;
            swapped.bound = plan.bound;
            swapped.primes = {5, 7};
            swapped.residues = {plan.residues[1], plan.residues[0]};
            MinorTable<IntegerRing> t2 = crt_combine(swapped);
            CHECK(t2.delta == t.delta);
            CHECK(t2.rhs == t.rhs);
        }
    }
    SUBCASE("single prime") {
        ModularPlan plan;
        plan.bound = 2;
        plan.primes = {5};
        plan.residues = {residue_table(mat({{1, 0, 2}, {0, 1, 1}}), 5)};
        CHECK(crt_combine(plan).delta == 1);
        CHECK(crt_combine(plan).rhs_minor(1, 3) == 2);
    }
    SUBCASE("product must clear twice the bound") {
        ModularPlan plan;
        plan.bound = 42;
        plan.primes = {7};
        plan.residues = {residue_table(e1(), 7)};
        CHECK_THROWS_AS(crt_combine(plan), InsufficientPrimes);
    }
}

TEST_CASE("modular_solve equals the direct computation") {
    IntegerRing zring;
    Counted<IntegerRing> zi(zring, nullptr);

    SUBCASE("E2 full pipeline") {
        ModularResult r = modular_solve(e2());
        CHECK(r.table.delta == 2);
        CHECK(r.table.rhs_minor(1, 4) == 2);
        CHECK(r.table.rhs_minor(2, 4) == 4);
        CHECK(r.table.rhs_minor(3, 4) == 6);
    }

    SUBCASE("planted unlucky prime is discarded and refilled") {
        Matrix<bigint> a = e2();
        for (size_t j = 0; j < 4; ++j) a(0, j) *= 1009; // scale row 1: delta gains factor 1009
        ModularOptions opts;
        opts.planted = {1009};
        ModularResult r = modular_solve(a, opts);
        CHECK(std::find(r.plan.unlucky.begin(), r.plan.unlucky.end(), 1009) !=
              r.plan.unlucky.end());
        MinorTable<IntegerRing> direct = one_pass_solve(zi, pivot_permute(zi, a).matrix);
        CHECK(r.table.delta == direct.delta);
        CHECK(r.table.rhs == direct.rhs);
    }

    SUBCASE("tiny thresholds exhaust the prime supply") {
        ModularOptions opts;
        opts.threshold = 3; // stream is {2}
        CHECK_THROWS_AS(modular_solve(e1(), opts), InsufficientPrimes);
    }

    SUBCASE("singular systems are rejected up front") {
        CHECK_THROWS_AS(modular_solve(mat({{1, 2, 3}, {2, 4, 6}})), NoValidPivot);
    }

    SUBCASE("random systems, including wide ones") {
        uint64_t state = 5;
        int done = 0;
        while (done < 40) {
            size_t n = 1 + rng_next(state) % 6;
            size_t m = n + 1 + rng_next(state) % 2;
            Matrix<bigint> a = random_int_matrix(n, m, state, 1000000);
            ModularResult r;
            try {
                r = modular_solve(a);
            } catch (const NoValidPivot&) {
                continue;
            }
            ++done;
            Matrix<bigint> pm(n, m, bigint(0));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < m; ++j) pm(i, j) = a(r.plan.perm.order[i], j);
            MinorTable<IntegerRing> direct = one_pass_solve(zi, pm);
            CHECK(r.table.delta == direct.delta);
            CHECK(r.table.rhs == direct.rhs);
            CHECK(big_abs(r.table.delta) <= r.plan.bound);
        }
    }
}
