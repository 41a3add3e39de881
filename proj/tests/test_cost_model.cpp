#include <doctest.h>

#include <cmath>

#include "ffsolve/cost_model.hpp"

using namespace ffsolve;

namespace {

bigrat rat(long long num, long long den = 1) { return bigrat(num) / den; }

double ratio(const bigrat& a, const bigrat& b) { return (a / b).convert_to<double>(); }

} // namespace

TEST_CASE("count formulas at the worked sizes") {
    OpCounts b = count_formulas(Algo::bareiss, 3, 4);
    CHECK(b.mul == 24);
    CHECK(b.div == 6);
    CHECK(b.addsub == 12);
    OpCounts o = count_formulas(Algo::one_pass, 3, 4);
    CHECK(o.mul == 20);
    CHECK(o.div == 2);
    CHECK(o.addsub == 11);
    OpCounts f = count_formulas(Algo::forward_backup, 3, 4);
    CHECK(f.mul == 21);
    CHECK(f.div == 4);
    CHECK(f.addsub == 11);

    CHECK_THROWS_AS(count_formulas(Algo::bareiss, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_formulas(Algo::bareiss, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(count_formulas(Algo::dodgson, 3, 5), std::invalid_argument);
}

TEST_CASE("general formulas reproduce the square-case table") {
    for (long long n = 2; n <= 8; ++n) {
        OpCounts b = count_formulas(Algo::bareiss, n, n + 1);
        CHECK(b.mul == n * n * n - n);
        CHECK(b.div == (n * n * n - 2 * n * n + n) / 2);
        CHECK(b.addsub == (n * n * n - n) / 2);

        OpCounts f = count_formulas(Algo::forward_backup, n, n + 1);
        CHECK(f.mul == (4 * n * n * n + 3 * n * n - n - 6) / 6);
        CHECK(f.div == (2 * n * n * n - 6 * n * n + 10 * n - 6) / 6);
        CHECK(f.addsub == (2 * n * n * n + 3 * n * n - 5 * n) / 6);

        OpCounts o = count_formulas(Algo::one_pass, n, n + 1);
        CHECK(o.mul == (n * n * n + 2 * n * n - n - 2) / 2);
        CHECK(o.div == (n * n * n - 7 * n + 6) / 6);
        CHECK(o.addsub == (2 * n * n * n + 3 * n * n - 5 * n) / 6);

        OpCounts d = count_formulas(Algo::dodgson, n, n + 1);
        CHECK(d.mul == (2 * n * n * n - n * n - n) / 2);
        CHECK(d.addsub == (n * n * n - n) / 2);
        CHECK(d.div == dodgson_divisions_as_printed(n));
    }
    // the printed division row goes negative at n = 2; the sign-corrected
    // variant starts at zero
    CHECK(dodgson_divisions_as_printed(2) == -10);
    CHECK(dodgson_divisions_corrected(2) == 0);
    CHECK(dodgson_divisions_corrected(3) == 2);
}

TEST_CASE("poly_op_times on the worked examples") {
    SUBCASE("M_11 with r=1, p=2") {
        CostScenario s = CostScenario::for_kind(CostKind::real_poly);
        s.r = 1;
        s.p = 2;
        CHECK(poly_op_times(1, 1, s).M == rat(9)); // (1*2+1)(1*2+1)*1
    }
    SUBCASE("D_21 with r=1, p=1") {
        CostScenario s = CostScenario::for_kind(CostKind::real_poly);
        s.r = 1;
        s.p = 1;
        CHECK(poly_op_times(2, 1, s).D == rat(6)); // (2-1+1)*(1 + 2*1)
    }
    SUBCASE("A_j2 with r=2, p=1 and unit add time") {
        CostScenario s = CostScenario::for_kind(CostKind::real_poly);
        s.r = 2;
        s.p = 1;
        s.ta = 1;
        CHECK(poly_op_times(1, 2, s).A == rat(9)); // (2+1)^2
    }
    SUBCASE("int-poly coefficient times") {
        CostScenario s = CostScenario::for_kind(CostKind::int_poly);
        s.r = 0;
        s.l = 2;
        s.ta = 0;
        // m_ij = i j l^2 (m + 2a) = 1*1*4*1
        CHECK(poly_op_times(1, 1, s).M == rat(4));
        // d_ij = (il - jl + 1)(d + j l (m + 2a)) = (2-2+1)(1 + 2) = 3
        CHECK(poly_op_times(1, 1, s).D == rat(3));
    }
}

TEST_CASE("unit-cost predicted times equal the operation totals") {
    CostScenario unit; // tm = td = ta = 1
    for (long long n = 2; n <= 8; ++n)
        for (long long m = n + 1; m <= 8; ++m) {
            for (Algo a : {Algo::bareiss, Algo::forward_backup, Algo::one_pass}) {
                OpCounts c = count_formulas(a, n, m);
                CHECK(predict_time(a, n, m, unit) == rat(c.mul + c.div + c.addsub));
            }
            // the forward part alone is shared by algorithms 1-3
            OpCounts fb3 = count_formulas(Algo::forward_backup, n, m);
            CHECK(predict_forward_time(n, m, unit) + predict_backup_time(Algo::forward_backup, n, m, unit) ==
                  rat(fb3.mul + fb3.div + fb3.addsub));
        }
    // spot value: T^1 at n=2, m=3 with unit times is (n-1)(m-1)(2M+A) = 6
    CHECK(predict_forward_time(2, 3, unit) == rat(6));
}

TEST_CASE("asymptotic ratios at large n") {
    const long long n = 2000;
    for (long long r : {1LL, 2LL, 3LL}) {
        CostScenario s = CostScenario::for_kind(CostKind::real_poly);
        s.r = r;
        s.p = 2;
        bigrat sg = sigma_value(n, s);
        CHECK(std::abs(ratio(n_r(Algo::dodgson, n, n + 1, s), sg) - 3.0) <= 0.15);
        CHECK(std::abs(ratio(n_r(Algo::bareiss, n, n + 1, s), sg) / double(2 * r + 3) - 1.0) <= 0.05);
        CHECK(std::abs(ratio(n_r(Algo::forward_backup, n, n + 1, s), sg) / 2.0 - 1.0) <= 0.05);
        CHECK(std::abs(ratio(n_r(Algo::one_pass, n, n + 1, s), sg) / double(2 * r + 1) - 1.0) <= 0.05);

        s.l = 2;
        bigrat ps = psi_value(n, s);
        CHECK(std::abs(ratio(n_z(Algo::bareiss, n, n + 1, s), ps) / double(2 * r + 5) - 1.0) <= 0.05);
        CHECK(std::abs(ratio(n_z(Algo::forward_backup, n, n + 1, s), ps) / 2.0 - 1.0) <= 0.05);
        CHECK(std::abs(ratio(n_z(Algo::one_pass, n, n + 1, s), ps) / double(2 * r + 3) - 1.0) <= 0.05);
    }
}

TEST_CASE("unit-time leading coefficients reproduce 3n^3/2 : n^3 : 2n^3/3") {
    // multiplications and divisions only (zero add time), n large
    CostScenario s;
    s.ta = 0;
    const long long n = 2000;
    const double n3 = double(n) * n * n;
    auto value = [&](Algo a) { return predict_time(a, n, n + 1, s).convert_to<double>(); };
    CHECK(std::abs(value(Algo::bareiss) / (1.5 * n3) - 1.0) <= 0.05);
    CHECK(std::abs(value(Algo::forward_backup) / n3 - 1.0) <= 0.05);
    CHECK(std::abs(value(Algo::one_pass) / (n3 * 2.0 / 3.0) - 1.0) <= 0.05);
}

TEST_CASE("order growth of the two back-up procedures") {
    CostScenario unit;
    // least-squares slope on log-log over n in {8, 16, 32, 64}
    auto slope = [&](Algo a) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int cnt = 0;
        for (long long n : {8LL, 16LL, 32LL, 64LL}) {
            double x = std::log((double)n);
            double y = std::log(predict_backup_time(a, n, n + 1, unit).convert_to<double>());
            sx += x; sy += y; sxx += x * x; sxy += x * y;
            ++cnt;
        }
        return (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    };
    CHECK(std::abs(slope(Algo::bareiss) - 3.0) <= 0.15);         // order n^3
    CHECK(std::abs(slope(Algo::forward_backup) - 2.0) <= 0.15);  // order n^2
}

TEST_CASE("modulus count") {
    SUBCASE("worked example: r=1, p=1, l=1, n=4, one-bit moduli") {
        CostScenario s = CostScenario::for_kind(CostKind::modular);
        s.r = 1;
        s.modulus_bits = 1;
        CHECK(modulus_count(4, s) == 32); // ceil(16 * (1 + log2(4)/2))
    }
    SUBCASE("r = 0 falls back to the coefficient-level count") {
        CostScenario s = CostScenario::for_kind(CostKind::modular);
        s.r = 0;
        s.modulus_bits = 1;
        CHECK(modulus_count(4, s) == 8); // ceil(4 * (1 + log2(4)/2))
    }
    SUBCASE("modular work splits 9 : 9 : 6 : 4 at unit mult/div times") {
        CostScenario s = CostScenario::for_kind(CostKind::modular);
        s.r = 1;
        s.tm = 1;
        s.td = 1;
        bigrat nu = nu_value(16, s);
        CHECK(n_zm(Algo::dodgson, 16, s) == 9 * nu);
        CHECK(n_zm(Algo::bareiss, 16, s) == 9 * nu);
        CHECK(n_zm(Algo::forward_backup, 16, s) == 6 * nu);
        CHECK(n_zm(Algo::one_pass, 16, s) == 4 * nu);
    }
}

TEST_CASE("scenario validation") {
    CostScenario s;
    s.l = 0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    CostScenario t;
    t.r = -1;
    CHECK_THROWS_AS(t.validate(), std::invalid_argument);
}
