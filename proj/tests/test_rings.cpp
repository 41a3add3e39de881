#include <doctest.h>

#include "ffsolve/matrix.hpp"
#include "ffsolve/report.hpp"
#include "ffsolve/rings.hpp"
#include "ffsolve/solvers.hpp"

using namespace ffsolve;

TEST_CASE("integer ring basics") {
    IntegerRing r;
    CHECK(r.mul(6, 7) == 42);
    CHECK(r.exact_div(42, 6) == 7);
    CHECK_THROWS_AS(r.exact_div(7, 2), NotExact);
    CHECK_THROWS_AS(r.exact_div(7, 0), DivisionByZero);
    CHECK(r.parse("-123456789012345678901234567890") ==
          -bigint("123456789012345678901234567890"));
}

TEST_CASE("prime field basics") {
    PrimeField f(7);
    CHECK(f.mul(5, 4) == 6); // 20 mod 7
    CHECK(f.from_long(-3) == 4);
    CHECK(f.exact_div(6, 4) == f.mul(6, f.inv(4)));
    for (uint64_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK_THROWS_AS(PrimeField(6), RingError);
    CHECK_THROWS_AS(f.exact_div(1, 0), DivisionByZero);

    PrimeField big(2147483647); // 2^31 - 1
    CHECK(big.mul(2147483646, 2147483646) == 1);
}

TEST_CASE("polynomial arithmetic and exact division") {
    PolynomialRing r(1);
    Polynomial x = Polynomial::variable(1, 1);
    Polynomial one = r.one();
    CHECK(r.mul(x + one, x - one) == r.sub(r.mul(x, x), one)); // (x+1)(x-1) = x^2-1
    CHECK(r.exact_div(r.sub(r.mul(x, x), one), x + one) == x - one);
    CHECK_THROWS_AS(r.exact_div(r.sub(r.mul(x, x), one), x + r.from_long(2)), NotExact);
    CHECK_THROWS_AS(r.exact_div(x, r.zero()), DivisionByZero);

    PolynomialRing r3(3);
    Polynomial p = r3.parse("3*x1^2*x2 - 5*x3 + 7");
    CHECK(p.to_string() == "3*x1^2*x2 - 5*x3 + 7");
    CHECK(p.to_string(false) == "3*x1^2*x2-5*x3+7");
    CHECK(r3.parse(p.to_string(false)) == p);
    CHECK_THROWS_AS(r3.parse("x4+1"), RingError);
    CHECK(r3.parse("0").is_zero());
    CHECK(r3.parse("x1 - x1").is_zero());
}

TEST_CASE("polynomial canonical form survives parse/serialize round trips") {
    PolynomialRing r(2);
    uint64_t state = 42;
    for (int t = 0; t < 300; ++t) {
        Polynomial p(2);
        int terms = (int)(rng_next(state) % 5);
        for (int q = 0; q < terms; ++q) {
            long long c = (long long)(rng_next(state) % 19) - 9;
            std::vector<uint32_t> e{(uint32_t)(rng_next(state) % 4), (uint32_t)(rng_next(state) % 4)};
            p.add_term(c, e);
        }
        std::string s = p.to_string();
        CHECK(r.parse(s) == p);
        CHECK(r.parse(s).to_string() == s);
        std::string compact = p.to_string(false);
        CHECK(r.parse(compact) == p);
    }
}

namespace {

template <class R, class Gen>
void ring_axioms(const R& r, uint64_t seed, int trials, Gen gen) {
    uint64_t state = seed;
    for (int t = 0; t < trials; ++t) {
        auto a = gen(r, state), b = gen(r, state), c = gen(r, state);
        CHECK(r.eq(r.add(a, b), r.add(b, a)));
        CHECK(r.eq(r.mul(a, b), r.mul(b, a)));
        CHECK(r.eq(r.add(r.add(a, b), c), r.add(a, r.add(b, c))));
        CHECK(r.eq(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c))));
        CHECK(r.eq(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c))));
        CHECK(r.eq(r.add(a, r.neg(a)), r.zero()));
        if (!r.is_zero(b)) CHECK(r.eq(r.exact_div(r.mul(a, b), b), a));
    }
}

bigint gen_int(const IntegerRing&, uint64_t& state) {
    return bigint((long long)(rng_next(state) % 2001) - 1000);
}
uint64_t gen_fp(const PrimeField& f, uint64_t& state) { return rng_next(state) % f.modulus(); }
Polynomial gen_poly(const PolynomialRing& r, uint64_t& state) {
    Polynomial p(r.nvars());
    int terms = (int)(rng_next(state) % 4);
    for (int q = 0; q < terms; ++q) {
        long long c = (long long)(rng_next(state) % 11) - 5;
        std::vector<uint32_t> e;
        for (int v = 0; v < r.nvars(); ++v) e.push_back((uint32_t)(rng_next(state) % 3));
        p.add_term(c, e);
    }
    return p;
}

} // namespace

TEST_CASE("ring axioms hold on random elements") {
    IntegerRing zi;
    ring_axioms(zi, 1, 1000, gen_int);
    PrimeField fp(1000003);
    ring_axioms(fp, 2, 1000, gen_fp);
    PolynomialRing pr(2);
    ring_axioms(pr, 3, 1000, gen_poly);
}

TEST_CASE("op counts: audit of runs") {
    IntegerRing zi;

    SUBCASE("empty computation counts nothing") {
        OpCounts tally;
        Counted<IntegerRing> ring(zi, &tally);
        (void)ring;
        CHECK(tally == OpCounts{});
    }

    SUBCASE("one_pass on a 2x3 integer system") {
        Matrix<bigint> a(2, 3, 0);
        a.at1(1, 1) = 1; a.at1(1, 2) = 2; a.at1(1, 3) = 3;
        a.at1(2, 1) = 4; a.at1(2, 2) = 5; a.at1(2, 3) = 9;
        OpCounts tally;
        Counted<IntegerRing> ring(zi, &tally);
        one_pass_solve(ring, a);
        CHECK(tally == OpCounts{6, 0, 3});
    }

    SUBCASE("bareiss forward+backup on 3x4 matches the closed forms") {
        Matrix<bigint> a(3, 4, 0);
        long long e2[3][4] = {{1, 1, 1, 6}, {1, 2, 3, 14}, {1, 4, 9, 36}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 4; ++j) a(i, j) = e2[i][j];
        OpCounts tally;
        Counted<IntegerRing> ring(zi, &tally);
        bareiss_solve(ring, a);
        CHECK(tally == OpCounts{24, 6, 12});
    }

    SUBCASE("counts are additive across sequential runs") {
        Matrix<bigint> a(2, 3, 0);
        a.at1(1, 1) = 1; a.at1(1, 2) = 2; a.at1(1, 3) = 3;
        a.at1(2, 1) = 4; a.at1(2, 2) = 5; a.at1(2, 3) = 9;
        OpCounts both, first, second;
        {
            Counted<IntegerRing> ring(zi, &both);
            one_pass_solve(ring, a);
            bareiss_solve(ring, a);
        }
        {
            Counted<IntegerRing> ring(zi, &first);
            one_pass_solve(ring, a);
        }
        {
            Counted<IntegerRing> ring(zi, &second);
            bareiss_solve(ring, a);
        }
        CHECK(both == first + second);
    }

    SUBCASE("uncounted view leaves the tally alone") {
        OpCounts tally;
        Counted<IntegerRing> ring(zi, &tally);
        auto quiet = ring.uncounted();
        quiet.mul(zi.from_long(6), zi.from_long(7));
        CHECK(tally == OpCounts{});
    }

    SUBCASE("audit_counts wraps a whole computation") {
        Matrix<bigint> a(2, 3, 0);
        a.at1(1, 1) = 1; a.at1(1, 2) = 2; a.at1(1, 3) = 3;
        a.at1(2, 1) = 4; a.at1(2, 2) = 5; a.at1(2, 3) = 9;
        OpCounts c = audit_counts(zi, [&](const Counted<IntegerRing>& r) { one_pass_solve(r, a); });
        CHECK(c == OpCounts{6, 0, 3});
        CHECK(audit_counts(zi, [](const Counted<IntegerRing>&) {}) == OpCounts{});
    }
}
