#include "ffsolve/cost_model.hpp"

#include <cmath>
#include <stdexcept>

namespace ffsolve {

CostKind cost_kind_from_string(const std::string& s) {
    if (s == "unit") return CostKind::unit;
    if (s == "real-poly") return CostKind::real_poly;
    if (s == "int-poly") return CostKind::int_poly;
    if (s == "modular") return CostKind::modular;
    throw std::invalid_argument("unknown cost ring kind: " + s);
}

const char* cost_kind_name(CostKind k) {
    switch (k) {
        case CostKind::unit: return "unit";
        case CostKind::real_poly: return "real-poly";
        case CostKind::int_poly: return "int-poly";
        case CostKind::modular: return "modular";
    }
    return "?";
}

CostScenario CostScenario::for_kind(CostKind k) {
    CostScenario s;
    s.kind = k;
    if (k != CostKind::unit) s.ta = 0; // the polynomial evaluations assume a = 0, m = d = 1
    return s;
}

void CostScenario::validate() const {
    if (r < 0 || p < 0 || l < 1 || tm < 0 || td < 0 || ta < 0 || modulus_bits < 1)
        throw std::invalid_argument("cost scenario: need r >= 0, p >= 0, l >= 1, times >= 0");
}

namespace {

bigint ipow(long long base, long long exp) { return big_pow(bigint(base), (unsigned)exp); }

long long exact_quotient(const bigint& num, long long den) {
    if (num % den != 0) throw std::logic_error("count formula not integral");
    return (num / den).convert_to<long long>();
}

void check_shape(long long n, long long m) {
    if (!(2 <= n && n < m)) throw std::invalid_argument("count formulas need 2 <= n < m");
}

} // namespace

OpCounts count_formulas(Algo algo, long long n, long long m) {
    check_shape(n, m);
    const bigint N = n, M = m;
    OpCounts c;
    switch (algo) {
        case Algo::bareiss:
            c.mul = exact_quotient(2 * N * N * M - N * N * N - 2 * N * M + N, 1);
            c.div = exact_quotient(2 * N * N * M - N * N * N - 4 * N * M + 2 * M + 3 * N - 2, 2);
            c.addsub = exact_quotient(2 * N * N * M - N * N * N - 2 * N * M + N, 2);
            return c;
        case Algo::forward_backup:
            c.mul = exact_quotient(9 * N * N * M - 5 * N * N * N - 3 * N * M - 3 * N * N - 6 * M + 8 * N, 6);
            c.div = exact_quotient(3 * N * N * M - N * N * N - 3 * N * M - 6 * N * N + 13 * N - 6, 6);
            c.addsub = exact_quotient(6 * N * N * M - 4 * N * N * N - 6 * N * M + 3 * N * N + N, 6);
            return c;
        case Algo::one_pass:
            c.mul = exact_quotient(9 * N * N * M - 6 * N * N * N - 3 * N * M - 6 * M + 6 * N, 6);
            c.div = exact_quotient(3 * N * N * M - 2 * N * N * N - 3 * N * M - 6 * M + 2 * N + 12, 6);
            c.addsub = exact_quotient(6 * N * N * M - 4 * N * N * N - 6 * N * M + 3 * N * N + N, 6);
            return c;
        case Algo::dodgson:
            // table entries only, m = n+1
            if (m != n + 1)
                throw std::invalid_argument("dodgson counts exist only for m = n+1");
            c.mul = exact_quotient(2 * N * N * N - N * N - N, 2);
            c.div = dodgson_divisions_as_printed(n);
            c.addsub = exact_quotient(N * N * N - N, 2);
            return c;
    }
    throw std::invalid_argument("unknown algorithm");
}

long long dodgson_divisions_as_printed(long long n) {
    const bigint N = n;
    return exact_quotient(N * N * N - 4 * N * N - 5 * N - 2, 2);
}

long long dodgson_divisions_corrected(long long n) {
    const bigint N = n;
    return exact_quotient(N * N * N - 4 * N * N + 5 * N - 2, 2);
}

// --------------------------------------------------------------------------

namespace {

// coefficient-level times per scenario kind
struct CoeffTimes {
    const CostScenario& s;
    bigrat m(long long i, long long j) const {
        if (s.kind == CostKind::int_poly) return bigint(i) * j * s.l * s.l * (s.tm + 2 * s.ta);
        return s.tm;
    }
    bigrat d(long long i, long long j) const {
        if (s.kind == CostKind::int_poly)
            return bigint(i * s.l - j * s.l + 1) * (s.td + j * s.l * (s.tm + 2 * s.ta));
        return s.td;
    }
    bigrat a(long long /*i*/, long long j) const {
        if (s.kind == CostKind::int_poly) return bigint(2) * j * s.l * s.ta;
        return s.ta;
    }
};

} // namespace

PolyOpTimes poly_op_times(long long i, long long j, const CostScenario& s) {
    s.validate();
    if (i < 0 || j < 0) throw std::invalid_argument("poly_op_times: negative order");
    PolyOpTimes t;
    if (s.kind == CostKind::unit) {
        // flat model: one tick per ring operation
        t.A = s.ta;
        t.M = s.tm;
        t.D = s.td;
        return t;
    }
    CoeffTimes ct{s};
    const long long r = s.r, p = s.p;
    bigint jp1 = ipow(j * p + 1, r);
    bigint ip1 = ipow(i * p + 1, r);
    t.A = bigrat(jp1) * ct.a(i, j);
    t.M = bigrat(ip1) * jp1 * (ct.m(i, j) + ct.a(i + j, i + j));
    if (i < j) {
        t.D = 0; // division of a smaller-order minor by a larger one never occurs
    } else {
        bigint head = ipow(i * p - j * p + 1, r);
        t.D = bigrat(head) * (ct.d(i, j) + bigrat(jp1) * (ct.m(i - j, j) + ct.a(i, i)));
    }
    return t;
}

namespace {

bigrat T_forward(long long n, long long m, const CostScenario& s) {
    // (n-1)(m-1)(2M11 + A22) + sum_{i=2..n-1} (n-i)(m-i)(2M_ii + A_{2i,2i} + D_{2i,i-1})
    auto t11 = poly_op_times(1, 1, s);
    auto a22 = poly_op_times(2, 2, s);
    bigrat total = bigrat(bigint(n - 1) * (m - 1)) * (2 * t11.M + a22.A);
    for (long long i = 2; i <= n - 1; ++i) {
        auto m_ii = poly_op_times(i, i, s);
        auto a2i = poly_op_times(2 * i, 2 * i, s);
        auto d2i = poly_op_times(2 * i, i - 1, s);
        total += bigrat(bigint(n - i) * (m - i)) * (2 * m_ii.M + a2i.A + d2i.D);
    }
    return total;
}

bigrat T2_dodgson(long long n, const CostScenario& s) {
    // as printed: sum_i i (M11 + A21) + sum_j j (2M12 + A33)
    //             + sum_{i=2..n-2} sum_{j=1..i} (2M_{i,i+1} + A_{2i+1,2i+1} + D_{2i+1,i-1})
    auto m11 = poly_op_times(1, 1, s);
    auto a21 = poly_op_times(2, 1, s);
    auto m12 = poly_op_times(1, 2, s);
    auto a33 = poly_op_times(3, 3, s);
    bigrat total = 0;
    for (long long i = 1; i <= n - 1; ++i) total += bigrat(bigint(i)) * (m11.M + a21.A);
    for (long long j = 1; j <= n - 2; ++j) total += bigrat(bigint(j)) * (2 * m12.M + a33.A);
    for (long long i = 2; i <= n - 2; ++i) {
        auto mi = poly_op_times(i, i + 1, s);
        auto ai = poly_op_times(2 * i + 1, 2 * i + 1, s);
        auto di = poly_op_times(2 * i + 1, i - 1, s);
        total += bigrat(bigint(i)) * (2 * mi.M + ai.A + di.D);
    }
    return total;
}

bigrat T2_bareiss(long long n, long long m, const CostScenario& s) {
    // sum_{i=1..n-1} i (m-i-1) (2M_{i,i+1} + A_{2i+1,2i+1} + D_{2i+1,i})
    bigrat total = 0;
    for (long long i = 1; i <= n - 1; ++i) {
        auto mi = poly_op_times(i, i + 1, s);
        auto ai = poly_op_times(2 * i + 1, 2 * i + 1, s);
        auto di = poly_op_times(2 * i + 1, i, s);
        total += bigrat(bigint(i) * (m - i - 1)) * (2 * mi.M + ai.A + di.D);
    }
    return total;
}

bigrat T2_forward_backup(long long n, long long m, const CostScenario& s) {
    // (m-n) sum_{i=1..n-1} ((n+1-i) M_{n,i} + (n-i) A_{i+n,i+n} + D_{i+n,i})
    bigrat total = 0;
    for (long long i = 1; i <= n - 1; ++i) {
        auto mi = poly_op_times(n, i, s);
        auto ai = poly_op_times(i + n, i + n, s);
        auto di = poly_op_times(i + n, i, s);
        total += bigrat(bigint(n + 1 - i)) * mi.M + bigrat(bigint(n - i)) * ai.A + di.D;
    }
    return bigrat(bigint(m - n)) * total;
}

bigrat T_one_pass(long long n, long long m, const CostScenario& s) {
    // (2m-3)(2M11 + A22) + sum_{k=2..n-1} (m-k)((k+1) M_{k,1} + k A_{k+1,k+1})
    //   + sum_{k=2..n-1} k (m-k-1)(2M_{k,k+1} + A_{2k+1,2k+1} + D_{2k+1,k})
    // The last sum starts at k = 2: the first step's row-1 minors are direct
    // 2x2 determinants already counted by the (2m-3) term.
    auto m11 = poly_op_times(1, 1, s);
    auto a22 = poly_op_times(2, 2, s);
    bigrat total = bigrat(bigint(2 * m - 3)) * (2 * m11.M + a22.A);
    for (long long k = 2; k <= n - 1; ++k) {
        auto mk1 = poly_op_times(k, 1, s);
        auto ak = poly_op_times(k + 1, k + 1, s);
        total += bigrat(bigint(m - k)) * (bigrat(bigint(k + 1)) * mk1.M + bigrat(bigint(k)) * ak.A);
        auto mk = poly_op_times(k, k + 1, s);
        auto a2k = poly_op_times(2 * k + 1, 2 * k + 1, s);
        auto d2k = poly_op_times(2 * k + 1, k, s);
        total += bigrat(bigint(k) * (m - k - 1)) * (2 * mk.M + a2k.A + d2k.D);
    }
    return total;
}

} // namespace

bigrat predict_time(Algo algo, long long n, long long m, const CostScenario& s) {
    check_shape(n, m);
    s.validate();
    switch (algo) {
        case Algo::dodgson:
            if (m != n + 1) throw std::invalid_argument("dodgson time needs m = n+1");
            return T_forward(n, m, s) + T2_dodgson(n, s);
        case Algo::bareiss:
            return T_forward(n, m, s) + T2_bareiss(n, m, s);
        case Algo::forward_backup:
            return T_forward(n, m, s) + T2_forward_backup(n, m, s);
        case Algo::one_pass:
            return T_one_pass(n, m, s);
    }
    throw std::invalid_argument("unknown algorithm");
}

bigrat predict_forward_time(long long n, long long m, const CostScenario& s) {
    check_shape(n, m);
    s.validate();
    return T_forward(n, m, s);
}

bigrat predict_backup_time(Algo algo, long long n, long long m, const CostScenario& s) {
    check_shape(n, m);
    s.validate();
    switch (algo) {
        case Algo::dodgson:
            if (m != n + 1) throw std::invalid_argument("dodgson time needs m = n+1");
            return T2_dodgson(n, s);
        case Algo::bareiss: return T2_bareiss(n, m, s);
        case Algo::forward_backup: return T2_forward_backup(n, m, s);
        case Algo::one_pass: throw std::invalid_argument("one_pass has no separate back-up part");
    }
    throw std::invalid_argument("unknown algorithm");
}

// --------------------------------------------------------------------------

namespace {

// sigma and the N^R family share one shape; N^Z is the same with r -> r+1 and
// p^r -> l p^r, so both take the effective exponent rr and the p^r factor pf.
bigrat sigma_general(long long n, long long rr, const bigint& pf) {
    return bigrat(3 * big_pow(bigint(n), (unsigned)(2 * rr + 3)) * pf * pf) /
           bigrat(bigint(2 * rr + 1) * (2 * rr + 2) * (2 * rr + 3));
}

bigrat rho_general(long long n, long long rr, const bigint& pf) {
    return bigrat(big_pow(bigint(n), (unsigned)(rr + 2)) * pf * pf);
}

bigrat nr_general(Algo algo, long long n, long long m, long long rr, const bigint& pf) {
    const bigrat rho = rho_general(n, rr, pf);
    const bigrat nr = bigrat(big_pow(bigint(n), (unsigned)rr));
    const bigrat nn = n, mm = m;
    switch (algo) {
        case Algo::dodgson:
            if (m != n + 1) throw std::invalid_argument("dodgson N^R needs m = n+1");
            return 3 * sigma_general(n, rr, pf);
        case Algo::bareiss:
            return rho * nr * (3 * mm / (2 * rr + 1) - 3 * nn / (2 * rr + 2));
        case Algo::forward_backup:
            return rho * nr *
                   (3 * mm / (2 * rr + 1) - (3 * nn + 3 * mm) / (2 * rr + 2) + 3 * nn / (2 * rr + 3) +
                    (mm - nn) / (rr + 1) - (mm - nn) / (rr + 2));
        case Algo::one_pass:
            return rho * nr * (3 * mm / (2 * rr + 2) - 3 * nn / (2 * rr + 3)) +
                   rho * (mm / (rr + 2) - nn / (rr + 3));
    }
    throw std::invalid_argument("unknown algorithm");
}

} // namespace

bigrat sigma_value(long long n, const CostScenario& s) {
    return sigma_general(n, s.r, ipow(s.p, s.r));
}

bigrat rho_value(long long n, const CostScenario& s) { return rho_general(n, s.r, ipow(s.p, s.r)); }

bigrat psi_value(long long n, const CostScenario& s) {
    return sigma_general(n, s.r + 1, s.l * ipow(s.p, s.r));
}

bigrat n_r(Algo algo, long long n, long long m, const CostScenario& s) {
    s.validate();
    return nr_general(algo, n, m, s.r, ipow(s.p, s.r));
}

bigrat n_z(Algo algo, long long n, long long m, const CostScenario& s) {
    s.validate();
    return nr_general(algo, n, m, s.r + 1, s.l * ipow(s.p, s.r));
}

long long modulus_count(long long n, const CostScenario& s) {
    s.validate();
    if (n < 1) throw std::invalid_argument("modulus_count: n >= 1");
    const double pd = double(s.p < 1 ? 1 : s.p); // log(n p^3): degree 0 contributes nothing
    const double ratio = std::log2(double(n) * pd * pd * pd) / (2.0 * double(s.modulus_bits));
    double mu;
    if (s.r >= 1) {
        mu = double(s.p) * double(s.r) * double(n) * double(n) * (double(s.l) + ratio);
    } else {
        // r = 0: the r-factor formula vanishes; the coefficient-level count applies
        mu = double(n) * (double(s.l) + ratio);
    }
    return (long long)std::ceil(mu - 1e-9);
}

bigrat nu_value(long long n, const CostScenario& s) {
    return bigrat(bigint(modulus_count(n, s)) * n * n * n) / 3;
}

bigrat n_zm(Algo algo, long long n, const CostScenario& s) {
    const bigrat nu = nu_value(n, s);
    switch (algo) {
        case Algo::dodgson:
        case Algo::bareiss: return (bigrat(6) * s.tm + bigrat(3) * s.td) * nu;
        case Algo::forward_backup: return (bigrat(4) * s.tm + bigrat(2) * s.td) * nu;
        case Algo::one_pass: return (bigrat(3) * s.tm + bigrat(1) * s.td) * nu;
    }
    throw std::invalid_argument("unknown algorithm");
}

} // namespace ffsolve
