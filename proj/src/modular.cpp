#include "ffsolve/modular.hpp"

#include "ffsolve/pivot.hpp"
#include "ffsolve/primes.hpp"

namespace ffsolve {

bigint hadamard_bound(const Matrix<bigint>& a) {
    // prod of squared row norms, then ceil of the square root
    bigint prod = 1;
    for (size_t i = 0; i < a.rows(); ++i) {
        bigint s = 0;
        for (size_t j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
        prod *= s;
    }
    if (prod == 0) return 0;
    bigint r = isqrt(prod);
    if (r * r < prod) ++r;
    return r;
}

std::vector<uint64_t> select_primes(const bigint& bound, uint64_t threshold) {
    std::vector<uint64_t> primes;
    bigint target = 2 * bound;
    bigint prod = 1;
    PrimeStream stream(threshold);
    do {
        uint64_t p = stream.next();
        if (p == 0) throw InsufficientPrimes();
        primes.push_back(p);
        prod *= p;
    } while (prod <= target);
    return primes;
}

namespace {

Matrix<uint64_t> reduce_mod(const Matrix<bigint>& a, const PrimeField& f) {
    Matrix<uint64_t> r(a.rows(), a.cols(), 0);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r(i, j) = f.from_bigint(a(i, j));
    return r;
}

} // namespace

std::optional<MinorTable<PrimeField>> solve_mod_p_fixed(const Matrix<bigint>& pivoted, uint64_t p,
                                                        OpCounts* tally) {
    PrimeField f(p);
    Counted<PrimeField> ring(f, tally);
    Matrix<uint64_t> ap = reduce_mod(pivoted, f);
    try {
        MinorTable<PrimeField> t = one_pass_solve(ring, ap);
        if (f.is_zero(t.delta)) return std::nullopt;
        return t;
    } catch (const ZeroCornerMinor&) {
        return std::nullopt; // pivot order fixed by the caller; the prime is unlucky
    }
}

std::optional<MinorTable<PrimeField>> solve_mod_p(const Matrix<bigint>& a, uint64_t p,
                                                  OpCounts* tally) {
    PrimeField f(p);
    Counted<PrimeField> ring(f, tally);
    Matrix<uint64_t> ap = reduce_mod(a, f);
    try {
        auto piv = pivot_permute(ring, ap);
        MinorTable<PrimeField> t = one_pass_solve(ring, piv.matrix, {}, piv.perm);
        if (f.is_zero(t.delta)) return std::nullopt;
        return t;
    } catch (const NoValidPivot&) {
        return std::nullopt;
    }
}

MinorTable<IntegerRing> crt_combine(const ModularPlan& plan) {
    if (plan.primes.empty() || plan.residues.size() != plan.primes.size())
        throw InsufficientPrimes();
    bigint prod = 1;
    for (uint64_t p : plan.primes) prod *= p;
    if (prod <= 2 * plan.bound) throw InsufficientPrimes();

    const MinorTable<PrimeField>& first = plan.residues.front();
    const size_t n = first.n, m = first.m;

    // fold one entry across all residues, then map to (-M/2, M/2]
    auto combine = [&](auto&& pick) -> bigint {
        bigint x = 0, mod = 1;
        for (size_t t = 0; t < plan.primes.size(); ++t) {
            uint64_t p = plan.primes[t];
            PrimeField f(p);
            uint64_t r = pick(plan.residues[t]);
            uint64_t xr = f.from_bigint(x);
            uint64_t diff = f.sub(r, xr);
            uint64_t minv = f.inv(f.from_bigint(mod));
            bigint k = f.mul(diff, minv);
            x += mod * k;
            mod *= p;
        }
        if (2 * x > mod) x -= mod;
        return x;
    };

    MinorTable<IntegerRing> out;
    out.n = n;
    out.m = m;
    out.algo = Algo::one_pass;
    out.perm = plan.perm;
    out.delta = combine([](const MinorTable<PrimeField>& t) { return t.delta; });
    out.rhs = Matrix<bigint>(n, m - n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m - n; ++j)
            out.rhs(i, j) = combine([&](const MinorTable<PrimeField>& t) { return t.rhs(i, j); });
    return out;
}

ModularResult modular_solve(const Matrix<bigint>& a, const ModularOptions& opts, OpCounts* tally) {
    check_augmented_shape(a);
    IntegerRing zring;
    Counted<IntegerRing> counted(zring, nullptr);
    auto piv = pivot_permute(counted, a); // throws NoValidPivot on singular input

    ModularResult res;
    res.plan.bound = hadamard_bound(a);
    res.plan.perm = piv.perm;
    const bigint target = 2 * res.plan.bound;

    bigint prod = 1;
    size_t planted_idx = 0;
    PrimeStream stream(opts.threshold);
    while (prod <= target || res.plan.primes.empty()) {
        uint64_t p = 0;
        if (planted_idx < opts.planted.size()) {
            p = opts.planted[planted_idx++];
        } else {
            p = stream.next();
            if (p == 0) throw InsufficientPrimes();
        }
        auto residue = solve_mod_p_fixed(piv.matrix, p, tally);
        if (!residue) {
            res.plan.unlucky.push_back(p);
            continue;
        }
        res.plan.primes.push_back(p);
        res.plan.residues.push_back(std::move(*residue));
        prod *= p;
    }
    res.table = crt_combine(res.plan);
    return res;
}

} // namespace ffsolve
