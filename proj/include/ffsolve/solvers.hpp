#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ffsolve/fraction.hpp"
#include "ffsolve/matrix.hpp"
#include "ffsolve/pivot.hpp"
#include "ffsolve/rings.hpp"

namespace ffsolve {

// The four minor-computation algorithms.  Each computes the corner minor
// delta^n and the substituted minors delta^n_{ij} of an n x m augmented
// matrix (j = n+1..m), entirely inside the coefficient ring: every division
// below is exact by a Sylvester-style identity.
//
// All of them require nonzero corner minors (Dodgson condensation requires
// more); run pivot_permute first.  The solvers never reorder rows themselves.

enum class Algo { dodgson, bareiss, forward_backup, one_pass };

inline const char* algo_name(Algo a) {
    switch (a) {
        case Algo::dodgson: return "dodgson";
        case Algo::bareiss: return "bareiss";
        case Algo::forward_backup: return "fb";
        case Algo::one_pass: return "onepass";
    }
    return "?";
}

struct SolveOptions {
    bool keep_tableaux = false; // retain intermediate minor tables for inspection
};

// One retained intermediate table.  vals(i,j) holds the minor anchored at
// 1-based position (row_lo + i, col_lo + j); `order` is the minor order k.
template <class E>
struct Tableau {
    int order = 0;
    size_t row_lo = 0, col_lo = 0;
    Matrix<E> vals;

    const E& at(size_t i, size_t j) const { return vals(i - row_lo, j - col_lo); } // 1-based
    bool contains(size_t i, size_t j) const {
        return i >= row_lo && j >= col_lo && i - row_lo < vals.rows() && j - col_lo < vals.cols();
    }
};

template <class R>
struct MinorTable {
    using E = typename R::Element;

    size_t n = 0, m = 0;
    Algo algo = Algo::bareiss;
    E delta{};          // delta^n (of the row order actually used)
    Matrix<E> rhs;      // n x (m-n): rhs(i-1, j-n-1) = delta^n_{ij}, j = n+1..m
    PivotRecord perm;   // row order the minors refer to, with its sign
    Matrix<E> triangle; // forward tableaux: row i holds a^i_{ij}, j >= i
    std::vector<Tableau<E>> tableaux;

    const E& rhs_minor(size_t i, size_t j) const { return rhs(i - 1, j - n - 1); } // 1-based
};

// ---------------------------------------------------------------------------
// Bareiss forward procedure.
//
// Step 1:      a^2_ij = a_11 a_ij - a_1j a_i1
// Step k >= 2: a^{k+1}_ij = (a^k_kk a^k_ij - a^k_ik a^k_kj) / a^{k-1}_{k-1,k-1}
//
// Works in place; after step k row k+1 has reached its own order and is never
// touched again, so the final matrix is the full triangle of a^i_{ij} values.
// a^n_{nj} = delta^n_{nj} for j = n..m.
template <class R>
MinorTable<R> bareiss_forward(const Counted<R>& ring, const Matrix<typename R::Element>& a,
                              const SolveOptions& opts = {}, const PivotRecord& perm = {}) {
    using E = typename R::Element;
    check_augmented_shape(a);
    const size_t n = a.rows(), m = a.cols();

    MinorTable<R> t;
    t.n = n;
    t.m = m;
    t.algo = Algo::bareiss;
    t.perm = perm;

    Matrix<E> w = a;
    for (size_t k = 1; k + 1 <= n; ++k) {
        if (ring.is_zero(w.at1(k, k))) throw ZeroCornerMinor((int)k);
        for (size_t i = k + 1; i <= n; ++i)
            for (size_t j = k + 1; j <= m; ++j) {
                E num = ring.sub(ring.mul(w.at1(k, k), w.at1(i, j)),
                                 ring.mul(w.at1(i, k), w.at1(k, j)));
                w.at1(i, j) = (k == 1) ? std::move(num)
                                       : ring.exact_div(num, w.at1(k - 1, k - 1));
            }
        if (opts.keep_tableaux) {
            Tableau<E> tab;
            tab.order = (int)k + 1;
            tab.row_lo = tab.col_lo = k + 1;
            tab.vals = Matrix<E>(n - k, m - k, ring.zero());
            for (size_t i = k + 1; i <= n; ++i)
                for (size_t j = k + 1; j <= m; ++j) tab.vals(i - k - 1, j - k - 1) = w.at1(i, j);
            t.tableaux.push_back(std::move(tab));
        }
    }
    t.delta = w.at1(n, n);
    t.triangle = std::move(w);
    return t;
}

// Bareiss back-up procedure: raises substituted minors one order per step,
//
//   delta^{k+1}_ij = (a^{k+1}_{k+1,k+1} delta^k_ij - a^{k+1}_{k+1,j} delta^k_{i,k+1}) / a^k_kk
//
// applied for the rows above the new corner (i = 1..k, j = k+2..m), seeded by
// delta^1_{1j} = a_1j and taking row k+1 of each order from the forward
// triangle.  Consumes the table produced by bareiss_forward.
template <class R>
MinorTable<R> bareiss_backup(const Counted<R>& ring, MinorTable<R> fwd,
                             const SolveOptions& opts = {}) {
    using E = typename R::Element;
    const size_t n = fwd.n, m = fwd.m;
    const Matrix<E>& tri = fwd.triangle;

    Matrix<E> cur(n, m, ring.zero());
    for (size_t j = 2; j <= m; ++j) cur.at1(1, j) = tri.at1(1, j);

    for (size_t k = 1; k + 1 <= n; ++k) {
        for (size_t i = 1; i <= k; ++i)
            for (size_t j = k + 2; j <= m; ++j) {
                E num = ring.sub(ring.mul(tri.at1(k + 1, k + 1), cur.at1(i, j)),
                                 ring.mul(tri.at1(k + 1, j), cur.at1(i, k + 1)));
                cur.at1(i, j) = ring.exact_div(num, tri.at1(k, k));
            }
        for (size_t j = k + 2; j <= m; ++j) cur.at1(k + 1, j) = tri.at1(k + 1, j);
        if (opts.keep_tableaux) {
            Tableau<E> tab;
            tab.order = (int)k + 1;
            tab.row_lo = 1;
            tab.col_lo = k + 2;
            tab.vals = Matrix<E>(k + 1, m - k - 1, ring.zero());
            for (size_t i = 1; i <= k + 1; ++i)
                for (size_t j = k + 2; j <= m; ++j) tab.vals(i - 1, j - k - 2) = cur.at1(i, j);
            fwd.tableaux.push_back(std::move(tab));
        }
    }

    fwd.rhs = Matrix<E>(n, m - n, ring.zero());
    for (size_t i = 1; i <= n; ++i)
        for (size_t j = n + 1; j <= m; ++j) fwd.rhs(i - 1, j - n - 1) = cur.at1(i, j);
    if (!opts.keep_tableaux) fwd.tableaux.clear();
    return fwd;
}

template <class R>
MinorTable<R> bareiss_solve(const Counted<R>& ring, const Matrix<typename R::Element>& a,
                            const SolveOptions& opts = {}, const PivotRecord& perm = {}) {
    return bareiss_backup(ring, bareiss_forward(ring, a, opts, perm), opts);
}

// ---------------------------------------------------------------------------
// Forward and back-up procedures: same forward pass, then every delta^n_{ij}
// directly from the triangle,
//
//   delta^n_ij = (a^n_nn a^i_ij - sum_{k=i+1..n} a^i_ik delta^n_kj) / a^i_ii ,
//
// walking i = n-1 .. 1 (row n comes straight from the forward pass).
template <class R>
MinorTable<R> forward_backup_solve(const Counted<R>& ring, const Matrix<typename R::Element>& a,
                                   const SolveOptions& opts = {}, const PivotRecord& perm = {}) {
    using E = typename R::Element;
    MinorTable<R> t = bareiss_forward(ring, a, opts, perm);
    t.algo = Algo::forward_backup;
    const size_t n = t.n, m = t.m;
    const Matrix<E>& tri = t.triangle;

    t.rhs = Matrix<E>(n, m - n, ring.zero());
    for (size_t j = n + 1; j <= m; ++j) t.rhs(n - 1, j - n - 1) = tri.at1(n, j);
    for (size_t i = n - 1; i >= 1; --i) {
        for (size_t j = n + 1; j <= m; ++j) {
            E acc = ring.mul(tri.at1(n, n), tri.at1(i, j));
            for (size_t k = i + 1; k <= n; ++k)
                acc = ring.sub(acc, ring.mul(tri.at1(i, k), t.rhs(k - 1, j - n - 1)));
            t.rhs(i - 1, j - n - 1) = ring.exact_div(acc, tri.at1(i, i));
        }
        if (i == 1) break;
    }
    return t;
}

// ---------------------------------------------------------------------------
// One-pass method: diagonalisation minor-by-minor.  Step k uses only the
// first k+1 equations.  The new row comes from the Laplace expansion of
// delta^{k+1}_{k+1,j} along row k+1,
//
//   delta^{k+1}_{k+1,j} = a_{k+1,j} delta^k - sum_{s=1..k} a_{k+1,s} delta^k_{sj} ,
//
// and the rows above are raised one order by
//
//   delta^{k+1}_ij = (delta^{k+1}_{k+1,k+1} delta^k_ij
//                     - delta^{k+1}_{k+1,j} delta^k_{i,k+1}) / delta^k .
template <class R>
MinorTable<R> one_pass_solve(const Counted<R>& ring, const Matrix<typename R::Element>& a,
                             const SolveOptions& opts = {}, const PivotRecord& perm = {}) {
    using E = typename R::Element;
    check_augmented_shape(a);
    const size_t n = a.rows(), m = a.cols();

    MinorTable<R> t;
    t.n = n;
    t.m = m;
    t.algo = Algo::one_pass;
    t.perm = perm;

    if (n == 1) {
        t.delta = a.at1(1, 1);
        t.rhs = Matrix<E>(1, m - 1, ring.zero());
        for (size_t j = 2; j <= m; ++j) t.rhs(0, j - 2) = a.at1(1, j);
        return t;
    }

    // s holds the current delta^k table: row k at columns k..m, rows i < k at
    // columns k+1..m (their column-k slots are mathematically zero).
    Matrix<E> s(n, m, ring.zero());
    if (ring.is_zero(a.at1(1, 1))) throw ZeroCornerMinor(1);
    for (size_t j = 2; j <= m; ++j)
        s.at1(2, j) = ring.sub(ring.mul(a.at1(1, 1), a.at1(2, j)),
                               ring.mul(a.at1(2, 1), a.at1(1, j)));
    for (size_t j = 3; j <= m; ++j)
        s.at1(1, j) = ring.sub(ring.mul(a.at1(1, j), a.at1(2, 2)),
                               ring.mul(a.at1(2, j), a.at1(1, 2)));

    auto snapshot = [&](size_t k) {
        Tableau<E> tab;
        tab.order = (int)k;
        tab.row_lo = 1;
        tab.col_lo = k;
        tab.vals = Matrix<E>(k, m - k + 1, ring.zero());
        for (size_t i = 1; i <= k; ++i)
            for (size_t j = k; j <= m; ++j)
                tab.vals(i - 1, j - k) = (j == k && i < k) ? ring.zero() : s.at1(i, j);
        t.tableaux.push_back(std::move(tab));
    };
    if (opts.keep_tableaux) snapshot(2);

    std::vector<E> row(m + 1, ring.zero());
    for (size_t k = 2; k + 1 <= n; ++k) {
        const E& dk = s.at1(k, k); // delta^k
        if (ring.is_zero(dk)) throw ZeroCornerMinor((int)k);
        for (size_t j = k + 1; j <= m; ++j) {
            E acc = ring.mul(a.at1(k + 1, j), dk);
            for (size_t q = 1; q <= k; ++q)
                acc = ring.sub(acc, ring.mul(a.at1(k + 1, q), s.at1(q, j)));
            row[j] = std::move(acc);
        }
        for (size_t i = 1; i <= k; ++i)
            for (size_t j = k + 2; j <= m; ++j) {
                E num = ring.sub(ring.mul(row[k + 1], s.at1(i, j)),
                                 ring.mul(row[j], s.at1(i, k + 1)));
                s.at1(i, j) = ring.exact_div(num, dk);
            }
        for (size_t j = k + 1; j <= m; ++j) s.at1(k + 1, j) = row[j];
        if (opts.keep_tableaux) snapshot(k + 1);
    }

    t.delta = s.at1(n, n);
    t.rhs = Matrix<E>(n, m - n, ring.zero());
    for (size_t i = 1; i <= n; ++i)
        for (size_t j = n + 1; j <= m; ++j) t.rhs(i - 1, j - n - 1) = s.at1(i, j);
    return t;
}

// ---------------------------------------------------------------------------
// Dodgson condensation, first part: contiguous minors only,
//
//   a^{k+1}_ij = (a^k_{i-1,j-1} a^k_ij - a^k_{i-1,j} a^k_{i,j-1}) / a^{k-1}_{i-1,j-1} .
//
// Every interior minor that appears as a denominator must be nonzero; no
// pivoting is attempted (reordering rows is foreign to the scheme), the
// failure is reported instead.  The returned table always retains the full
// stack of tableaux (the solver reuses the coefficient part across rounds)
// and has an empty rhs: for j > n the final row holds column-window minors,
// not substituted minors.
template <class R>
MinorTable<R> dodgson_condense(const Counted<R>& ring, const Matrix<typename R::Element>& a,
                               const SolveOptions& opts = {}, const PivotRecord& perm = {}) {
    using E = typename R::Element;
    check_augmented_shape(a);
    const size_t n = a.rows(), m = a.cols();

    MinorTable<R> t;
    t.n = n;
    t.m = m;
    t.algo = Algo::dodgson;
    t.perm = perm;
    (void)opts;

    {
        Tableau<E> base;
        base.order = 1;
        base.row_lo = base.col_lo = 1;
        base.vals = a;
        t.tableaux.push_back(std::move(base));
    }
    for (size_t k = 1; k + 1 <= n; ++k) {
        const Matrix<E>& cur = t.tableaux[k - 1].vals;  // order k, anchored (k, k)
        auto curv = [&](size_t i, size_t j) -> const E& { return cur(i - k, j - k); };
        Tableau<E> next;
        next.order = (int)k + 1;
        next.row_lo = next.col_lo = k + 1;
        next.vals = Matrix<E>(n - k, m - k, ring.zero());
        for (size_t i = k + 1; i <= n; ++i)
            for (size_t j = k + 1; j <= m; ++j) {
                E num = ring.sub(ring.mul(curv(i - 1, j - 1), curv(i, j)),
                                 ring.mul(curv(i - 1, j), curv(i, j - 1)));
                if (k == 1) {
                    next.vals(i - k - 1, j - k - 1) = std::move(num);
                } else {
                    const E& den = t.tableaux[k - 2].vals(i - 1 - (k - 1), j - 1 - (k - 1));
                    if (ring.is_zero(den)) throw CondensationBreakdown((int)k, (int)i, (int)j);
                    next.vals(i - k - 1, j - k - 1) = ring.exact_div(num, den);
                }
            }
        t.tableaux.push_back(std::move(next));
    }
    t.delta = t.tableaux.back().at(n, n); // a^n_nn = delta^n
    return t;
}

// ---------------------------------------------------------------------------
// Solutions.  For m = n+1 the values are plain quotients delta^n_{im}/delta^n;
// for m > n+1 the system is parametric in the free variables x_{n+1}..x_{m-1}:
//
//   x_i = (delta^n_{im} - sum_{j=n+1..m-1} x_j delta^n_{ij}) / delta^n .
template <class R>
struct Solution {
    using E = typename R::Element;

    size_t n = 0, m = 0;
    E delta{};
    std::vector<E> const_num;        // delta^n_{im}, i = 1..n
    Matrix<E> free_coef;             // n x (m-1-n): delta^n_{ij}, j = n+1..m-1
    std::vector<Fraction<R>> values; // reduced x_i for m = n+1; empty otherwise
    PivotRecord perm;

    bool parametric() const { return m > n + 1; }
};

template <class R>
Solution<R> assemble_solution(const Counted<R>& cring, const MinorTable<R>& t) {
    using E = typename R::Element;
    const R& ring = cring.base();
    if (ring.is_zero(t.delta)) throw SingularSystem();

    Solution<R> s;
    s.n = t.n;
    s.m = t.m;
    s.delta = t.delta;
    s.perm = t.perm;
    s.const_num.resize(t.n, ring.zero());
    for (size_t i = 1; i <= t.n; ++i) s.const_num[i - 1] = t.rhs_minor(i, t.m);
    size_t nf = t.m - 1 - t.n;
    s.free_coef = Matrix<E>(t.n, nf, ring.zero());
    for (size_t i = 1; i <= t.n; ++i)
        for (size_t j = t.n + 1; j + 1 <= t.m; ++j) s.free_coef(i - 1, j - t.n - 1) = t.rhs_minor(i, j);
    if (nf == 0) {
        // the permutation sign rides on numerator and denominator alike, so
        // the quotients need no correction
        for (size_t i = 0; i < t.n; ++i)
            s.values.push_back(Fraction<R>::make(ring, s.const_num[i], t.delta));
    }
    return s;
}

// Substitutes x back into the equations (free variables supplied by the
// caller) and checks A x = a exactly over the fraction field.
template <class R>
bool solution_satisfies(const R& ring, const Matrix<typename R::Element>& a, const Solution<R>& s,
                        const std::vector<Fraction<R>>& free_values = {}) {
    const size_t n = a.rows(), m = a.cols();
    std::vector<Fraction<R>> x(m - 1, Fraction<R>::of(ring, ring.zero()));
    if (s.parametric()) {
        for (size_t i = 1; i <= n; ++i) {
            // x_i = (const - sum coef*xfree) / delta
            Fraction<R> acc = Fraction<R>::of(ring, s.const_num[i - 1]);
            for (size_t j = n + 1; j + 1 <= m; ++j) {
                const auto& fv = free_values.empty() ? Fraction<R>::of(ring, ring.zero())
                                                     : free_values.at(j - n - 1);
                acc = fraction_sub(ring, acc,
                                   fraction_mul(ring, fv,
                                                Fraction<R>::of(ring, s.free_coef(i - 1, j - n - 1))));
            }
            x[i - 1] = fraction_mul(ring, acc,
                                    Fraction<R>::make(ring, ring.one(), s.delta));
        }
        for (size_t j = n + 1; j + 1 <= m; ++j)
            x[j - 1] = free_values.empty() ? Fraction<R>::of(ring, ring.zero())
                                           : free_values.at(j - n - 1);
    } else {
        for (size_t i = 0; i < n; ++i) x[i] = s.values[i];
    }
    for (size_t i = 1; i <= n; ++i) {
        Fraction<R> acc = Fraction<R>::of(ring, ring.zero());
        for (size_t j = 1; j + 1 <= m; ++j)
            acc = fraction_add(ring, acc,
                               fraction_mul(ring, Fraction<R>::of(ring, a.at1(i, j)), x[j - 1]));
        if (!fraction_eq(ring, acc, Fraction<R>::of(ring, a.at1(i, m)))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Dodgson's method, second part.  Feasible for m = n+1.  One condensation of
// the full system yields det(cols 1..n) and det(cols 2..n+1); the latter is
// the Cramer numerator of the FIRST unknown up to the sign (-1)^(n-1), which
// fixes which unknown each round determines.  The solved unknown is
// substituted, the last equation dropped, and only the free-member column of
// the tableaux is recomputed; the coefficient-column minors are reused from
// the first condensation.  Column recomputation at order h needs only the
// entries anchored at the last coefficient column n:
//
//   b^h_i = (a^{h-1}_{i-1,n} b^{h-1}_i - b^{h-1}_{i-1} a^{h-1}_{i,n}) / a^{h-2}_{i-1,n} .
//
// Unknowns need not lie in the ring: the free-member column is carried over
// the fraction field as a numerator vector with one common denominator, and
// returns to the ring path whenever the divisions happen to be exact.
template <class R>
struct DodgsonResult {
    Solution<R> solution;
    MinorTable<R> condensation; // first-round tableaux (delta = corner minor)
};

template <class R>
DodgsonResult<R> dodgson_solve(const Counted<R>& ring, const Matrix<typename R::Element>& a,
                               const SolveOptions& opts = {}, const PivotRecord& perm = {}) {
    using E = typename R::Element;
    check_augmented_shape(a);
    const size_t n = a.rows(), m = a.cols();
    if (m != n + 1) throw NotSquareSystem();
    const R& base = ring.base();

    DodgsonResult<R> out;

    // round 1: full condensation (counted); rhs columns per order
    MinorTable<R> cond = dodgson_condense(ring, a, opts, perm);
    std::vector<std::vector<E>> rhs_col(n + 1); // [order][row index, 1-based]
    for (size_t h = 1; h <= n; ++h) {
        rhs_col[h].assign(n + 1, base.zero());
        for (size_t i = h; i <= n; ++i) rhs_col[h][i] = cond.tableaux[h - 1].at(i, m);
    }
    // coefficient minors anchored at column n, reused by every later round
    auto coef = [&](size_t order, size_t i) -> const E& {
        return cond.tableaux[order - 1].at(i, n);
    };

    E den = base.one(); // common denominator of the free-member column
    std::vector<Fraction<R>> xs;
    for (size_t t = 1; t <= n; ++t) {
        const size_t q = n - t + 1; // rows 1..q, coefficient columns t..n
        Fraction<R> x{base.zero(), base.one()};
        if (q == 1) {
            // the remaining 1x1 sub-system is singular when its coefficient
            // vanished; report it as a breakdown of this round
            if (base.is_zero(a.at1(1, t))) throw CondensationBreakdown(1, 1, (int)t);
            x = Fraction<R>::make(base, rhs_col[1][1], base.mul(den, a.at1(1, t)));
        } else {
            const E& corner = coef(q, q);
            if (base.is_zero(corner)) throw CondensationBreakdown((int)q, (int)q, (int)n);
            E num = rhs_col[q][q];
            if (q % 2 == 0) num = base.neg(num); // (-1)^(q-1)
            x = Fraction<R>::make(base, num, base.mul(den, corner));
        }
        xs.push_back(x);
        if (t == n) break;

        const size_t q2 = q - 1;
        // recalculate the free members of the surviving equations
        if (ring.eq(x.den, base.one()) && base.eq(den, base.one())) {
            for (size_t i = 1; i <= q2; ++i)
                rhs_col[1][i] = ring.sub(rhs_col[1][i], ring.mul(a.at1(i, t), x.num));
        } else {
            // rho' = rho * x.den - den * a * x.num; den' = den * x.den
            for (size_t i = 1; i <= q2; ++i)
                rhs_col[1][i] = ring.sub(ring.mul(rhs_col[1][i], x.den),
                                         ring.mul(ring.mul(den, a.at1(i, t)), x.num));
            den = base.mul(den, x.den);
        }
        // recondense the free-member column against the reused coefficients
        for (size_t h = 2; h <= q2; ++h)
            for (size_t i = h; i <= q2; ++i) {
                E num = ring.sub(ring.mul(coef(h - 1, i - 1), rhs_col[h - 1][i]),
                                 ring.mul(rhs_col[h - 1][i - 1], coef(h - 1, i)));
                if (h == 2) {
                    rhs_col[h][i] = std::move(num);
                } else {
                    const E& d = coef(h - 2, i - 1);
                    if (base.is_zero(d)) throw CondensationBreakdown((int)h - 1, (int)i - 1, (int)n);
                    rhs_col[h][i] = ring.exact_div(num, d);
                }
            }
    }

    Solution<R> s;
    s.n = n;
    s.m = m;
    s.delta = cond.delta;
    s.perm = perm;
    s.values = std::move(xs);
    // report the Cramer numerators on the common denominator delta^n; the
    // reconstruction x_i * delta^n is exact in the ring
    s.const_num.resize(n, base.zero());
    for (size_t i = 0; i < n; ++i)
        s.const_num[i] = base.exact_div(base.mul(s.values[i].num, cond.delta), s.values[i].den);
    s.free_coef = Matrix<E>(n, 0);
    out.solution = std::move(s);
    if (!opts.keep_tableaux) cond.tableaux.clear();
    out.condensation = std::move(cond);
    return out;
}

} // namespace ffsolve
