#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ffsolve/matrix.hpp"
#include "ffsolve/rings.hpp"

namespace ffsolve {

// Brute-force determinant oracle: Laplace expansion along the first row,
// memoized on the set of remaining columns.  This is the independent check
// the elimination algorithms are verified against; it shares no code with
// them.  Row/column selections are 1-based and ordered (cols {3,2} means
// "first column of the minor is column 3").

template <class R>
typename R::Element minor_oracle(const R& ring, const Matrix<typename R::Element>& a,
                                 const std::vector<int>& rows, const std::vector<int>& cols) {
    using E = typename R::Element;
    if (rows.size() != cols.size()) throw std::invalid_argument("minor_oracle: non-square selection");
    const size_t k = rows.size();
    if (k == 0) return ring.one();
    if (k > 24) throw std::invalid_argument("minor_oracle: selection too large");
    for (int r : rows)
        if (r < 1 || r > (int)a.rows()) throw std::invalid_argument("minor_oracle: row out of range");
    for (int c : cols)
        if (c < 1 || c > (int)a.cols()) throw std::invalid_argument("minor_oracle: column out of range");

    std::unordered_map<uint32_t, E> memo;
    // rows are consumed top-down, so the row index is k - popcount(mask)
    auto rec = [&](auto&& self, uint32_t mask) -> E {
        if (mask == 0) return ring.one();
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        size_t row = k - (size_t)__builtin_popcount(mask);
        E acc = ring.zero();
        bool negative = false;
        for (size_t c = 0; c < k; ++c) {
            if (!(mask & (1u << c))) continue;
            const E& entry = a.at1(rows[row], cols[c]);
            if (!ring.is_zero(entry)) {
                E term = ring.mul(entry, self(self, mask & ~(1u << c)));
                acc = negative ? ring.sub(acc, term) : ring.add(acc, term);
            }
            negative = !negative;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, (1u << k) - 1);
}

// Corner minor delta^k: top-left k x k block.
template <class R>
typename R::Element corner_minor(const R& ring, const Matrix<typename R::Element>& a, int k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    return minor_oracle(ring, a, idx, idx);
}

// delta^k_{ij}: corner minor of order k with column i replaced by column j.
template <class R>
typename R::Element substituted_minor(const R& ring, const Matrix<typename R::Element>& a, int k,
                                      int i, int j) {
    std::vector<int> rows(k), cols(k);
    for (int t = 0; t < k; ++t) rows[t] = cols[t] = t + 1;
    cols[i - 1] = j;
    return minor_oracle(ring, a, rows, cols);
}

// delta^k_{st;ij}: two substitutions, column s by t and column i by j.
template <class R>
typename R::Element double_substituted_minor(const R& ring, const Matrix<typename R::Element>& a,
                                             int k, int s, int t, int i, int j) {
    std::vector<int> rows(k), cols(k);
    for (int q = 0; q < k; ++q) rows[q] = cols[q] = q + 1;
    cols[s - 1] = t;
    cols[i - 1] = j;
    return minor_oracle(ring, a, rows, cols);
}

// Contiguous minor: k x k window of adjacent rows/columns ending at (i, j).
template <class R>
typename R::Element contiguous_minor(const R& ring, const Matrix<typename R::Element>& a, int k,
                                     int i, int j) {
    std::vector<int> rows(k), cols(k);
    for (int t = 0; t < k; ++t) {
        rows[t] = i - k + 1 + t;
        cols[t] = j - k + 1 + t;
    }
    return minor_oracle(ring, a, rows, cols);
}

// Columns-substitution identity:
//   delta^k * delta^k_{st;ij} == delta^k_st * delta^k_ij - delta^k_sj * delta^k_it
// Evaluates both sides with the oracle; holds for every valid index choice.
template <class R>
bool substitution_identity_holds(const R& ring, const Matrix<typename R::Element>& a, int k, int s,
                                 int t, int i, int j) {
    const int m = (int)a.cols();
    if (!(1 <= s && s <= k && 1 <= i && i <= k && k < t && t <= m && k < j && j <= m))
        throw std::invalid_argument("substitution identity: need s,i <= k < t,j <= m");
    if (s == i || t == j) throw std::invalid_argument("substitution identity: need s != i and t != j");
    auto lhs = ring.mul(corner_minor(ring, a, k), double_substituted_minor(ring, a, k, s, t, i, j));
    auto rhs = ring.sub(
        ring.mul(substituted_minor(ring, a, k, s, t), substituted_minor(ring, a, k, i, j)),
        ring.mul(substituted_minor(ring, a, k, s, j), substituted_minor(ring, a, k, i, t)));
    return ring.eq(lhs, rhs);
}

} // namespace ffsolve
