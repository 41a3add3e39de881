#pragma once

#include <numeric>
#include <vector>

#include "ffsolve/matrix.hpp"
#include "ffsolve/rings.hpp"

namespace ffsolve {

// Row permutation applied to a system, with its sign.  order[i] is the
// 0-based source row now sitting at position i.
struct PivotRecord {
    std::vector<size_t> order;
    int sign = 1;

    bool is_identity() const {
        for (size_t i = 0; i < order.size(); ++i)
            if (order[i] != i) return false;
        return true;
    }
};

template <class R>
struct PivotResult {
    Matrix<typename R::Element> matrix; // rows reordered
    PivotRecord perm;
};

// Reorders rows so every corner minor delta^k, k=1..n, is nonzero.  Row
// exchanges only; at each step the first candidate row that makes the next
// corner minor nonzero is taken.  The scan runs fraction-free elimination on
// a scratch copy, where the eliminated entry in column k of candidate row r
// equals the corner minor obtained by placing r at position k; if no
// candidate works, columns 1..k of the coefficient block are rank-deficient
// and no permutation can help.
//
// Scratch arithmetic is done on the uncounted ring: pivot selection is not
// part of any algorithm's operation count.
template <class R>
PivotResult<R> pivot_permute(const Counted<R>& cring, const Matrix<typename R::Element>& a) {
    using E = typename R::Element;
    check_augmented_shape(a);
    const R& ring = cring.base();
    const size_t n = a.rows(), m = a.cols();

    Matrix<E> w = a;
    PivotRecord rec;
    rec.order.resize(n);
    std::iota(rec.order.begin(), rec.order.end(), size_t{0});

    for (size_t k = 1; k <= n; ++k) {
        size_t r = k;
        while (r <= n && ring.is_zero(w.at1(r, k))) ++r;
        if (r > n) throw NoValidPivot((int)k);
        if (r != k) {
            w.swap_rows(k - 1, r - 1);
            std::swap(rec.order[k - 1], rec.order[r - 1]);
            rec.sign = -rec.sign;
        }
        if (k == n) break;
        for (size_t i = k + 1; i <= n; ++i)
            for (size_t j = k + 1; j <= m; ++j) {
                E num = ring.sub(ring.mul(w.at1(k, k), w.at1(i, j)),
                                 ring.mul(w.at1(i, k), w.at1(k, j)));
                w.at1(i, j) = (k == 1) ? num : ring.exact_div(num, w.at1(k - 1, k - 1));
            }
    }

    PivotResult<R> out;
    out.matrix = Matrix<E>(n, m, ring.zero());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) out.matrix(i, j) = a(rec.order[i], j);
    out.perm = std::move(rec);
    return out;
}

} // namespace ffsolve
