#pragma once

#include <cstddef>
#include <vector>

#include "ffsolve/errors.hpp"

namespace ffsolve {

// Dense row-major matrix of ring elements.  operator() is 0-based; at1() is
// the 1-based accessor used by the elimination code, whose index ranges come
// straight from the minor recurrences.
template <class E>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, const E& fill = E{})
        : rows_(rows), cols_(cols), d_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return d_.empty(); }

    E& operator()(size_t i, size_t j) { return d_[i * cols_ + j]; }
    const E& operator()(size_t i, size_t j) const { return d_[i * cols_ + j]; }

    E& at1(size_t i, size_t j) { return d_[(i - 1) * cols_ + (j - 1)]; }
    const E& at1(size_t i, size_t j) const { return d_[(i - 1) * cols_ + (j - 1)]; }

    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<E> d_;
};

// An augmented system matrix must be wider than tall (n rows, m > n columns:
// n unknown columns, optional free-variable columns, one free-member column).
template <class E>
void check_augmented_shape(const Matrix<E>& a) {
    if (a.rows() == 0 || a.cols() <= a.rows())
        throw SolveError("augmented matrix needs n >= 1 and m > n");
}

} // namespace ffsolve
