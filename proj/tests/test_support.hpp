#pragma once

#include <initializer_list>
#include <vector>

#include "ffsolve/matrix.hpp"
#include "ffsolve/rings.hpp"

namespace ffsolve::testing {

inline Matrix<bigint> mat(std::initializer_list<std::initializer_list<long long>> rows) {
    size_t n = rows.size(), m = rows.begin()->size();
    Matrix<bigint> a(n, m, 0);
    size_t i = 0;
    for (const auto& row : rows) {
        size_t j = 0;
        for (long long v : row) a(i, j++) = v;
        ++i;
    }
    return a;
}

// E2: exact solution (1, 2, 3), delta = 2
inline Matrix<bigint> e2() { return mat({{1, 1, 1, 6}, {1, 2, 3, 14}, {1, 4, 9, 36}}); }
// E1: exact solution (1, 1), delta = -3
inline Matrix<bigint> e1() { return mat({{1, 2, 3}, {4, 5, 9}}); }

} // namespace ffsolve::testing
