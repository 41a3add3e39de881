#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ffsolve {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// floor of sqrt; boost's integer sqrt is already the floor variant
inline bigint isqrt(const bigint& v) { return boost::multiprecision::sqrt(v); }

inline bigint big_gcd(const bigint& a, const bigint& b) {
    return boost::multiprecision::gcd(a, b);
}

inline bigint big_abs(const bigint& a) { return boost::multiprecision::abs(a); }

inline bigint big_pow(const bigint& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

} // namespace ffsolve
