#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ffsolve/bigint.hpp"
#include "ffsolve/errors.hpp"

namespace ffsolve {

// Sparse multivariate polynomial over Z in variables x1..xr.
//
// Terms are kept in strictly descending graded-lex order (total degree first,
// then exponent of x1, x2, ...) with no zero coefficients, so equal
// polynomials have identical representations and to_string() is canonical.
class Polynomial {
public:
    struct Term {
        bigint coeff;
        std::vector<uint32_t> exps; // length == nvars
    };

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}
    Polynomial(int nvars, const bigint& c); // constant

    static Polynomial variable(int nvars, int index); // x_index, 1-based
    static Polynomial parse(std::string_view text, int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::vector<Term>& terms() const { return terms_; }
    uint32_t total_degree() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Quotient q with q*divisor == *this; throws NotExact when no such q
    // exists in Z[x1..xr], DivisionByZero when divisor is zero.
    Polynomial exact_div(const Polynomial& divisor) const;

    // spaced=true renders "3*x1^2*x2 - 5*x3 + 7", spaced=false "3*x1^2*x2-5*x3+7".
    std::string to_string(bool spaced = true) const;

    // Sorts, merges and drops zero terms; used by the builders below.
    void add_term(const bigint& coeff, std::vector<uint32_t> exps);

private:
    int nvars_ = 0;
    std::vector<Term> terms_;

    void normalize();
    static int cmp_exps(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    friend struct PolyTermOrder;
};

} // namespace ffsolve
