#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "ffsolve/bigint.hpp"
#include "ffsolve/errors.hpp"
#include "ffsolve/polynomial.hpp"
#include "ffsolve/primes.hpp"

namespace ffsolve {

// Tallies of ring-element operations observed during a run.  One tick per
// element operation, independent of operand size; sign flips are free.
struct OpCounts {
    long long mul = 0;
    long long div = 0;
    long long addsub = 0;

    OpCounts& operator+=(const OpCounts& o) {
        mul += o.mul;
        div += o.div;
        addsub += o.addsub;
        return *this;
    }
    friend OpCounts operator+(OpCounts a, const OpCounts& b) { return a += b; }
    friend bool operator==(const OpCounts& a, const OpCounts& b) {
        return a.mul == b.mul && a.div == b.div && a.addsub == b.addsub;
    }
    std::string str() const {
        return "{mul " + std::to_string(mul) + ", div " + std::to_string(div) + ", addsub " +
               std::to_string(addsub) + "}";
    }
};

// ---------------------------------------------------------------------------
// The three concrete rings.  All are integral domains with exact division;
// elements are immutable values and safe to share across threads.

class IntegerRing {
public:
    using Element = bigint;

    std::string name() const { return "int"; }
    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_long(long long v) const { return v; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    bool is_zero(const Element& a) const { return a == 0; }
    bool eq(const Element& a, const Element& b) const { return a == b; }

    Element exact_div(const Element& a, const Element& b) const {
        if (b == 0) throw DivisionByZero();
        bigint q = a / b;
        if (q * b != a) throw NotExact();
        return q;
    }

    // reduce by gcd, keep the denominator positive
    void normalize_fraction(Element& num, Element& den) const {
        if (den == 0) throw DivisionByZero();
        if (num == 0) { den = 1; return; }
        bigint g = big_gcd(big_abs(num), big_abs(den));
        num /= g;
        den /= g;
        if (den < 0) { num = -num; den = -den; }
    }

    std::string to_string(const Element& a) const { return a.str(); }
    Element parse(std::string_view s) const { return bigint(std::string(s)); }
};

// Z/p for a word-size prime p; elements are reduced representatives in [0, p).
class PrimeField {
public:
    using Element = uint64_t;

    explicit PrimeField(uint64_t p) : p_(p) {
        if (!is_prime_u64(p)) throw RingError("PrimeField: modulus " + std::to_string(p) + " is not prime");
        if (p >> 63) throw RingError("PrimeField: modulus must fit one machine word");
    }

    uint64_t modulus() const { return p_; }
    std::string name() const { return "zp " + std::to_string(p_); }
    Element zero() const { return 0; }
    Element one() const { return 1 % p_; }
    Element from_long(long long v) const {
        long long r = v % (long long)p_;
        if (r < 0) r += (long long)p_;
        return (uint64_t)r;
    }
    Element from_bigint(const bigint& v) const {
        bigint r = v % bigint(p_);
        if (r < 0) r += p_;
        return r.convert_to<uint64_t>();
    }

    Element add(Element a, Element b) const {
        Element s = a + b;
        if (s >= p_ || s < a) s -= p_;
        return s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
    Element mul(Element a, Element b) const {
        return (uint64_t)((unsigned __int128)a * b % p_);
    }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    bool is_zero(Element a) const { return a == 0; }
    bool eq(Element a, Element b) const { return a == b; }

    Element inv(Element a) const {
        if (a == 0) throw DivisionByZero();
        // extended Euclid; p is prime so the inverse exists
        int64_t t = 0, newt = 1;
        int64_t r = (int64_t)p_, newr = (int64_t)a;
        while (newr != 0) {
            int64_t q = r / newr;
            t = std::exchange(newt, t - q * newt);
            r = std::exchange(newr, r - q * newr);
        }
        if (t < 0) t += (int64_t)p_;
        return (uint64_t)t;
    }
    Element exact_div(Element a, Element b) const { return mul(a, inv(b)); }

    void normalize_fraction(Element& num, Element& den) const {
        num = exact_div(num, den);
        den = one();
    }

    std::string to_string(Element a) const { return std::to_string(a); }
    Element parse(std::string_view s) const { return from_bigint(bigint(std::string(s))); }

private:
    uint64_t p_;
};

// Z[x1..xr] with the classical algorithms for multiplication and division.
class PolynomialRing {
public:
    using Element = Polynomial;

    explicit PolynomialRing(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw RingError("PolynomialRing: negative variable count");
    }

    int nvars() const { return nvars_; }
    std::string name() const {
        std::string s = "polyint";
        for (int i = 1; i <= nvars_; ++i) s += " x" + std::to_string(i);
        return s;
    }
    Element zero() const { return Polynomial(nvars_); }
    Element one() const { return Polynomial(nvars_, 1); }
    Element from_long(long long v) const { return Polynomial(nvars_, bigint(v)); }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool eq(const Element& a, const Element& b) const { return a == b; }
    Element exact_div(const Element& a, const Element& b) const { return a.exact_div(b); }

    void normalize_fraction(Element& num, Element& den) const {
        if (den.is_zero()) throw DivisionByZero();
        // no rational-function ring here: simplify only when the quotient exists
        try {
            num = num.exact_div(den);
            den = one();
        } catch (const NotExact&) {
        }
    }

    std::string to_string(const Element& a) const { return a.to_string(); }
    Element parse(std::string_view s) const { return Polynomial::parse(s, nvars_); }

private:
    int nvars_;
};

// ---------------------------------------------------------------------------
// Counting wrapper.  Solvers operate through this; attach an OpCounts to
// audit a run, or pass nullptr for an uncounted view.  The tally is owned by
// one run; concurrent runs use independent tallies.

template <class R>
class Counted {
public:
    using Ring = R;
    using Element = typename R::Element;

    explicit Counted(const R& ring, OpCounts* tally = nullptr) : ring_(&ring), tally_(tally) {}

    const R& base() const { return *ring_; }
    OpCounts* tally() const { return tally_; }
    Counted<R> uncounted() const { return Counted<R>(*ring_, nullptr); }

    Element zero() const { return ring_->zero(); }
    Element one() const { return ring_->one(); }
    Element from_long(long long v) const { return ring_->from_long(v); }
    bool is_zero(const Element& a) const { return ring_->is_zero(a); }
    bool eq(const Element& a, const Element& b) const { return ring_->eq(a, b); }
    std::string to_string(const Element& a) const { return ring_->to_string(a); }

    Element add(const Element& a, const Element& b) const {
        if (tally_) ++tally_->addsub;
        return ring_->add(a, b);
    }
    Element sub(const Element& a, const Element& b) const {
        if (tally_) ++tally_->addsub;
        return ring_->sub(a, b);
    }
    Element mul(const Element& a, const Element& b) const {
        if (tally_) ++tally_->mul;
        return ring_->mul(a, b);
    }
    Element neg(const Element& a) const { return ring_->neg(a); } // free in the op model
    Element exact_div(const Element& a, const Element& b) const {
        if (tally_) ++tally_->div;
        return ring_->exact_div(a, b);
    }

private:
    const R* ring_;
    OpCounts* tally_;
};

// Runs one computation through a counted view of `ring` and returns the
// tally.  Deterministic computations audit identically on every run.
template <class R, class F>
OpCounts audit_counts(const R& ring, F&& computation) {
    OpCounts tally;
    Counted<R> counted(ring, &tally);
    computation(counted);
    return tally;
}

} // namespace ffsolve
