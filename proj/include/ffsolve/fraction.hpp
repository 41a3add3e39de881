#pragma once

#include "ffsolve/rings.hpp"

namespace ffsolve {

// Quotient-field element over a ring R.  Comparison is by cross
// multiplication, so it works in any integral domain without gcds.
template <class R>
struct Fraction {
    using E = typename R::Element;
    E num;
    E den;

    static Fraction make(const R& ring, E n, E d) {
        if (ring.is_zero(d)) throw DivisionByZero();
        ring.normalize_fraction(n, d);
        return Fraction{std::move(n), std::move(d)};
    }
    static Fraction of(const R& ring, const E& v) { return Fraction{v, ring.one()}; }

    bool is_ring_value(const R& ring) const { return ring.eq(den, ring.one()); }
};

template <class R>
bool fraction_eq(const R& ring, const Fraction<R>& a, const Fraction<R>& b) {
    return ring.eq(ring.mul(a.num, b.den), ring.mul(b.num, a.den));
}

template <class R>
Fraction<R> fraction_add(const R& ring, const Fraction<R>& a, const Fraction<R>& b) {
    return Fraction<R>::make(ring, ring.add(ring.mul(a.num, b.den), ring.mul(b.num, a.den)),
                             ring.mul(a.den, b.den));
}

template <class R>
Fraction<R> fraction_sub(const R& ring, const Fraction<R>& a, const Fraction<R>& b) {
    return Fraction<R>::make(ring, ring.sub(ring.mul(a.num, b.den), ring.mul(b.num, a.den)),
                             ring.mul(a.den, b.den));
}

template <class R>
Fraction<R> fraction_mul(const R& ring, const Fraction<R>& a, const Fraction<R>& b) {
    return Fraction<R>::make(ring, ring.mul(a.num, b.num), ring.mul(a.den, b.den));
}

template <class R>
std::string fraction_str(const R& ring, const Fraction<R>& f) {
    if (ring.eq(f.den, ring.one())) return ring.to_string(f.num);
    return ring.to_string(f.num) + "/" + ring.to_string(f.den);
}

} // namespace ffsolve
