#include "ffsolve/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace ffsolve {

namespace {

uint32_t exps_degree(const std::vector<uint32_t>& e) {
    uint32_t d = 0;
    for (uint32_t v : e) d += v;
    return d;
}

} // namespace

// graded-lex: higher total degree first, ties broken by exponent of x1, x2, ...
int Polynomial::cmp_exps(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    uint32_t da = exps_degree(a), db = exps_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

Polynomial::Polynomial(int nvars, const bigint& c) : nvars_(nvars) {
    if (c != 0) terms_.push_back({c, std::vector<uint32_t>(nvars, 0)});
}

Polynomial Polynomial::variable(int nvars, int index) {
    Polynomial p(nvars);
    std::vector<uint32_t> e(nvars, 0);
    e[index - 1] = 1;
    p.terms_.push_back({bigint(1), std::move(e)});
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exps_degree(terms_[0].exps) == 0);
}

uint32_t Polynomial::total_degree() const {
    return terms_.empty() ? 0 : exps_degree(terms_[0].exps);
}

void Polynomial::normalize() {
    for (auto& t : terms_) t.exps.resize(nvars_, 0);
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return cmp_exps(a.exps, b.exps) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && cmp_exps(out.back().exps, t.exps) == 0)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return t.coeff == 0; }),
              out.end());
    terms_ = std::move(out);
}

void Polynomial::add_term(const bigint& coeff, std::vector<uint32_t> exps) {
    if ((int)exps.size() > nvars_) nvars_ = (int)exps.size();
    terms_.push_back({coeff, std::move(exps)});
    normalize();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r(std::max(nvars_, o.nvars_));
    r.terms_ = terms_;
    r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
    r.normalize();
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    // classical multiplication: every term pair
    Polynomial r(std::max(nvars_, o.nvars_));
    r.terms_.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            std::vector<uint32_t> e(std::max(a.exps.size(), b.exps.size()), 0);
            for (size_t i = 0; i < a.exps.size(); ++i) e[i] += a.exps[i];
            for (size_t i = 0; i < b.exps.size(); ++i) e[i] += b.exps[i];
            r.terms_.push_back({a.coeff * b.coeff, std::move(e)});
        }
    r.normalize();
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff != o.terms_[i].coeff) return false;
        const auto& a = terms_[i].exps;
        const auto& b = o.terms_[i].exps;
        size_t n = std::max(a.size(), b.size());
        for (size_t k = 0; k < n; ++k) {
            uint32_t ea = k < a.size() ? a[k] : 0;
            uint32_t eb = k < b.size() ? b[k] : 0;
            if (ea != eb) return false;
        }
    }
    return true;
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero();
    int nv = std::max(nvars_, divisor.nvars_);
    Polynomial q(nv);
    Polynomial rem = *this;
    rem.nvars_ = nv;
    rem.normalize();
    const Term& ltb = divisor.terms_.front();
    std::vector<uint32_t> be = ltb.exps;
    be.resize(nv, 0);
    while (!rem.is_zero()) {
        const Term& ltr = rem.terms_.front();
        // leading-term division: exponents must dominate, coefficient must divide
        std::vector<uint32_t> qe(nv, 0);
        bool ok = true;
        for (int i = 0; i < nv; ++i) {
            uint32_t re = i < (int)ltr.exps.size() ? ltr.exps[i] : 0;
            if (re < be[i]) { ok = false; break; }
            qe[i] = re - be[i];
        }
        if (ok && ltr.coeff % ltb.coeff != 0) ok = false;
        if (!ok) throw NotExact();
        Polynomial t(nv);
        t.terms_.push_back({ltr.coeff / ltb.coeff, qe});
        q = q + t;
        rem = rem - t * divisor;
    }
    return q;
}

std::string Polynomial::to_string(bool spaced) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        bigint c = t.coeff;
        if (first) {
            if (c < 0) { out += "-"; c = -c; }
        } else {
            if (c < 0) { out += spaced ? " - " : "-"; c = -c; }
            else out += spaced ? " + " : "+";
        }
        first = false;
        std::string vars;
        for (size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(i + 1);
            if (t.exps[i] > 1) vars += "^" + std::to_string(t.exps[i]);
        }
        if (vars.empty()) {
            out += c.str();
        } else if (c == 1) {
            out += vars;
        } else {
            out += c.str() + "*" + vars;
        }
    }
    return out;
}

namespace {

struct PolyLexer {
    std::string_view s;
    size_t pos = 0;
    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        skip_ws();
        return s[pos++];
    }
    bigint number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) throw RingError("polynomial parse: expected digits at offset " +
                                          std::to_string(pos));
        return bigint(std::string(s.substr(start, pos - start)));
    }
};

} // namespace

Polynomial Polynomial::parse(std::string_view text, int nvars) {
    PolyLexer lx{text};
    Polynomial result(nvars);
    if (lx.eof()) throw RingError("polynomial parse: empty input");
    bool expect_term = true;
    int sign = 1;
    while (!lx.eof()) {
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.take();
            if (expect_term && c == '-') sign = -sign;
            else if (expect_term && c == '+') { /* unary plus */ }
            else { sign = (c == '-') ? -1 : 1; }
            expect_term = true;
            continue;
        }
        // parse one term: factors joined by '*'
        bigint coeff = 1;
        std::vector<uint32_t> exps(nvars, 0);
        bool saw_factor = false;
        for (;;) {
            char f = lx.peek();
            if (std::isdigit((unsigned char)f)) {
                coeff *= lx.number();
                saw_factor = true;
            } else if (f == 'x' || f == 'X') {
                lx.take();
                bigint idx = lx.number();
                if (idx < 1 || idx > nvars)
                    throw RingError("polynomial parse: unknown variable x" + idx.str() +
                                    " (ring has " + std::to_string(nvars) + " variables)");
                uint32_t e = 1;
                if (lx.peek() == '^') {
                    lx.take();
                    bigint ev = lx.number();
                    if (ev < 0 || ev > 1000000) throw RingError("polynomial parse: bad exponent");
                    e = (uint32_t)ev.convert_to<uint64_t>();
                }
                exps[(size_t)idx.convert_to<int>() - 1] += e;
                saw_factor = true;
            } else {
                throw RingError("polynomial parse: unexpected character '" + std::string(1, f) +
                                "'");
            }
            if (lx.peek() == '*') { lx.take(); continue; }
            break;
        }
        if (!saw_factor) throw RingError("polynomial parse: empty term");
        result.add_term(sign * coeff, std::move(exps));
        sign = 1;
        expect_term = false;
        char nxt = lx.peek();
        if (nxt == '\0') break;
        if (nxt != '+' && nxt != '-')
            throw RingError("polynomial parse: expected '+' or '-' between terms");
    }
    if (expect_term) throw RingError("polynomial parse: dangling sign");
    return result;
}

} // namespace ffsolve
