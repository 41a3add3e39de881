#include "ffsolve/system_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "ffsolve/primes.hpp"

namespace ffsolve {

size_t AnySystem::n() const {
    return std::visit([](const auto& m) { return m.rows(); }, mat);
}
size_t AnySystem::m() const {
    return std::visit([](const auto& m) { return m.cols(); }, mat);
}

std::string AnySystem::ring_name() const {
    switch (kind) {
        case Kind::integer: return "int";
        case Kind::prime_field: return "zp " + std::to_string(p);
        case Kind::polynomial: {
            std::string s = "polyint";
            for (int i = 1; i <= nvars; ++i) s += " x" + std::to_string(i);
            return s;
        }
    }
    return "?";
}

namespace {

struct Token {
    std::string text;
    size_t line, col; // 1-based
};

// split into whitespace-separated tokens per line, skipping blank lines
std::vector<std::vector<Token>> tokenize(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    size_t lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        ++lineno;
        std::vector<Token> toks;
        size_t i = pos;
        while (i < eol) {
            while (i < eol && std::isspace((unsigned char)text[i])) ++i;
            if (i >= eol) break;
            size_t start = i;
            while (i < eol && !std::isspace((unsigned char)text[i])) ++i;
            toks.push_back({std::string(text.substr(start, i - start)), lineno, start - pos + 1});
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    return lines;
}

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit((unsigned char)s[i])) return false;
    return true;
}

long long parse_small_int(const Token& t, const char* what) {
    if (!is_integer_token(t.text))
        throw SyntaxError(std::string("expected ") + what + ", got '" + t.text + "'", t.line, t.col);
    try {
        return std::stoll(t.text);
    } catch (const std::exception&) {
        throw SyntaxError(std::string(what) + " out of range: '" + t.text + "'", t.line, t.col);
    }
}

} // namespace

AnySystem parse_system(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.size() < 2) throw SyntaxError("expected 'ring' and 'dims' header lines", 1, 1);

    const auto& ringline = lines[0];
    if (ringline[0].text != "ring")
        throw SyntaxError("expected 'ring' keyword", ringline[0].line, ringline[0].col);
    if (ringline.size() < 2)
        throw SyntaxError("missing ring kind", ringline[0].line, ringline[0].col);

    AnySystem sys;
    const std::string& kind = ringline[1].text;
    if (kind == "int") {
        if (ringline.size() != 2)
            throw RingSpecError("'ring int' takes no arguments", ringline[2].line, ringline[2].col);
        sys.kind = AnySystem::Kind::integer;
    } else if (kind == "zp") {
        if (ringline.size() != 3)
            throw RingSpecError("'ring zp' needs a modulus", ringline[1].line, ringline[1].col);
        long long p = parse_small_int(ringline[2], "modulus");
        if (p < 2 || !is_prime_u64((uint64_t)p))
            throw RingSpecError("modulus " + ringline[2].text + " is not prime", ringline[2].line,
                                ringline[2].col);
        sys.kind = AnySystem::Kind::prime_field;
        sys.p = (uint64_t)p;
    } else if (kind == "polyint") {
        if (ringline.size() < 3)
            throw RingSpecError("'ring polyint' needs variables x1 .. xr", ringline[1].line,
                                ringline[1].col);
        for (size_t i = 2; i < ringline.size(); ++i) {
            std::string expect = "x" + std::to_string(i - 1);
            if (ringline[i].text != expect)
                throw RingSpecError("variables must be named x1..xr in order; expected '" + expect +
                                        "', got '" + ringline[i].text + "'",
                                    ringline[i].line, ringline[i].col);
        }
        sys.kind = AnySystem::Kind::polynomial;
        sys.nvars = (int)ringline.size() - 2;
    } else {
        throw RingSpecError("unknown ring '" + kind + "' (expected int, zp, polyint)",
                            ringline[1].line, ringline[1].col);
    }

    const auto& dimline = lines[1];
    if (dimline[0].text != "dims")
        throw SyntaxError("expected 'dims' line", dimline[0].line, dimline[0].col);
    if (dimline.size() != 3)
        throw SyntaxError("'dims' needs exactly two numbers", dimline[0].line, dimline[0].col);
    long long n = parse_small_int(dimline[1], "row count");
    long long m = parse_small_int(dimline[2], "column count");
    if (n < 1 || m < 1 || n > 4096 || m > 4096)
        throw DimensionError("dimensions out of range", dimline[1].line, dimline[1].col);
    if (n >= m)
        throw DimensionError("need n < m (augmented matrix has more columns than rows)",
                             dimline[1].line, dimline[1].col);

    if (lines.size() - 2 != (size_t)n)
        throw DimensionError("expected " + std::to_string(n) + " rows, found " +
                                 std::to_string(lines.size() - 2),
                             dimline[0].line, dimline[0].col);
    for (size_t r = 0; r < (size_t)n; ++r) {
        const auto& row = lines[2 + r];
        if (row.size() != (size_t)m)
            throw DimensionError("row has " + std::to_string(row.size()) + " entries, expected " +
                                     std::to_string(m),
                                 row[0].line, row[0].col);
    }

    auto entry_error = [](const Token& t, const std::string& why) {
        return SyntaxError("bad entry '" + t.text + "': " + why, t.line, t.col);
    };

    switch (sys.kind) {
        case AnySystem::Kind::integer: {
            Matrix<bigint> a((size_t)n, (size_t)m, bigint(0));
            for (size_t i = 0; i < (size_t)n; ++i)
                for (size_t j = 0; j < (size_t)m; ++j) {
                    const Token& t = lines[2 + i][j];
                    if (!is_integer_token(t.text)) throw entry_error(t, "expected an integer");
                    a(i, j) = bigint(t.text);
                }
            sys.mat = std::move(a);
            break;
        }
        case AnySystem::Kind::prime_field: {
            PrimeField f(sys.p);
            Matrix<uint64_t> a((size_t)n, (size_t)m, 0);
            for (size_t i = 0; i < (size_t)n; ++i)
                for (size_t j = 0; j < (size_t)m; ++j) {
                    const Token& t = lines[2 + i][j];
                    if (!is_integer_token(t.text)) throw entry_error(t, "expected an integer");
                    a(i, j) = f.from_bigint(bigint(t.text));
                }
            sys.mat = std::move(a);
            break;
        }
        case AnySystem::Kind::polynomial: {
            Matrix<Polynomial> a((size_t)n, (size_t)m, Polynomial(sys.nvars));
            for (size_t i = 0; i < (size_t)n; ++i)
                for (size_t j = 0; j < (size_t)m; ++j) {
                    const Token& t = lines[2 + i][j];
                    try {
                        a(i, j) = Polynomial::parse(t.text, sys.nvars);
                    } catch (const RingError& e) {
                        throw RingSpecError(std::string(e.what()) + " in '" + t.text + "'", t.line,
                                            t.col);
                    }
                }
            sys.mat = std::move(a);
            break;
        }
    }
    return sys;
}

std::string serialize_system(const AnySystem& sys) {
    std::ostringstream out;
    out << "ring " << sys.ring_name() << "\n";
    out << "dims " << sys.n() << " " << sys.m() << "\n";
    std::visit(
        [&](const auto& a) {
            using E = std::decay_t<decltype(a(0, 0))>;
            for (size_t i = 0; i < a.rows(); ++i) {
                for (size_t j = 0; j < a.cols(); ++j) {
                    if (j) out << " ";
                    if constexpr (std::is_same_v<E, Polynomial>) {
                        out << a(i, j).to_string(false); // compact, whitespace-free entries
                    } else if constexpr (std::is_same_v<E, uint64_t>) {
                        out << a(i, j);
                    } else {
                        out << a(i, j).str();
                    }
                }
                out << "\n";
            }
        },
        sys.mat);
    return out.str();
}

} // namespace ffsolve
