#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "ffsolve/matrix.hpp"
#include "ffsolve/rings.hpp"

namespace ffsolve {

// Plain-text system format (diffable fixtures):
//
//   ring int | ring zp <p> | ring polyint x1 x2 ... xr
//   dims <n> <m>
//   <m whitespace-separated entries per row, n rows>
//
// Integer entries are unbounded; zp entries are reduced into [0, p);
// polynomial entries are written without spaces (x1^2-1).  Blank lines are
// ignored.  serialize_system() emits the canonical form, which parses back
// to the identical system.

struct ParseError : std::runtime_error {
    size_t line, col;
    ParseError(const std::string& kind, const std::string& msg, size_t line_, size_t col_)
        : std::runtime_error(kind + " at line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
};

struct SyntaxError : ParseError {
    SyntaxError(const std::string& msg, size_t line, size_t col)
        : ParseError("SyntaxError", msg, line, col) {}
};
struct DimensionError : ParseError {
    DimensionError(const std::string& msg, size_t line, size_t col)
        : ParseError("DimensionError", msg, line, col) {}
};
struct RingSpecError : ParseError {
    RingSpecError(const std::string& msg, size_t line, size_t col)
        : ParseError("RingError", msg, line, col) {}
};

struct AnySystem {
    enum class Kind { integer, prime_field, polynomial };
    Kind kind;
    uint64_t p = 0;   // prime_field
    int nvars = 0;    // polynomial
    std::variant<Matrix<bigint>, Matrix<uint64_t>, Matrix<Polynomial>> mat;

    size_t n() const;
    size_t m() const;
    std::string ring_name() const;
};

AnySystem parse_system(std::string_view text);
std::string serialize_system(const AnySystem& sys);

} // namespace ffsolve
