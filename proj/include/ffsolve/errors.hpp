#pragma once

#include <stdexcept>
#include <string>

namespace ffsolve {

// Ring-level failures.
struct RingError : std::runtime_error {
    explicit RingError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RingMismatch : RingError {
    explicit RingMismatch(const std::string& msg) : RingError(msg) {}
};

struct DivisionByZero : RingError {
    DivisionByZero() : RingError("DivisionByZero") {}
};

// Raised when a quotient does not exist in the ring.  The elimination
// schemes only divide where the quotient is again a minor, so hitting this
// on a sanctioned division step means the input tableau was corrupted.
struct NotExact : RingError {
    explicit NotExact(const std::string& msg = "NotExact: quotient does not exist in the ring")
        : RingError(msg) {}
};

// Solver-level failures.
struct SolveError : std::runtime_error {
    explicit SolveError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SingularSystem : SolveError {
    SingularSystem() : SolveError("SingularSystem: corner minor of full order is zero") {}
};

// A failed pivot search means the leading k columns of the coefficient block
// are rank-deficient, i.e. the system is singular under every row order.
struct NoValidPivot : SolveError {
    int k;
    explicit NoValidPivot(int k_)
        : SolveError("SingularSystem (NoValidPivot): no row order makes corner minor " +
                     std::to_string(k_) + " nonzero"),
          k(k_) {}
};

struct ZeroCornerMinor : SolveError {
    int k;
    explicit ZeroCornerMinor(int k_)
        : SolveError("ZeroCornerMinor: corner minor " + std::to_string(k_) +
                     " is zero (run pivot_permute first)"),
          k(k_) {}
};

struct CondensationBreakdown : SolveError {
    int k, i, j;
    CondensationBreakdown(int k_, int i_, int j_)
        : SolveError("CondensationBreakdown at (" + std::to_string(k_) + "," + std::to_string(i_) +
                     "," + std::to_string(j_) + "): interior minor used as denominator is zero"),
          k(k_), i(i_), j(j_) {}
};

struct NotSquareSystem : SolveError {
    NotSquareSystem() : SolveError("NotSquare: this method needs m = n+1") {}
};

struct InsufficientPrimes : SolveError {
    InsufficientPrimes()
        : SolveError("InsufficientPrimes: prime supply exhausted before the modulus "
                     "product exceeded twice the bound") {}
};

} // namespace ffsolve
