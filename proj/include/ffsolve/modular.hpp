#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ffsolve/matrix.hpp"
#include "ffsolve/solvers.hpp"

namespace ffsolve {

// Modular path for integer systems: residue solves over many word-size prime
// fields, recombined by remaindering.  Per-prime solves are independent; the
// recombination is a deterministic fold over the kept primes in selection
// order, so the result cannot depend on completion order.

// Hadamard bound over the full augmented rows: B = ceil(prod_i ||row_i||_2).
// Full-row norms dominate the norms of any column subset, so B bounds |det|
// of every n x n minor drawn from the columns of A*.
bigint hadamard_bound(const Matrix<bigint>& a);

inline constexpr uint64_t kDefaultPrimeThreshold = uint64_t{1} << 31;

// Distinct primes descending from `threshold`, with product > 2*bound
// (factor 2 recovers signs); always at least one prime.  Deterministic.
std::vector<uint64_t> select_primes(const bigint& bound, uint64_t threshold = kDefaultPrimeThreshold);

// One residue solve.  Reduces the (already pivoted) integer matrix mod p and
// runs the one-pass method without further row reordering.  Returns nullopt
// ("unlucky") when a corner minor vanishes mod p — including delta^n itself.
std::optional<MinorTable<PrimeField>> solve_mod_p_fixed(const Matrix<bigint>& pivoted, uint64_t p,
                                                        OpCounts* tally = nullptr);

// Standalone variant: pivots over Z/p itself first (a prime can be usable
// under a different row order); unlucky when no order works or delta^n = 0.
std::optional<MinorTable<PrimeField>> solve_mod_p(const Matrix<bigint>& a, uint64_t p,
                                                  OpCounts* tally = nullptr);

struct ModularPlan {
    bigint bound;                                // Hadamard bound B
    std::vector<uint64_t> primes;                // kept primes, selection order
    std::vector<MinorTable<PrimeField>> residues; // one table per kept prime
    std::vector<uint64_t> unlucky;               // discarded primes
    PivotRecord perm;                            // shared row order of all residues
};

// CRT recombination into symmetric (signed) representatives modulo the prime
// product.  Requires product > 2*bound; throws InsufficientPrimes otherwise.
MinorTable<IntegerRing> crt_combine(const ModularPlan& plan);

struct ModularOptions {
    uint64_t threshold = kDefaultPrimeThreshold;
    std::vector<uint64_t> planted; // primes to try first (tests plant unlucky ones)
};

struct ModularResult {
    MinorTable<IntegerRing> table;
    ModularPlan plan;
};

// Full pipeline: pivot over Z, bound, residue solves with refill past
// unlucky primes, recombination.  The tally aggregates the prime-field
// operation counts of the residue solves; reductions mod p and the
// recombination are conversion work outside the operation model.
ModularResult modular_solve(const Matrix<bigint>& a, const ModularOptions& opts = {},
                            OpCounts* tally = nullptr);

} // namespace ffsolve
