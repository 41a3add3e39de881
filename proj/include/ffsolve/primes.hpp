#pragma once

#include <cstdint>
#include <vector>

#include "ffsolve/bigint.hpp"

namespace ffsolve {

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(uint64_t n);

// Largest prime strictly below `below`, or 0 when there is none.
uint64_t prev_prime_u64(uint64_t below);

// Descending stream of primes strictly below a threshold.
class PrimeStream {
public:
    explicit PrimeStream(uint64_t threshold) : next_below_(threshold) {}
    // Returns 0 when the supply is exhausted.
    uint64_t next() {
        uint64_t p = prev_prime_u64(next_below_);
        next_below_ = p;
        return p;
    }

private:
    uint64_t next_below_;
};

} // namespace ffsolve
