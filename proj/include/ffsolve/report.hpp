#pragma once

#include <string>

#include <json.hpp>

#include "ffsolve/cost_model.hpp"
#include "ffsolve/system_io.hpp"

namespace ffsolve {

using ojson = nlohmann::ordered_json;

// Outcome of one CLI-level command.  Exit codes: 0 success, 1 usage/parse
// error, 2 mathematical failure (singular system, condensation breakdown),
// 3 internal invariant violation (cross-check mismatch, inexact division).
struct CommandResult {
    int exit_code = 0;
    std::string text;
    ojson json;
};

// `alg`: dodgson | bareiss | fb | onepass | modular.
CommandResult run_solve(const AnySystem& sys, const std::string& alg, bool keep_tableaux = false);

// Runs all applicable algorithms plus the Laplace oracle (n <= 8) and
// reports agreement per minor.
CommandResult run_verify(const AnySystem& sys);
CommandResult run_verify_random(int n, int m, int trials, uint64_t seed);

CommandResult run_predict(long long n, long long m, const CostScenario& s);

CommandResult run_bench(int n, int m, const std::string& ring, uint64_t pmod, int trials,
                        uint64_t seed);

// Deterministic random integer augmented matrix with entries in
// [-magnitude, magnitude]; shared by verify --random, bench and the tests.
Matrix<bigint> random_int_matrix(size_t n, size_t m, uint64_t& state, long long magnitude = 99);

// xorshift-style step so random streams do not depend on library details
uint64_t rng_next(uint64_t& state);

} // namespace ffsolve
