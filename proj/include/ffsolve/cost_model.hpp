#pragma once

#include <string>

#include "ffsolve/bigint.hpp"
#include "ffsolve/rings.hpp"
#include "ffsolve/solvers.hpp"

namespace ffsolve {

// Closed-form operation counts and cost evaluators for the four algorithms.
// Everything is evaluated exactly: integer counts as big integers, times as
// big rationals.  Only the modulus count goes through floating point (its
// logarithm ratio), and is then rounded up.

enum class CostKind { unit, real_poly, int_poly, modular };

CostKind cost_kind_from_string(const std::string& s);
const char* cost_kind_name(CostKind k);

struct CostScenario {
    CostKind kind = CostKind::unit;
    long long r = 0;          // number of polynomial variables
    long long p = 1;          // degree in each variable
    long long l = 1;          // coefficient length in words
    long long tm = 1;         // single-precision multiply time
    long long td = 1;         // single-precision divide time
    long long ta = 1;         // single-precision add/subtract time
    long long modulus_bits = 31;

    static CostScenario for_kind(CostKind k); // canonical unit-time defaults per kind
    void validate() const;
};

// Exact operation counts for algorithms 2..4 at any 2 <= n < m; for the
// Dodgson row only the square case m = n+1 has published counts.  The
// published Dodgson division count goes negative for small n (a sign slip on
// its 5n term); it is returned as printed and flagged, with the corrected
// variant available separately — measured runs are the ground truth.
OpCounts count_formulas(Algo algo, long long n, long long m);
long long dodgson_divisions_as_printed(long long n);
long long dodgson_divisions_corrected(long long n);

struct PolyOpTimes {
    bigrat A, M, D;
};

// Operand-size-aware times for one arithmetic operation between minors of
// orders i and j:
//   A_ij = (jp+1)^r a_ij
//   M_ij = (ip+1)^r (jp+1)^r (m_ij + a_{i+j,i+j})
//   D_ij = (ip-jp+1)^r (d_ij + (jp+1)^r (m_{i-j,j} + a_ii))
// with coefficient times m_ij, d_ij, a_ij chosen by the scenario kind.
PolyOpTimes poly_op_times(long long i, long long j, const CostScenario& s);

// Total solution time by direct summation of the per-step sums, using
// poly_op_times for every term.  Dodgson requires m = n+1.
bigrat predict_time(Algo algo, long long n, long long m, const CostScenario& s);

// The two passes separately (total = forward + backup for the two-pass
// methods; one_pass has a single formula and no split).  The back-up part of
// the forward/back-up method is O(n^2) at m = n+1 while Bareiss's is O(n^3).
bigrat predict_forward_time(long long n, long long m, const CostScenario& s);
bigrat predict_backup_time(Algo algo, long long n, long long m, const CostScenario& s);

// Auxiliary closed forms.
bigrat sigma_value(long long n, const CostScenario& s); // 3 n^{2r+3} p^{2r} / (2r+1)(2r+2)(2r+3)
bigrat rho_value(long long n, const CostScenario& s);   // n^{r+2} p^{2r}
bigrat psi_value(long long n, const CostScenario& s);   // sigma under r -> r+1, p^r -> l p^r

// Multiplicative/divisive work in R[x1..xr] (leading terms).  The Dodgson
// value exists only at m = n+1, as 3*sigma.
bigrat n_r(Algo algo, long long n, long long m, const CostScenario& s);
// Same in Z[x1..xr]: substitute r -> r+1 and p^r -> l p^r throughout.
bigrat n_z(Algo algo, long long n, long long m, const CostScenario& s);
// Modular case at m = n+1: (c_m * tm + c_d * td) * nu with nu = mu n^3 / 3.
bigrat n_zm(Algo algo, long long n, const CostScenario& s);

// Number of moduli needed: mu = p r n^2 (l + log(n p^3) / (2 log m_i)),
// rounded up; logarithms base 2 (the ratio is base-independent).  For r = 0
// the r-factor formula degenerates and the coefficient-level count
// n (l + log(n p^3) / (2 log m_i)) is reported instead.
long long modulus_count(long long n, const CostScenario& s);
bigrat nu_value(long long n, const CostScenario& s);

} // namespace ffsolve
