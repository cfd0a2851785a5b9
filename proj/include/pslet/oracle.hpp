#ifndef PSLET_ORACLE_HPP
#define PSLET_ORACLE_HPP

#include <vector>

#include "pslet/leading_order.hpp"
#include "pslet/potential.hpp"

namespace pslet {

/// Uniform radial grid with Dirichlet ends u(r_min) = u(r_max) = 0.
struct GridConfig {
    double r_max = 0;
    int points = 0;
    double r_min = 0;
};

/// Direct-eigensolver result used to cross-validate the expansion.
/// Runs at fixed double precision with two-grid Richardson control.
struct OracleResult {
    double energy = 0;  // Richardson-extrapolated eigenvalue, hartree
    int nodes = 0;
    GridConfig grid;
    double richardson_error = 0;
};

/// Three-point finite differences of -1/2 u'' + [l(l+1)/(2r^2) + V] u = E u,
/// (nr+1)-th eigenvalue below the continuum edge by Sturm-sequence
/// bisection on the tridiagonal matrix, Richardson extrapolation from
/// `points` and `2*points`, node count confirmed by inverse iteration.
/// Throws NoBoundState or NodeMismatch.
OracleResult oracle_eigenvalue(const PotentialExpr& pot, const QuantumState& state,
                               const GridConfig& grid);

/// r_max = 6 x (outer classical turning point at the leading energy c0),
/// floored at 50; points from (r_max/points)^2 |V''(q0)| <= 1e-8, floored
/// at 20000.
GridConfig auto_grid(const PotentialExpr& pot, const QuantumState& state);

// --- kernels (exposed for tests and the benchmark) ------------------

namespace oracle_kernels {

/// Number of eigenvalues of the symmetric tridiagonal matrix
/// (diag, uniform off-diagonal) strictly below x. Serial reference.
int sturm_count_serial(const std::vector<double>& diag, double off, double x);

/// Same count; the LDL^T recurrence is sequential, so the parallel win
/// comes from evaluating many shifts at once.
std::vector<int> sturm_count_batch_omp(const std::vector<double>& diag, double off,
                                       const std::vector<double>& shifts);

/// k-th (0-based) eigenvalue by plain bisection. Serial reference.
double eigenvalue_bisect_serial(const std::vector<double>& diag, double off, int k, double lo,
                                double hi, double tol);

/// k-th eigenvalue by OpenMP multisection: each sweep evaluates the
/// Sturm count at many interior shifts concurrently.
double eigenvalue_multisection_omp(const std::vector<double>& diag, double off, int k, double lo,
                                   double hi, double tol);

}  // namespace oracle_kernels

}  // namespace pslet

#endif
