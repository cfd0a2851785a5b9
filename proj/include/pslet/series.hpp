#ifndef PSLET_SERIES_HPP
#define PSLET_SERIES_HPP

#include <map>
#include <vector>

#include "pslet/leading_order.hpp"
#include "pslet/potential.hpp"
#include "pslet/real.hpp"

namespace pslet {

/// Coefficient table of the effective one-dimensional problem about q0:
/// h(lambda) = -1/2 d^2/dx^2 + 1/2 w^2 x^2 + sum_j lambda^j v_j(x),
/// with v_j(x) = A_j x^(j+2) + B_j x^j + C_j x^(j-2) and
/// lambda = ellbar^(-1/2).
struct PerturbationTable {
    Real w2_half;  // 1/2 w^2, the unperturbed harmonic coefficient
    int j_max = 0;
    /// coeffs[j-1] maps x-power k -> coefficient of lambda^j x^k.
    std::vector<std::map<int, Real>> coeffs;
};

/// Builds the table from a jet of V at q0:
///   delta_k = q0^(k+2) V^(k)(q0) / (k! ellbar^2),
///   A_j = 1/2 (-1)^j (j+3) + delta_(j+2)   at k = j+2,
///   B_j = 1/2 (2 beta + 1) (-1)^j (j+1)    at k = j,
///   C_j = 1/2 beta (beta+1) (-1)^j (j-1)   at k = j-2 (j >= 2).
/// The identities delta_1 = 1 and delta_2 = (w^2-3)/2 are checked.
/// Throws InsufficientJet when the jet is shorter than j_max + 3.
PerturbationTable assemble_perturbation(const Jet& jets, const LeadingOrder& lead, int j_max);

/// Hypervirial + Hellmann-Feynman recursion for the lambda-series energy
/// coefficients eps_0..eps_m_max of the nr-th state of h(lambda).
/// Seeds eps_0 = (nr + 1/2) w and X_0 = 1; each order m determines eps_m
/// from the Hellmann-Feynman sum and then the moments X_N^(m) from the
/// hypervirial identity
///   2 N E X_(N-1) + 1/4 N(N-1)(N-2) X_(N-3) = sum_k (2N+k) W_k X_(N+k-1)
/// solved for X_(N+1) ascending in N (the N = 0 identity fixes X_1).
/// Throws OrderOverflow when a moment outside the dependency envelope is
/// requested.
std::vector<Real> hvhf_expand(const PerturbationTable& tab, const Real& w, int nr, int m_max);

/// Energy expansion of one state: series terms c_k, partial sums E_M,
/// and the raw lambda-series coefficients eps_m.
struct EnergySeries {
    QuantumState state;
    int order = 0;  // M
    LeadingOrder leading;
    std::vector<Real> eps;       // eps_0 .. eps_(2(M-1))
    std::vector<Real> terms;     // c_0 .. c_M, c_k = eps_(2(k-1)) ellbar^(2-k) / q0^2
    std::vector<Real> partials;  // E_0 .. E_M, prefix sums of terms
};

/// Full pipeline: solve_leading -> jet(order 2M+2) ->
/// assemble_perturbation(j_max = 2(M-1)) -> hvhf_expand(m_max = 2(M-1)).
EnergySeries energy_series(const PotentialExpr& pot, const QuantumState& state, int M,
                           Precision prec);

/// Smallest-term diagnostics of a (possibly asymptotic) series.
struct TruncationInfo {
    int index = 0;       // argmin over k >= 2 of |c_k|
    Real min_step;       // |c_index|
    bool diverging = false;  // |c_k| grows for every k past the index
};

TruncationInfo optimal_truncation(const EnergySeries& series);

}  // namespace pslet

#endif
