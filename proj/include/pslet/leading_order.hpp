#ifndef PSLET_LEADING_ORDER_HPP
#define PSLET_LEADING_ORDER_HPP

#include <optional>
#include <string>

#include "pslet/potential.hpp"
#include "pslet/real.hpp"

namespace pslet {

/// One bound state: orbital angular momentum and radial node count.
struct QuantumState {
    int ell = 0;
    int nr = 0;
    std::optional<std::string> label;

    int principal() const { return nr + ell + 1; }
};

/// Parses a spectroscopic label like "4s" or "11s". Letters s..k map to
/// ell = 0..7; anything else must be given as explicit ell/nr.
QuantumState state_from_label(const std::string& label);

/// Solved geometry of the shifted-angular-momentum expansion for one
/// state: effective radius q0, oscillator frequency w, shift beta,
/// effective angular momentum ellbar = ell - beta, and the leading
/// energy term c0 (c1 is zero by the beta choice and is kept as a
/// consistency check).
struct LeadingOrder {
    Real q0;
    Real w;
    Real beta;
    Real ellbar;
    Real c0;
    Real c1;
};

/// Solves ellbar^2 = q0^3 V'(q0) coupled with
/// w = sqrt(3 + q0 V''(q0)/V'(q0)) and beta = -(1 + (2 nr + 1) w)/2,
/// i.e. the scalar root of q^3 V'(q) = (ell + 1/2 + (nr + 1/2) w(q))^2,
/// bracketed by a geometric scan of (0, 1e9).
/// Throws NoBinding when no sign change exists, ComplexFrequency when
/// 3 + q V''/V' <= 0 at the root.
LeadingOrder solve_leading(const PotentialExpr& pot, const QuantumState& state, Precision prec);

}  // namespace pslet

#endif
