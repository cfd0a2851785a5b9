#ifndef PSLET_RESUMMATION_HPP
#define PSLET_RESUMMATION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pslet/series.hpp"

namespace pslet {

/// Numerator/denominator coefficients of a [N,M] Pade approximant of a
/// power series, denominator normalized to Q(0) = 1.
struct PadeCoeffs {
    std::vector<Real> p;  // degree N
    std::vector<Real> q;  // degree M, q[0] = 1
};

/// Pade approximant whose Taylor expansion matches t through order N+M.
/// The result is re-expanded and checked against the input; a singular
/// Hankel system or a failed re-expansion throws DegeneratePade.
PadeCoeffs pade(const std::vector<Real>& t, int N, int M);

/// Evaluates p(u)/q(u) by Horner.
Real pade_eval(const PadeCoeffs& c, const Real& u);

struct PadeEntry {
    int n = 0;
    int m = 0;
    Real value;
    bool ok = false;  // false when the entry was degenerate and skipped
};

/// Near-diagonal Pade table of the series tail t_n = eps_(2(n+1))/q0^2
/// in the variable u = 1/ellbar, with the closed leading term c0 added
/// outside: value = c0 + P(u)/Q(u).
struct PadeStaircase {
    std::vector<Real> tail;
    std::vector<PadeEntry> entries;  // staircase order [1,1],[1,2],[2,2],...
    Real best;                       // last successfully computed entry
    std::optional<std::pair<int, int>> stab;  // first stable staircase label
    int stab_digits = 5;
};

PadeStaircase pade_staircase(const EnergySeries& series, int digits = 5);

/// Earliest index from which every later value of a sequence rounds to
/// the final value at `digits` significant digits.
struct StabilizationReport {
    enum class Kind { partial_sums, pade };
    Kind kind = Kind::partial_sums;
    std::optional<int> index;
    int digits = 5;
    std::optional<Real> converged_value;
};

StabilizationReport stabilization(const std::vector<Real>& seq, int digits);

/// Canonical decimal rendering at `digits` significant digits; two values
/// agree at that many digits iff their renderings are equal.
std::string round_sig(const Real& x, int digits);

}  // namespace pslet

#endif
