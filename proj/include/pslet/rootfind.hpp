#ifndef PSLET_ROOTFIND_HPP
#define PSLET_ROOTFIND_HPP

#include <functional>

#include "pslet/real.hpp"

namespace pslet {

/// Finds a root of f on [lo, hi] by bisection with secant acceleration.
/// Requires a sign change on the bracket (throws NoBracket otherwise).
/// Stops when |f(x)| <= tol or the bracket width drops below
/// tol * max(1, |x|).
Real find_root(const std::function<Real(const Real&)>& f, Real lo, Real hi, const Real& tol);

}  // namespace pslet

#endif
