#include "pslet/rootfind.hpp"

#include "pslet/errors.hpp"

namespace pslet {

Real find_root(const std::function<Real(const Real&)>& f, Real lo, Real hi, const Real& tol) {
    Real flo = f(lo);
    Real fhi = f(hi);
    if (flo.is_zero()) return lo;
    if (fhi.is_zero()) return hi;
    if (flo.sign() * fhi.sign() > 0)
        throw NoBracket("find_root: f(lo) and f(hi) have the same sign");

    const Real one(1.0, Precision{lo.prec()});
    Real x = lo;
    // Alternate a secant step (when it lands inside the bracket) with a
    // plain bisection step so the bracket always halves at least every
    // other iteration.
    for (int it = 0; it < 4 * static_cast<int>(lo.prec()) + 64; ++it) {
        Real mid = (lo + hi) / 2;
        x = mid;
        if (it % 2 == 1 && flo != fhi) {
            Real sec = lo - flo * (hi - lo) / (fhi - flo);
            if (sec > lo && sec < hi) x = sec;
        }
        Real fx = f(x);
        Real scale = abs(x) > one ? abs(x) : one;
        if (abs(fx) <= tol || (hi - lo) <= tol * scale) return x;
        if (fx.sign() == flo.sign()) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
    }
    return x;
}

}  // namespace pslet
