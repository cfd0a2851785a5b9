#include "pslet/leading_order.hpp"

#include <cctype>
#include <cstddef>

#include "pslet/errors.hpp"
#include "pslet/rootfind.hpp"

namespace pslet {

QuantumState state_from_label(const std::string& label) {
    static const std::string letters = "spdfghik";
    std::size_t i = 0;
    while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
    if (i == 0 || i + 1 != label.size())
        throw Error("bad state label '" + label + "': expected e.g. \"4s\"");
    int n = std::stoi(label.substr(0, i));
    std::size_t pos = letters.find(std::tolower(static_cast<unsigned char>(label[i])));
    if (pos == std::string::npos)
        throw Error("state letter '" + std::string(1, label[i]) +
                    "' not in s..k; use --ell/--nr instead");
    QuantumState st;
    st.ell = static_cast<int>(pos);
    st.nr = n - st.ell - 1;
    st.label = label;
    if (st.nr < 0) throw Error("bad state label '" + label + "': n < ell + 1");
    return st;
}

namespace {

// g(q) = q^3 V'(q) - (ell + 1/2 + (nr + 1/2) w(q))^2, defined where
// V' > 0 and the frequency is real.
struct GeometryEq {
    const PotentialExpr& pot;
    int ell, nr;
    Precision prec;

    // Returns false when the equation is undefined at q.
    bool eval(const Real& q, Real& out) const {
        Jet j = pot.jet(q, 2, prec);
        const Real& v1 = j.derivs[1];
        if (v1.sign() <= 0) return false;
        Real w2 = Real(3L, prec) + q * j.derivs[2] / v1;
        if (w2.sign() <= 0) return false;
        Real w = sqrt(w2);
        Real target = Real(ell, prec) + Real(0.5, prec) + (Real(nr, prec) + Real(0.5, prec)) * w;
        out = q * q * q * v1 - target * target;
        return true;
    }
};

}  // namespace

LeadingOrder solve_leading(const PotentialExpr& pot, const QuantumState& state, Precision prec) {
    GeometryEq g{pot, state.ell, state.nr, prec};

    // Geometric scan for a sign change of g on (0, 1e9).
    Real lo(prec), hi(prec);
    bool have_prev = false;
    Real prev_q(prec), prev_g(prec);
    bool found = false;
    for (double q = 1e-6; q <= 1e9; q *= 1.5) {
        Real qq(q, prec), gq(prec);
        if (!g.eval(qq, gq)) {
            have_prev = false;
            continue;
        }
        if (have_prev && prev_g.sign() * gq.sign() < 0) {
            lo = prev_q;
            hi = qq;
            found = true;
            break;
        }
        if (gq.is_zero()) {
            lo = hi = qq;
            found = true;
            break;
        }
        prev_q = qq;
        prev_g = gq;
        have_prev = true;
    }
    if (!found)
        throw NoBinding("no root of the leading-order equation in (0, 1e9) for ell=" +
                        std::to_string(state.ell) + " nr=" + std::to_string(state.nr));

    Real tol = Real::pow2(-(prec.mantissa_bits - 8), prec);
    Real q0 = lo == hi ? lo
                       : find_root(
                             [&](const Real& q) {
                                 Real out(prec);
                                 if (!g.eval(q, out))
                                     throw ComplexFrequency(
                                         "frequency became complex inside the bracket");
                                 return out;
                             },
                             lo, hi, tol);

    Jet j = pot.jet(q0, 2, prec);
    const Real& v1 = j.derivs[1];
    if (v1.sign() <= 0) throw NoBinding("V'(q0) <= 0 at the solved radius");
    Real w2 = Real(3L, prec) + q0 * j.derivs[2] / v1;
    if (w2.sign() <= 0) throw ComplexFrequency("3 + q0 V''/V' <= 0 at the solved radius");

    LeadingOrder out;
    out.q0 = q0;
    out.w = sqrt(w2);
    Real half(0.5, prec);
    out.beta = -(Real(1L, prec) + Real(2 * state.nr + 1, prec) * out.w) * half;
    out.ellbar = Real(state.ell, prec) - out.beta;
    out.c0 = out.ellbar * out.ellbar / (Real(2L, prec) * q0 * q0) + j.derivs[0];
    out.c1 = (out.ellbar / (q0 * q0)) *
             ((Real(2L, prec) * out.beta + Real(1L, prec)) * half +
              (Real(state.nr, prec) + half) * out.w);
    return out;
}

}  // namespace pslet
