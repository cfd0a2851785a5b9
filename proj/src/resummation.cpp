#include "pslet/resummation.hpp"

#include <cstddef>

#include "pslet/errors.hpp"
#include "pslet/linalg.hpp"

namespace pslet {

namespace {

const Real& tcoef(const std::vector<Real>& t, int i, const Real& zero) {
    return i < 0 ? zero : t[static_cast<std::size_t>(i)];
}

}  // namespace

PadeCoeffs pade(const std::vector<Real>& t, int N, int M) {
    if (N < 0 || M < 0 || static_cast<int>(t.size()) < N + M + 1)
        throw Error("pade: need N+M+1 coefficients");
    long bits = Real::kMinBits;
    for (const Real& x : t)
        if (x.prec() > bits) bits = x.prec();
    const Precision prec{bits};
    const Real zero(prec);

    PadeCoeffs out;
    out.q.assign(static_cast<std::size_t>(M) + 1, Real(prec));
    out.q[0] = Real(1L, prec);

    if (M > 0) {
        // Hankel system: sum_m q_m t_(N+i-m) = -t_(N+i), i = 1..M.
        Matrix A(static_cast<std::size_t>(M), Vector(static_cast<std::size_t>(M), Real(prec)));
        Vector b(static_cast<std::size_t>(M), Real(prec));
        for (int i = 1; i <= M; ++i) {
            for (int m = 1; m <= M; ++m)
                A[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(m - 1)] =
                    tcoef(t, N + i - m, zero);
            b[static_cast<std::size_t>(i - 1)] = -tcoef(t, N + i, zero);
        }
        Vector q;
        try {
            q = solve_linear(std::move(A), std::move(b));
        } catch (const SingularMatrix&) {
            throw DegeneratePade("pade: singular Hankel system for [" + std::to_string(N) + "," +
                                 std::to_string(M) + "]");
        }
        for (int m = 1; m <= M; ++m) out.q[static_cast<std::size_t>(m)] = q[static_cast<std::size_t>(m - 1)];
    }

    out.p.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        Real acc(prec);
        for (int m = 0; m <= M && m <= n; ++m)
            acc += out.q[static_cast<std::size_t>(m)] * t[static_cast<std::size_t>(n - m)];
        out.p.push_back(acc);
    }

    // Re-expansion check: the Taylor series of P/Q must reproduce t
    // through order N+M.
    Real scale(prec);
    for (int i = 0; i <= N + M; ++i)
        if (abs(t[static_cast<std::size_t>(i)]) > scale) scale = abs(t[static_cast<std::size_t>(i)]);
    if (scale.is_zero()) scale = Real(1L, prec);
    const Real tol = scale * Real::pow2(-bits / 3, prec);
    std::vector<Real> c(static_cast<std::size_t>(N + M) + 1, Real(prec));
    for (int k = 0; k <= N + M; ++k) {
        Real acc = k <= N ? out.p[static_cast<std::size_t>(k)] : Real(prec);
        for (int i = 1; i <= M && i <= k; ++i)
            acc -= out.q[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - i)];
        c[static_cast<std::size_t>(k)] = acc;
        if (abs(c[static_cast<std::size_t>(k)] - t[static_cast<std::size_t>(k)]) > tol)
            throw DegeneratePade("pade: re-expansion of [" + std::to_string(N) + "," +
                                 std::to_string(M) + "] fails at order " + std::to_string(k));
    }
    return out;
}

Real pade_eval(const PadeCoeffs& c, const Real& u) {
    auto horner = [&u](const std::vector<Real>& a) {
        Real acc = a.back();
        for (std::size_t i = a.size() - 1; i-- > 0;) acc = acc * u + a[i];
        return acc;
    };
    return horner(c.p) / horner(c.q);
}

std::string round_sig(const Real& x, int digits) {
    if (digits < 1) digits = 1;
    if (x.is_nan()) return "nan";
    if (x.is_zero()) return "0";
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), x.raw(), MPFR_RNDN);
    std::string s(raw);
    mpfr_free_str(raw);
    return s + "e" + std::to_string(e);
}

StabilizationReport stabilization(const std::vector<Real>& seq, int digits) {
    if (seq.empty()) throw Error("stabilization: empty sequence");
    if (digits < 1) throw Error("stabilization: digits must be >= 1");
    StabilizationReport rep;
    rep.digits = digits;

    const std::string final = round_sig(seq.back(), digits);
    int i = static_cast<int>(seq.size()) - 1;
    while (i > 0 && round_sig(seq[static_cast<std::size_t>(i - 1)], digits) == final) --i;
    if (seq.size() >= 2 && i == static_cast<int>(seq.size()) - 1) return rep;  // final two disagree
    rep.index = i;
    rep.converged_value = seq.back();
    return rep;
}

PadeStaircase pade_staircase(const EnergySeries& series, int digits) {
    if (series.order < 3) throw Error("pade_staircase: series order must be >= 3");
    const Precision prec{series.leading.q0.prec()};
    PadeStaircase out;
    out.stab_digits = digits;

    const Real q0sq = series.leading.q0 * series.leading.q0;
    const int budget = series.order - 1;  // tail coefficients t_0..t_(M-2)
    out.tail.reserve(static_cast<std::size_t>(budget));
    for (int n = 0; n < budget; ++n)
        out.tail.push_back(series.eps[static_cast<std::size_t>(2 * (n + 1))] / q0sq);

    const Real u = Real(1L, prec) / series.leading.ellbar;
    out.best = series.leading.c0;

    // Staircase [1,1],[1,2],[2,2],[2,3],...; a diagonal entry that would
    // consume the whole coefficient budget is left out.
    std::vector<std::pair<int, int>> labels;
    for (int n = 1;; ++n) {
        bool any = false;
        for (auto [N, M] : {std::pair{n, n}, std::pair{n, n + 1}}) {
            int need = N + M + 1;
            if (need > budget || (N == M && need == budget)) continue;
            labels.emplace_back(N, M);
            any = true;
        }
        if (!any) break;
    }

    std::vector<Real> ok_values;
    std::vector<std::size_t> ok_pos;
    for (auto [N, M] : labels) {
        PadeEntry e;
        e.n = N;
        e.m = M;
        try {
            PadeCoeffs c = pade(out.tail, N, M);
            e.value = series.leading.c0 + pade_eval(c, u);
            e.ok = true;
        } catch (const DegeneratePade&) {
            e.ok = false;
        }
        if (e.ok) {
            out.best = e.value;
            ok_values.push_back(e.value);
            ok_pos.push_back(out.entries.size());
        }
        out.entries.push_back(std::move(e));
    }

    if (!ok_values.empty()) {
        StabilizationReport rep = stabilization(ok_values, digits);
        if (rep.index) {
            const PadeEntry& first = out.entries[ok_pos[static_cast<std::size_t>(*rep.index)]];
            out.stab = std::pair{first.n, first.m};
        }
    }
    return out;
}

}  // namespace pslet
