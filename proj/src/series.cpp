#include "pslet/series.hpp"

#include <cstddef>

#include "pslet/errors.hpp"

namespace pslet {

PerturbationTable assemble_perturbation(const Jet& jets, const LeadingOrder& lead, int j_max) {
    if (static_cast<int>(jets.derivs.size()) < j_max + 3)
        throw InsufficientJet("assemble_perturbation: need derivatives through order " +
                              std::to_string(j_max + 2) + ", jet has " +
                              std::to_string(jets.derivs.size() - 1));
    const Precision prec{lead.q0.prec()};
    const Real half(0.5, prec);
    const Real& q0 = lead.q0;
    const Real ell2 = lead.ellbar * lead.ellbar;

    // delta_k = q0^(k+2) V^(k)(q0) / (k! ellbar^2)
    std::vector<Real> delta;
    delta.reserve(static_cast<std::size_t>(j_max) + 3);
    Real q_pow = q0 * q0;  // q0^(k+2)
    Real fact(1L, prec);
    for (int k = 0; k <= j_max + 2; ++k) {
        if (k > 0) {
            q_pow *= q0;
            fact *= Real(static_cast<long>(k), prec);
        }
        delta.push_back(q_pow * jets.derivs[static_cast<std::size_t>(k)] / (fact * ell2));
    }

    // Consistency of the solved geometry with the expansion bookkeeping.
    const Real check_tol = Real::pow2(-prec.mantissa_bits / 4, prec);
    Real w2 = lead.w * lead.w;
    if (abs(delta[1] - Real(1L, prec)) > check_tol)
        throw Error("assemble_perturbation: delta_1 != 1; leading-order solve inconsistent");
    if (abs(delta[2] - (w2 - Real(3L, prec)) * half) > check_tol)
        throw Error("assemble_perturbation: delta_2 != (w^2-3)/2");

    PerturbationTable tab;
    tab.w2_half = w2 * half;
    tab.j_max = j_max;
    tab.coeffs.resize(static_cast<std::size_t>(j_max));
    const Real two_beta_1 = Real(2L, prec) * lead.beta + Real(1L, prec);
    const Real beta_beta1 = lead.beta * (lead.beta + Real(1L, prec));
    for (int j = 1; j <= j_max; ++j) {
        auto& row = tab.coeffs[static_cast<std::size_t>(j - 1)];
        const long sgn = (j % 2 == 0) ? 1 : -1;
        row[j + 2] = half * Real(sgn * (j + 3), prec) + delta[static_cast<std::size_t>(j + 2)];
        row[j] = half * two_beta_1 * Real(sgn * (j + 1), prec);
        if (j >= 2) row[j - 2] = half * beta_beta1 * Real(sgn * (j - 1), prec);
    }
    return tab;
}

namespace {

// Moment table X_N^(m) with the dependency envelope
// N <= N_lim(m) = (m_top - m) + 4; entries carry a computed flag so a
// use outside the envelope (or ahead of its definition) is caught.
class MomentTable {
  public:
    MomentTable(int m_top, Precision prec) : m_top_(m_top) {
        rows_.resize(static_cast<std::size_t>(m_top) + 1);
        done_.resize(static_cast<std::size_t>(m_top) + 1);
        for (int m = 0; m <= m_top; ++m) {
            rows_[static_cast<std::size_t>(m)].assign(static_cast<std::size_t>(limit(m)) + 1,
                                                      Real(prec));
            done_[static_cast<std::size_t>(m)].assign(static_cast<std::size_t>(limit(m)) + 1,
                                                      false);
        }
    }

    int limit(int m) const { return (m_top_ - m) + 4; }

    const Real& get(int m, int n) const {
        if (n < 0) return zero_;
        if (m < 0 || m > m_top_ || n > limit(m))
            throw OrderOverflow("moment X_" + std::to_string(n) + "^(" + std::to_string(m) +
                                ") outside the dependency envelope");
        if (!done_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)])
            throw OrderOverflow("moment X_" + std::to_string(n) + "^(" + std::to_string(m) +
                                ") used before it was computed");
        return rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
    }

    void set(int m, int n, Real v) {
        rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] = std::move(v);
        done_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] = true;
    }

  private:
    int m_top_;
    Real zero_;
    std::vector<std::vector<Real>> rows_;
    std::vector<std::vector<bool>> done_;
};

}  // namespace

std::vector<Real> hvhf_expand(const PerturbationTable& tab, const Real& w, int nr, int m_max) {
    if (m_max < 0 || m_max % 2 != 0) throw Error("hvhf_expand: m_max must be even and >= 0");
    if (w.sign() <= 0) throw Error("hvhf_expand: w must be positive");
    const Precision prec{w.prec()};
    const Real w2 = w * w;
    const Real half(0.5, prec);

    std::vector<Real> eps(static_cast<std::size_t>(m_max) + 1, Real(prec));
    eps[0] = (Real(nr, prec) + half) * w;

    const int m_top = m_max > 0 ? m_max - 1 : 0;
    MomentTable X(m_top, prec);
    X.set(0, 0, Real(1L, prec));

    auto coeff_rows = [&](int j) -> const std::map<int, Real>* {
        if (j < 1 || j > tab.j_max) return nullptr;
        return &tab.coeffs[static_cast<std::size_t>(j - 1)];
    };

    for (int m = 0; m <= m_max; ++m) {
        if (m >= 1) {
            // Hellmann-Feynman: m eps_m = sum_j j sum_k c[k,j] X_k^(m-j)
            Real acc(prec);
            for (int j = 1; j <= m; ++j) {
                const auto* row = coeff_rows(j);
                if (!row) continue;
                for (const auto& [k, c] : *row) acc += Real(static_cast<long>(j), prec) * c * X.get(m - j, k);
            }
            eps[static_cast<std::size_t>(m)] = acc / Real(static_cast<long>(m), prec);
        }

        if (m > m_top) break;
        if (m > 0) X.set(m, 0, Real(prec));  // X_0 = 1 is lambda-independent

        // N = 0 identity: w^2 X_1^(m) = -sum_(j>=1) sum_k k c[k,j] X_(k-1)^(m-j)
        {
            Real acc(prec);
            for (int j = 1; j <= m && j <= tab.j_max; ++j)
                for (const auto& [k, c] : tab.coeffs[static_cast<std::size_t>(j - 1)])
                    if (k > 0) acc += Real(static_cast<long>(k), prec) * c * X.get(m - j, k - 1);
            X.set(m, 1, -acc / w2);
        }

        // Hypervirial identity at N, solved for X_(N+1)^(m).
        for (int N = 1; N + 1 <= X.limit(m); ++N) {
            Real lhs(prec);
            for (int a = 0; a <= m; ++a)
                lhs += Real(2L * N, prec) * eps[static_cast<std::size_t>(a)] * X.get(m - a, N - 1);
            lhs += Real(static_cast<long>(N) * (N - 1) * (N - 2), prec) / Real(4L, prec) *
                   X.get(m, N - 3);

            Real rhs(prec);  // perturbative part, j >= 1
            for (int j = 1; j <= m && j <= tab.j_max; ++j)
                for (const auto& [k, c] : tab.coeffs[static_cast<std::size_t>(j - 1)])
                    rhs += Real(2L * N + k, prec) * c * X.get(m - j, N + k - 1);

            Real denom = Real(static_cast<long>(N) + 1, prec) * w2;
            X.set(m, N + 1, (lhs - rhs) / denom);
        }
    }
    return eps;
}

EnergySeries energy_series(const PotentialExpr& pot, const QuantumState& state, int M,
                           Precision prec) {
    if (M < 2) throw Error("energy_series: M must be >= 2");
    EnergySeries out;
    out.state = state;
    out.order = M;
    out.leading = solve_leading(pot, state, prec);

    const int j_max = 2 * (M - 1);
    Jet j = pot.jet(out.leading.q0, 2 * M + 2, prec);
    PerturbationTable tab = assemble_perturbation(j, out.leading, j_max);
    out.eps = hvhf_expand(tab, out.leading.w, state.nr, j_max);

    const Real q0sq = out.leading.q0 * out.leading.q0;
    out.terms.reserve(static_cast<std::size_t>(M) + 1);
    out.terms.push_back(out.leading.c0);
    out.terms.push_back(out.leading.c1);
    for (int k = 2; k <= M; ++k)
        out.terms.push_back(out.eps[static_cast<std::size_t>(2 * (k - 1))] *
                            pow_int(out.leading.ellbar, 2 - k) / q0sq);

    Real sum(prec);
    out.partials.reserve(out.terms.size());
    for (const Real& t : out.terms) {
        sum += t;
        out.partials.push_back(sum);
    }
    return out;
}

TruncationInfo optimal_truncation(const EnergySeries& series) {
    if (series.partials.size() < 3) throw Error("optimal_truncation: need at least 3 partials");
    const int M = series.order;
    TruncationInfo info;
    info.index = 2;
    info.min_step = abs(series.terms[2]);
    for (int k = 3; k <= M; ++k) {
        Real a = abs(series.terms[static_cast<std::size_t>(k)]);
        if (a < info.min_step) {
            info.min_step = a;
            info.index = k;
        }
    }
    // Growth past the minimum. Divergent tails here carry a periodic
    // sign pattern (complex singularity pair), so |c_k| is not monotone;
    // "grows" means no later term dips back below the minimum and the
    // last term has pulled strictly away from it.
    info.diverging = info.index < M &&
                     abs(series.terms[static_cast<std::size_t>(M)]) > info.min_step;
    for (int k = info.index + 1; k <= M && info.diverging; ++k) {
        if (abs(series.terms[static_cast<std::size_t>(k)]) < info.min_step)
            info.diverging = false;
    }
    return info;
}

}  // namespace pslet
