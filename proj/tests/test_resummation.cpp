#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "pslet/errors.hpp"
#include "pslet/resummation.hpp"

using namespace pslet;

namespace {
const Precision kP{192};
Real R(double x) { return Real(x, kP); }
Real R(const char* s) { return Real(std::string(s), kP); }

// Taylor coefficients of p(u)/q(u), q[0] = 1.
std::vector<Real> rational_taylor(const std::vector<Real>& p, const std::vector<Real>& q,
                                  int order) {
    std::vector<Real> t(static_cast<std::size_t>(order) + 1, Real(kP));
    for (int k = 0; k <= order; ++k) {
        Real acc = k < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(k)] : Real(kP);
        for (int i = 1; i < static_cast<int>(q.size()) && i <= k; ++i)
            acc -= q[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(k - i)];
        t[static_cast<std::size_t>(k)] = acc;
    }
    return t;
}
}  // namespace

TEST_CASE("pade: geometric series, [0,1]") {
    std::vector<Real> t = {R(1.0), R(1.0), R(1.0), R(1.0)};
    PadeCoeffs c = pade(t, 0, 1);
    CHECK(abs(c.p[0] - R(1.0)) < R("1e-50"));
    CHECK(abs(c.q[1] + R(1.0)) < R("1e-50"));
    CHECK(abs(pade_eval(c, R(0.3)) - R(1.0) / (R(1.0) - R(0.3))) < R("1e-50"));
}

TEST_CASE("pade: recovers (1+u)/(1+2u+3u^2) at [1,2]") {
    std::vector<Real> p = {R(1.0), R(1.0)};
    std::vector<Real> q = {R(1.0), R(2.0), R(3.0)};
    PadeCoeffs c = pade(rational_taylor(p, q, 4), 1, 2);
    for (int i = 0; i < 2; ++i) CHECK(abs(c.p[i] - p[i]) < R("1e-50"));
    for (int i = 0; i < 3; ++i) CHECK(abs(c.q[i] - q[i]) < R("1e-50"));
}

TEST_CASE("pade: leading zeros, [2,0] -> u^2") {
    std::vector<Real> t = {R(0.0), R(0.0), R(1.0)};
    PadeCoeffs c = pade(t, 2, 0);
    CHECK(abs(c.p[0]) < R("1e-50"));
    CHECK(abs(c.p[1]) < R("1e-50"));
    CHECK(abs(c.p[2] - R(1.0)) < R("1e-50"));
    CHECK(c.q.size() == 1);
}

TEST_CASE("pade: too few coefficients rejected") {
    std::vector<Real> t = {R(1.0), R(1.0)};
    CHECK_THROWS_AS(pade(t, 1, 1), Error);
}

TEST_CASE("pade: degenerate Hankel system is reported") {
    // constant series: the [0,1] system has t_1 = 0 row scale, the
    // [1,1] Hankel matrix is singular
    std::vector<Real> t = {R(1.0), R(0.0), R(0.0)};
    CHECK_THROWS_AS(pade(t, 1, 1), DegeneratePade);
}

TEST_CASE("property: random rational closure") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        int N = 1 + trial % 3, M = 1 + (trial / 3) % 3;
        std::vector<Real> p, q = {R(1.0)};
        for (int i = 0; i <= N; ++i) p.push_back(Real(static_cast<long>(coef(rng)), kP));
        for (int i = 0; i < M; ++i)
            q.push_back(Real(static_cast<long>(coef(rng)), kP) / R(8.0));
        std::vector<Real> t = rational_taylor(p, q, N + M + 2);
        PadeCoeffs c;
        try {
            c = pade(t, N, M);
        } catch (const DegeneratePade&) {
            continue;  // lower-degree representation; skipped by contract
        }
        // approximant agrees with the generating rational well inside
        // the denominator's region of analyticity
        for (double uv : {0.05, 0.1}) {
            Real u = R(uv);
            Real qv(kP);
            Real up(1L, kP);
            for (const Real& x : q) {
                qv += x * up;
                up = up * u;
            }
            if (abs(qv) < R(0.5)) continue;
            Real pv(kP);
            up = Real(1L, kP);
            for (const Real& x : p) {
                pv += x * up;
                up = up * u;
            }
            CHECK(abs(pade_eval(c, u) - pv / qv) < R("1e-45"));
        }
    }
}

TEST_CASE("round_sig: canonical renderings") {
    CHECK(round_sig(R("-0.011638"), 5) == round_sig(R("-0.0116381"), 5));
    CHECK(round_sig(R("-0.011638"), 5) != round_sig(R("-0.011639"), 5));
    CHECK(round_sig(R(0.0), 3) == "0");
}

TEST_CASE("stabilization: constant sequence stabilizes at 0") {
    std::vector<Real> seq(6, R(3.25));
    StabilizationReport rep = stabilization(seq, 5);
    REQUIRE(rep.index.has_value());
    CHECK(*rep.index == 0);
}

TEST_CASE("stabilization: alternating sequence never stabilizes") {
    std::vector<Real> seq;
    for (int i = 0; i < 8; ++i) seq.push_back(R(i % 2 == 0 ? 1.0 : -1.0));
    StabilizationReport rep = stabilization(seq, 3);
    CHECK_FALSE(rep.index.has_value());
}

TEST_CASE("stabilization: settles where the rounded digits settle") {
    std::vector<Real> seq = {R(1.0), R(1.3), R(1.24), R(1.2401), R(1.2399), R(1.24)};
    StabilizationReport rep = stabilization(stabilization(seq, 3).index ? seq : seq, 3);
    REQUIRE(rep.index.has_value());
    CHECK(*rep.index == 2);
}

// --- staircase on real series -----------------------------------------

namespace {
EnergySeries series_for(const std::string& pot, int ell, int nr, int M = 20) {
    return energy_series(parse_potential(pot), QuantumState{ell, nr, {}}, M, kP);
}
}  // namespace

TEST_CASE("staircase: label budget for a 20-term series") {
    EnergySeries s = series_for("-1/(r+10)", 0, 3);
    PadeStaircase st = pade_staircase(s);
    CHECK(st.tail.size() == 19);
    // last feasible labels: [8,8] (17 coefficients) and [8,9] (18);
    // [9,9] would need 19 = the whole budget and is excluded
    REQUIRE(st.entries.size() >= 2);
    const PadeEntry& last = st.entries.back();
    CHECK(last.n == 8);
    CHECK(last.m == 9);
    for (const PadeEntry& e : st.entries) CHECK(e.n + e.m + 1 <= 18);
}

TEST_CASE("staircase: 4s value and stabilization label") {
    EnergySeries s = series_for("-1/(r+10)", 0, 3);
    PadeStaircase st = pade_staircase(s, 5);
    CHECK(round_sig(st.best, 5) == round_sig(R("-0.011638"), 5));
    REQUIRE(st.stab.has_value());
    CHECK(st.stab->first == 3);
    CHECK(st.stab->second == 3);
}

TEST_CASE("staircase: Coulomb tail is identically zero") {
    EnergySeries s = series_for("-1/r", 0, 5);  // 6s
    PadeStaircase st = pade_staircase(s);
    for (const Real& t : st.tail) CHECK(abs(t) < R("1e-40"));
    // all Hankel systems are singular; entries are skipped, best falls
    // back to the closed leading term c0 = -1/72
    for (const PadeEntry& e : st.entries) CHECK_FALSE(e.ok);
    CHECK(abs(st.best + R(1.0) / R(72.0)) < R("1e-30"));
}

TEST_CASE("staircase: resummation does not degrade a converged sum") {
    EnergySeries s = series_for("-1/(r+10)", 15, 10);
    PadeStaircase st = pade_staircase(s);
    Real e_m = s.partials[20], e_m1 = s.partials[19];
    CHECK(abs(st.best - e_m) <= abs(e_m - e_m1));
}

TEST_CASE("staircase: cross-check against partial sums (4s)") {
    EnergySeries s = series_for("-1/(r+10)", 0, 3);
    PadeStaircase st = pade_staircase(s);
    // converged series: the staircase limit agrees with E_20 well below
    // the last partial-sum step
    CHECK(abs(st.best - s.partials[20]) < R("1e-8"));
}
