#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pslet/errors.hpp"
#include "pslet/leading_order.hpp"

using namespace pslet;

namespace {
const Precision kP{192};
Real R(double x) { return Real(x, kP); }
Real R(const char* s) { return Real(std::string(s), kP); }

// Independent bisection on q^3 V'(q) = (ell + 1/2 + (nr + 1/2) w(q))^2,
// written from scratch so it shares nothing with solve_leading.
Real golden_q0(const PotentialExpr& pot, int ell, int nr) {
    auto g = [&](const Real& q) {
        Jet j = pot.jet(q, 2, kP);
        Real w = sqrt(R(3.0) + q * j.derivs[2] / j.derivs[1]);
        Real rhs = Real(static_cast<long>(ell), kP) + R(0.5) +
                   (Real(static_cast<long>(nr), kP) + R(0.5)) * w;
        return q * q * q * j.derivs[1] - rhs * rhs;
    };
    Real lo = R(1e-3), hi = R(1e8);
    REQUIRE(g(lo).sign() < 0);
    REQUIRE(g(hi).sign() > 0);
    for (int it = 0; it < 400; ++it) {
        Real mid = (lo + hi) / 2L;
        (g(mid).sign() > 0 ? hi : lo) = mid;
    }
    return (lo + hi) / 2L;
}
}  // namespace

TEST_CASE("labels: spectroscopic parsing") {
    QuantumState s = state_from_label("4s");
    CHECK(s.ell == 0);
    CHECK(s.nr == 3);
    CHECK(s.principal() == 4);

    QuantumState p = state_from_label("11s");
    CHECK(p.ell == 0);
    CHECK(p.nr == 10);

    QuantumState d = state_from_label("3d");
    CHECK(d.ell == 2);
    CHECK(d.nr == 0);

    CHECK_THROWS_AS(state_from_label("4z"), Error);
    CHECK_THROWS_AS(state_from_label("s"), Error);
    CHECK_THROWS_AS(state_from_label("1p"), Error);  // nr would be negative
}

TEST_CASE("Coulomb example: ell=0, nr=3") {
    PotentialExpr pot = parse_potential("-1/r");
    LeadingOrder lo = solve_leading(pot, QuantumState{0, 3, {}}, kP);
    CHECK(abs(lo.w - R(1.0)) < R("1e-40"));
    CHECK(abs(lo.beta + R(4.0)) < R("1e-40"));
    CHECK(abs(lo.ellbar - R(4.0)) < R("1e-40"));
    CHECK(abs(lo.q0 - R(16.0)) < R("1e-38"));
    CHECK(abs(lo.c0 + R(1.0) / R(32.0)) < R("1e-40"));
}

TEST_CASE("harmonic example: ell=2, nr=1") {
    PotentialExpr pot = parse_potential("r^2/2");
    LeadingOrder lo = solve_leading(pot, QuantumState{2, 1, {}}, kP);
    CHECK(abs(lo.w - R(2.0)) < R("1e-40"));
    CHECK(abs(lo.beta + R(3.5)) < R("1e-40"));
    CHECK(abs(lo.ellbar - R(5.5)) < R("1e-40"));
    CHECK(abs(lo.q0 - sqrt(R(5.5))) < R("1e-40"));
    // exact oscillator energy 2 nr + ell + 3/2
    CHECK(abs(lo.c0 - R(5.5)) < R("1e-40"));
}

TEST_CASE("Coulomb closure over the (ell, nr) grid") {
    PotentialExpr pot = parse_potential("-1/r");
    for (int ell = 0; ell <= 10; ++ell) {
        for (int nr = 0; nr <= 10; ++nr) {
            LeadingOrder lo = solve_leading(pot, QuantumState{ell, nr, {}}, kP);
            long n = ell + nr + 1;
            CHECK(abs(lo.w - R(1.0)) < R("1e-30"));
            CHECK(abs(lo.c0 + Real(1L, kP) / Real(2 * n * n, kP)) < R("1e-30"));
            CHECK(abs(lo.ellbar - Real(n, kP)) < R("1e-30"));
        }
    }
}

TEST_CASE("harmonic closure over a small grid") {
    PotentialExpr pot = parse_potential("r^2/2");
    for (int ell = 0; ell <= 4; ++ell)
        for (int nr = 0; nr <= 4; ++nr) {
            LeadingOrder lo = solve_leading(pot, QuantumState{ell, nr, {}}, kP);
            CHECK(abs(lo.c0 - Real(static_cast<long>(2 * nr + ell), kP) - R(1.5)) < R("1e-30"));
        }
}

TEST_CASE("type invariants on the truncated Coulomb") {
    PotentialExpr pot = parse_potential("-1/(r+10)");
    for (auto [ell, nr] : {std::pair{0, 3}, {0, 10}, {1, 10}, {15, 10}}) {
        LeadingOrder lo = solve_leading(pot, QuantumState{ell, nr, {}}, kP);
        CHECK(lo.q0.sign() > 0);
        CHECK(lo.w.sign() > 0);
        CHECK(lo.ellbar.sign() > 0);

        Jet j = pot.jet(lo.q0, 2, kP);
        Real resid = abs(lo.q0 * lo.q0 * lo.q0 * j.derivs[1] - lo.ellbar * lo.ellbar);
        CHECK(resid <= R("1e-48") * lo.ellbar * lo.ellbar);  // 10^-(bits/4)

        Real w2 = R(3.0) + lo.q0 * j.derivs[2] / j.derivs[1];
        CHECK(abs(lo.w * lo.w - w2) < R("1e-40"));

        // beta identity and the c1 = 0 consequence
        Real lhs = (R(2.0) * lo.beta + R(1.0)) / R(2.0) +
                   (Real(static_cast<long>(nr), kP) + R(0.5)) * lo.w;
        CHECK(abs(lhs) < R("1e-45"));
        CHECK(abs(lo.c1) < R("1e-45"));

        Real c0 = lo.ellbar * lo.ellbar / (R(2.0) * lo.q0 * lo.q0) + j.derivs[0];
        CHECK(abs(lo.c0 - c0) < R("1e-45"));
    }
}

TEST_CASE("reference state (ell=1, nr=10, alpha=10): c0 and golden q0") {
    PotentialExpr pot = parse_potential("-1/(r+10)");
    LeadingOrder lo = solve_leading(pot, QuantumState{1, 10, {}}, kP);
    // -E_0 = 0.00283 at 3 significant figures
    CHECK(abs(lo.c0 + R("0.00283")) < R("5e-6"));
    Real gold = golden_q0(pot, 1, 10);
    CHECK(abs(lo.q0 - gold) < R("1e-40") * gold);
}

TEST_CASE("q0 grows with the truncation radius alpha") {
    Real prev(kP);
    bool have_prev = false;
    for (const char* a : {"0", "0.1", "1", "10"}) {
        std::string v = std::string("-1/(r+") + a + ")";
        if (std::string(a) == "0") v = "-1/r";
        LeadingOrder lo = solve_leading(parse_potential(v), QuantumState{0, 3, {}}, kP);
        if (have_prev) CHECK(lo.q0 > prev);
        prev = lo.q0;
        have_prev = true;
    }
}

TEST_CASE("errors: repulsive potential does not bind") {
    CHECK_THROWS_AS(solve_leading(parse_potential("1/(r+1)"), QuantumState{0, 0, {}}, kP),
                    NoBinding);
}
