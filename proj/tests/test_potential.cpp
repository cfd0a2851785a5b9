#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pslet/errors.hpp"
#include "pslet/potential.hpp"

using namespace pslet;

namespace {
const Precision kP{192};
Real R(double x) { return Real(x, kP); }
Real R(const char* s) { return Real(std::string(s), kP); }
}  // namespace

TEST_CASE("parse: truncated Coulomb shape") {
    PotentialExpr e = parse_potential("-1/(r+10)");
    CHECK(e.pretty() == "((-1)/(r+10))");
    CHECK(abs(e.evaluate(R(1.0)) + R(1.0) / R(11.0)) < R("1e-50"));
}

TEST_CASE("parse: harmonic") {
    PotentialExpr e = parse_potential("r^2/2");
    CHECK(e.pretty() == "((r^2)/2)");
    CHECK(e.evaluate(R(3.0)) == R(4.5));
}

TEST_CASE("parse: unknown symbol with offset") {
    try {
        parse_potential("-1/(q+10)");
        FAIL("expected UnknownSymbol");
    } catch (const UnknownSymbol& e) {
        CHECK(e.offset == 4);
    }
}

TEST_CASE("parse: syntax errors carry offsets") {
    CHECK_THROWS_AS(parse_potential("1+"), SyntaxError);
    CHECK_THROWS_AS(parse_potential("(r"), SyntaxError);
    CHECK_THROWS_AS(parse_potential("r^x"), SyntaxError);
    CHECK_THROWS_AS(parse_potential("r 2"), SyntaxError);
}

TEST_CASE("jet: truncated Coulomb low orders") {
    PotentialExpr e = parse_potential("-1/(r+10)");
    Jet j = e.jet(R(1.0), 2, kP);
    CHECK(abs(j.derivs[0] + R(1.0) / R(11.0)) < R("1e-55"));
    CHECK(abs(j.derivs[1] - R(1.0) / R(121.0)) < R("1e-55"));
    CHECK(abs(j.derivs[2] + R(2.0) / R(1331.0)) < R("1e-55"));
}

TEST_CASE("jet: polynomial terminates") {
    PotentialExpr e = parse_potential("r^2/2");
    Jet j = e.jet(R(3.0), 3, kP);
    CHECK(j.derivs[0] == R(4.5));
    CHECK(j.derivs[1] == R(3.0));
    CHECK(j.derivs[2] == R(1.0));
    CHECK(j.derivs[3] == R(0.0));
}

TEST_CASE("jet matches closed form to 40th order") {
    PotentialExpr e = parse_potential("-1/(r+0.1)");
    Real r = R(0.5);
    Jet j = e.jet(r, 40, kP);
    Jet ref = truncated_coulomb_jet(R("0.1"), r, 40);
    for (int k = 0; k <= 40; ++k) {
        Real scale = abs(ref.derivs[k]);
        CHECK(abs(j.derivs[k] - ref.derivs[k]) <= scale * Real::pow2(-190, kP));
    }
}

TEST_CASE("truncated_coulomb_jet: reference values") {
    Jet a = truncated_coulomb_jet(R(10.0), R(0.0), 1);
    CHECK(abs(a.derivs[0] + R("0.1")) < R("1e-55"));
    CHECK(abs(a.derivs[1] - R("0.01")) < R("1e-55"));

    Jet b = truncated_coulomb_jet(R(0.0), R(2.0), 0);
    CHECK(b.derivs[0] == R(-0.5));

    Jet c = truncated_coulomb_jet(R(10.0), R(100.0), 3);
    Real d = R(110.0);
    CHECK(abs(c.derivs[2] + 2L / (d * d * d)) < R("1e-55"));
    CHECK(abs(c.derivs[3] - 6L / (d * d * d * d)) < R("1e-55"));
}

TEST_CASE("truncated_coulomb_jet: singular point") {
    CHECK_THROWS_AS(truncated_coulomb_jet(R(1.0), R(-1.0), 2), SingularPoint);
    CHECK_THROWS_AS(parse_potential("-1/(r+1)").jet(R(-1.0), 2, kP), SingularPoint);
}

// --- property tests --------------------------------------------------

namespace {

std::string random_expr(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
    switch (pick(rng)) {
        case 0:
            return std::to_string(std::uniform_int_distribution<int>(0, 99)(rng));
        case 1:
            return "r";
        case 2:
            return "(" + random_expr(rng, depth - 1) + "+" + random_expr(rng, depth - 1) + ")";
        case 3:
            return "(" + random_expr(rng, depth - 1) + "-" + random_expr(rng, depth - 1) + ")";
        case 4:
            return "(" + random_expr(rng, depth - 1) + "*" + random_expr(rng, depth - 1) + ")";
        case 5:
            return "(-" + random_expr(rng, depth - 1) + ")";
        default:
            return "(" + random_expr(rng, depth - 1) + ")^" +
                   std::to_string(std::uniform_int_distribution<int>(0, 4)(rng));
    }
}

}  // namespace

TEST_CASE("property: pretty-print round-trip is stable") {
    std::mt19937 rng(42);
    for (int i = 0; i < 200; ++i) {
        std::string s = random_expr(rng, 4);
        PotentialExpr e1 = parse_potential(s);
        PotentialExpr e2 = parse_potential(e1.pretty());
        CHECK(e1.pretty() == e2.pretty());
    }
}

TEST_CASE("property: Taylor polynomial of the jet tracks the function") {
    PotentialExpr e = parse_potential("-1/(r+10)");
    const int K = 12;
    Real r0 = R(2.0);
    Jet j = e.jet(r0, K, kP);
    for (double hv : {1e-2, 1e-3}) {
        Real h = R(hv);
        Real sum(kP), hp(1L, kP), fact(1L, kP);
        for (int k = 0; k <= K; ++k) {
            if (k > 0) {
                hp *= h;
                fact *= Real(static_cast<long>(k), kP);
            }
            sum += j.derivs[k] * hp / fact;
        }
        Real err = abs(sum - e.evaluate(r0 + h));
        // remainder is O(h^(K+1))
        CHECK(err < pow_int(h, K + 1));
    }
}
