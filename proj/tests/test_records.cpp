#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "pslet/run_record.hpp"

using namespace pslet;

namespace {
RunRecord sample(bool with_oracle) {
    PotentialExpr pot = parse_potential("-1/(r+10)");
    return build_run_record(pot, QuantumState{0, 3, {}}, 20, Precision{192}, 5, with_oracle);
}
}  // namespace

TEST_CASE("JSON round-trip is lossless") {
    RunRecord rec = sample(false);
    RunRecord back = from_json(to_json(rec));
    CHECK(rec == back);
}

TEST_CASE("JSON round-trip with the oracle block") {
    RunRecord rec = sample(false);
    // attach a synthetic oracle block; the real one is exercised in the
    // oracle suite and in acceptance
    RunRecord::OracleRec orc;
    orc.energy = "-0.0116383071";
    orc.nodes = 3;
    orc.richardson_error = "3.0e-9";
    rec.oracle = orc;
    RunRecord back = from_json(to_json(rec));
    CHECK(rec == back);
}

TEST_CASE("record carries the pipeline outputs") {
    RunRecord rec = sample(false);
    CHECK(rec.potential == "-1/(r+10)");
    CHECK(rec.order == 20);
    CHECK(rec.partials.size() == 21);
    CHECK(!rec.pade_best.empty());
    REQUIRE(rec.series_stab_index.has_value());
    CHECK(*rec.series_stab_index == 12);
    REQUIRE(rec.pade_stab.has_value());
    CHECK(rec.pade_stab->first == 3);
    CHECK(rec.pade_stab->second == 3);
    CHECK_FALSE(rec.diverging);
    // decimal strings carry at least max(digits+2, 10) significant digits
    CHECK(rec.pade_best.size() >= 10);
    CHECK(rec.timings_ms.count("series") == 1);
}

TEST_CASE("CSV has a kind column and one row per value") {
    RunRecord rec = sample(false);
    std::string csv = to_csv(rec);
    CHECK(csv.find("kind") != std::string::npos);
    CHECK(csv.find("partial") != std::string::npos);
    CHECK(csv.find("pade") != std::string::npos);
}

TEST_CASE("markdown renders the headline values") {
    RunRecord rec = sample(false);
    std::string md = to_markdown(rec);
    CHECK(md.find("E_M") != std::string::npos);
    CHECK(md.find("-0.011638") != std::string::npos);
}
