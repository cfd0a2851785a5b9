#include "pslet/run_record.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

namespace pslet {

namespace {

using nlohmann::json;

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

RunRecord build_run_record(const PotentialExpr& pot, const QuantumState& state, int M,
                           Precision prec, int digits, bool with_oracle) {
    RunRecord rec;
    rec.potential = pot.source();
    rec.ell = state.ell;
    rec.nr = state.nr;
    rec.order = M;
    rec.prec_bits = prec.mantissa_bits;
    rec.digits = digits;
    const int sig = std::max(digits + 2, 10);

    auto t0 = std::chrono::steady_clock::now();
    EnergySeries series = energy_series(pot, state, M, prec);
    rec.timings_ms["series"] = ms_since(t0);

    rec.q0 = series.leading.q0.str(sig);
    rec.w = series.leading.w.str(sig);
    rec.beta = series.leading.beta.str(sig);
    rec.ellbar = series.leading.ellbar.str(sig);
    rec.c0 = series.leading.c0.str(sig);
    for (const Real& p : series.partials) rec.partials.push_back(p.str(sig));

    t0 = std::chrono::steady_clock::now();
    PadeStaircase stair = pade_staircase(series, digits);
    rec.timings_ms["pade"] = ms_since(t0);
    for (const PadeEntry& e : stair.entries)
        if (e.ok) rec.pade_entries.push_back({e.n, e.m, e.value.str(sig)});
    rec.pade_best = stair.best.str(sig);
    rec.pade_stab = stair.stab;

    StabilizationReport srep = stabilization(series.partials, digits);
    rec.series_stab_index = srep.index;
    if (srep.converged_value) rec.series_stab_value = srep.converged_value->str(sig);

    TruncationInfo trunc = optimal_truncation(series);
    rec.diverging = trunc.diverging;
    rec.opt_trunc = trunc.index;

    if (with_oracle) {
        t0 = std::chrono::steady_clock::now();
        OracleResult orc = oracle_eigenvalue(pot, state, auto_grid(pot, state));
        rec.timings_ms["oracle"] = ms_since(t0);
        std::ostringstream en, er;
        en.precision(sig);
        en << orc.energy;
        er.precision(4);
        er << orc.richardson_error;
        rec.oracle = RunRecord::OracleRec{en.str(), orc.nodes, er.str()};
    }
    return rec;
}

std::string to_json(const RunRecord& rec) {
    json j;
    j["input"] = {{"potential", rec.potential},
                  {"ell", rec.ell},
                  {"nr", rec.nr},
                  {"order", rec.order},
                  {"prec_bits", rec.prec_bits}};
    j["leading"] = {{"q0", rec.q0},
                    {"w", rec.w},
                    {"beta", rec.beta},
                    {"ellbar", rec.ellbar},
                    {"c0", rec.c0}};
    j["partials"] = rec.partials;

    json entries = json::array();
    for (const auto& e : rec.pade_entries)
        entries.push_back({{"n", e.n}, {"m", e.m}, {"value", e.value}});
    json stab;
    if (rec.pade_stab)
        stab = {{"n", rec.pade_stab->first}, {"m", rec.pade_stab->second}};
    j["pade"] = {{"entries", entries}, {"best", rec.pade_best}, {"stab", stab}};

    j["series_stab"] = {{"index", rec.series_stab_index ? json(*rec.series_stab_index) : json()},
                        {"digits", rec.digits},
                        {"value", rec.series_stab_value ? json(*rec.series_stab_value) : json()}};
    j["diagnostics"] = {{"diverging", rec.diverging}, {"opt_trunc", rec.opt_trunc}};
    if (rec.oracle)
        j["oracle"] = {{"energy", rec.oracle->energy},
                       {"nodes", rec.oracle->nodes},
                       {"richardson_error", rec.oracle->richardson_error}};
    j["timings_ms"] = rec.timings_ms;
    return j.dump(2);
}

RunRecord from_json(const std::string& text) {
    json j = json::parse(text);
    RunRecord rec;
    rec.potential = j["input"]["potential"];
    rec.ell = j["input"]["ell"];
    rec.nr = j["input"]["nr"];
    rec.order = j["input"]["order"];
    rec.prec_bits = j["input"]["prec_bits"];
    rec.q0 = j["leading"]["q0"];
    rec.w = j["leading"]["w"];
    rec.beta = j["leading"]["beta"];
    rec.ellbar = j["leading"]["ellbar"];
    rec.c0 = j["leading"]["c0"];
    for (const auto& p : j["partials"]) rec.partials.push_back(p);
    for (const auto& e : j["pade"]["entries"])
        rec.pade_entries.push_back({e["n"], e["m"], e["value"]});
    rec.pade_best = j["pade"]["best"];
    if (!j["pade"]["stab"].is_null())
        rec.pade_stab = std::pair{int(j["pade"]["stab"]["n"]), int(j["pade"]["stab"]["m"])};
    if (!j["series_stab"]["index"].is_null()) rec.series_stab_index = j["series_stab"]["index"];
    rec.digits = j["series_stab"]["digits"];
    if (!j["series_stab"]["value"].is_null()) rec.series_stab_value = j["series_stab"]["value"];
    rec.diverging = j["diagnostics"]["diverging"];
    rec.opt_trunc = j["diagnostics"]["opt_trunc"];
    if (j.contains("oracle"))
        rec.oracle = RunRecord::OracleRec{j["oracle"]["energy"], j["oracle"]["nodes"],
                                          j["oracle"]["richardson_error"]};
    for (const auto& [k, v] : j["timings_ms"].items()) rec.timings_ms[k] = v;
    return rec;
}

std::string to_csv(const RunRecord& rec) {
    std::ostringstream out;
    out << "kind,index,n,m,value\n";
    for (std::size_t i = 0; i < rec.partials.size(); ++i)
        out << "partial," << i << ",,," << rec.partials[i] << "\n";
    for (const auto& e : rec.pade_entries)
        out << "pade,," << e.n << "," << e.m << "," << e.value << "\n";
    out << "leading,,,," << rec.c0 << "\n";
    out << "pade_best,,,," << rec.pade_best << "\n";
    if (rec.oracle) out << "oracle,,,," << rec.oracle->energy << "\n";
    return out.str();
}

std::string to_markdown(const RunRecord& rec) {
    std::ostringstream out;
    out << "## " << rec.potential << "  (ell=" << rec.ell << ", nr=" << rec.nr
        << ", M=" << rec.order << ", " << rec.prec_bits << " bits)\n\n";
    out << "leading order: q0=" << rec.q0 << ", w=" << rec.w << ", beta=" << rec.beta
        << ", lbar=" << rec.ellbar << "\n\n";
    out << "| M | E_M |\n|---|-----|\n";
    for (std::size_t i = 0; i < rec.partials.size(); ++i)
        out << "| " << i << " | " << rec.partials[i] << " |\n";
    out << "\n| [N,M] | Pade |\n|-------|------|\n";
    for (const auto& e : rec.pade_entries)
        out << "| [" << e.n << "," << e.m << "] | " << e.value << " |\n";
    out << "\nbest Pade: " << rec.pade_best;
    if (rec.pade_stab)
        out << "  (stable from [" << rec.pade_stab->first << "," << rec.pade_stab->second << "])";
    out << "\n";
    if (rec.series_stab_index)
        out << "series stable from E_" << *rec.series_stab_index << " at " << rec.digits
            << " digits\n";
    out << "diagnostics: " << (rec.diverging ? "diverging" : "convergent")
        << ", smallest term at k=" << rec.opt_trunc << "\n";
    if (rec.oracle)
        out << "oracle: " << rec.oracle->energy << " (" << rec.oracle->nodes
            << " nodes, richardson_error=" << rec.oracle->richardson_error << ")\n";
    return out.str();
}

bool operator==(const RunRecord& a, const RunRecord& b) {
    auto pe = [](const RunRecord::PadeEntryRec& x, const RunRecord::PadeEntryRec& y) {
        return x.n == y.n && x.m == y.m && x.value == y.value;
    };
    if (a.pade_entries.size() != b.pade_entries.size()) return false;
    for (std::size_t i = 0; i < a.pade_entries.size(); ++i)
        if (!pe(a.pade_entries[i], b.pade_entries[i])) return false;
    bool orc_eq = a.oracle.has_value() == b.oracle.has_value() &&
                  (!a.oracle || (a.oracle->energy == b.oracle->energy &&
                                 a.oracle->nodes == b.oracle->nodes &&
                                 a.oracle->richardson_error == b.oracle->richardson_error));
    return a.potential == b.potential && a.ell == b.ell && a.nr == b.nr && a.order == b.order &&
           a.prec_bits == b.prec_bits && a.q0 == b.q0 && a.w == b.w && a.beta == b.beta &&
           a.ellbar == b.ellbar && a.c0 == b.c0 && a.partials == b.partials &&
           a.pade_best == b.pade_best && a.pade_stab == b.pade_stab &&
           a.series_stab_index == b.series_stab_index && a.digits == b.digits &&
           a.series_stab_value == b.series_stab_value && a.diverging == b.diverging &&
           a.opt_trunc == b.opt_trunc && orc_eq && a.timings_ms == b.timings_ms;
}

}  // namespace pslet
