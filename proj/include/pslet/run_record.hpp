#ifndef PSLET_RUN_RECORD_HPP
#define PSLET_RUN_RECORD_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pslet/oracle.hpp"
#include "pslet/resummation.hpp"
#include "pslet/series.hpp"

namespace pslet {

/// Machine-readable result of one solve. Numeric values are stored as
/// decimal strings (at least max(digits+2, 10) significant digits) so
/// the JSON form round-trips losslessly.
struct RunRecord {
    // input echo
    std::string potential;
    int ell = 0;
    int nr = 0;
    int order = 20;
    long prec_bits = 192;

    // leading-order geometry
    std::string q0, w, beta, ellbar, c0;

    std::vector<std::string> partials;

    struct PadeEntryRec {
        int n = 0;
        int m = 0;
        std::string value;
    };
    std::vector<PadeEntryRec> pade_entries;
    std::string pade_best;
    std::optional<std::pair<int, int>> pade_stab;

    std::optional<int> series_stab_index;
    int digits = 5;
    std::optional<std::string> series_stab_value;

    bool diverging = false;
    int opt_trunc = 0;

    struct OracleRec {
        std::string energy;
        int nodes = 0;
        std::string richardson_error;
    };
    std::optional<OracleRec> oracle;

    std::map<std::string, double> timings_ms;
};

/// Runs the full pipeline (energy_series + pade_staircase + stabilization,
/// optionally the direct eigensolver) and records timings.
RunRecord build_run_record(const PotentialExpr& pot, const QuantumState& state, int M,
                           Precision prec, int digits, bool with_oracle);

std::string to_json(const RunRecord& rec);
RunRecord from_json(const std::string& text);

std::string to_csv(const RunRecord& rec);
std::string to_markdown(const RunRecord& rec);

bool operator==(const RunRecord& a, const RunRecord& b);

}  // namespace pslet

#endif
