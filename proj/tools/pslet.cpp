#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "pslet/errors.hpp"
#include "pslet/run_record.hpp"

namespace {

using namespace pslet;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonFlags {
    std::string potential;
    std::optional<double> alpha;
    std::string state_label;
    std::optional<int> ell, nr;
    int order = 20;
    long prec_bits = 192;
    int digits = 5;
    std::string format = "md";
    bool with_oracle = false;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool state_required) {
    cmd->add_option("--potential", f.potential, "radial potential V(r), e.g. \"-1/(r+10)\"");
    cmd->add_option("--alpha", f.alpha, "shorthand for the truncated Coulomb -1/(r+alpha)");
    cmd->add_option("--state", f.state_label, "spectroscopic label, e.g. 4s");
    cmd->add_option("--ell", f.ell, "orbital angular momentum");
    cmd->add_option("--nr", f.nr, "radial quantum number (node count)");
    cmd->add_option("--order", f.order, "number of series terms M")->capture_default_str();
    cmd->add_option("--prec-bits", f.prec_bits, "mantissa bits of the working precision")
        ->capture_default_str();
    cmd->add_option("--digits", f.digits, "significant digits for stabilization")
        ->capture_default_str();
    cmd->add_option("--format", f.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "md"}))
        ->capture_default_str();
    if (state_required) cmd->add_flag("--oracle", f.with_oracle, "attach the direct-eigensolver cross-check");
}

PotentialExpr flags_potential(const CommonFlags& f) {
    if (f.alpha) {
        std::ostringstream s;
        s.precision(17);
        s << "-1/(r+" << *f.alpha << ")";
        return parse_potential(s.str());
    }
    if (f.potential.empty()) throw UsageError("missing --potential or --alpha");
    return parse_potential(f.potential);
}

QuantumState flags_state(const CommonFlags& f) {
    if (!f.state_label.empty()) {
        try {
            return state_from_label(f.state_label);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }
    if (f.ell && f.nr) {
        QuantumState st;
        st.ell = *f.ell;
        st.nr = *f.nr;
        return st;
    }
    throw UsageError("missing --state or --ell/--nr");
}

void emit(const RunRecord& rec, const std::string& format) {
    if (format == "json")
        std::cout << to_json(rec) << "\n";
    else if (format == "csv")
        std::cout << to_csv(rec);
    else
        std::cout << to_markdown(rec);
}

int run_solve(const CommonFlags& f) {
    RunRecord rec = build_run_record(flags_potential(f), flags_state(f), f.order,
                                     Precision{f.prec_bits}, f.digits, f.with_oracle);
    emit(rec, f.format);
    return 0;
}

int run_diverge_demo(const CommonFlags& f) {
    PotentialExpr pot = parse_potential("-1/(r+0.1)");
    QuantumState st;  // ell = nr = 0
    RunRecord rec =
        build_run_record(pot, st, f.order, Precision{f.prec_bits}, f.digits, true);
    emit(rec, f.format);
    if (f.format == "md") {
        if (rec.order >= 20)
            std::cout << (rec.diverging ? "series is asymptotically divergent"
                                        : "series shows no divergence signature")
                      << " within M=" << rec.order << "\n";
        else
            std::cout << "note: fewer than 20 terms; the divergence signature may be absent\n";
    }
    return 0;
}

int run_oracle(const CommonFlags& f, std::optional<double> rmax, std::optional<int> points) {
    PotentialExpr pot = flags_potential(f);
    QuantumState st = flags_state(f);
    GridConfig grid = auto_grid(pot, st);
    if (rmax) grid.r_max = *rmax;
    if (points) grid.points = *points;
    OracleResult res = oracle_eigenvalue(pot, st, grid);
    std::ostringstream out;
    out.precision(12);
    if (f.format == "json") {
        out << "{\n  \"energy\": " << res.energy << ",\n  \"nodes\": " << res.nodes
            << ",\n  \"richardson_error\": " << res.richardson_error
            << ",\n  \"grid\": {\"r_max\": " << res.grid.r_max
            << ", \"points\": " << res.grid.points << "}\n}";
    } else {
        out << "energy " << res.energy << " hartree, " << res.nodes
            << " nodes, richardson_error " << res.richardson_error << " (r_max "
            << res.grid.r_max << ", " << res.grid.points << " points)";
    }
    std::cout << out.str() << "\n";
    return 0;
}

// Fixed significant digits, keeping trailing zeros ("0.00250", not "0.0025").
std::string fixed_sig(const Real& v, int sig) {
    double x = v.to_double();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", sig - 1, x);
    int exp = std::atoi(std::strchr(buf, 'e') + 1);
    if (exp >= sig) return std::string(buf);
    int decimals = sig - 1 - exp;
    std::snprintf(buf, sizeof buf, "%.*f", decimals > 0 ? decimals : 0, x);
    return std::string(buf);
}

int run_reproduce(int table, const CommonFlags& f) {
    PotentialExpr pot = parse_potential("-1/(r+10)");
    const Precision prec{f.prec_bits};

    if (table == 1) {
        const std::vector<std::string> labels = {"4s", "6s", "7s", "9s", "11s"};
        std::vector<RunRecord> recs(labels.size());
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(labels.size()); ++i)
            recs[static_cast<std::size_t>(i)] =
                build_run_record(pot, state_from_label(labels[static_cast<std::size_t>(i)]),
                                 f.order, prec, f.digits, false);
        if (f.format == "json") {
            std::cout << "[\n";
            for (std::size_t i = 0; i < recs.size(); ++i)
                std::cout << to_json(recs[i]) << (i + 1 < recs.size() ? ",\n" : "\n");
            std::cout << "]\n";
            return 0;
        }
        std::cout << "| State | E_20 | stable from | Pade | stable from |\n";
        std::cout << "|-------|------|-------------|------|-------------|\n";
        for (std::size_t i = 0; i < recs.size(); ++i) {
            const RunRecord& r = recs[i];
            Real e20(r.partials.back(), prec);
            Real pbest(r.pade_best, prec);
            std::cout << "| " << labels[i] << " | " << fixed_sig(e20, i == 0 ? 5 : 4) << " | ";
            if (r.series_stab_index)
                std::cout << "E_" << *r.series_stab_index;
            else
                std::cout << "-";
            std::cout << " | " << fixed_sig(pbest, i == 3 ? 4 : 5) << " | ";
            if (r.pade_stab)
                std::cout << "E[" << r.pade_stab->first << "," << r.pade_stab->second << "]";
            else
                std::cout << "-";
            std::cout << " |\n";
        }
        return 0;
    }

    // Table 2: partial sums for nr = 10 at ell = 1, 3, 5, 15.
    const std::vector<int> ells = {1, 3, 5, 15};
    const std::vector<int> sig = {3, 4, 5, 5};  // printed significant digits per column
    std::vector<RunRecord> recs(ells.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(ells.size()); ++i) {
        QuantumState st;
        st.ell = ells[static_cast<std::size_t>(i)];
        st.nr = 10;
        recs[static_cast<std::size_t>(i)] = build_run_record(pot, st, f.order, prec, f.digits, false);
    }
    if (f.format == "json") {
        std::cout << "[\n";
        for (std::size_t i = 0; i < recs.size(); ++i)
            std::cout << to_json(recs[i]) << (i + 1 < recs.size() ? ",\n" : "\n");
        std::cout << "]\n";
        return 0;
    }
    std::cout << "| -E_M | ell=1 | ell=3 | ell=5 | ell=15 |\n";
    std::cout << "|------|-------|-------|-------|--------|\n";
    std::vector<int> rows = {0, 1, 2, 3, 4, 5, 6, 7, 8, f.order};
    for (int m : rows) {
        std::cout << "| -E_" << m << " |";
        for (std::size_t c = 0; c < recs.size(); ++c) {
            Real v(recs[c].partials[static_cast<std::size_t>(m)], prec);
            std::cout << " " << fixed_sig(-v, sig[c]) << " |";
        }
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudo-perturbative shifted-l expansion for radial bound states"};
    app.require_subcommand(1);

    CommonFlags fs, fr, fd, fo;
    int table = 1;
    std::optional<double> rmax;
    std::optional<int> points;

    CLI::App* solve = app.add_subcommand("solve", "expansion + Pade for one state");
    add_common(solve, fs, true);

    CLI::App* repro = app.add_subcommand("reproduce", "reproduce a reference table (1 or 2)");
    repro->add_option("table", table, "which table")->check(CLI::Range(1, 2))->required();
    add_common(repro, fr, false);

    CLI::App* diverge = app.add_subcommand("diverge-demo",
                                           "the asymptotically divergent case alpha=0.1, "
                                           "ell=nr=0, with the eigensolver reference");
    add_common(diverge, fd, false);

    CLI::App* oracle = app.add_subcommand("oracle", "direct finite-difference eigensolver");
    add_common(oracle, fo, false);
    oracle->add_option("--rmax", rmax, "override grid extent");
    oracle->add_option("--points", points, "override grid size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return run_solve(fs);
        if (repro->parsed()) return run_reproduce(table, fr);
        if (diverge->parsed()) return run_diverge_demo(fd);
        if (oracle->parsed()) return run_oracle(fo, rmax, points);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownSymbol& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
