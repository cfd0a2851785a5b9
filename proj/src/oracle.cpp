#include "pslet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "pslet/errors.hpp"

namespace pslet {

namespace oracle_kernels {

int sturm_count_serial(const std::vector<double>& diag, double off, double x) {
    const double off2 = off * off;
    const double tiny = std::numeric_limits<double>::min();
    int count = 0;
    double d = 1.0;
    bool first = true;
    for (double a : diag) {
        d = first ? a - x : a - x - off2 / d;
        first = false;
        if (d == 0.0) d = tiny;
        if (d < 0.0) ++count;
    }
    return count;
}

std::vector<int> sturm_count_batch_omp(const std::vector<double>& diag, double off,
                                       const std::vector<double>& shifts) {
    std::vector<int> counts(shifts.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(shifts.size()); ++i)
        counts[static_cast<std::size_t>(i)] =
            sturm_count_serial(diag, off, shifts[static_cast<std::size_t>(i)]);
    return counts;
}

double eigenvalue_bisect_serial(const std::vector<double>& diag, double off, int k, double lo,
                                double hi, double tol) {
    while (hi - lo > tol * std::max(1.0, std::abs(lo))) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at rounding limit
        if (sturm_count_serial(diag, off, mid) > k)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

double eigenvalue_multisection_omp(const std::vector<double>& diag, double off, int k, double lo,
                                   double hi, double tol) {
    constexpr int kSections = 16;
    std::vector<double> shifts(kSections);
    while (hi - lo > tol * std::max(1.0, std::abs(lo))) {
        double step = (hi - lo) / (kSections + 1);
        if (step <= 0.0 || lo + step <= lo) break;
        for (int i = 0; i < kSections; ++i) shifts[static_cast<std::size_t>(i)] = lo + (i + 1) * step;
        std::vector<int> counts = sturm_count_batch_omp(diag, off, shifts);
        double nlo = lo, nhi = hi;
        for (int i = 0; i < kSections; ++i) {
            if (counts[static_cast<std::size_t>(i)] > k) {
                nhi = shifts[static_cast<std::size_t>(i)];
                break;
            }
            nlo = shifts[static_cast<std::size_t>(i)];
        }
        lo = nlo;
        hi = nhi;
    }
    return 0.5 * (lo + hi);
}

}  // namespace oracle_kernels

namespace {

struct Discretization {
    std::vector<double> diag;
    double off = 0;
    double h = 0;
};

Discretization discretize(const PotentialExpr& pot, int ell, const GridConfig& grid) {
    const int n = grid.points - 1;  // interior points
    if (n < 2) throw Error("oracle: grid too small");
    Discretization d;
    d.h = (grid.r_max - grid.r_min) / grid.points;
    d.off = -0.5 / (d.h * d.h);
    d.diag.resize(static_cast<std::size_t>(n));
    const double cf = 0.5 * ell * (ell + 1);
#pragma omp parallel for schedule(static)
    for (int i = 1; i <= n; ++i) {
        double r = grid.r_min + i * d.h;
        double v = pot.evaluate(Real(r, Precision{Real::kMinBits})).to_double();
        d.diag[static_cast<std::size_t>(i - 1)] = 1.0 / (d.h * d.h) + cf / (r * r) + v;
    }
    return d;
}

double solve_one_grid(const PotentialExpr& pot, const QuantumState& state, const GridConfig& grid,
                      std::vector<double>* eigvec_out) {
    Discretization d = discretize(pot, state.ell, grid);
    const int n = static_cast<int>(d.diag.size());

    // Continuum edge: effective potential at the outer boundary.
    double v_edge = pot.evaluate(Real(grid.r_max, Precision{Real::kMinBits})).to_double() +
                    0.5 * state.ell * (state.ell + 1) / (grid.r_max * grid.r_max);
    if (oracle_kernels::sturm_count_serial(d.diag, d.off, v_edge) < state.nr + 1)
        throw NoBoundState("fewer than nr+1 eigenvalues below the continuum edge; enlarge r_max");

    // Gershgorin lower bound.
    double lo = d.diag[0];
    for (double a : d.diag) lo = std::min(lo, a);
    lo -= 2.0 * std::abs(d.off);

    double e = oracle_kernels::eigenvalue_multisection_omp(d.diag, d.off, state.nr, lo, v_edge,
                                                           1e-14);

    if (eigvec_out) {
        // Inverse iteration at a slightly shifted energy.
        std::vector<double> v(static_cast<std::size_t>(n), 1.0);
        double shift = e * (1.0 + 1e-10) + 1e-300;
        for (int pass = 0; pass < 2; ++pass) {
            // Tridiagonal LU with partial pivoting on (T - shift I).
            std::vector<double> a(d.diag);
            for (double& x : a) x -= shift;
            std::vector<double> b(static_cast<std::size_t>(n - 1), d.off);  // super
            std::vector<double> c(static_cast<std::size_t>(n - 1), d.off);  // sub
            std::vector<double> b2(static_cast<std::size_t>(std::max(0, n - 2)), 0.0);
            std::vector<double>& x = v;
            for (int i = 0; i < n - 1; ++i) {
                if (std::abs(c[static_cast<std::size_t>(i)]) > std::abs(a[static_cast<std::size_t>(i)])) {
                    std::swap(a[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i)]);
                    std::swap(b[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(i + 1)]);
                    if (i < n - 2)
                        std::swap(b2[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i + 1)]);
                    std::swap(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i + 1)]);
                }
                double piv = a[static_cast<std::size_t>(i)];
                if (piv == 0.0) piv = 1e-300;
                double m = c[static_cast<std::size_t>(i)] / piv;
                a[static_cast<std::size_t>(i + 1)] -= m * b[static_cast<std::size_t>(i)];
                if (i < n - 2) b[static_cast<std::size_t>(i + 1)] -= m * b2[static_cast<std::size_t>(i)];
                x[static_cast<std::size_t>(i + 1)] -= m * x[static_cast<std::size_t>(i)];
            }
            for (int i = n - 1; i >= 0; --i) {
                double s = x[static_cast<std::size_t>(i)];
                if (i + 1 < n) s -= b[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i + 1)];
                if (i + 2 < n) s -= b2[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i + 2)];
                double piv = a[static_cast<std::size_t>(i)];
                if (piv == 0.0) piv = 1e-300;
                x[static_cast<std::size_t>(i)] = s / piv;
            }
            double nrm = 0.0;
            for (double t : x) nrm = std::max(nrm, std::abs(t));
            if (nrm > 0)
                for (double& t : x) t /= nrm;
        }
        *eigvec_out = v;
    }
    return e;
}

int count_nodes(const std::vector<double>& v) {
    // Sign changes between consecutive non-negligible samples.
    double vmax = 0.0;
    for (double t : v) vmax = std::max(vmax, std::abs(t));
    const double floor = vmax * 1e-9;
    int nodes = 0;
    double prev = 0.0;
    for (double t : v) {
        if (std::abs(t) < floor) continue;
        if (prev != 0.0 && t * prev < 0.0) ++nodes;
        prev = t;
    }
    return nodes;
}

}  // namespace

OracleResult oracle_eigenvalue(const PotentialExpr& pot, const QuantumState& state,
                               const GridConfig& grid) {
    if (grid.points < 1000) throw Error("oracle: GridConfig.points must be >= 1000");
    if (grid.r_max <= grid.r_min) throw Error("oracle: r_max must exceed r_min");

    double e_coarse = solve_one_grid(pot, state, grid, nullptr);

    GridConfig fine = grid;
    fine.points = 2 * grid.points;
    std::vector<double> vec;
    double e_fine = solve_one_grid(pot, state, fine, &vec);

    OracleResult res;
    res.energy = (4.0 * e_fine - e_coarse) / 3.0;
    res.richardson_error = std::abs(e_fine - e_coarse) / 3.0;
    res.grid = grid;
    res.nodes = count_nodes(vec);
    if (res.nodes != state.nr)
        throw NodeMismatch("oracle: eigenvector has " + std::to_string(res.nodes) +
                           " nodes, expected " + std::to_string(state.nr));
    return res;
}

GridConfig auto_grid(const PotentialExpr& pot, const QuantumState& state) {
    const Precision prec{96};
    LeadingOrder lead = solve_leading(pot, state, prec);
    const double c0 = lead.c0.to_double();
    const double q0 = lead.q0.to_double();
    const double cf = 0.5 * state.ell * (state.ell + 1);

    auto veff = [&](double r) {
        return pot.evaluate(Real(r, Precision{Real::kMinBits})).to_double() + cf / (r * r);
    };

    // Outer classical turning point: V_eff rises back to c0 beyond q0.
    double lo = q0, hi = q0;
    for (double r = q0; r < 1e12; r *= 2) {
        hi = r;
        if (veff(r) > c0) break;
        lo = r;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-9 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        (veff(mid) > c0 ? hi : lo) = mid;
    }
    double r_turn = 0.5 * (lo + hi);

    GridConfig g;
    g.r_max = std::max(6.0 * r_turn, 50.0);
    Jet j = pot.jet(lead.q0, 2, prec);
    double v2 = std::abs(j.derivs[2].to_double());
    double pts = v2 > 0 ? g.r_max * std::sqrt(v2 / 1e-8) : 0.0;
    g.points = std::max(20000, static_cast<int>(std::ceil(pts)));
    return g;
}

}  // namespace pslet
