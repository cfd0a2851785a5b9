// Compares the serial Sturm-bisection reference against the OpenMP
// multisection kernel on the radial discretization used by the oracle.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include <omp.h>

#include "pslet/oracle.hpp"

using namespace pslet;
using Clock = std::chrono::steady_clock;

static double seconds(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 400000;
    int reps = argc > 2 ? std::atoi(argv[2]) : 5;
    if (n < 1000 || reps < 1) {
        std::fprintf(stderr, "usage: pslet_bench [n >= 1000] [reps >= 1]\n");
        return 2;
    }

    // Discretization of -1/2 u'' - u/(r+10) + l(l+1)/(2r^2) on (0, 2000].
    const double r_max = 2000.0, ell = 15;
    const double h = r_max / (n + 1);
    const double off = -0.5 / (h * h);
    std::vector<double> diag(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        double r = i * h;
        diag[static_cast<size_t>(i - 1)] =
            1.0 / (h * h) + 0.5 * ell * (ell + 1) / (r * r) - 1.0 / (r + 10.0);
    }
    double lo = -1.0, hi = 0.0;

    std::printf("n = %d, threads = %d, reps = %d\n", n, omp_get_max_threads(), reps);

    double e_serial = 0, e_omp = 0;
    auto t0 = Clock::now();
    for (int r = 0; r < reps; ++r)
        e_serial = oracle_kernels::eigenvalue_bisect_serial(diag, off, 10, lo, hi, 1e-14);
    double ts = seconds(t0) / reps;

    t0 = Clock::now();
    for (int r = 0; r < reps; ++r)
        e_omp = oracle_kernels::eigenvalue_multisection_omp(diag, off, 10, lo, hi, 1e-14);
    double tp = seconds(t0) / reps;

    std::printf("serial bisection     : %8.3f ms   E = %.12f\n", 1e3 * ts, e_serial);
    std::printf("omp multisection     : %8.3f ms   E = %.12f\n", 1e3 * tp, e_omp);
    std::printf("speedup              : %8.2fx   |dE| = %.3e\n", ts / tp,
                std::fabs(e_serial - e_omp));
    return 0;
}
