#include "pslet/linalg.hpp"

#include <cstddef>
#include <utility>

#include "pslet/errors.hpp"

namespace pslet {

Vector solve_linear(Matrix A, Vector b) {
    const std::size_t n = A.size();
    if (n == 0) return {};
    if (b.size() != n) throw Error("solve_linear: dimension mismatch");

    long bits = Real::kMinBits;
    Real amax(0.0, Precision{bits});
    for (const auto& row : A) {
        if (row.size() != n) throw Error("solve_linear: matrix not square");
        for (const auto& x : row) {
            if (x.prec() > bits) bits = x.prec();
            if (abs(x) > amax) amax = abs(x);
        }
    }
    const Real pivot_floor = amax * Real::pow2(-bits / 2, Precision{bits});

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (abs(A[r][col]) > abs(A[piv][col])) piv = r;
        if (abs(A[piv][col]) <= pivot_floor)
            throw SingularMatrix("solve_linear: pivot underflow at column " + std::to_string(col));
        if (piv != col) {
            std::swap(A[piv], A[col]);
            std::swap(b[piv], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            if (A[r][col].is_zero()) continue;
            Real f = A[r][col] / A[col][col];
            for (std::size_t c = col + 1; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }

    Vector x(n, Real(Precision{bits}));
    for (std::size_t i = n; i-- > 0;) {
        Real s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= A[i][c] * x[c];
        x[i] = s / A[i][i];
    }
    return x;
}

}  // namespace pslet
