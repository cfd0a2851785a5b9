#ifndef PSLET_LINALG_HPP
#define PSLET_LINALG_HPP

#include <vector>

#include "pslet/real.hpp"

namespace pslet {

using Matrix = std::vector<std::vector<Real>>;
using Vector = std::vector<Real>;

/// Solves A x = b by Gaussian elimination with partial pivoting.
/// Throws SingularMatrix when a pivot falls below 2^(-bits/2) relative
/// to the largest entry of A.
Vector solve_linear(Matrix A, Vector b);

}  // namespace pslet

#endif
