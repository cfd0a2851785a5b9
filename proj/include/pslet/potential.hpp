#ifndef PSLET_POTENTIAL_HPP
#define PSLET_POTENTIAL_HPP

#include <memory>
#include <string>
#include <vector>

#include "pslet/real.hpp"

namespace pslet {

/// Arbitrary-order derivative data of a potential at one radius:
/// derivs[k] = V^(k)(base_point), k = 0..K.
struct Jet {
    Real base_point;
    std::vector<Real> derivs;
};

namespace detail {
struct Expr;
}

/// Immutable parsed radial potential V(r).
///
/// Grammar:
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := "-" factor | atom ("^" integer)?
///   atom   := number | "r" | "(" expr ")"
///
/// Numeric literals are kept as source strings and re-read at the
/// working precision of each evaluation, so "0.1" is correct to full
/// precision at any mantissa width.
class PotentialExpr {
  public:
    /// Value V(r).
    Real evaluate(const Real& r) const;

    /// Taylor jet at r: derivatives of order 0..K, propagated exactly
    /// through the expression tree (no finite differences).
    Jet jet(const Real& r, int K, Precision prec) const;

    /// Canonical fully parenthesized rendering; reparses to the same tree.
    std::string pretty() const;

    const std::string& source() const { return source_; }

    friend PotentialExpr parse_potential(const std::string& text);

  private:
    std::shared_ptr<const detail::Expr> root_;
    std::string source_;
};

/// Parses the grammar above. Throws SyntaxError (with byte offset) or
/// UnknownSymbol for identifiers other than r.
PotentialExpr parse_potential(const std::string& text);

/// Closed-form jet of the truncated Coulomb potential V(r) = -1/(r+alpha):
/// derivs[k] = (-1)^(k+1) k! (r+alpha)^-(k+1). Throws SingularPoint when
/// r + alpha <= 0.
Jet truncated_coulomb_jet(const Real& alpha, const Real& r, int K);

}  // namespace pslet

#endif
