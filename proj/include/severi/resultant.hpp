#ifndef SEVERI_RESULTANT_HPP
#define SEVERI_RESULTANT_HPP

#include <vector>

#include "severi/weierstrass.hpp"

namespace severi {

using PolyMatrix = std::vector<std::vector<RationalPoly>>;

/// Sylvester matrix of p (w-degree m) and q (w-degree n), both given as
/// w-coefficient lists over Q[z], highest w-power first. The first n rows
/// carry p's coefficients, the m rows of q's coefficients sit below them.
PolyMatrix sylvester_matrix(const std::vector<RationalPoly>& p_high_first,
                            const std::vector<RationalPoly>& q_high_first);

/// Fraction-free (Bareiss) determinant over Q[z]. Reference route.
RationalPoly det_bareiss(PolyMatrix m);

/// Determinant by exact evaluation at integer points and interpolation.
/// Parallelized over evaluation points when OpenMP is enabled.
RationalPoly det_eval_interp(const PolyMatrix& m, bool parallel = true);

/// Determinant with automatic route selection (Bareiss for small matrices).
RationalPoly det_poly(const PolyMatrix& m);

/// Exact determinant of a rational matrix (Gaussian elimination).
Rat det_rational(std::vector<std::vector<Rat>> m);

struct ResultantOptions {
    bool flag_both_constant = false;  // set when both w-degrees were 0
};

/// Res_w of two polynomials in w over Q[z], using the formal (declared)
/// w-degrees carried by the coefficient lists. Both of w-degree 0 is
/// defined as 1 and flagged through `opts` when supplied.
RationalPoly resultant_w(const std::vector<RationalPoly>& p_high_first,
                         const std::vector<RationalPoly>& q_high_first,
                         ResultantOptions* opts = nullptr);

RationalPoly resultant_w(const WeierstrassPoly& p, const WeierstrassPoly& q,
                         ResultantOptions* opts = nullptr);

/// Dscr(P) = (-1)^(d(d-1)/2) Res_w(P, dP/dw) / a0, exact division.
/// For d <= 1 the discriminant is the constant 1.
/// Throws when a0 is the zero polynomial ("vertical leading component":
/// factor out vertical lines with factor_vertical first).
RationalPoly discriminant(const WeierstrassPoly& P);

}  // namespace severi

#endif
