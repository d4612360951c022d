#ifndef SEVERI_WEIERSTRASS_HPP
#define SEVERI_WEIERSTRASS_HPP

#include <utility>
#include <vector>

#include "severi/poly.hpp"

namespace severi {

/// Degree-d form in the fiber variable: P = sum a[i](z) w0^(d-i) w1^i.
/// In the affine chart w = w0/w1 this reads a0 w^d + a1 w^(d-1) + ... + ad,
/// so a[0] is the leading coefficient.
struct WeierstrassPoly {
    int d = 0;
    std::vector<RationalPoly> a;  // size d+1

    WeierstrassPoly() : a(1) {}
    WeierstrassPoly(int degree, std::vector<RationalPoly> coeffs);

    bool all_zero() const;
    const RationalPoly& leading() const { return a.front(); }

    /// Affine-chart evaluation P(z0, w0) with w the chart variable.
    Rat eval(const Rat& z0, const Rat& w0) const;

    /// Coefficients as a polynomial in w over Q[z], lowest w-power first.
    std::vector<RationalPoly> w_coeffs_low_first() const;

    /// d/dw in the affine chart.
    WeierstrassPoly dw() const;

    friend bool operator==(const WeierstrassPoly& x, const WeierstrassPoly& y) {
        return x.d == y.d && x.a == y.a;
    }

    friend WeierstrassPoly operator*(const WeierstrassPoly& x, const WeierstrassPoly& y);

    /// P scaled by a base polynomial h(z).
    friend WeierstrassPoly operator*(const RationalPoly& h, const WeierstrassPoly& P);
};

/// Fiberwise GL2 matrix with polynomial entries; determinant cached.
struct GL2PolyMatrix {
    RationalPoly g00, g01, g10, g11;
    RationalPoly det;

    GL2PolyMatrix(RationalPoly a00, RationalPoly a01, RationalPoly a10, RationalPoly a11);
    static GL2PolyMatrix identity();
};

/// P o g = sum a_i (g00 w0 + g01 w1)^(d-i) (g10 w0 + g11 w1)^i.
WeierstrassPoly gl2_act(const WeierstrassPoly& P, const GL2PolyMatrix& g);

/// Splits off the vertical-line part: returns (monic gcd of all coefficients,
/// P with every coefficient exactly divided by it).
std::pair<RationalPoly, WeierstrassPoly> factor_vertical(const WeierstrassPoly& P);

}  // namespace severi

#endif
