#include "severi/weierstrass.hpp"

#include <stdexcept>

namespace severi {

WeierstrassPoly::WeierstrassPoly(int degree, std::vector<RationalPoly> coeffs)
    : d(degree), a(std::move(coeffs)) {
    if (d < 0) throw std::invalid_argument("negative fiber degree");
    if (a.size() != static_cast<std::size_t>(d) + 1)
        throw std::invalid_argument("WeierstrassPoly needs d+1 coefficients");
    if (all_zero()) throw std::invalid_argument("WeierstrassPoly must not be identically zero");
}

bool WeierstrassPoly::all_zero() const {
    for (const auto& p : a)
        if (!p.is_zero()) return false;
    return true;
}

Rat WeierstrassPoly::eval(const Rat& z0, const Rat& w0) const {
    Rat acc(0);
    for (int i = 0; i <= d; ++i) acc = acc * w0 + a[static_cast<std::size_t>(i)](z0);
    return acc;
}

std::vector<RationalPoly> WeierstrassPoly::w_coeffs_low_first() const {
    return {a.rbegin(), a.rend()};
}

WeierstrassPoly WeierstrassPoly::dw() const {
    if (d == 0) throw std::domain_error("d/dw of a fiber-constant polynomial");
    std::vector<RationalPoly> b(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        b[static_cast<std::size_t>(i)] = Rat(d - i) * a[static_cast<std::size_t>(i)];
    return WeierstrassPoly(d - 1, std::move(b));
}

WeierstrassPoly operator*(const WeierstrassPoly& x, const WeierstrassPoly& y) {
    std::vector<RationalPoly> c(static_cast<std::size_t>(x.d + y.d) + 1);
    for (int i = 0; i <= x.d; ++i)
        for (int j = 0; j <= y.d; ++j)
            c[static_cast<std::size_t>(i + j)] +=
                x.a[static_cast<std::size_t>(i)] * y.a[static_cast<std::size_t>(j)];
    return WeierstrassPoly(x.d + y.d, std::move(c));
}

WeierstrassPoly operator*(const RationalPoly& h, const WeierstrassPoly& P) {
    std::vector<RationalPoly> c = P.a;
    for (auto& p : c) p = h * p;
    return WeierstrassPoly(P.d, std::move(c));
}

GL2PolyMatrix::GL2PolyMatrix(RationalPoly a00, RationalPoly a01, RationalPoly a10, RationalPoly a11)
    : g00(std::move(a00)), g01(std::move(a01)), g10(std::move(a10)), g11(std::move(a11)) {
    det = g00 * g11 - g01 * g10;
    if (det.is_zero()) throw std::invalid_argument("GL2PolyMatrix with identically zero determinant");
}

GL2PolyMatrix GL2PolyMatrix::identity() {
    return GL2PolyMatrix(RationalPoly::constant(1), {}, {}, RationalPoly::constant(1));
}

WeierstrassPoly gl2_act(const WeierstrassPoly& P, const GL2PolyMatrix& g) {
    const int d = P.d;
    // rows[i][j] = coefficient of w0^(i-j) w1^j in (g00 w0 + g01 w1)^i,
    // built incrementally; same for the second column pair.
    std::vector<std::vector<RationalPoly>> top(static_cast<std::size_t>(d) + 1),
        bot(static_cast<std::size_t>(d) + 1);
    top[0] = {RationalPoly::constant(1)};
    bot[0] = {RationalPoly::constant(1)};
    for (int i = 1; i <= d; ++i) {
        auto step = [i](const std::vector<RationalPoly>& prev, const RationalPoly& u,
                        const RationalPoly& v) {
            std::vector<RationalPoly> cur(static_cast<std::size_t>(i) + 1);
            for (int j = 0; j < i; ++j) {
                cur[static_cast<std::size_t>(j)] += u * prev[static_cast<std::size_t>(j)];
                cur[static_cast<std::size_t>(j) + 1] += v * prev[static_cast<std::size_t>(j)];
            }
            return cur;
        };
        top[static_cast<std::size_t>(i)] = step(top[static_cast<std::size_t>(i) - 1], g.g00, g.g01);
        bot[static_cast<std::size_t>(i)] = step(bot[static_cast<std::size_t>(i) - 1], g.g10, g.g11);
    }
    std::vector<RationalPoly> out(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        const auto& t = top[static_cast<std::size_t>(d - i)];
        const auto& b = bot[static_cast<std::size_t>(i)];
        if (P.a[static_cast<std::size_t>(i)].is_zero()) continue;
        // (sum_j t_j w0^(d-i-j) w1^j) * (sum_l b_l w0^(i-l) w1^l)
        for (std::size_t j = 0; j < t.size(); ++j)
            for (std::size_t l = 0; l < b.size(); ++l)
                out[j + l] += P.a[static_cast<std::size_t>(i)] * t[j] * b[l];
    }
    return WeierstrassPoly(d, std::move(out));
}

std::pair<RationalPoly, WeierstrassPoly> factor_vertical(const WeierstrassPoly& P) {
    RationalPoly g;
    for (const auto& p : P.a) g = RationalPoly::gcd(g, p);
    if (g.is_zero()) throw std::invalid_argument("factor_vertical of the zero polynomial");
    std::vector<RationalPoly> rest(P.a.size());
    for (std::size_t i = 0; i < P.a.size(); ++i)
        rest[i] = P.a[i].is_zero() ? RationalPoly{} : RationalPoly::div_exact(P.a[i], g);
    return {g, WeierstrassPoly(P.d, std::move(rest))};
}

}  // namespace severi
