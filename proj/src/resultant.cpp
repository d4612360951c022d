#include "severi/resultant.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace severi {

namespace {

long entry_degree_bound(const PolyMatrix& m) {
    // det degree <= sum over rows of the row-max entry degree; same over
    // columns; take the smaller bound.
    const std::size_t n = m.size();
    long rows = 0, cols = 0;
    std::vector<long> colmax(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        long rowmax = -1;
        for (std::size_t j = 0; j < n; ++j) {
            rowmax = std::max(rowmax, m[i][j].degree());
            colmax[j] = std::max(colmax[j], m[i][j].degree());
        }
        if (rowmax < 0) return -1;  // a zero row
        rows += rowmax;
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (colmax[j] < 0) return -1;
        cols += colmax[j];
    }
    return std::min(rows, cols);
}

Rat det_numeric(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        const Rat inv = Rat(1) / m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            const Rat f = m[i][k] * inv;
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
            m[i][k] = 0;
        }
    }
    return det;
}

// Newton divided-difference interpolation through (xs[i], ys[i]).
RationalPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    const std::size_t n = xs.size();
    std::vector<Rat> dd = ys;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
            if (i == level) break;
        }
    RationalPoly acc;
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * RationalPoly::linear_root(xs[i]) + RationalPoly::constant(dd[i]);
    }
    return acc;
}

}  // namespace

PolyMatrix sylvester_matrix(const std::vector<RationalPoly>& p_high_first,
                            const std::vector<RationalPoly>& q_high_first) {
    const std::size_t m = p_high_first.size() - 1;
    const std::size_t n = q_high_first.size() - 1;
    const std::size_t size = m + n;
    PolyMatrix mat(size, std::vector<RationalPoly>(size));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c <= m; ++c) mat[r][r + c] = p_high_first[c];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c <= n; ++c) mat[n + r][r + c] = q_high_first[c];
    return mat;
}

RationalPoly det_bareiss(PolyMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return RationalPoly::constant(1);
    int sign = 1;
    RationalPoly prev = RationalPoly::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return {};
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                RationalPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num.is_zero() ? RationalPoly{} : RationalPoly::div_exact(num, prev);
            }
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    RationalPoly out = m[n - 1][n - 1];
    return sign < 0 ? -out : out;
}

RationalPoly det_eval_interp(const PolyMatrix& m, bool parallel) {
    const std::size_t n = m.size();
    if (n == 0) return RationalPoly::constant(1);
    const long bound = entry_degree_bound(m);
    if (bound < 0) return {};
    const std::size_t npts = static_cast<std::size_t>(bound) + 1;
    std::vector<Rat> xs(npts), ys(npts);
    for (std::size_t i = 0; i < npts; ++i) {
        // 0, 1, -1, 2, -2, ... keeps evaluation magnitudes small
        const long half = static_cast<long>((i + 1) / 2);
        xs[i] = (i % 2 == 1) ? Rat(half) : Rat(-half);
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel && npts > 8)
#endif
    for (std::size_t i = 0; i < npts; ++i) {
        std::vector<std::vector<Rat>> num(n, std::vector<Rat>(n));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) num[r][c] = m[r][c](xs[i]);
        ys[i] = det_numeric(std::move(num));
    }
    return interpolate(xs, ys);
}

Rat det_rational(std::vector<std::vector<Rat>> m) {
    return det_numeric(std::move(m));
}

RationalPoly det_poly(const PolyMatrix& m) {
    const std::size_t n = m.size();
    const long bound = entry_degree_bound(m);
    if (bound < 0) return {};
    if (n <= 6 || bound <= 12) return det_bareiss(m);
    return det_eval_interp(m);
}

RationalPoly resultant_w(const std::vector<RationalPoly>& p_high_first,
                         const std::vector<RationalPoly>& q_high_first, ResultantOptions* opts) {
    if (p_high_first.empty() || q_high_first.empty())
        throw std::invalid_argument("resultant of an empty coefficient list");
    auto nonzero = [](const std::vector<RationalPoly>& c) {
        for (const auto& p : c)
            if (!p.is_zero()) return true;
        return false;
    };
    if (!nonzero(p_high_first) || !nonzero(q_high_first))
        throw std::invalid_argument("resultant of the zero polynomial");
    const std::size_t m = p_high_first.size() - 1;
    const std::size_t n = q_high_first.size() - 1;
    if (m == 0 && n == 0) {
        if (opts) opts->flag_both_constant = true;
        return RationalPoly::constant(1);
    }
    if (m == 0) return p_high_first[0].pow(static_cast<unsigned>(n));
    if (n == 0) return q_high_first[0].pow(static_cast<unsigned>(m));
    return det_poly(sylvester_matrix(p_high_first, q_high_first));
}

RationalPoly resultant_w(const WeierstrassPoly& p, const WeierstrassPoly& q, ResultantOptions* opts) {
    return resultant_w(p.a, q.a, opts);
}

RationalPoly discriminant(const WeierstrassPoly& P) {
    if (P.leading().is_zero())
        throw std::domain_error(
            "vertical leading component: a0 vanishes identically; factor out vertical lines "
            "with factor_vertical first");
    if (P.d <= 1) return RationalPoly::constant(1);
    const RationalPoly res = resultant_w(P, P.dw());
    const RationalPoly quot =
        res.is_zero() ? RationalPoly{} : RationalPoly::div_exact(res, P.leading());
    const bool negate = ((static_cast<long>(P.d) * (P.d - 1) / 2) % 2) != 0;
    return negate ? -quot : quot;
}

}  // namespace severi
