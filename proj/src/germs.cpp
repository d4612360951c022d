#include "severi/germs.hpp"

#include <algorithm>
#include <sstream>

namespace severi {

namespace {

std::string rstr(const Rat& q) { return rat_str(q); }

using Mat = std::vector<std::vector<RationalPoly>>;

Mat mat_mul(const Mat& a, const Mat& b) {
    const std::size_t n = a.size();
    Mat c(n, std::vector<RationalPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

// Characteristic polynomial det(wI - M) by Faddeev-LeVerrier; exact over Q[z].
std::vector<RationalPoly> charpoly(const Mat& M) {
    const std::size_t n = M.size();
    std::vector<RationalPoly> c(n + 1);
    c[0] = RationalPoly::constant(1);
    Mat N(n, std::vector<RationalPoly>(n));
    for (std::size_t i = 0; i < n; ++i) N[i][i] = RationalPoly::constant(1);
    for (std::size_t k = 1; k <= n; ++k) {
        Mat MN = mat_mul(M, N);
        RationalPoly tr;
        for (std::size_t i = 0; i < n; ++i) tr += MN[i][i];
        c[k] = Rat(-1, static_cast<long>(k)) * tr;
        N = std::move(MN);
        for (std::size_t i = 0; i < n; ++i) N[i][i] += c[k];
    }
    return c;  // w^n + c1 w^(n-1) + ... + cn
}

}  // namespace

void BranchGerm::validate() const {
    if (m < 1) throw std::invalid_argument("branch covering degree must be >= 1");
    for (long e = 2; e <= m; ++e) {
        if (m % e != 0) continue;
        bool in_sub = true;
        for (long i = 0; i <= phi.degree(); ++i)
            if (phi.coeff(static_cast<std::size_t>(i)) != 0 && i % e != 0) {
                in_sub = false;
                break;
            }
        if (in_sub)
            throw std::invalid_argument("non-reduced branch: phi lies in Q[t^" + std::to_string(e) +
                                        "] with " + std::to_string(e) + " | m");
    }
}

long BranchGerm::contact_order() const {
    RationalPoly g = phi - RationalPoly::constant(phi(Rat(0)));
    if (g.is_zero()) return -1;  // constant phi: no finite contact order
    return g.ord_at(Rat(0));
}

WeierstrassPoly branch_to_weierstrass(const BranchGerm& b) {
    b.validate();
    const std::size_t n = static_cast<std::size_t>(b.m);
    const RationalPoly zz = RationalPoly::linear_root(b.z0);  // z - z0
    // Multiplication by phi(t) on Q[z][t] / (t^m - (z - z0)).
    Mat M(n, std::vector<RationalPoly>(n));
    for (long j = 0; j < b.m; ++j)
        for (long k = 0; k <= b.phi.degree(); ++k) {
            const Rat& cf = b.phi.coeff(static_cast<std::size_t>(k));
            if (cf == 0) continue;
            const long e = k + j;
            M[static_cast<std::size_t>(e % b.m)][static_cast<std::size_t>(j)] +=
                cf * zz.pow(static_cast<unsigned>(e / b.m));
        }
    return WeierstrassPoly(b.m, charpoly(M));
}

long branch_delta(const BranchGerm& b) {
    const WeierstrassPoly B = branch_to_weierstrass(b);
    const RationalPoly dsc = discriminant(B);
    const long ord = dsc.ord_at(b.z0);
    const long num = ord - (b.m - 1);
    if (num < 0 || num % 2 != 0)
        throw internal_consistency_error(
            "branch delta parity violated: ord(Dscr) = " + std::to_string(ord) +
            " with m = " + std::to_string(b.m));
    return num / 2;
}

long pairwise_delta(const BranchGerm& b1, const BranchGerm& b2) {
    if (b1.z0 != b2.z0)
        throw std::invalid_argument("pairwise_delta needs branches based at the same z0");
    const WeierstrassPoly B1 = branch_to_weierstrass(b1);
    const WeierstrassPoly B2 = branch_to_weierstrass(b2);
    if (B1 == B2) throw std::invalid_argument("identical branches: intersection index is infinite");
    const RationalPoly res = resultant_w(B1, B2);
    if (res.is_zero())
        throw std::invalid_argument("branches share a component: intersection index is infinite");
    return res.ord_at(b1.z0);
}

void CurveGerm::validate() const {
    if (vertical_mult < 0) throw std::invalid_argument("negative vertical multiplicity");
    for (const auto& b : branches) {
        b.validate();
        if (b.z0 != z0)
            throw std::invalid_argument("all branches of a germ must share its base point");
    }
}

long CurveGerm::branch_degree_sum() const {
    long s = 0;
    for (const auto& b : branches) s += b.m;
    return s;
}

WeierstrassPoly assemble_germ_poly(const CurveGerm& c) {
    const RationalPoly vert = RationalPoly::linear_root(c.z0).pow(
        static_cast<unsigned>(c.vertical_mult));
    WeierstrassPoly P(0, {RationalPoly::constant(1)});
    for (const auto& b : c.branches) P = P * branch_to_weierstrass(b);
    return vert * P;
}

DeltaReport curve_delta(const CurveGerm& c, long d_total) {
    c.validate();
    const long d_listed = c.branch_degree_sum();
    const long d = d_total < 0 ? d_listed : d_total;
    if (d < d_listed)
        throw std::invalid_argument("d_total smaller than the sum of branch degrees");
    const long m = c.vertical_mult;
    const std::size_t nb = c.branches.size();

    DeltaReport rep;
    rep.d = d;
    rep.b = static_cast<long>(nb) + (d - d_listed);
    rep.per_branch.resize(nb);
    rep.pairwise.assign(nb, std::vector<long>(nb, 0));
    long delta_dag = 0;
    for (std::size_t j = 0; j < nb; ++j) {
        rep.per_branch[j] = branch_delta(c.branches[j]);
        delta_dag += rep.per_branch[j];
    }
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = i + 1; j < nb; ++j) {
            const long dij = pairwise_delta(c.branches[i], c.branches[j]);
            rep.pairwise[i][j] = rep.pairwise[j][i] = dij;
            delta_dag += dij;
        }
    rep.vertical_term = d * m;
    rep.delta_total = rep.vertical_term + delta_dag;
    rep.euler_char = rep.b + 2 * m;

    if (d_listed >= 1) {
        // Direct discriminant order of the assembled local polynomial, checked
        // against ord = d - b + 2(delta' + m(d-1)) on the listed part.
        const WeierstrassPoly P = assemble_germ_poly(c);
        const long ord_direct = discriminant(P).ord_at(c.z0);
        long sheets = 0;
        for (const auto& b : c.branches) sheets += b.m - 1;
        const long pred = sheets + 2 * (delta_dag + m * (d_listed - 1));
        if (ord_direct != pred)
            throw internal_consistency_error(
                "order identity mismatch on assembled germ: ord(Dscr) = " + std::to_string(ord_direct) +
                ", formula gives " + std::to_string(pred));
    }
    if (d >= 1) {
        rep.ord_dscr = (d - rep.b) + 2 * (delta_dag + m * (d - 1));
        rep.identities_checked = true;
        if (rep.ord_dscr != rep.d - rep.euler_char + 2 * rep.delta_total)
            throw internal_consistency_error("order/Euler-characteristic bookkeeping mismatch");
    } else {
        rep.ord_dscr = 0;  // degree-0 germs carry no discriminant data
        rep.identities_checked = false;
    }
    return rep;
}

namespace {

// Truncated power-series division check: does prod B_j divide R to order K at z0?
bool divides_locally(const WeierstrassPoly& R, const std::vector<WeierstrassPoly>& factors,
                     const Rat& z0, long K) {
    if (K < 1) K = 1;
    const std::size_t cap = static_cast<std::size_t>(K);
    auto shift_trunc = [&](const RationalPoly& p) {
        // p as a polynomial in u = z - z0, truncated below u^K
        RationalPoly s = p.compose_affine(Rat(1), z0);
        std::vector<Rat> c(s.coeffs());
        if (c.size() > cap) c.resize(cap);
        return c;  // plain coefficient vector, low first
    };
    auto mul_trunc = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> c(std::min(cap, a.size() + b.size() == 0 ? 0 : a.size() + b.size() - 1),
                           Rat(0));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size() && i + j < cap; ++j) c[i + j] += a[i] * b[j];
        }
        return c;
    };
    auto sub_into = [](std::vector<Rat>& a, const std::vector<Rat>& b) {
        if (a.size() < b.size()) a.resize(b.size(), Rat(0));
        for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    };

    WeierstrassPoly prod(0, {RationalPoly::constant(1)});
    for (const auto& f : factors) prod = prod * f;
    if (prod.d > R.d) return false;

    // rem := R, divided by the monic-in-w product over Q[u]/(u^K)
    std::vector<std::vector<Rat>> rem;
    for (const auto& p : R.a) rem.push_back(shift_trunc(p));
    std::vector<std::vector<Rat>> div;
    for (const auto& p : prod.a) div.push_back(shift_trunc(p));
    // high-w-power first in both; divisor leading coefficient is 1
    const std::size_t dn = div.size();
    for (std::size_t lead = 0; lead + dn <= rem.size(); ++lead) {
        const std::vector<Rat> f = rem[lead];
        for (std::size_t i = 0; i < dn; ++i) sub_into(rem[lead + i], mul_trunc(f, div[i]));
    }
    const std::size_t tail = rem.size() >= dn - 1 ? rem.size() - (dn - 1) : 0;
    for (std::size_t i = tail; i < rem.size(); ++i)
        for (const Rat& q : rem[i])
            if (q != 0) return false;
    return true;
}

Ord2Case classify_ord2(const CurveGerm& c, const std::vector<long>& deltas,
                       const std::vector<std::vector<long>>& pairwise, long d_enclosing) {
    long sum_dj = 0;
    for (long x : deltas) sum_dj += x;
    long sum_dij = 0;
    for (std::size_t i = 0; i < pairwise.size(); ++i)
        for (std::size_t j = i + 1; j < pairwise.size(); ++j) sum_dij += pairwise[i][j];
    std::vector<long> ms;
    for (const auto& b : c.branches) ms.push_back(b.m);
    const long m = c.vertical_mult;
    if (m == 1 && d_enclosing == 2 && sum_dj == 0 && sum_dij == 0 &&
        std::all_of(ms.begin(), ms.end(), [](long x) { return x == 1; }))
        return Ord2Case::vertical_line_d2;
    if (m != 0) return Ord2Case::not_ord2;
    const long twos = static_cast<long>(std::count(ms.begin(), ms.end(), 2));
    const long threes = static_cast<long>(std::count(ms.begin(), ms.end(), 3));
    const long bigger = static_cast<long>(
        std::count_if(ms.begin(), ms.end(), [](long x) { return x > 3; }));
    if (sum_dj == 0 && sum_dij == 1 && twos + threes + bigger == 0) return Ord2Case::node;
    if (sum_dj == 0 && sum_dij == 0 && threes == 1 && twos == 0 && bigger == 0)
        return Ord2Case::vertical_inflection;
    if (sum_dj == 0 && sum_dij == 0 && twos == 2 && threes == 0 && bigger == 0)
        return Ord2Case::two_tangencies;
    return Ord2Case::not_ord2;
}

}  // namespace

Ord2Case classify_ord2_line(const CurveGerm& c, long d_enclosing) {
    const DeltaReport rep = curve_delta(c, d_enclosing);
    if (!rep.identities_checked || rep.ord_dscr != 2) return Ord2Case::not_ord2;
    return classify_ord2(c, rep.per_branch, rep.pairwise, rep.d);
}

const char* ord2_case_name(Ord2Case c) {
    switch (c) {
        case Ord2Case::node: return "node";
        case Ord2Case::vertical_inflection: return "vertical-inflection";
        case Ord2Case::two_tangencies: return "two-tangencies";
        case Ord2Case::vertical_line_d2: return "vertical-line-d2";
        case Ord2Case::not_ord2: return "-";
    }
    return "-";
}

DeltaPerLineResult delta_per_line(const WeierstrassPoly& P, const std::map<Rat, CurveGerm>& germs,
                                  std::optional<long> normalization_euler) {
    DeltaPerLineResult out;
    auto [vert, R] = factor_vertical(P);
    const long dR = R.d;

    std::map<Rat, long> needed;  // line -> vertical multiplicity there
    if (vert.degree() >= 1) {
        auto rs = vert.rational_roots();
        for (const auto& [root, mult] : rs.roots) needed[root] = std::max(needed[root], 0L);
        if (rs.cofactor.degree() >= 1)
            for (const auto& [mult, f] : rs.cofactor.square_free_decomposition())
                out.unresolved.push_back(f);
    }
    RationalPoly dscR = RationalPoly::constant(1);
    if (dR >= 1) dscR = discriminant(R);
    if (dscR.is_zero())
        throw std::invalid_argument(
            "curve has a multiple non-vertical component: per-line deltas are undefined");
    if (dscR.degree() >= 1) {
        auto rs = dscR.rational_roots();
        for (const auto& [root, mult] : rs.roots) needed[root] = std::max(needed[root], 0L);
        if (rs.cofactor.degree() >= 1)
            for (const auto& [mult, f] : rs.cofactor.square_free_decomposition())
                out.unresolved.push_back(f);
    }

    for (const auto& [z0, mult] : needed)
        if (!germs.count(z0))
            throw std::invalid_argument("germ map does not cover the line z = " + rstr(z0));

    for (const auto& [z0, germ] : germs) {
        if (germ.z0 != z0)
            throw std::invalid_argument("germ key and base point disagree at z = " + rstr(z0));
        germ.validate();
        const long mv = vert.is_constant() ? 0 : vert.ord_at(z0);
        if (mv != germ.vertical_mult)
            throw std::invalid_argument("germ/polynomial mismatch at z = " + rstr(z0) +
                                        ": vertical multiplicity " +
                                        std::to_string(germ.vertical_mult) + " vs " +
                                        std::to_string(mv));
        std::vector<WeierstrassPoly> impl;
        for (const auto& b : germ.branches) {
            if (R.eval(z0, b.point_on_line()) != 0)
                throw std::invalid_argument("germ/polynomial mismatch at z = " + rstr(z0) +
                                            ": branch point not on the curve");
            impl.push_back(branch_to_weierstrass(b));
        }
        const long ord_direct =
            (dR >= 1 ? 2 * (dR - 1) * mv + (dscR.is_zero() ? 0 : dscR.ord_at(z0)) : 0);
        if (!impl.empty() && !divides_locally(R, impl, z0, ord_direct + 1))
            throw std::invalid_argument("germ/polynomial mismatch at z = " + rstr(z0) +
                                        ": implicitization does not divide the curve locally");
        DeltaReport rep = curve_delta(germ, dR);
        if (dR >= 1 && rep.ord_dscr != ord_direct)
            throw std::invalid_argument(
                "germ/polynomial mismatch at z = " + rstr(z0) + ": ord(Dscr) = " +
                std::to_string(ord_direct) + " but the germ predicts " +
                std::to_string(rep.ord_dscr));
        LineDelta ld;
        ld.delta = rep.delta_total;
        ld.report = rep;
        if (ord_direct == 2) ld.ord2_tag = classify_ord2(germ, rep.per_branch, rep.pairwise, dR);
        out.total += ld.delta;
        out.per_line.emplace(z0, std::move(ld));
    }
    if (normalization_euler) {
        if (!out.unresolved.empty()) {
            out.global_check = GlobalCheck::not_certifiable;
        } else {
            // every root of the discriminant is accounted for, so the total
            // vanishing order is the plain degree
            const long total_ord =
                (dR >= 1 ? 2 * (dR - 1) * std::max(vert.degree(), 0L) + dscR.degree() : 0);
            if (total_ord != dR - *normalization_euler + 2 * out.total)
                throw internal_consistency_error(
                    "global order identity failed: deg(Dscr) = " + std::to_string(total_ord) +
                    " but d - chi + 2 delta = " +
                    std::to_string(dR - *normalization_euler + 2 * out.total));
            out.global_check = GlobalCheck::verified;
        }
    }
    return out;
}

const char* equisingular_case_name(EquisingularCase c) {
    switch (c) {
        case EquisingularCase::i: return "i";
        case EquisingularCase::ii: return "ii";
        case EquisingularCase::ii_tangent: return "ii-tangent";
        case EquisingularCase::iii: return "iii";
        case EquisingularCase::general_lower_bound: return "general-lower-bound";
    }
    return "?";
}

EquisingularResult equisingular_codim(const CurveGerm& c, long d_total) {
    const DeltaReport rep = curve_delta(c, d_total);
    const long base = rep.delta_total + c.vertical_mult + (rep.d - rep.b);

    // Incidence excess: branches sharing a point of the line beyond the first.
    std::map<Rat, long> at_point;
    for (const auto& b : c.branches) ++at_point[b.point_on_line()];
    long excess_mu = 0;
    for (const auto& [w, cnt] : at_point) excess_mu += cnt - 1;

    // Singularity excess per branch: directions zeta^j, d_i not dividing j,
    // below the contact order.
    long excess_s = 0;
    std::vector<long> branch_excess(c.branches.size(), 0);
    for (std::size_t i = 0; i < c.branches.size(); ++i) {
        const auto& b = c.branches[i];
        if (b.m < 2) continue;
        const long s = b.contact_order();
        long e = 0;
        for (long j = 1; j < s; ++j)
            if (j % b.m != 0) ++e;
        branch_excess[i] = e;
        excess_s += e;
    }

    EquisingularResult res;
    if (excess_mu == 0 && excess_s == 0) {
        res = {base, EquisingularCase::i, true};
    } else if (excess_mu == 1 && excess_s == 0) {
        // find the incident pair
        std::size_t i1 = 0, i2 = 0;
        for (std::size_t i = 0; i < c.branches.size() && i2 == 0; ++i)
            for (std::size_t j = i + 1; j < c.branches.size(); ++j)
                if (c.branches[i].point_on_line() == c.branches[j].point_on_line()) {
                    i1 = i;
                    i2 = j;
                    break;
                }
        const long dij = rep.pairwise[i1][i2];
        const bool both_vertical_tangent = c.branches[i1].m >= 2 && c.branches[i2].m >= 2;
        if (dij == 1 || both_vertical_tangent) {
            res = {base + 1, EquisingularCase::ii, true};
        } else {
            res = {base + 2, EquisingularCase::ii_tangent, false};
        }
    } else if (excess_mu == 0 && excess_s == 1) {
        res = {base + 1, EquisingularCase::iii, true};
    } else {
        res = {base + 2, EquisingularCase::general_lower_bound, false};
    }
    return res;
}

JetCorrection jet_correct(const std::vector<JetSpec>& specs, const RationalPoly& G) {
    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (specs[i].m < 1) throw std::invalid_argument("jet length must be >= 1");
        if (specs[i].jet.degree() >= specs[i].m)
            throw std::invalid_argument("jet degree exceeds m-1 at point " + rstr(specs[i].zeta));
        for (std::size_t j = i + 1; j < specs.size(); ++j)
            if (specs[i].zeta == specs[j].zeta)
                throw std::invalid_argument(
                    "duplicate jet point " + rstr(specs[i].zeta) +
                    ": pre-merge coincident points into a single jet");
    }
    // Chinese remainders: q = p_i(z - zeta_i) - G  (mod (z - zeta_i)^m_i).
    RationalPoly q;                                  // running solution
    RationalPoly modulus = RationalPoly::constant(1);  // product of processed moduli
    for (const auto& s : specs) {
        const RationalPoly mi = RationalPoly::linear_root(s.zeta).pow(static_cast<unsigned>(s.m));
        const RationalPoly target = s.jet.compose_affine(Rat(1), -s.zeta) - G;
        // need q + modulus * t === target (mod mi); t = (target - q) / modulus mod mi
        const RationalPoly diff = RationalPoly::divrem(target - q, mi).second;
        // invert modulus mod mi by extended Euclid
        RationalPoly r0 = mi, r1 = RationalPoly::divrem(modulus, mi).second;
        RationalPoly s0, s1 = RationalPoly::constant(1);
        while (!r1.is_zero() && r1.degree() >= 1) {
            auto [qt, rr] = RationalPoly::divrem(r0, r1);
            RationalPoly s2 = s0 - qt * s1;
            r0 = std::move(r1);
            r1 = std::move(rr);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r1.is_zero())
            throw internal_consistency_error("moduli not coprime in jet correction");
        const RationalPoly inv = (Rat(1) / r1.leading()) * s1;
        const RationalPoly t = RationalPoly::divrem(diff * inv, mi).second;
        q += modulus * t;
        modulus *= mi;
    }
    q = RationalPoly::divrem(q, modulus).second;
    JetCorrection out;
    out.q = q;
    out.H = G + q;
    return out;
}

}  // namespace severi
