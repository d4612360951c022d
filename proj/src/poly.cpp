#include "severi/poly.hpp"

#include <algorithm>
#include <sstream>

namespace severi {

Rat rat_parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    return q.get_str();
}

Rat rat_pow(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    if (base == 0) {
        if (exp < 0) throw std::domain_error("0 to a negative power");
        return Rat(0);
    }
    Rat b = exp < 0 ? Rat(1) / base : base;
    long e = exp < 0 ? -exp : exp;
    Rat out(1);
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

void RationalPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPoly RationalPoly::constant(const Rat& v) {
    RationalPoly p;
    if (v != 0) p.c_ = {v};
    return p;
}

RationalPoly RationalPoly::monomial(const Rat& v, std::size_t deg) {
    RationalPoly p;
    if (v != 0) {
        p.c_.assign(deg + 1, Rat(0));
        p.c_[deg] = v;
    }
    return p;
}

RationalPoly RationalPoly::linear_root(const Rat& z0) {
    return RationalPoly{-z0, Rat(1)};
}

Rat RationalPoly::operator()(const Rat& z) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly p(*this);
    for (auto& x : p.c_) x = -x;
    return p;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RationalPoly p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
    }
    p.normalize();
    return p;
}

RationalPoly operator*(const Rat& s, const RationalPoly& p) {
    if (s == 0) return {};
    RationalPoly q(p);
    for (auto& x : q.c_) x *= s;
    return q;
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divrem(const RationalPoly& a, const RationalPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {{}, a};
    RationalPoly r = a;
    RationalPoly q;
    q.c_.assign(a.c_.size() - b.c_.size() + 1, Rat(0));
    const Rat inv_lead = Rat(1) / b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const std::size_t shift = r.c_.size() - b.c_.size();
        const Rat f = r.leading() * inv_lead;
        q.c_[shift] = f;
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[shift + i] -= f * b.c_[i];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

RationalPoly RationalPoly::div_exact(const RationalPoly& a, const RationalPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

RationalPoly RationalPoly::gcd(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divrem(x, y);
        (void)q;
        x = std::move(y);
        y = std::move(r);
        // keep coefficients small; gcd is only defined up to units anyway
        if (!y.is_zero()) y = y.monic();
    }
    return x.is_zero() ? x : x.monic();
}

RationalPoly RationalPoly::derivative() const {
    RationalPoly p;
    if (c_.size() <= 1) return p;
    p.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) p.c_[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    p.normalize();
    return p;
}

RationalPoly RationalPoly::monic() const {
    if (is_zero()) return {};
    return (Rat(1) / leading()) * *this;
}

RationalPoly RationalPoly::compose_affine(const Rat& s, const Rat& t) const {
    RationalPoly acc;
    const RationalPoly arg{t, s};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * arg + constant(*it);
    return acc;
}

RationalPoly RationalPoly::pow(unsigned e) const {
    RationalPoly out = constant(Rat(1));
    RationalPoly b = *this;
    while (e > 0) {
        if (e & 1u) out = out * b;
        b = b * b;
        e >>= 1u;
    }
    return out;
}

long RationalPoly::ord_at(const Rat& z0) const {
    if (is_zero()) throw std::domain_error("vanishing order of the zero polynomial is undefined");
    long ord = 0;
    RationalPoly p = *this;
    const RationalPoly lin = linear_root(z0);
    while ((p)(z0) == 0) {
        p = div_exact(p, lin);
        ++ord;
    }
    return ord;
}

namespace {

// Candidate rational roots of a primitive integer polynomial: p/q with
// p | constant term, q | leading term.
std::vector<Rat> root_candidates(const RationalPoly& p) {
    mpz_class den(1);
    for (const auto& c : p.coeffs()) den = lcm(den, Rat(c).get_den());
    std::vector<mpz_class> ic;
    ic.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) ic.push_back(mpz_class(Rat(c).get_num() * (den / Rat(c).get_den())));
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    std::vector<Rat> out;
    if (low >= ic.size()) return out;
    mpz_class a0 = abs(ic[low]);
    mpz_class an = abs(ic.back());
    auto divisors = [](const mpz_class& n) {
        std::vector<mpz_class> ds;
        for (mpz_class d(1); d * d <= n; ++d) {
            if (n % d == 0) {
                ds.push_back(d);
                if (d * d != n) ds.push_back(n / d);
            }
        }
        return ds;
    };
    for (const auto& p_ : divisors(a0))
        for (const auto& q_ : divisors(an)) {
            Rat r(p_, q_);
            r.canonicalize();
            out.push_back(r);
            out.push_back(-r);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

PolyRootSplit RationalPoly::rational_roots() const {
    if (is_zero()) throw std::domain_error("roots of the zero polynomial are undefined");
    PolyRootSplit rs;
    RationalPoly p = *this;
    // split off z = 0 first, then use the rational root theorem
    long m0 = 0;
    while (!p.is_zero() && p.coeff(0) == 0 && p.degree() >= 1) {
        p = div_exact(p, RationalPoly{Rat(0), Rat(1)});
        ++m0;
    }
    if (m0 > 0) rs.roots.emplace_back(Rat(0), m0);
    for (const Rat& cand : root_candidates(p)) {
        if (p.is_constant()) break;
        long mult = 0;
        const RationalPoly lin = linear_root(cand);
        while (!p.is_constant() && (p)(cand) == 0) {
            p = div_exact(p, lin);
            ++mult;
        }
        if (mult > 0) rs.roots.emplace_back(cand, mult);
    }
    std::sort(rs.roots.begin(), rs.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    rs.cofactor = p;
    return rs;
}

std::vector<std::pair<long, RationalPoly>> RationalPoly::square_free_decomposition() const {
    // Yun's algorithm over Q.
    std::vector<std::pair<long, RationalPoly>> out;
    if (is_zero() || is_constant()) return out;
    RationalPoly p = monic();
    RationalPoly g = gcd(p, p.derivative());
    RationalPoly w = div_exact(p, g);
    RationalPoly y = div_exact(p.derivative(), g);
    long i = 1;
    while (!w.is_constant()) {
        RationalPoly z = y - w.derivative();
        RationalPoly f = gcd(w, z);
        if (f.degree() >= 1) out.emplace_back(i, f.monic());
        w = div_exact(w, f);
        y = div_exact(z, f);
        ++i;
    }
    return out;
}

std::string RationalPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rat& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rat a = abs(c);
        const bool unit = (a == 1);
        if (i == 0 || !unit) os << rat_str(a);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RationalPoly poly_from_roots(const std::vector<Rat>& roots) {
    RationalPoly p = RationalPoly::constant(Rat(1));
    for (const Rat& r : roots) p = p * RationalPoly::linear_root(r);
    return p;
}

}  // namespace severi
