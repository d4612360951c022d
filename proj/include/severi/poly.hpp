#ifndef SEVERI_POLY_HPP
#define SEVERI_POLY_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "severi/rat.hpp"

namespace severi {

struct PolyRootSplit;

/// Dense univariate polynomial over Q, coefficients indexed by degree
/// (coeffs[i] multiplies z^i). The zero polynomial is the empty vector;
/// otherwise the top coefficient is nonzero.
class RationalPoly {
  public:
    RationalPoly() = default;
    RationalPoly(std::initializer_list<Rat> low_first) : c_(low_first) { normalize(); }
    explicit RationalPoly(std::vector<Rat> low_first) : c_(std::move(low_first)) { normalize(); }
    static RationalPoly constant(const Rat& v);
    static RationalPoly monomial(const Rat& v, std::size_t deg);
    /// z - z0 convenience.
    static RationalPoly linear_root(const Rat& z0);

    bool is_zero() const { return c_.empty(); }
    /// -1 encodes the "minus infinity" degree of the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    Rat operator()(const Rat& z) const;

    RationalPoly operator-() const;
    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    RationalPoly& operator*=(const RationalPoly& o) { return *this = *this * o; }
    friend RationalPoly operator*(const Rat& s, const RationalPoly& p);
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RationalPoly& a, const RationalPoly& b) { return !(a == b); }

    /// Exact Euclidean division; throws on zero divisor.
    static std::pair<RationalPoly, RationalPoly> divrem(const RationalPoly& a, const RationalPoly& b);
    /// Quotient of an exact division; throws if the remainder is nonzero.
    static RationalPoly div_exact(const RationalPoly& a, const RationalPoly& b);
    /// Monic gcd; gcd(0,0) = 0.
    static RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);

    RationalPoly derivative() const;
    RationalPoly monic() const;
    /// p(s*z + t)
    RationalPoly compose_affine(const Rat& s, const Rat& t) const;
    RationalPoly pow(unsigned e) const;

    /// Multiplicity of z0 as a root (0 when p(z0) != 0); throws on the zero polynomial.
    long ord_at(const Rat& z0) const;

    /// All rational roots with multiplicities, plus the root-free cofactor.
    PolyRootSplit rational_roots() const;

    /// Square-free decomposition p = lc * prod f_i^i with f_i monic square-free,
    /// pairwise coprime. Returned as (multiplicity, factor), increasing multiplicity,
    /// trivial factors omitted.
    std::vector<std::pair<long, RationalPoly>> square_free_decomposition() const;

    std::string str(const std::string& var = "z") const;

  private:
    void normalize();
    std::vector<Rat> c_;
};

struct PolyRootSplit {
    std::vector<std::pair<Rat, long>> roots;  // sorted by value
    RationalPoly cofactor;                    // no rational roots
};

/// Monic prod (z - root_i); empty list gives 1.
RationalPoly poly_from_roots(const std::vector<Rat>& roots);

}  // namespace severi

#endif
