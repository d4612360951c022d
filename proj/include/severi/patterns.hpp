#ifndef SEVERI_PATTERNS_HPP
#define SEVERI_PATTERNS_HPP

#include <set>
#include <string>
#include <vector>

#include "severi/poly.hpp"

namespace severi {

/// Non-increasing list of positive integers; the root-multiplicity shape of
/// a polynomial of degree |m|.
class MultiplicityPattern {
  public:
    MultiplicityPattern() = default;
    explicit MultiplicityPattern(std::vector<long> parts);

    const std::vector<long>& parts() const { return parts_; }
    long degree() const;
    long length() const { return static_cast<long>(parts_.size()); }

    /// nu twos and d-2nu ones: the nodal pattern m(d, nu).
    static MultiplicityPattern nodal(long d, long nu);

    friend bool operator==(const MultiplicityPattern& a, const MultiplicityPattern& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator<(const MultiplicityPattern& a, const MultiplicityPattern& b) {
        return a.parts_ < b.parts_;
    }

    std::string str() const;

  private:
    std::vector<long> parts_;
};

/// True iff m_prime is a degeneration of m: some surjection of index sets
/// merges parts of m into the parts of m_prime, preserving sums.
bool is_degeneration(const MultiplicityPattern& m_prime, const MultiplicityPattern& m);

/// All strictly coarser patterns (shorter length) reachable by merging parts:
/// the boundary strata of A_m.
std::set<MultiplicityPattern> strict_degenerations(const MultiplicityPattern& m);

/// Monic prod (z - root_i); the Viete map on a root list.
RationalPoly viete(const std::vector<Rat>& roots);

/// dim A_m = length(m).
long stratum_dimension(const MultiplicityPattern& m);

/// Root-multiplicity structure of a monic polynomial, as far as Q can see.
/// Rational roots contribute definite parts; irrational content is reported
/// through the square-free signature, with `complete` false.
struct PatternReport {
    MultiplicityPattern pattern;  // parts certified by rational roots
    bool complete = true;
    /// (multiplicity, degree of the rational-root-free square-free factor)
    std::vector<std::pair<long, long>> unresolved;

    std::string str() const;
};

PatternReport pattern_of(const RationalPoly& p);

}  // namespace severi

#endif
