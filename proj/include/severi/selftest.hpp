#ifndef SEVERI_SELFTEST_HPP
#define SEVERI_SELFTEST_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "severi/germs.hpp"
#include "severi/hirzebruch.hpp"
#include "severi/monodromy.hpp"

namespace severi::selftest {

struct CriterionResult {
    int number = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the full acceptance battery; one result per criterion, logging a
/// "criterion N: PASS/FAIL" line per entry to `log` when given.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, std::ostream* log);

bool all_passed(const std::vector<CriterionResult>& rs);

// Seeded generators, shared with the unit tests.
RationalPoly random_poly(SplitMix64& rng, long maxdeg, long range = 4);
WeierstrassPoly random_wpoly(SplitMix64& rng, int d, long maxdeg, bool monic_leading);
GL2PolyMatrix random_gl2(SplitMix64& rng, long maxdeg);
BranchGerm random_branch(SplitMix64& rng, const Rat& z0, long max_m, long maxphideg);
CurveGerm random_germ(SplitMix64& rng, int nbranches, long maxphideg, long max_vertical);

}  // namespace severi::selftest

#endif
