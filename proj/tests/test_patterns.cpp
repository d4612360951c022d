#include <doctest.h>

#include <map>

#include "severi/patterns.hpp"

using namespace severi;

namespace {
MultiplicityPattern P(std::vector<long> v) { return MultiplicityPattern(std::move(v)); }
}  // namespace

TEST_CASE("degeneration relation") {
    CHECK(is_degeneration(P({3}), P({1, 1, 1})));
    CHECK(is_degeneration(P({2, 1}), P({1, 1, 1})));
    CHECK_FALSE(is_degeneration(P({2, 2}), P({3, 1})));
    CHECK(is_degeneration(P({4, 2}), P({2, 2, 1, 1})));
    CHECK_FALSE(is_degeneration(P({1, 1, 1}), P({2, 1})));  // refinement is not degeneration
}

TEST_CASE("strict degenerations") {
    CHECK(strict_degenerations(P({1, 1})) == std::set<MultiplicityPattern>{P({2})});
    CHECK(strict_degenerations(P({1, 1, 1})) ==
          std::set<MultiplicityPattern>{P({2, 1}), P({3})});
    CHECK(strict_degenerations(P({5})).empty());
}

TEST_CASE("viete map") {
    const RationalPoly z{Rat(0), Rat(1)};
    CHECK(viete({Rat(1), Rat(1)}) == z * z - Rat(2) * z + RationalPoly::constant(1));
    CHECK(viete({Rat(0), Rat(0), Rat(0)}) == z.pow(3));
    CHECK(viete({Rat(1), Rat(2), Rat(3)}) ==
          z.pow(3) - Rat(6) * z.pow(2) + Rat(11) * z - RationalPoly::constant(6));
    CHECK(viete({}) == RationalPoly::constant(1));
}

TEST_CASE("pattern_of") {
    const RationalPoly z{Rat(0), Rat(1)};
    SUBCASE("splitting polynomials") {
        const auto r1 = pattern_of(z * z * (z - RationalPoly::constant(1)));
        CHECK(r1.pattern == P({2, 1}));
        CHECK(r1.complete);
        const auto r2 = pattern_of(viete({Rat(1), Rat(2), Rat(3)}));
        CHECK(r2.pattern == P({1, 1, 1}));
        CHECK(r2.complete);
        CHECK(pattern_of(z.pow(5)).pattern == P({5}));
    }
    SUBCASE("irrational content is reported, not guessed") {
        const RationalPoly p = z * z - RationalPoly::constant(2);  // z^2 - 2
        const auto r = pattern_of(p);
        CHECK_FALSE(r.complete);
        CHECK(r.pattern.length() == 0);
        REQUIRE(r.unresolved.size() == 1);
        CHECK(r.unresolved[0] == std::pair<long, long>{1, 2});
    }
    SUBCASE("non-monic input rejected") {
        CHECK_THROWS_AS(pattern_of(Rat(2) * z), std::invalid_argument);
    }
    SUBCASE("agrees with viete on random rational root lists") {
        SplitMix64 rng(23);
        for (int i = 0; i < 40; ++i) {
            std::vector<Rat> roots;
            std::map<Rat, long> mult;
            const int n = 1 + static_cast<int>(rng.below(6));
            for (int t = 0; t < n; ++t) {
                const Rat r = rng.small_rat(2, 2);
                roots.push_back(r);
                ++mult[r];
            }
            std::vector<long> parts;
            for (const auto& [r, m] : mult) parts.push_back(m);
            const auto rep = pattern_of(viete(roots));
            CHECK(rep.complete);
            CHECK(rep.pattern == MultiplicityPattern(parts));
        }
    }
}

TEST_CASE("stratum dimensions") {
    CHECK(stratum_dimension(P({2, 2, 1})) == 3);
    CHECK(stratum_dimension(P({9})) == 1);
    CHECK(stratum_dimension(P({1, 1, 1, 1})) == 4);
    // codim of A_m inside A_(1..1) is degree - length
    for (const auto& m : {P({3, 2}), P({2, 2, 2, 1}), P({4})})
        CHECK(m.degree() - stratum_dimension(m) >= 0);
    // the nodal pattern m(d, nu) has dimension d - nu
    for (long d = 1; d <= 6; ++d)
        for (long nu = 0; 2 * nu <= d; ++nu)
            CHECK(stratum_dimension(MultiplicityPattern::nodal(d, nu)) == d - nu);
}

TEST_CASE("boundary strata have strictly smaller dimension") {
    for (const auto& m : {P({1, 1, 1, 1}), P({2, 2, 1}), P({3, 1, 1})})
        for (const auto& mp : strict_degenerations(m))
            CHECK(stratum_dimension(mp) < stratum_dimension(m));
}
