#include <doctest.h>

#include "severi/hirzebruch.hpp"
#include "severi/json_io.hpp"
#include "severi/resultant.hpp"
#include "severi/selftest.hpp"

using namespace severi;

namespace {
const RationalPoly Z = RationalPoly{Rat(0), Rat(1)};
RationalPoly C(long v) { return RationalPoly::constant(Rat(v)); }
}  // namespace

TEST_CASE("class invariants and genus bound") {
    CHECK(genus_max({1, 3, 2}) == 5);
    CHECK(genus_max({0, 1, 1}) == 0);
    CHECK(genus_max({2, 2, 0}) == 1);
    CHECK_THROWS_AS(genus_max({0, 2, 0}), std::invalid_argument);  // k=0 needs f>=1
    CHECK_THROWS_AS(genus_max({1, 0, 1}), std::invalid_argument);
    CHECK(m0_star({2, 3, 1}, true) == 3);
    CHECK(m0_star({2, 3, 1}, false) == 1);
}

TEST_CASE("build_cx node inventories") {
    CHECK(build_cx_default({1, 2, 1}).node_count() == 3);
    CHECK(build_cx_default({0, 2, 2}).node_count() == 4);
    CHECK(build_cx_default({1, 3, 2}).node_count() == 9);
    // genericity violations
    const std::vector<RationalPoly> coincident{Z, Z};
    CHECK_THROWS_AS(build_cx({1, 2, 0}, coincident, {}), std::invalid_argument);
    const std::vector<RationalPoly> tangent{Z * Z, {}};  // difference z^2 not square-free
    CHECK_THROWS_AS(build_cx({2, 2, 0}, tangent, {}), std::invalid_argument);
    const std::vector<RationalPoly> equal_lead{Z + C(1), Z};  // degree-0 difference, meets at inf
    CHECK_THROWS_AS(build_cx({1, 2, 0}, equal_lead, {}), std::invalid_argument);
    // fiber through a node
    const std::vector<RationalPoly> lines{Z, -Z};
    CHECK_THROWS_AS(build_cx({1, 2, 1}, lines, {Rat(0)}), std::invalid_argument);
    CHECK(build_cx({1, 2, 1}, lines, {Rat(1)}).node_count() == 3);
    // triple point: three lines through the origin
    const std::vector<RationalPoly> triple{Z, Rat(2) * Z, Rat(3) * Z};
    CHECK_THROWS_AS(build_cx({1, 3, 0}, triple, {}), std::invalid_argument);
}

TEST_CASE("slot binding via pattern_of") {
    const DegenerateModel m = build_cx_default({1, 3, 0}, 0);
    for (const auto& [pair, locus] : m.pair_loci) {
        CHECK(locus.pattern.complete);  // k = 1 differences always split
        CHECK(locus.rational_roots.size() == 1);
        CHECK(locus.pattern.pattern == MultiplicityPattern({1}));
    }
}

TEST_CASE("toric degeneration") {
    const HirzebruchClass klass{1, 2, 1};
    // P in the system 2 C0 + F: deg a_i <= 1 + i
    const WeierstrassPoly P(2, {C(2) + Z, Z * Z - C(1), Z + C(3)});
    SUBCASE("lambda = 1 is the identity") {
        CHECK(toric_degenerate(P, klass, Rat(1)) == P);
    }
    SUBCASE("group action composition") {
        const auto a = toric_degenerate(toric_degenerate(P, klass, Rat(2)), klass, Rat(3, 5));
        const auto b = toric_degenerate(P, klass, Rat(6, 5));
        CHECK(a == b);
    }
    SUBCASE("top coefficients are invariant") {
        const auto Q = toric_degenerate(P, klass, Rat(7));
        for (int i = 0; i <= P.d; ++i) {
            const long top = klass.f + i * klass.k;
            CHECK(Q.a[static_cast<std::size_t>(i)].coeff(static_cast<std::size_t>(top)) ==
                  P.a[static_cast<std::size_t>(i)].coeff(static_cast<std::size_t>(top)));
        }
    }
    SUBCASE("degree bound enforcement") {
        const WeierstrassPoly bad(2, {Z * Z, C(0), C(1)});  // deg a_0 = 2 > f + 0k = 1
        CHECK_THROWS_AS(toric_degenerate(bad, klass, Rat(2)), std::invalid_argument);
    }
    SUBCASE("discriminant transforms by the induced coordinate change") {
        // Dscr(toric(P, l))(z) = l^(-f(2d-2) - k d(d-1)) Dscr(P)(l z)
        for (const Rat& lambda : {Rat(2), Rat(-3), Rat(1, 2)}) {
            const RationalPoly lhs = discriminant(toric_degenerate(P, klass, lambda));
            const long expo = -klass.f * (2 * P.d - 2) - klass.k * P.d * (P.d - 1);
            const RationalPoly rhs =
                rat_pow(lambda, expo) * discriminant(P).compose_affine(lambda, Rat(0));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("dual graph shapes") {
    SUBCASE("K22") {
        const Multigraph g = dual_graph(build_cx_default({0, 2, 2}));
        CHECK(g.vertices == 4);
        CHECK(g.edges.size() == 4);
    }
    SUBCASE("triangle") {
        const Multigraph g = dual_graph(build_cx_default({1, 3, 0}));
        CHECK(g.vertices == 3);
        CHECK(g.edges.size() == 3);
    }
    SUBCASE("parallel edges plus fibers") {
        const Multigraph g = dual_graph(build_cx_default({2, 2, 1}));
        CHECK(g.vertices == 3);
        CHECK(g.edges.size() == 4);  // 2 parallel + 2 fiber edges
    }
}

TEST_CASE("smoothing analysis") {
    const DegenerateModel tri = build_cx_default({1, 3, 0});
    SUBCASE("empty set is reducible") {
        const auto an = smoothing_analysis(tri, SmoothingSet::of({}));
        CHECK_FALSE(an.irreducible);
        CHECK(an.components.size() == 3);
    }
    SUBCASE("spanning tree has genus 0") {
        const auto an = smoothing_analysis(tri, SmoothingSet::of({0, 1}));
        CHECK(an.irreducible);
        CHECK(an.genus == 0);
    }
    SUBCASE("all three edges of the triangle give genus 1") {
        const auto an = smoothing_analysis(tri, SmoothingSet::of({0, 1, 2}));
        CHECK(an.irreducible);
        CHECK(an.genus == 1);
    }
    SUBCASE("size d+f-1 subsets: irreducible iff spanning tree iff genus 0") {
        const DegenerateModel m = build_cx_default({1, 3, 1});
        const long want = m.klass.d + m.klass.f - 1;
        SplitMix64 rng(31);
        const auto trees = enumerate_spanning_trees(dual_graph(m));
        auto is_tree = [&](const std::vector<long>& s) {
            return std::find(trees.begin(), trees.end(), s) != trees.end();
        };
        for (int i = 0; i < 60; ++i) {
            std::vector<long> pick;
            while (static_cast<long>(pick.size()) < want) {
                const long e = static_cast<long>(rng.below(
                    static_cast<std::uint64_t>(m.node_count())));
                if (std::find(pick.begin(), pick.end(), e) == pick.end()) pick.push_back(e);
            }
            const SmoothingSet s = SmoothingSet::of(pick);
            const auto an = smoothing_analysis(m, s);
            CHECK(an.irreducible == is_tree(s.chosen));
            if (an.irreducible) CHECK(an.genus == 0);
        }
    }
    SUBCASE("genus grows by one per extra edge on a connected set") {
        const DegenerateModel m = build_cx_default({2, 3, 2});
        const auto trees = enumerate_spanning_trees(dual_graph(m));
        REQUIRE(!trees.empty());
        std::vector<long> chosen = trees.front();
        auto an = smoothing_analysis(m, SmoothingSet::of(chosen));
        REQUIRE(an.genus == 0);
        long expected = 0;
        for (long e = 0; e < m.node_count(); ++e) {
            if (std::find(chosen.begin(), chosen.end(), e) != chosen.end()) continue;
            chosen.push_back(e);
            ++expected;
            an = smoothing_analysis(m, SmoothingSet::of(chosen));
            CHECK(an.irreducible);
            CHECK(an.genus == expected);
        }
        CHECK(expected == genus_max(m.klass));
    }
}

TEST_CASE("spanning tree counts") {
    CHECK(count_rational_smoothings(build_cx_default({1, 2, 1})) == 3);
    CHECK(count_rational_smoothings(build_cx_default({0, 2, 2})) == 4);
    CHECK(count_rational_smoothings(build_cx_default({1, 3, 0})) == 3);
    SUBCASE("matrix-tree agrees with the sweep") {
        for (const HirzebruchClass klass : {HirzebruchClass{2, 3, 1}, HirzebruchClass{0, 3, 3},
                                            HirzebruchClass{1, 3, 2}}) {
            const Multigraph g = dual_graph(build_cx_default(klass));
            CHECK(spanning_tree_count_matrix_tree(g) == spanning_tree_count_parallel(g));
            CHECK(spanning_tree_count_serial(g) == spanning_tree_count_parallel(g));
        }
    }
    SUBCASE("node-count/genus consistency across the grid") {
        for (long k = 0; k <= 3; ++k)
            for (long d = 1; d <= 4; ++d)
                for (long f = (k == 0 ? 1 : 0); f <= 4; ++f) {
                    const DegenerateModel m = build_cx_default({k, d, f}, 1);
                    CHECK(genus_max(m.klass) == m.node_count() - (d + f) + 1);
                }
    }
}

TEST_CASE("section counts") {
    CHECK(section_count(0).count == 1);
    CHECK_FALSE(section_count(0).monodromy_order.has_value());
    CHECK(section_count(1).count == 2);
    CHECK(section_count(1).monodromy_order == 2);
    CHECK(section_count(1).monodromy_inferred);
    CHECK(section_count(2).count == 4);
    CHECK(section_count(2).monodromy_order == 24);
    CHECK(section_count(3).count == 8);
    CHECK(section_count(3).monodromy_order == 40320);
    CHECK(section_count(3).plane_image_nodes == 7);
    CHECK_THROWS_AS(section_count(4), std::invalid_argument);
    CHECK_THROWS_AS(section_count(-1), std::invalid_argument);
}

TEST_CASE("model JSON round trip") {
    const DegenerateModel m = build_cx_default({1, 3, 2}, 5);
    const json j = model_to_json(m);
    const DegenerateModel back = model_from_json(j);
    CHECK(back.klass.k == 1);
    CHECK(back.node_count() == m.node_count());
    CHECK(back.sections == m.sections);
    CHECK(back.fibers == m.fibers);
}
