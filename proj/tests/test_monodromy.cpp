#include <doctest.h>

#include <algorithm>

#include "severi/json_io.hpp"
#include "severi/monodromy.hpp"

using namespace severi;

namespace {
mpz_class fact(long n) {
    mpz_class f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}
}  // namespace

TEST_CASE("permutations") {
    const Perm p({1, 2, 0});
    const Perm q = Perm::transposition(3, 0, 1);
    CHECK((p * p * p).is_identity());
    CHECK(p.inverse() * p == Perm::identity(3));
    CHECK((p * q)(0) == p(q(0)));
    CHECK(p.cycles_str() == "(0 1 2)");
    CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("group order via stabilizer chain") {
    SUBCASE("single transposition") {
        PermGroup g{3, {Perm::transposition(3, 0, 1)}};
        CHECK(group_order(g) == 2);
    }
    SUBCASE("S3 from a transposition and a 3-cycle") {
        PermGroup g{3, {Perm::transposition(3, 0, 1), Perm({1, 2, 0})}};
        CHECK(group_order(g) == 6);
    }
    SUBCASE("adjacent transpositions generate Sym_n") {
        for (long n = 2; n <= 10; ++n) {
            PermGroup g{n, {}};
            for (long i = 0; i + 1 < n; ++i)
                g.generators.push_back(Perm::transposition(n, i, i + 1));
            CHECK(group_order(g) == fact(n));
        }
    }
    SUBCASE("alternating group") {
        PermGroup g{4, {Perm({1, 2, 0, 3}), Perm({0, 2, 3, 1})}};
        CHECK(group_order(g) == 12);
    }
    SUBCASE("dihedral group on the square") {
        PermGroup g{4, {Perm({1, 2, 3, 0}), Perm({0, 3, 2, 1})}};
        CHECK(group_order(g) == 8);
    }
    SUBCASE("cyclic group from one long cycle") {
        PermGroup g{7, {Perm({1, 2, 3, 4, 5, 6, 0})}};
        CHECK(group_order(g) == 7);
    }
}

TEST_CASE("base monodromy group") {
    SUBCASE("orders match the wreath-style formula") {
        CHECK(group_order(base_group(build_cx_default({2, 2, 1}))) == 4);   // 2! * 2! * 1!
        CHECK(group_order(base_group(build_cx_default({0, 2, 2}))) == 4);   // 2! * 2!
        CHECK(group_order(base_group(build_cx_default({1, 2, 0}))) == 2);
        CHECK(group_order(base_group(build_cx_default({2, 3, 2}))) ==
              mpz_class(8) * 6 * 2);  // (2!)^3 * 3! * 2!
    }
    SUBCASE("section swaps relabel fiber-section nodes") {
        const DegenerateModel m = build_cx_default({0, 3, 2});
        const PermGroup g = base_group(m);
        // the orbit of any fiber-section node under the base group is everything
        CHECK(orbit_of(g, 0).size() == static_cast<std::size_t>(m.node_count()));
    }
}

TEST_CASE("triangle and rectangle move gates") {
    const DegenerateModel tri = build_cx_default({1, 3, 0});
    const SmoothingSet T = SmoothingSet::of({0, 1});
    CHECK_THROWS_AS(rectangle_moves(tri, T), std::invalid_argument);
    // only one node is free: no valid triangle transposition
    CHECK(triangle_moves(tri, T).empty());

    const DegenerateModel k0 = build_cx_default({0, 2, 2});
    const auto trees = enumerate_spanning_trees(dual_graph(k0));
    CHECK_THROWS_AS(triangle_moves(k0, SmoothingSet::of(trees.front())), std::invalid_argument);
    // only one free node on K22 trees: no rectangle can transpose
    for (const auto& t : trees) CHECK(rectangle_moves(k0, SmoothingSet::of(t)).empty());
}

TEST_CASE("rectangle moves on a handpicked double star") {
    const DegenerateModel m = build_cx_default({0, 2, 3});
    // fs nodes in canonical order: (1,1),(1,2),(2,1),(2,2),(3,1),(3,2)
    const SmoothingSet T = SmoothingSet::of({0, 1, 2, 4});
    REQUIRE(smoothing_analysis(m, T).irreducible);
    const auto moves = rectangle_moves(m, T);
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].support == std::vector<long>{2, 4});
    CHECK(moves[0].transposed == std::pair<long, long>{3, 5});
}

TEST_CASE("triangle moves against a brute scan") {
    const DegenerateModel m = build_cx_default({1, 3, 1});
    const Multigraph g = dual_graph(m);
    for (const auto& tree : enumerate_spanning_trees(g)) {
        const SmoothingSet T = SmoothingSet::of(tree);
        const auto moves = triangle_moves(m, T);
        for (const auto& mv : moves) {
            // support smoothed, transposed free
            CHECK(std::binary_search(T.chosen.begin(), T.chosen.end(), mv.support[0]));
            CHECK_FALSE(std::binary_search(T.chosen.begin(), T.chosen.end(), mv.transposed.first));
            CHECK_FALSE(
                std::binary_search(T.chosen.begin(), T.chosen.end(), mv.transposed.second));
            // the three nodes really form a triangle with <= 1 fiber vertex
            auto [a1, b1] = m.node_vertices(mv.support[0]);
            auto [a2, b2] = m.node_vertices(mv.transposed.first);
            auto [a3, b3] = m.node_vertices(mv.transposed.second);
            std::set<long> verts{a1, b1, a2, b2, a3, b3};
            CHECK(verts.size() == 3);
            long fibers = 0;
            for (long v : verts)
                if (v >= m.klass.d) ++fibers;
            CHECK(fibers <= 1);
        }
    }
}

TEST_CASE("concentrate") {
    SUBCASE("already concentrated is the identity trace") {
        const DegenerateModel m = build_cx_default({1, 3, 1});
        // star at section 1: pair nodes (1,2),(1,3) and the fiber edge to section 1
        std::vector<long> star;
        for (long e = 0; e < m.node_count(); ++e) {
            const Node& n = m.nodes[static_cast<std::size_t>(e)];
            if (n.type == Node::Type::section_pair && n.i == 1) star.push_back(e);
            if (n.type == Node::Type::fiber_section && n.j == 1) star.push_back(e);
        }
        const SmoothingSet T = SmoothingSet::of(star);
        REQUIRE(smoothing_analysis(m, T).irreducible);
        const auto res = concentrate(m, T);
        CHECK(res.trace.steps.empty());
        CHECK(res.concentrated.chosen == T.chosen);
    }
    SUBCASE("k=1 trees concentrate onto section 1 with valid steps") {
        const DegenerateModel m = build_cx_default({1, 3, 1});
        for (const auto& tree : enumerate_spanning_trees(dual_graph(m))) {
            const SmoothingSet T = SmoothingSet::of(tree);
            const auto res = concentrate(m, T);
            // final set satisfies (T1)
            for (long e : res.concentrated.chosen) {
                auto [a, b] = m.node_vertices(e);
                CHECK((a == 0 || b == 0));
            }
            // every step: support in current set, result a spanning tree
            std::vector<long> cur = T.chosen;
            for (const auto& step : res.trace.steps) {
                for (long s : step.move.support)
                    CHECK(std::binary_search(cur.begin(), cur.end(), s));
                const auto an = smoothing_analysis(m, SmoothingSet::of(step.resulting));
                CHECK(an.irreducible);
                CHECK(an.genus == 0);
                cur = step.resulting;
            }
            CHECK(cur == res.concentrated.chosen);
        }
    }
    SUBCASE("k=0 trees concentrate onto fiber 1 and section 1") {
        const DegenerateModel m = build_cx_default({0, 2, 2});
        for (const auto& tree : enumerate_spanning_trees(dual_graph(m))) {
            const auto res = concentrate(m, SmoothingSet::of(tree));
            for (long e : res.concentrated.chosen) {
                auto [a, b] = m.node_vertices(e);
                const bool touches_targets =
                    a == 0 || b == 0 || a == m.fiber_vertex(1) || b == m.fiber_vertex(1);
                CHECK(touches_targets);
            }
        }
    }
}

TEST_CASE("full monodromy on pinned models") {
    SUBCASE("k=1 d=3 f=1: order 3! on every tree") {
        const DegenerateModel m = build_cx_default({1, 3, 1});
        CHECK(m.node_count() == 6);
        for (const auto& tree : enumerate_spanning_trees(dual_graph(m))) {
            const auto fm = full_monodromy(m, SmoothingSet::of(tree));
            CHECK(fm.free_nodes.size() == 3);
            CHECK(fm.order == 6);
            CHECK(fm.is_full_symmetric);
            CHECK(fm.transitive);
        }
    }
    SUBCASE("k=0 d=2 f=2: one free node") {
        const DegenerateModel m = build_cx_default({0, 2, 2});
        for (const auto& tree : enumerate_spanning_trees(dual_graph(m))) {
            const auto fm = full_monodromy(m, SmoothingSet::of(tree));
            CHECK(fm.free_nodes.size() == 1);
            CHECK(fm.order == 1);
            CHECK(fm.is_full_symmetric);
        }
    }
    SUBCASE("k=0 d=2 f=3: a single rectangle transposition") {
        const DegenerateModel m = build_cx_default({0, 2, 3});
        for (const auto& tree : enumerate_spanning_trees(dual_graph(m))) {
            const auto fm = full_monodromy(m, SmoothingSet::of(tree));
            CHECK(fm.free_nodes.size() == 2);
            CHECK(fm.order == 2);
            CHECK(fm.is_full_symmetric);
        }
    }
    SUBCASE("free set smaller than two is trivially full") {
        const DegenerateModel m = build_cx_default({1, 2, 1});
        for (const auto& tree : enumerate_spanning_trees(dual_graph(m))) {
            const auto fm = full_monodromy(m, SmoothingSet::of(tree));
            CHECK(fm.order == fact(static_cast<long>(fm.free_nodes.size())));
            CHECK(fm.is_full_symmetric);
        }
    }
}

TEST_CASE("trace and group serialize") {
    const DegenerateModel m = build_cx_default({1, 3, 1});
    const auto trees = enumerate_spanning_trees(dual_graph(m));
    const auto res = concentrate(m, SmoothingSet::of(trees.front()));
    const json jt = trace_to_json(res.trace);
    CHECK(jt.contains("steps"));
    const auto fm = full_monodromy(m, SmoothingSet::of(trees.front()));
    const json jg = perm_group_to_json(fm.group);
    CHECK(jg.at("points").get<long>() == 3);
}

TEST_CASE("trace replay") {
    for (const HirzebruchClass klass : {HirzebruchClass{1, 3, 1}, HirzebruchClass{0, 2, 3}}) {
        const DegenerateModel m = build_cx_default(klass);
        for (const auto& tree : enumerate_spanning_trees(dual_graph(m))) {
            const SmoothingSet T = SmoothingSet::of(tree);
            const auto res = concentrate(m, T);
            CHECK(replay_trace(m, T, res.trace).chosen == res.concentrated.chosen);
        }
    }
    SUBCASE("tampered traces are rejected") {
        const DegenerateModel m = build_cx_default({1, 3, 1});
        std::vector<long> nonstar;
        // a tree with a node off section 1: the pair node (2,3) plus two fiber edges
        nonstar = {m.node_index({Node::Type::section_pair, 2, 3, 1}),
                   m.node_index({Node::Type::fiber_section, 1, 1, 0}),
                   m.node_index({Node::Type::fiber_section, 1, 2, 0})};
        const SmoothingSet T = SmoothingSet::of(nonstar);
        REQUIRE(smoothing_analysis(m, T).irreducible);
        auto res = concentrate(m, T);
        REQUIRE(!res.trace.steps.empty());
        auto bad = res.trace;
        bad.steps[0].resulting.back() += (bad.steps[0].resulting.back() == 0 ? 1 : -1);
        CHECK_THROWS_AS(replay_trace(m, T, bad), std::invalid_argument);
    }
}
