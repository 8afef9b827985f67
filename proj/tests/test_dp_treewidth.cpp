#include "doctest.h"

#include <algorithm>

#include "dp_reference.hpp"
#include "test_helpers.hpp"
#include "triclub/dp_treewidth.hpp"
#include "triclub/oracle.hpp"
#include "triclub/testkit.hpp"

using namespace triclub;
using namespace triclub::testing;

namespace {

DpTuple tuple_of(std::vector<int> members, std::vector<int> f,
                 std::vector<std::vector<int>> family) {
    DpTuple t;
    t.members = std::move(members);
    t.f_values = std::move(f);
    t.family = std::move(family);
    t.normalize();
    return t;
}

}  // namespace

TEST_CASE("r_A counts triangles through a vertex pair inside A") {
    Graph k3 = complete(3);
    CHECK(r_A(k3, VertexSet::full(3), 0, 1) == 1);
    Graph k4 = complete(4);
    CHECK(r_A(k4, VertexSet::full(4), 0, 1) == 2);
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(r_A(p3, VertexSet::full(3), 0, 2) == 0);  // not adjacent
    CHECK_THROWS_AS(r_A(k4, VertexSet::from_vertices(4, {0, 1}), 0, 2), std::invalid_argument);
}

TEST_CASE("edges_in_neighborhood") {
    Graph k4 = complete(4);
    CHECK(edges_in_neighborhood(k4, VertexSet::full(4), 0) == 3);
    Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(edges_in_neighborhood(star, VertexSet::full(5), 0) == 0);
    // diamond = K4 minus {2,3}: N(0) = {1,2,3} spans edges {1,2} and {1,3}
    CHECK(edges_in_neighborhood(diamond(), VertexSet::full(4), 0) == 2);
    CHECK(edges_in_neighborhood(diamond(), VertexSet::full(4), 2) == 1);
    CHECK_THROWS_AS(edges_in_neighborhood(k4, VertexSet::from_vertices(4, {0}), 1),
                    std::invalid_argument);
}

TEST_CASE("introduce_compatible") {
    Graph k3 = complete(3);
    // A = {v}, child over the empty set, all conditions vacuous.
    CHECK(introduce_compatible(tuple_of({0}, {0}, {}), tuple_of({}, {}, {}), 0, k3, 1));

    // Family member misses N(v): condition 4 fails.
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(introduce_compatible(tuple_of({0, 3}, {0, 0}, {{0}}),
                                     tuple_of({0}, {0}, {{0}}), 3, p4, 1));

    // Triangle: child over {0,1} with zero counts, introduce 2 raising all to 1.
    CHECK(introduce_compatible(tuple_of({0, 1, 2}, {1, 1, 1}, {}),
                               tuple_of({0, 1}, {0, 0}, {}), 2, k3, 1));
    // Wrong f(v) is rejected.
    CHECK_FALSE(introduce_compatible(tuple_of({0, 1, 2}, {1, 1, 0}, {}),
                                     tuple_of({0, 1}, {0, 0}, {}), 2, k3, 1));
}

TEST_CASE("forget_compatible") {
    Graph k3 = complete(3);
    // f'(v) below r: condition 1 fails.
    CHECK_FALSE(forget_compatible(tuple_of({0}, {1}, {{0}}),
                                  tuple_of({0, 1}, {1, 1}, {{0, 1}}), 1, k3, 2));

    // N(v) ∩ A missing from the parent family: condition 4 fails.
    CHECK_FALSE(forget_compatible(tuple_of({0}, {1}, {}),
                                  tuple_of({0, 1}, {1, 1}, {}), 1, k3, 1));

    // The worked two-vertex example: A = {0}, A' = {0,1}, edge 01.
    Graph e2 = Graph::from_edges(2, {{0, 1}});
    CHECK(forget_compatible(tuple_of({0}, {1}, {{0}}),
                            tuple_of({0, 1}, {1, 1}, {{0}}), 1, e2, 1));
}

TEST_CASE("join_compatible") {
    Graph k3 = complete(3);
    // Both sides equal to the pure-A tuple.
    // f = capped edge counts inside A: every vertex of a triangle sees 1 edge.
    auto pure = tuple_of({0, 1, 2}, {1, 1, 1}, {});
    CHECK(join_compatible(pure, pure, pure, k3, 1));

    // Disjoint family members on opposite sides are rejected.
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(join_compatible(tuple_of({0, 3}, {0, 0}, {{0}, {3}}),
                                tuple_of({0, 3}, {0, 0}, {{0}}),
                                tuple_of({0, 3}, {0, 0}, {{3}}), p4, 1));

    // Intersecting members across sides are accepted.
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(join_compatible(tuple_of({0, 1}, {0, 0}, {{0, 1}, {1}}),
                          tuple_of({0, 1}, {0, 0}, {{0, 1}}),
                          tuple_of({0, 1}, {0, 0}, {{1}}), p3, 1));
}

TEST_CASE("leaf tables contain exactly the empty tuple at zero") {
    Graph k3 = complete(3);
    TreeDecomposition td{{{0, 1, 2}}, {}};
    NiceTreeDecomposition ntd = make_nice(td, k3);
    DpTable table = compute_table(ntd, k3, 1);
    for (int t = 0; t < (int)ntd.nodes.size(); ++t) {
        if (ntd.nodes[t].kind != NiceNode::Kind::leaf) continue;
        REQUIRE(table.per_node[t].size() == 1);
        const auto& [key, entry] = *table.per_node[t].begin();
        CHECK(key.a == 0);
        CHECK(key.fam == 0);  // the {∅}-family tuple is invalid at a leaf
        CHECK(entry.value == 0);
    }
}

TEST_CASE("single-bag K3 trace: full tuple reaches value 3") {
    Graph k3 = complete(3);
    TreeDecomposition td{{{0, 1, 2}}, {}};
    NiceTreeDecomposition ntd = make_nice(td, k3);
    DpTable table = compute_table(ntd, k3, 1);
    int node = -1;
    for (int t = 0; t < (int)ntd.nodes.size(); ++t)
        if (ntd.nodes[t].bag.size() == 3) node = t;
    REQUIRE(node >= 0);
    bool found = false;
    for (const auto& [key, entry] : table.per_node[node]) {
        DpTuple tup = decode_key(ntd, node, key);
        if (tup.members == std::vector<int>{0, 1, 2} &&
            tup.f_values == std::vector<int>{1, 1, 1} && tup.family.empty()) {
            found = true;
            CHECK(entry.value == 3);
        }
    }
    CHECK(found);
}

TEST_CASE("triangle-free graphs never forget a solution vertex") {
    Graph c4 = cycle(4);
    TreeDecomposition td{{{0, 1, 2}, {0, 2, 3}}, {{0, 1}}};
    REQUIRE(validate(td, c4).ok());
    NiceTreeDecomposition ntd = make_nice(td, c4);
    DpTable table = compute_table(ntd, c4, 1);
    for (int t = 0; t < (int)ntd.nodes.size(); ++t)
        for (const auto& [key, entry] : table.per_node[t]) {
            CHECK(key.fam == 0);
            CHECK(entry.value == __builtin_popcount(key.a));
        }
}

TEST_CASE("table equals the exhaustive reference on generated instances") {
    int instances = 0;
    for (std::uint64_t seed = 0; seed < 14; ++seed) {
        int n = 5 + (int)(seed % 3);  // up to 7
        int w = 1 + (int)(seed % 2);  // up to 2
        double keep = (seed % 2) ? 0.75 : 1.0;
        auto inst = gen_bounded_treewidth(n, w, keep, seed * 211 + 17);
        NiceTreeDecomposition ntd = make_nice(*inst.decomposition, inst.graph);
        for (int r = 1; r <= 2; ++r) {
            DpTable table = compute_table(ntd, inst.graph, r);
            auto got = decode_tables(ntd, table);
            auto want = reference_tables(ntd, inst.graph, r);
            REQUIRE(got.size() == want.size());
            for (std::size_t t = 0; t < got.size(); ++t) CHECK(got[t] == want[t]);
        }
        ++instances;
    }
    CHECK(instances == 14);
}

TEST_CASE("table equals the reference on rerooted trees too") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto inst = gen_bounded_treewidth(6, 2, 0.8, seed * 97 + 23);
        NiceTreeDecomposition ntd = make_nice(*inst.decomposition, inst.graph);
        SplitMix64 rng(seed);
        for (int trial = 0; trial < 3; ++trial) {
            int p = (int)rng.below(ntd.nodes.size());
            auto rooted = reroot_for_guess(ntd, p, ntd.nodes[p].bag);
            DpTable table = compute_table(rooted, inst.graph, 1);
            auto got = decode_tables(rooted, table);
            auto want = reference_tables(rooted, inst.graph, 1);
            for (std::size_t t = 0; t < got.size(); ++t) CHECK(got[t] == want[t]);
        }
    }
}

TEST_CASE("solve_treewidth on named graphs") {
    Graph k3 = complete(3);
    TreeDecomposition td3{{{0, 1, 2}}, {}};
    auto res = solve_treewidth(k3, td3, 1, 3);
    CHECK(res.best_size == 3);
    CHECK(res.witness == VertexSet::full(3));

    Graph c5 = cycle(5);
    TreeDecomposition tdc{{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}}, {{0, 1}, {1, 2}}};
    REQUIRE(validate(tdc, c5).ok());
    CHECK(solve_treewidth(c5, tdc, 1, 1).best_size == 0);

    Graph bt = bowtie();
    TreeDecomposition tdb{{{0, 1, 2}, {2, 3, 4}}, {{0, 1}}};
    REQUIRE(validate(tdb, bt).ok());
    auto rb = solve_treewidth(bt, tdb, 1, 5);
    CHECK(rb.best_size == 5);

    // Degeneracy cutoff: width 2 supports at most C(2,2) = 1 triangle per vertex.
    CHECK(solve_treewidth(bt, tdb, 2, 1).best_size == 0);
}

TEST_CASE("solve_treewidth matches the oracle on random bounded-width instances") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int n = 6 + (int)(seed % 5);  // up to 10
        int w = 1 + (int)(seed % 3);  // up to 3
        double keep = 0.6 + 0.2 * (double)(seed % 3);
        auto inst = gen_bounded_treewidth(n, w, keep, seed * 131 + 7);
        for (int r = 1; r <= 3; ++r) {
            auto dp = solve_treewidth(inst.graph, *inst.decomposition, r, 1);
            auto oracle = max_club_bruteforce(inst.graph, r, 2);
            CHECK(dp.best_size == oracle.best_size);
            if (dp.best_size > 0) {
                ProblemInstance check{inst.graph, r, 2, dp.best_size};
                CHECK(verify_solution(check, dp.witness).ok());
            }
        }
    }
}

TEST_CASE("state cap aborts with ResourceLimit") {
    auto inst = gen_bounded_treewidth(8, 3, 1.0, 5);
    DpLimits lim{4};
    CHECK_THROWS_AS(solve_treewidth(inst.graph, *inst.decomposition, 1, 1, lim), ResourceLimit);
}
