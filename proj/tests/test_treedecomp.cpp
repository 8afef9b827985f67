#include "doctest.h"

#include <algorithm>
#include <map>

#include "test_helpers.hpp"
#include "triclub/testkit.hpp"
#include "triclub/treedecomp.hpp"

using namespace triclub;
using namespace triclub::testing;

namespace {

std::map<std::vector<int>, int> bag_multiset(const NiceTreeDecomposition& ntd) {
    std::map<std::vector<int>, int> out;
    for (const auto& nd : ntd.nodes) ++out[nd.bag];
    return out;
}

// Distance (in tree edges) from the root to node p along parent pointers.
int chain_length_above(const NiceTreeDecomposition& ntd, int p) {
    int len = 0;
    int cur = p;
    while (ntd.nodes[cur].parent != -1) {
        cur = ntd.nodes[cur].parent;
        ++len;
    }
    return len;
}

}  // namespace

TEST_CASE("validate accepts and rejects per the three conditions") {
    Graph k4 = complete(4);
    TreeDecomposition single{{{0, 1, 2, 3}}, {}};
    CHECK(validate(single, k4).ok());
    CHECK(single.width() == 3);

    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    TreeDecomposition path{{{0, 1}, {1, 2}}, {{0, 1}}};
    CHECK(validate(path, p3).ok());
    CHECK(path.width() == 1);

    Graph tri = complete(3);
    TreeDecomposition bad{{{0, 1}, {2}}, {{0, 1}}};
    auto v = validate(bad, tri);
    CHECK(v.kind == TdViolation::Kind::edge_uncovered);

    TreeDecomposition uncovered{{{0, 1}}, {}};
    CHECK(validate(uncovered, tri).kind == TdViolation::Kind::vertex_uncovered);

    // Vertex 0 occurs in two bags not connected through bags containing it.
    Graph p3b = Graph::from_edges(3, {{0, 1}, {1, 2}});
    TreeDecomposition disc{{{0, 1}, {1, 2}, {0, 2}}, {{0, 1}, {1, 2}}};
    CHECK(validate(disc, p3b).kind == TdViolation::Kind::disconnected_occurrence);

    TreeDecomposition loops{{{0}, {0}}, {}};
    CHECK(validate(loops, Graph::from_edges(1, {})).kind == TdViolation::Kind::malformed_tree);
}

TEST_CASE("make_nice on a single bag is a leaf-introduce-forget chain") {
    Graph k3 = complete(3);
    TreeDecomposition td{{{0, 1, 2}}, {}};
    NiceTreeDecomposition ntd = make_nice(td, k3);
    CHECK(validate_nice(ntd, k3).ok());
    CHECK(ntd.width() == 2);
    CHECK(ntd.nodes[ntd.root].bag.empty());
    int leaves = 0, intro = 0, forget = 0, join = 0;
    for (const auto& nd : ntd.nodes) {
        switch (nd.kind) {
            case NiceNode::Kind::leaf: ++leaves; break;
            case NiceNode::Kind::introduce: ++intro; break;
            case NiceNode::Kind::forget: ++forget; break;
            case NiceNode::Kind::join: ++join; break;
        }
    }
    CHECK(leaves == 1);
    CHECK(intro == 3);
    CHECK(forget == 3);
    CHECK(join == 0);
}

TEST_CASE("make_nice handles paths and stays valid") {
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}};
    NiceTreeDecomposition ntd = make_nice(td, p3);
    CHECK(validate_nice(ntd, p3).ok());
    CHECK(ntd.width() == 1);

    NiceTreeDecomposition again = make_nice(td, p3);
    CHECK(validate_nice(again, p3).ok());
    CHECK(again.width() == 1);
}

TEST_CASE("make_nice rejects invalid decompositions") {
    Graph tri = complete(3);
    TreeDecomposition bad{{{0, 1}, {2}}, {{0, 1}}};
    CHECK_THROWS_AS(make_nice(bad, tri), std::invalid_argument);
}

TEST_CASE("make_nice validates on generated instances, width preserved") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        int n = 5 + (int)(seed % 6);
        int w = 1 + (int)(seed % 3);
        auto inst = gen_bounded_treewidth(n, w, 0.7, seed * 101 + 13);
        REQUIRE(inst.decomposition.has_value());
        CHECK(validate(*inst.decomposition, inst.graph).ok());
        NiceTreeDecomposition ntd = make_nice(*inst.decomposition, inst.graph);
        CHECK(validate_nice(ntd, inst.graph).ok());
        CHECK(ntd.width() == inst.decomposition->width());
        CHECK((int)ntd.nodes.size() <=
              (ntd.width() + 2) * 2 * (int)inst.decomposition->bags.size() + 2 * n + 4);
    }
}

TEST_CASE("reroot_for_guess basic contracts") {
    Graph k3 = complete(3);
    TreeDecomposition td{{{0, 1, 2}}, {}};
    NiceTreeDecomposition ntd = make_nice(td, k3);
    int p = -1;
    for (int t = 0; t < (int)ntd.nodes.size(); ++t)
        if (ntd.nodes[t].bag.size() == 3) p = t;
    REQUIRE(p >= 0);

    SUBCASE("keep = bag(p): no added forgets") {
        auto r = reroot_for_guess(ntd, p, {0, 1, 2});
        CHECK(r.root == p);
        CHECK(r.nodes[r.root].bag == std::vector<int>{0, 1, 2});
        CHECK(validate_nice(r, k3, false).ok());
    }
    SUBCASE("keep = {}: |bag| forgets, empty root") {
        auto r = reroot_for_guess(ntd, p, {});
        CHECK(chain_length_above(r, p) == 3);
        CHECK(r.nodes[r.root].bag.empty());
        CHECK(validate_nice(r, k3, false).ok());
    }
    SUBCASE("keep one of three: exactly 2 forgets") {
        auto r = reroot_for_guess(ntd, p, {0});
        CHECK(chain_length_above(r, p) == 2);
        CHECK(r.nodes[r.root].bag == std::vector<int>{0});
        int cur = r.root;
        while (cur != p) {
            CHECK(r.nodes[cur].kind == NiceNode::Kind::forget);
            cur = r.nodes[cur].child[0];
        }
    }
    SUBCASE("keep must be inside the bag") {
        int leaf = -1;
        for (int t = 0; t < (int)ntd.nodes.size(); ++t)
            if (ntd.nodes[t].kind == NiceNode::Kind::leaf) leaf = t;
        CHECK_THROWS_AS(reroot_for_guess(ntd, leaf, {0}), std::invalid_argument);
    }
}

TEST_CASE("reroot_for_guess on branching trees: valid, width kept, bags preserved") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int n = 6 + (int)(seed % 5);
        int w = 1 + (int)(seed % 3);
        auto inst = gen_bounded_treewidth(n, w, 0.8, seed * 37 + 5);
        NiceTreeDecomposition ntd = make_nice(*inst.decomposition, inst.graph);
        auto before = bag_multiset(ntd);
        SplitMix64 rng(seed);
        for (int trial = 0; trial < 6; ++trial) {
            int p = (int)rng.below(ntd.nodes.size());
            const auto& bag = ntd.nodes[p].bag;
            std::vector<int> keep;
            for (int v : bag)
                if (rng.next_unit() < 0.5) keep.push_back(v);
            auto r = reroot_for_guess(ntd, p, keep);
            CHECK(validate_nice(r, inst.graph, false).ok());
            CHECK(r.width() == ntd.width());
            CHECK(r.nodes[r.root].bag == keep);
            auto after = bag_multiset(r);
            bool contains_all = true;
            for (auto& [bagv, cnt] : before)
                if (after[bagv] < cnt) contains_all = false;
            CHECK(contains_all);
        }
    }
}

TEST_CASE("heuristic_decomposition") {
    Graph tree = Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
    auto td = heuristic_decomposition(tree);
    CHECK(validate(td, tree).ok());
    CHECK(td.width() == 1);

    Graph k6 = complete(6);
    auto tk = heuristic_decomposition(k6);
    CHECK(validate(tk, k6).ok());
    CHECK(tk.width() == 5);

    Graph c5 = cycle(5);
    auto tc = heuristic_decomposition(c5);
    CHECK(validate(tc, c5).ok());
    CHECK(tc.width() == 2);

    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Graph g = gen_gnp(9, 0.35, seed * 7 + 1);
        auto t = heuristic_decomposition(g);
        CHECK(validate(t, g).ok());
    }
}
