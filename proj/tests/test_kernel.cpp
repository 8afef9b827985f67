#include "doctest.h"

#include <algorithm>
#include <set>

#include "test_helpers.hpp"
#include "triclub/kernel.hpp"
#include "triclub/oracle.hpp"
#include "triclub/testkit.hpp"

using namespace triclub;
using namespace triclub::testing;

TEST_CASE("feedback_edge_decomposition") {
    Graph tree = Graph::from_edges(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}});
    auto fed = feedback_edge_decomposition(tree);
    CHECK(fed.feedback_edges.empty());
    CHECK(fed.forest_edges.size() == 4);
    CHECK(fed.endpoint_set.empty());

    auto c5 = feedback_edge_decomposition(cycle(5));
    CHECK(c5.feedback_edges.size() == 1);

    auto k4 = feedback_edge_decomposition(complete(4));
    CHECK(k4.feedback_edges.size() == 3);  // m - n + c = 6 - 4 + 1

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = gen_gnp(12, 0.3, seed * 19 + 2);
        auto fed2 = feedback_edge_decomposition(g);
        // removing F leaves a forest: |T| = n - c
        int comps = 0;
        {
            std::vector<char> seen(12, 0);
            for (int s = 0; s < 12; ++s) {
                if (seen[s]) continue;
                ++comps;
                std::vector<int> stack{s};
                seen[s] = 1;
                while (!stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    for (int w : g.neighbors(u))
                        if (!seen[w]) {
                            seen[w] = 1;
                            stack.push_back(w);
                        }
                }
            }
        }
        CHECK((int)fed2.feedback_edges.size() == (int)g.edge_count() - 12 + comps);
        CHECK(fed2.endpoint_set.size() <= 2 * (int)fed2.feedback_edges.size());
        Graph forest = Graph::from_edges(12, fed2.forest_edges);
        CHECK((int)forest.edge_count() == 12 - comps);
    }
}

TEST_CASE("satisfied_vertex") {
    // Triangle: tree edges 0-1, 1-2; feedback edge {0,2}; D = {0,2}; vertex 1 satisfied.
    Graph tri = complete(3);
    auto fed = feedback_edge_decomposition(tri);
    REQUIRE(fed.feedback_edges.size() == 1);
    auto w = satisfied_vertex(tri, fed, fed.feedback_edges[0]);
    REQUIRE(w.has_value());
    CHECK(!fed.endpoint_set.contains(*w));

    auto c5fed = feedback_edge_decomposition(cycle(5));
    CHECK_FALSE(satisfied_vertex(cycle(5), c5fed, c5fed.feedback_edges[0]).has_value());

    // K4: every vertex ends up in D, so no feedback edge satisfies anyone.
    Graph k4 = complete(4);
    auto k4fed = feedback_edge_decomposition(k4);
    if (k4fed.endpoint_set.size() == 4)
        for (auto e : k4fed.feedback_edges)
            CHECK_FALSE(satisfied_vertex(k4, k4fed, e).has_value());

    CHECK_THROWS_AS(satisfied_vertex(tri, fed, {0, 1}), std::invalid_argument);

    // Doctored decomposition whose "forest" part is not a forest: two candidates.
    Graph cheat = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    FeedbackEdgeDecomposition fake;
    fake.endpoint_set = VertexSet::from_vertices(4, {0, 1});
    fake.feedback_edges = {{0, 1}};
    CHECK_THROWS_AS(satisfied_vertex(cheat, fake, {0, 1}), std::logic_error);
}

TEST_CASE("kernelize cases") {
    // Forests are triangle-free: peeling empties them, giving the trivial no.
    Graph tree = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    auto ker = kernelize(ProblemInstance{tree, 1, 2, 2});
    CHECK(ker.trivial_no);
    CHECK(ker.case_taken == KernelResult::Case::r_exceeds_fes);
    CHECK(ker.instance.r == 3);
    CHECK(ker.instance.ell == 4);
    CHECK(ker.instance.graph.vertex_count() == 4);
    CHECK(ker.instance.graph.edge_count() == 5);
    CHECK_FALSE(decide(ker.instance).yes);

    // K4 at r=5: fes = 3 < r, |D| = 4 >= ell; kernel is G[D].
    auto k4a = kernelize(ProblemInstance{complete(4), 5, 2, 4});
    CHECK(k4a.case_taken == KernelResult::Case::r_exceeds_fes);
    CHECK_FALSE(k4a.trivial_no);
    CHECK_FALSE(decide(k4a.instance).yes);
    CHECK_FALSE(decide(ProblemInstance{complete(4), 5, 2, 4}).yes);

    // K4 at r=3: main case; small kernel, same yes answer.
    auto k4b = kernelize(ProblemInstance{complete(4), 3, 2, 4});
    CHECK(k4b.case_taken == KernelResult::Case::main);
    CHECK(k4b.instance.graph.vertex_count() <= 9);
    CHECK(decide(k4b.instance).yes == decide(ProblemInstance{complete(4), 3, 2, 4}).yes);
}

TEST_CASE("kernel size bounds and equivalence on random graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int n = 6 + (int)(seed % 7);
        Graph g = gen_gnp(n, 0.25 + 0.05 * (double)(seed % 5), seed * 41 + 3);
        auto fed0 = feedback_edge_decomposition(
            induced_subgraph(g, peel_low_triangle_vertices(g, 1)).graph);
        int fes = (int)fed0.feedback_edges.size();
        for (int r : {1, 2, fes + 1}) {
            if (r < 1) continue;
            for (int ell : {2, 4}) {
                ProblemInstance inst{g, r, 2, ell};
                auto ker = kernelize(inst);
                if (!ker.trivial_no) {
                    CHECK(ker.instance.graph.vertex_count() <= 3 * fes);
                    CHECK((int)ker.instance.graph.edge_count() <= std::max(0, 4 * fes - 1));
                }
                CHECK(decide(ker.instance).yes == decide(inst).yes);
            }
        }
    }
}

TEST_CASE("vertices outside D sit in at most fes triangles; satisfied vertices unique") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        int n = 8 + (int)(seed % 5);
        Graph g = gen_gnp(n, 0.3, seed * 53 + 11);
        auto fed = feedback_edge_decomposition(g);
        int fes = (int)fed.feedback_edges.size();
        auto counts = triangle_counts(g, VertexSet::full(n));
        for (int v = 0; v < n; ++v)
            if (!fed.endpoint_set.contains(v)) CHECK(counts[v] <= fes);
        for (auto e : fed.feedback_edges)
            CHECK_NOTHROW(satisfied_vertex(g, fed, e));  // never two candidates
    }
}

TEST_CASE("when r exceeds fes every witness lives inside D") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int n = 7 + (int)(seed % 5);
        Graph g = gen_gnp(n, 0.35, seed * 61 + 29);
        auto fed = feedback_edge_decomposition(g);
        int fes = (int)fed.feedback_edges.size();
        int r = fes + 1;
        auto res = max_club_bruteforce(g, r, 2);
        if (res.best_size > 0)
            for (int v : res.witness.to_vector()) CHECK(fed.endpoint_set.contains(v));
    }
}
