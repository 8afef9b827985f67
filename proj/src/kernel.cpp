#include "triclub/kernel.hpp"

#include <algorithm>

namespace triclub {

FeedbackEdgeDecomposition feedback_edge_decomposition(const Graph& g) {
    int n = g.vertex_count();
    FeedbackEdgeDecomposition fed;
    fed.endpoint_set = VertexSet(n);
    std::vector<int> parent(n, -2);

    // Each undirected edge is classified once, at its first traversal.
    std::vector<std::vector<char>> used(n);
    for (int v = 0; v < n; ++v) used[v].assign(g.neighbors(v).size(), 0);
    auto neighbor_slot = [&](int u, int v) {
        const auto& nb = g.neighbors(u);
        return (int)(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
    };

    // Pre-order DFS, lowest root first, neighbors ascending, emulated with an
    // explicit (vertex, neighbor-slot) stack so edge discovery order matches the
    // recursive traversal.
    for (int root = 0; root < n; ++root) {
        if (parent[root] != -2) continue;
        parent[root] = -1;
        std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
        while (!stack.empty()) {
            auto& [u, slot] = stack.back();
            if (slot == g.neighbors(u).size()) {
                stack.pop_back();
                continue;
            }
            int v = g.neighbors(u)[slot++];
            if (used[u][neighbor_slot(u, v)]) continue;
            used[u][neighbor_slot(u, v)] = 1;
            used[v][neighbor_slot(v, u)] = 1;
            if (parent[v] == -2) {
                parent[v] = u;
                fed.forest_edges.emplace_back(std::min(u, v), std::max(u, v));
                stack.emplace_back(v, 0);
            } else {
                fed.feedback_edges.emplace_back(std::min(u, v), std::max(u, v));
                fed.endpoint_set.insert(u);
                fed.endpoint_set.insert(v);
            }
        }
    }
    return fed;
}

std::optional<int> satisfied_vertex(const Graph& g, const FeedbackEdgeDecomposition& fed,
                                    std::pair<int, int> e) {
    auto [u, v] = e;
    if (u > v) std::swap(u, v);
    bool found = false;
    for (auto [a, b] : fed.feedback_edges)
        if (a == u && b == v) found = true;
    if (!found) throw std::invalid_argument("satisfied_vertex: not a feedback edge");

    std::optional<int> result;
    for (int w : g.neighbors(u)) {
        if (w == v || fed.endpoint_set.contains(w)) continue;
        if (!g.has_edge(w, v)) continue;
        if (result)
            throw std::logic_error("satisfied_vertex: two candidates for one feedback edge "
                                   "(non-forest tree part)");
        result = w;
    }
    return result;
}

namespace {

ProblemInstance diamond_no_instance(int s) {
    Graph diamond = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    return ProblemInstance{diamond, 3, s, 4};
}

}  // namespace

KernelResult kernelize(const ProblemInstance& inst) {
    inst.validate();
    KernelResult out;

    // Vertices in no triangle belong to no solution; drop them to a fixpoint.
    VertexSet alive = peel_low_triangle_vertices(inst.graph, 1);
    InducedSubgraph sub = induced_subgraph(inst.graph, alive);
    const Graph& gp = sub.graph;

    FeedbackEdgeDecomposition fed = feedback_edge_decomposition(gp);
    int fes = (int)fed.feedback_edges.size();

    if (inst.r > fes) {
        out.case_taken = KernelResult::Case::r_exceeds_fes;
        auto d = fed.endpoint_set.to_vector();
        if (inst.ell > (int)d.size()) {
            out.trivial_no = true;
            out.instance = diamond_no_instance(inst.s);
            return out;
        }
        InducedSubgraph ker = induced_subgraph(gp, fed.endpoint_set);
        out.instance = ProblemInstance{ker.graph, inst.r, inst.s, inst.ell};
        for (int x : ker.original_id) out.kept_vertices.push_back(sub.original_id[x]);
        return out;
    }

    out.case_taken = KernelResult::Case::main;
    VertexSet keep = fed.endpoint_set;
    for (auto e : fed.feedback_edges) {
        auto w = satisfied_vertex(gp, fed, e);
        if (w && !keep.contains(*w)) keep.insert(*w);
    }
    InducedSubgraph ker = induced_subgraph(gp, keep);
    out.instance = ProblemInstance{ker.graph, inst.r, inst.s, inst.ell};
    for (int x : ker.original_id) out.kept_vertices.push_back(sub.original_id[x]);
    return out;
}

}  // namespace triclub
