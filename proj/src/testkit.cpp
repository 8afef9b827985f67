#include "triclub/testkit.hpp"

#include <algorithm>

namespace triclub {

Graph gen_gnp(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p out of [0,1]");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_unit() < p) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

GeneratedInstance gen_bounded_treewidth(int n, int w, double edge_keep, std::uint64_t seed) {
    if (w < 1 || w + 1 > n) throw std::invalid_argument("need 1 <= w and w + 1 <= n");
    if (edge_keep < 0.0 || edge_keep > 1.0) throw std::invalid_argument("edge_keep out of [0,1]");
    SplitMix64 rng(seed);

    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> cliques;    // w-sized attachment candidates
    std::vector<int> clique_home;             // decomposition node containing each clique
    TreeDecomposition td;

    std::vector<int> base(w + 1);
    for (int i = 0; i <= w; ++i) base[i] = i;
    for (int i = 0; i <= w; ++i)
        for (int j = i + 1; j <= w; ++j) edges.emplace_back(i, j);
    td.bags.push_back(base);
    for (int skip = 0; skip <= w; ++skip) {
        std::vector<int> c;
        for (int i = 0; i <= w; ++i)
            if (i != skip) c.push_back(i);
        cliques.push_back(c);
        clique_home.push_back(0);
    }

    for (int v = w + 1; v < n; ++v) {
        int pick = (int)rng.below(cliques.size());
        const std::vector<int> attach = cliques[pick];
        for (int u : attach) edges.emplace_back(u, v);
        std::vector<int> bag = attach;
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        td.bags.push_back(bag);
        int node = (int)td.bags.size() - 1;
        td.edges.emplace_back(node, clique_home[pick]);
        for (int skip = 0; skip < w; ++skip) {
            std::vector<int> c;
            for (int i = 0; i < w; ++i)
                if (i != skip) c.push_back(attach[i]);
            c.push_back(v);
            std::sort(c.begin(), c.end());
            cliques.push_back(c);
            clique_home.push_back(node);
        }
        cliques.push_back(attach);  // reusable as-is
        clique_home.push_back(node);
    }

    std::vector<std::pair<int, int>> kept;
    for (auto e : edges)
        if (rng.next_unit() < edge_keep) kept.push_back(e);

    GeneratedInstance out;
    out.graph = Graph::from_edges(n, kept);
    out.decomposition = td;
    out.certificates["width"] = w;
    out.seed = seed;
    return out;
}

GeneratedInstance gen_apex_bipartite(int n_left, int n_right, double p, double apex_degree_p,
                                     std::uint64_t seed) {
    if (n_left < 0 || n_right < 0) throw std::invalid_argument("negative side size");
    SplitMix64 rng(seed);
    int apex = n_left + n_right;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n_left; ++i)
        for (int j = 0; j < n_right; ++j)
            if (rng.next_unit() < p) edges.emplace_back(i, n_left + j);
    for (int v = 0; v < apex; ++v)
        if (rng.next_unit() < apex_degree_p) edges.emplace_back(v, apex);

    GeneratedInstance out;
    out.graph = Graph::from_edges(apex + 1, edges);
    out.certificates["apex"] = apex;
    out.seed = seed;
    return out;
}

}  // namespace triclub
