#pragma once

// Exhaustive reference for the tree-decomposition DP: enumerates every subset of
// every node's subtree graph, keeps those satisfying the candidate-solution
// conditions, and builds the tuple -> max-size map directly from the definition.
// Table correctness means exact equality with this map at every node.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "triclub/dp_treewidth.hpp"
#include "triclub/graph.hpp"
#include "triclub/treedecomp.hpp"

namespace triclub::testing {

inline std::string tuple_fingerprint(const DpTuple& t) {
    std::ostringstream out;
    for (std::size_t i = 0; i < t.members.size(); ++i)
        out << t.members[i] << ':' << t.f_values[i] << ',';
    out << '|';
    for (const auto& b : t.family) {
        for (int v : b) out << v << ',';
        out << ';';
    }
    return out.str();
}

// Vertices appearing in bags of the subtree rooted at each node.
inline std::vector<std::vector<int>> subtree_vertices(const NiceTreeDecomposition& ntd,
                                                      int universe) {
    std::vector<std::vector<char>> seen(ntd.nodes.size(), std::vector<char>(universe, 0));
    std::vector<std::vector<int>> out(ntd.nodes.size());
    // children have larger postorder position; process via explicit postorder
    std::vector<int> order;
    std::vector<std::pair<int, int>> stack{{ntd.root, 0}};
    while (!stack.empty()) {
        auto& [t, stage] = stack.back();
        if (stage < ntd.nodes[t].child_count) {
            int c = ntd.nodes[t].child[stage];
            ++stage;
            stack.emplace_back(c, 0);
        } else {
            order.push_back(t);
            stack.pop_back();
        }
    }
    for (int t : order) {
        for (int v : ntd.nodes[t].bag) seen[t][v] = 1;
        for (int c = 0; c < ntd.nodes[t].child_count; ++c) {
            int ch = ntd.nodes[t].child[c];
            for (int v = 0; v < universe; ++v)
                if (seen[ch][v]) seen[t][v] = 1;
        }
        for (int v = 0; v < universe; ++v)
            if (seen[t][v]) out[t].push_back(v);
    }
    return out;
}

// tuple fingerprint -> max candidate size, per node, straight from the definition.
inline std::vector<std::map<std::string, int>> reference_tables(const NiceTreeDecomposition& ntd,
                                                                const Graph& g, int r) {
    int n = g.vertex_count();
    auto subtree = subtree_vertices(ntd, n);
    std::vector<std::map<std::string, int>> ref(ntd.nodes.size());
    for (int t = 0; t < (int)ntd.nodes.size(); ++t) {
        const auto& verts = subtree[t];
        const auto& bag = ntd.nodes[t].bag;
        for (std::uint32_t m = 0; m < (1u << verts.size()); ++m) {
            std::vector<int> s;
            for (std::size_t i = 0; i < verts.size(); ++i)
                if ((m >> i) & 1) s.push_back(verts[i]);
            VertexSet sset = VertexSet::from_vertices(n, s);
            auto counts = triangle_counts(g, sset);

            DpTuple tuple;
            std::vector<int> outside;
            for (int v : s) {
                if (std::binary_search(bag.begin(), bag.end(), v)) {
                    tuple.members.push_back(v);
                    tuple.f_values.push_back((int)std::min<long long>(r, counts[v]));
                } else {
                    outside.push_back(v);
                }
            }

            bool candidate = true;
            for (int v : outside)
                if (counts[v] < r) {
                    candidate = false;
                    break;
                }
            if (candidate) {
                // every (forgotten, any) pair within distance 2 in G[S]
                for (int x : outside) {
                    for (int y : s) {
                        if (x == y) continue;
                        if (g.has_edge(x, y)) continue;
                        bool common = false;
                        for (int w : s)
                            if (w != x && w != y && g.has_edge(x, w) && g.has_edge(y, w)) {
                                common = true;
                                break;
                            }
                        if (!common) {
                            candidate = false;
                            break;
                        }
                    }
                    if (!candidate) break;
                }
            }
            if (!candidate) continue;

            for (int v : outside) {
                std::vector<int> b;
                for (int w : g.neighbors(v))
                    if (std::binary_search(tuple.members.begin(), tuple.members.end(), w))
                        b.push_back(w);
                tuple.family.push_back(b);
            }
            tuple.normalize();
            auto key = tuple_fingerprint(tuple);
            auto it = ref[t].find(key);
            if (it == ref[t].end() || it->second < (int)s.size()) ref[t][key] = (int)s.size();
        }
    }
    return ref;
}

// Decoded DP table in the same fingerprint form.
inline std::vector<std::map<std::string, int>> decode_tables(const NiceTreeDecomposition& ntd,
                                                             const DpTable& table) {
    std::vector<std::map<std::string, int>> out(ntd.nodes.size());
    for (int t = 0; t < (int)ntd.nodes.size(); ++t)
        for (const auto& [key, entry] : table.per_node[t])
            out[t][tuple_fingerprint(decode_key(ntd, t, key))] = entry.value;
    return out;
}

}  // namespace triclub::testing
