#include "triclub/oracle.hpp"

#include <algorithm>

namespace triclub {

namespace {

using u64 = std::uint64_t;

// Diameter of the subgraph induced by `mask` is <= s. BFS by mask expansion.
bool diameter_at_most(const std::vector<u64>& adj, u64 mask, int s) {
    u64 rest = mask;
    while (rest) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        u64 ball = u64{1} << v;
        for (int step = 0; step < s; ++step) {
            u64 grown = ball;
            u64 frontier = ball;
            while (frontier) {
                int u = __builtin_ctzll(frontier);
                frontier &= frontier - 1;
                grown |= adj[u] & mask;
            }
            if (grown == ball) break;
            ball = grown;
        }
        if ((ball & mask) != mask) return false;
    }
    return true;
}

bool triangles_at_least(const std::vector<u64>& adj, u64 mask, int r) {
    u64 rest = mask;
    while (rest) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        u64 nb = adj[v] & mask;
        long long pairs = 0;
        u64 it = nb;
        while (it) {
            int u = __builtin_ctzll(it);
            it &= it - 1;
            pairs += __builtin_popcountll(adj[u] & nb);
        }
        if (pairs / 2 < r) return false;
    }
    return true;
}

}  // namespace

OracleResult max_club_bruteforce(const Graph& g, int r, int s, int size_limit) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (s < 2) throw std::invalid_argument("s must be >= 2");
    if (size_limit > 63) size_limit = 63;
    if (g.vertex_count() > size_limit)
        throw std::invalid_argument("oracle refused: graph has " +
                                    std::to_string(g.vertex_count()) +
                                    " vertices, exceeding the size limit of " +
                                    std::to_string(size_limit));

    OracleResult result;
    result.witness = VertexSet(g.vertex_count());

    auto surv = peel_low_triangle_vertices(g, r).to_vector();
    int k = (int)surv.size();
    if (k == 0) return result;

    // Adjacency masks over survivor indices.
    std::vector<u64> adj(k, 0);
    std::vector<int> idx_of(g.vertex_count(), -1);
    for (int i = 0; i < k; ++i) idx_of[surv[i]] = i;
    for (int i = 0; i < k; ++i)
        for (int w : g.neighbors(surv[i]))
            if (idx_of[w] >= 0) adj[i] |= u64{1} << idx_of[w];

    // Subsets in decreasing-size order; within a size, combinations of the
    // ascending survivor list in lexicographic order, so the first hit is the
    // lexicographically smallest optimum.
    std::vector<int> comb;
    for (int size = k; size >= 1; --size) {
        comb.resize(size);
        for (int i = 0; i < size; ++i) comb[i] = i;
        while (true) {
            u64 mask = 0;
            for (int i : comb) mask |= u64{1} << i;
            ++result.subsets_examined;
            if (triangles_at_least(adj, mask, r) && diameter_at_most(adj, mask, s)) {
                result.best_size = size;
                for (int i : comb) result.witness.insert(surv[i]);
                return result;
            }
            // next combination
            int pos = size - 1;
            while (pos >= 0 && comb[pos] == k - size + pos) --pos;
            if (pos < 0) break;
            ++comb[pos];
            for (int j = pos + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return result;
}

DecideResult decide(const ProblemInstance& inst, int size_limit) {
    inst.validate();
    auto res = max_club_bruteforce(inst.graph, inst.r, inst.s, size_limit);
    DecideResult out;
    out.yes = res.best_size >= inst.ell;
    out.witness = out.yes ? res.witness : VertexSet(inst.graph.vertex_count());
    return out;
}

}  // namespace triclub
