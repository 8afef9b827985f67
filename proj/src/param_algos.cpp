#include "triclub/param_algos.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace triclub {

namespace {

bool covers_all_edges(const Graph& g, const VertexSet& cover) {
    for (auto [u, v] : g.edges())
        if (!cover.contains(u) && !cover.contains(v)) return false;
    return true;
}

bool branch_cover(const Graph& g, VertexSet& picked, std::vector<char>& in_cover, int budget) {
    int eu = -1, ev = -1;
    for (auto [u, v] : g.edges()) {
        if (!in_cover[u] && !in_cover[v]) {
            eu = u;
            ev = v;
            break;
        }
    }
    if (eu == -1) return true;
    if (budget == 0) return false;
    for (int pick : {eu, ev}) {
        in_cover[pick] = 1;
        picked.insert(pick);
        if (branch_cover(g, picked, in_cover, budget - 1)) return true;
        picked.erase(pick);
        in_cover[pick] = 0;
    }
    return false;
}

// Tracks the best candidate with deterministic ties (smallest witness).
struct Best {
    int size = 0;
    std::vector<int> witness;

    void offer(const std::vector<int>& cand) {
        if ((int)cand.size() > size || ((int)cand.size() == size && size > 0 && cand < witness)) {
            size = (int)cand.size();
            witness = cand;
        }
    }

    SolveResult result(int n) const {
        return {size, VertexSet::from_vertices(n, witness)};
    }
};

bool valid_club(const Graph& g, int r, int s, const std::vector<int>& cand) {
    if (cand.empty()) return false;
    ProblemInstance probe{g, r, s, 1};
    return verify_solution(probe, VertexSet::from_vertices(g.vertex_count(), cand)).ok();
}

}  // namespace

std::optional<VertexSet> vertex_cover_exact(const Graph& g, int budget) {
    if (budget < 0 || budget > 25) throw std::invalid_argument("cover budget out of range");
    VertexSet picked(g.vertex_count());
    std::vector<char> in_cover(g.vertex_count(), 0);
    if (branch_cover(g, picked, in_cover, budget)) return picked;
    return std::nullopt;
}

std::optional<VertexSet> minimum_vertex_cover(const Graph& g, int budget) {
    for (int b = 0; b <= budget; ++b)
        if (auto c = vertex_cover_exact(g, b)) return c;
    return std::nullopt;
}

SolveResult solve_vc_with_cover(const Graph& g, const VertexSet& cover, int r, int s, int ell) {
    (void)ell;
    if (r < 1 || s < 2) throw std::invalid_argument("bad parameters");
    if (!covers_all_edges(g, cover))
        throw std::invalid_argument("solve_vc: provided set is not a vertex cover");

    std::vector<int> x = cover.to_vector();
    VertexSet rest = VertexSet(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!cover.contains(v)) rest.insert(v);

    Best best;
    for (std::uint32_t ymask = 0; ymask < (1u << x.size()); ++ymask) {
        std::vector<int> y;
        for (std::size_t i = 0; i < x.size(); ++i)
            if ((ymask >> i) & 1) y.push_back(x[i]);
        VertexSet yset = VertexSet::from_vertices(g.vertex_count(), y);
        auto classes = twin_classes(g, rest, yset);
        int q = (int)classes.size();
        for (std::uint32_t zmask = 0; zmask < (1u << q); ++zmask) {
            std::vector<int> cand = y;
            for (int j = 0; j < q; ++j)
                if ((zmask >> j) & 1) cand.insert(cand.end(), classes[j].begin(), classes[j].end());
            std::sort(cand.begin(), cand.end());
            if ((int)cand.size() < best.size) continue;
            if (valid_club(g, r, s, cand)) best.offer(cand);
        }
    }
    return best.result(g.vertex_count());
}

SolveResult solve_vc(const Graph& g, int r, int s, int ell, int cover_budget) {
    auto cover = minimum_vertex_cover(g, cover_budget);
    if (!cover)
        throw ParameterTooLarge("no vertex cover within budget " + std::to_string(cover_budget));
    return solve_vc_with_cover(g, *cover, r, s, ell);
}

HIndexDecomposition h_index(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    int k = 0;
    while (k < g.vertex_count() && g.degree(order[k]) >= k + 1) ++k;
    HIndexDecomposition out;
    out.k = k;
    out.witness = VertexSet(g.vertex_count());
    for (int i = 0; i < k; ++i) out.witness.insert(order[i]);
    return out;
}

namespace {

// Distances from src inside the induced subgraph on `member`, capped searches.
std::vector<int> dist_within(const Graph& g, const std::vector<char>& member, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (member[w] && dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

// Removes from `w_set` any vertex with < r triangles in G[C] or at distance > 2
// from an anchor inside G[C], until a fixpoint. C = anchors_base ∪ w_set.
void anchored_peel(const Graph& g, int r, const std::vector<int>& anchors_base,
                   const std::vector<int>& anchors, std::set<int>& w_set) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> members(anchors_base);
        members.insert(members.end(), w_set.begin(), w_set.end());
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        VertexSet cset = VertexSet::from_vertices(g.vertex_count(), members);
        auto counts = triangle_counts(g, cset);
        std::vector<int> drop;
        for (int w : w_set)
            if (counts[w] < r) drop.push_back(w);
        if (drop.empty()) {
            std::vector<char> member(g.vertex_count(), 0);
            for (int v : members) member[v] = 1;
            for (int a : anchors) {
                if (!member[a]) continue;
                auto dist = dist_within(g, member, a);
                for (int w : w_set)
                    if (w != a && (dist[w] < 0 || dist[w] > 2)) drop.push_back(w);
            }
            std::sort(drop.begin(), drop.end());
            drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
        }
        for (int w : drop) {
            w_set.erase(w);
            changed = true;
        }
    }
}

}  // namespace

SolveResult solve_hindex(const Graph& g, int r, int ell, int k_cap) {
    (void)ell;
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    HIndexDecomposition h = h_index(g);
    if (h.k > k_cap)
        throw ParameterTooLarge("h-index " + std::to_string(h.k) + " above cap " +
                                std::to_string(k_cap));
    std::vector<int> x = h.witness.to_vector();
    VertexSet zall(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!h.witness.contains(v)) zall.insert(v);

    Best best;

    // Solutions avoiding X entirely live inside a radius-2 ball of G - X around
    // any of their members; max degree there is at most k, so balls are small.
    {
        InducedSubgraph sub = induced_subgraph(g, zall);
        const Graph& gm = sub.graph;
        std::vector<char> all(gm.vertex_count(), 1);
        for (int c = 0; c < gm.vertex_count(); ++c) {
            auto dist = dist_within(gm, all, c);
            std::vector<int> ball;
            for (int v = 0; v < gm.vertex_count(); ++v)
                if (v != c && dist[v] >= 0 && dist[v] <= 2) ball.push_back(v);
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << ball.size()); ++m) {
                std::vector<int> cand{sub.original_id[c]};
                for (std::size_t i = 0; i < ball.size(); ++i)
                    if ((m >> i) & 1) cand.push_back(sub.original_id[ball[i]]);
                std::sort(cand.begin(), cand.end());
                if ((int)cand.size() < best.size) continue;
                if (valid_club(g, r, 2, cand)) best.offer(cand);
            }
        }
    }

    InducedSubgraph sub = induced_subgraph(g, zall);
    const Graph& gm = sub.graph;

    for (std::uint32_t ymask = 1; ymask < (1u << x.size()); ++ymask) {
        std::vector<int> y;
        for (std::size_t i = 0; i < x.size(); ++i)
            if ((ymask >> i) & 1) y.push_back(x[i]);
        VertexSet yset = VertexSet::from_vertices(g.vertex_count(), y);
        auto classes = twin_classes(g, zall, yset);
        int q = (int)classes.size();

        std::vector<std::vector<int>> keys(q);
        for (int i = 0; i < q; ++i)
            for (int w : g.neighbors(classes[i][0]))
                if (yset.contains(w)) keys[i].push_back(w);

        // Odometer over per-class choices: 0 = class absent, t = representative
        // classes[i][t-1] present.
        std::vector<int> choice(q, 0);
        while (true) {
            std::vector<int> guessed;
            for (int i = 0; i < q; ++i)
                if (choice[i] > 0) guessed.push_back(i);

            if (guessed.empty()) {
                std::vector<int> cand = y;
                std::sort(cand.begin(), cand.end());
                if (valid_club(g, r, 2, cand)) best.offer(cand);
            } else {
                std::vector<char> in_conflict(q, 0);
                for (int i : guessed)
                    for (int j : guessed)
                        if (i != j) {
                            bool meet = false;
                            for (int a : keys[i])
                                if (std::binary_search(keys[j].begin(), keys[j].end(), a)) {
                                    meet = true;
                                    break;
                                }
                            if (!meet) in_conflict[i] = 1;
                        }

                std::vector<int> conflict_ids, free_ids;
                for (int i : guessed)
                    (in_conflict[i] ? conflict_ids : free_ids).push_back(i);

                // Enumerable part of each conflict class: its members within
                // distance 4 of the representative in G - X.
                std::vector<std::vector<int>> pool(conflict_ids.size());
                std::vector<int> reps(conflict_ids.size());
                for (std::size_t ci = 0; ci < conflict_ids.size(); ++ci) {
                    int i = conflict_ids[ci];
                    int rep = classes[i][choice[i] - 1];
                    reps[ci] = rep;
                    std::vector<char> all(gm.vertex_count(), 1);
                    auto dist = dist_within(gm, all, sub.new_id[rep]);
                    for (int v : classes[i]) {
                        if (v == rep) continue;
                        int d = dist[sub.new_id[v]];
                        if (d >= 0 && d <= 4) pool[ci].push_back(v);
                    }
                }

                std::vector<std::uint32_t> amask(conflict_ids.size(), 0);
                while (true) {
                    std::vector<int> z1;
                    for (std::size_t ci = 0; ci < conflict_ids.size(); ++ci) {
                        z1.push_back(reps[ci]);
                        for (std::size_t t = 0; t < pool[ci].size(); ++t)
                            if ((amask[ci] >> t) & 1) z1.push_back(pool[ci][t]);
                    }

                    std::vector<int> anchors = y;
                    anchors.insert(anchors.end(), z1.begin(), z1.end());
                    std::set<int> wset;
                    for (int i : free_ids) {
                        anchors.push_back(classes[i][choice[i] - 1]);
                        wset.insert(classes[i].begin(), classes[i].end());
                    }
                    std::vector<int> base = y;
                    base.insert(base.end(), z1.begin(), z1.end());
                    anchored_peel(g, r, base, anchors, wset);

                    std::vector<int> cand = base;
                    cand.insert(cand.end(), wset.begin(), wset.end());
                    std::sort(cand.begin(), cand.end());
                    if ((int)cand.size() >= best.size && valid_club(g, r, 2, cand))
                        best.offer(cand);

                    // next A-assignment
                    std::size_t pos = 0;
                    while (pos < amask.size()) {
                        if (amask[pos] + 1 < (1u << pool[pos].size())) {
                            ++amask[pos];
                            break;
                        }
                        amask[pos] = 0;
                        ++pos;
                    }
                    if (pos == amask.size()) break;
                }
            }

            // next representative choice
            int pos = 0;
            while (pos < q) {
                if (choice[pos] < (int)classes[pos].size()) {
                    ++choice[pos];
                    break;
                }
                choice[pos] = 0;
                ++pos;
            }
            if (pos == q) break;
        }
    }
    return best.result(g.vertex_count());
}

std::optional<int> find_apex(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n);
    for (int x = 0; x < n; ++x) {
        std::fill(color.begin(), color.end(), -1);
        bool ok = true;
        for (int src = 0; src < n && ok; ++src) {
            if (src == x || color[src] != -1) continue;
            color[src] = 0;
            std::queue<int> q;
            q.push(src);
            while (!q.empty() && ok) {
                int u = q.front();
                q.pop();
                for (int w : g.neighbors(u)) {
                    if (w == x) continue;
                    if (color[w] == -1) {
                        color[w] = color[u] ^ 1;
                        q.push(w);
                    } else if (color[w] == color[u]) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if (ok) return x;
    }
    return std::nullopt;
}

ApexResult solve_apex(const Graph& g, int x, int r, int ell) {
    (void)ell;
    g.check_vertex(x);
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    {
        // Contract check: G - x must two-color.
        int n = g.vertex_count();
        std::vector<int> color(n, -1);
        bool bipartite = true;
        for (int src = 0; src < n && bipartite; ++src) {
            if (src == x || color[src] != -1) continue;
            color[src] = 0;
            std::queue<int> q;
            q.push(src);
            while (!q.empty() && bipartite) {
                int u = q.front();
                q.pop();
                for (int w : g.neighbors(u)) {
                    if (w == x) continue;
                    if (color[w] == -1) {
                        color[w] = color[u] ^ 1;
                        q.push(w);
                    } else if (color[w] == color[u]) {
                        bipartite = false;
                    }
                }
            }
        }
        if (!bipartite) throw std::invalid_argument("solve_apex: graph minus x is not bipartite");
    }

    ApexResult out;
    out.result.witness = VertexSet(g.vertex_count());

    // D: neighbors of x with a neighbor inside N(x).
    std::vector<char> in_nx(g.vertex_count(), 0);
    for (int u : g.neighbors(x)) in_nx[u] = 1;
    std::set<int> d;
    for (int u : g.neighbors(x)) {
        for (int w : g.neighbors(u)) {
            ++out.operations;
            if (w != x && in_nx[w]) {
                d.insert(u);
                break;
            }
        }
    }

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> members(d.begin(), d.end());
        members.push_back(x);
        std::sort(members.begin(), members.end());
        std::vector<char> member(g.vertex_count(), 0);
        for (int v : members) member[v] = 1;
        std::vector<int> drop;
        for (int u : d) {
            // Triangles of u within D ∪ {x} by sorted-neighborhood intersection.
            std::vector<int> nb;
            for (int w : g.neighbors(u))
                if (member[w]) nb.push_back(w);
            long long tri = 0;
            for (int w : nb) {
                for (int t : g.neighbors(w)) {
                    ++out.operations;
                    if (t > w && member[t] &&
                        std::binary_search(nb.begin(), nb.end(), t))
                        ++tri;
                }
            }
            if (tri < r) drop.push_back(u);
        }
        for (int u : drop) {
            d.erase(u);
            changed = true;
        }
    }

    std::vector<int> cand(d.begin(), d.end());
    cand.push_back(x);
    std::sort(cand.begin(), cand.end());
    VertexSet cset = VertexSet::from_vertices(g.vertex_count(), cand);
    auto counts = triangle_counts(g, cset);
    if (counts[x] < r) return out;

    ProblemInstance probe{g, r, 2, (int)cand.size()};
    if (!verify_solution(probe, cset).ok()) return out;
    out.result.best_size = (int)cand.size();
    out.result.witness = cset;
    return out;
}

ReductionOutput clique_to_vt1_reduction(const Graph& g, const VertexSet& cover, int ell) {
    if (ell < 5) throw std::invalid_argument("reduction requires ell >= 5");
    if (!covers_all_edges(g, cover))
        throw std::invalid_argument("reduction: provided set is not a vertex cover");

    int n = g.vertex_count();
    std::vector<int> x = cover.to_vector();
    int k = (int)x.size();

    std::vector<std::pair<int, int>> cover_edges;  // indices into x
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(x[i], x[j])) cover_edges.emplace_back(i, j);
    int ve = (int)cover_edges.size();

    std::vector<int> z;
    for (int v = 0; v < n; ++v)
        if (!cover.contains(v)) z.push_back(v);

    int total = k * n + ve + (int)z.size();
    auto block_vertex = [&](int i, int copy) { return i * n + copy; };
    auto edge_vertex = [&](int t) { return k * n + t; };
    auto z_vertex = [&](int idx) { return k * n + ve + idx; };

    std::vector<std::pair<int, int>> edges;
    for (int t = 0; t < ve; ++t) {
        auto [i, j] = cover_edges[t];
        for (int c = 0; c < n; ++c) {
            edges.emplace_back(edge_vertex(t), block_vertex(i, c));
            edges.emplace_back(edge_vertex(t), block_vertex(j, c));
        }
    }
    for (int a = 0; a < ve; ++a)
        for (int b = a + 1; b < ve; ++b) edges.emplace_back(edge_vertex(a), edge_vertex(b));
    for (int zi = 0; zi < (int)z.size(); ++zi) {
        for (int t = 0; t < ve; ++t) {
            auto [i, j] = cover_edges[t];
            if (g.has_edge(z[zi], x[i]) && g.has_edge(z[zi], x[j]))
                edges.emplace_back(z_vertex(zi), edge_vertex(t));
        }
    }

    ReductionOutput out;
    out.instance.graph = Graph::from_edges(total, edges);
    out.instance.r = 1;
    out.instance.s = 2;
    out.instance.ell = (ell - 1) * n + ve + 1;
    out.block_of.assign(total, -1);
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < n; ++c) out.block_of[block_vertex(i, c)] = i;
    for (int t = 0; t < ve; ++t) out.ve_vertices.push_back(edge_vertex(t));
    for (int zi = 0; zi < (int)z.size(); ++zi) out.z_vertices.push_back(z_vertex(zi));
    return out;
}

}  // namespace triclub
