#include "triclub/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace triclub {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    std::size_t total = 0;
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        total += nb.size();
    }
    g.m_ = total / 2;
    return g;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw std::invalid_argument("vertex set universe does not match graph");
    InducedSubgraph out;
    out.original_id = s.to_vector();
    out.new_id.assign(g.vertex_count(), -1);
    for (int i = 0; i < (int)out.original_id.size(); ++i) out.new_id[out.original_id[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < (int)out.original_id.size(); ++i) {
        for (int w : g.neighbors(out.original_id[i])) {
            int j = out.new_id[w];
            if (j > i) edges.emplace_back(i, j);
        }
    }
    out.graph = Graph::from_edges((int)out.original_id.size(), edges);
    return out;
}

namespace {

// BFS from src restricted to member vertices; dist sized g.n, -1 where unreached.
void bfs_within(const Graph& g, const std::vector<char>& member, int src, std::vector<int>& dist) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (member[w] && dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
}

}  // namespace

int distance(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) return 0;
    std::vector<char> member(g.vertex_count(), 1);
    std::vector<int> dist(g.vertex_count());
    bfs_within(g, member, u, dist);
    return dist[v] < 0 ? kUnreachable : dist[v];
}

int diameter_within(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw std::invalid_argument("vertex set universe does not match graph");
    auto members = s.to_vector();
    if (members.empty()) throw std::invalid_argument("diameter_within: empty vertex set");
    std::vector<char> member(g.vertex_count(), 0);
    for (int v : members) member[v] = 1;
    std::vector<int> dist(g.vertex_count());
    int diam = 0;
    for (int v : members) {
        bfs_within(g, member, v, dist);
        for (int w : members) {
            if (dist[w] < 0) return kUnreachable;
            diam = std::max(diam, dist[w]);
        }
    }
    return diam;
}

std::vector<long long> triangle_counts(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw std::invalid_argument("vertex set universe does not match graph");
    std::vector<char> member(g.vertex_count(), 0);
    for (int v : s.to_vector()) member[v] = 1;
    std::vector<long long> counts(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!member[v]) continue;
        // Edges among N(v) ∩ s, via sorted-adjacency intersection.
        std::vector<int> nb;
        for (int w : g.neighbors(v))
            if (member[w]) nb.push_back(w);
        long long c = 0;
        for (int w : nb) {
            const auto& nw = g.neighbors(w);
            std::size_t i = 0, j = 0;
            while (i < nb.size() && j < nw.size()) {
                if (nb[i] == nw[j]) {
                    if (member[nb[i]]) ++c;
                    ++i;
                    ++j;
                } else if (nb[i] < nw[j]) {
                    ++i;
                } else {
                    ++j;
                }
            }
        }
        counts[v] = c / 2;
    }
    return counts;
}

Verdict verify_solution(const ProblemInstance& inst, const VertexSet& s) {
    inst.validate();
    if (s.universe() != inst.graph.vertex_count())
        throw std::invalid_argument("vertex set universe does not match graph");
    auto members = s.to_vector();
    if ((int)members.size() < inst.ell) return {VerdictKind::too_small, (int)members.size(), -1};
    if (members.empty()) return {};

    std::vector<char> member(inst.graph.vertex_count(), 0);
    for (int v : members) member[v] = 1;
    std::vector<int> dist(inst.graph.vertex_count());
    for (int v : members) {
        bfs_within(inst.graph, member, v, dist);
        for (int w : members) {
            if (w > v && (dist[w] < 0 || dist[w] > inst.s))
                return {VerdictKind::diameter_violated, v, w};
        }
    }

    auto counts = triangle_counts(inst.graph, s);
    for (int v : members)
        if (counts[v] < inst.r) return {VerdictKind::triangle_violated, v, -1};
    return {};
}

VertexSet peel_low_triangle_vertices(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    VertexSet alive = VertexSet::full(g.vertex_count());
    bool changed = true;
    while (changed) {
        changed = false;
        auto counts = triangle_counts(g, alive);
        for (int v : alive.to_vector()) {
            if (counts[v] < r) {
                alive.erase(v);
                changed = true;
            }
        }
    }
    return alive;
}

std::vector<std::vector<int>> twin_classes(const Graph& g, const VertexSet& candidates,
                                           const VertexSet& anchor) {
    if (candidates.universe() != g.vertex_count() || anchor.universe() != g.vertex_count())
        throw std::invalid_argument("vertex set universe does not match graph");
    if (candidates.intersects(anchor))
        throw std::invalid_argument("twin_classes: candidates and anchor overlap");
    std::map<std::vector<int>, std::vector<int>> by_key;
    for (int v : candidates.to_vector()) {
        std::vector<int> key;
        for (int w : g.neighbors(v))
            if (anchor.contains(w)) key.push_back(w);
        by_key[key].push_back(v);
    }
    std::vector<std::vector<int>> classes;
    for (auto& [key, cls] : by_key) classes.push_back(cls);
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

std::string to_string(const Verdict& v) {
    switch (v.kind) {
        case VerdictKind::ok:
            return "ok";
        case VerdictKind::too_small:
            return "too-small(" + std::to_string(v.vertex_a) + ")";
        case VerdictKind::diameter_violated:
            return "diameter-violated(" + std::to_string(v.vertex_a) + "," +
                   std::to_string(v.vertex_b) + ")";
        case VerdictKind::triangle_violated:
            return "triangle-violated(" + std::to_string(v.vertex_a) + ")";
    }
    return "?";
}

}  // namespace triclub
