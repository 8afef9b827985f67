#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace triclub {

// Distance value meaning "no path".
inline constexpr int kUnreachable = -1;

/// Set of vertex ids over a fixed universe 0..n-1, stored as a bit vector.
/// Immutable-by-convention once built; all graph algorithms treat it as a value.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe), bits_((universe + 63) / 64, 0) {}

    static VertexSet from_vertices(int universe, const std::vector<int>& vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }
    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const {
        if (v < 0 || v >= universe_) return false;
        return (bits_[v >> 6] >> (v & 63)) & 1u;
    }

    void insert(int v) {
        check(v);
        bits_[v >> 6] |= (std::uint64_t{1} << (v & 63));
    }

    void erase(int v) {
        check(v);
        bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int size() const {
        int c = 0;
        for (std::uint64_t w : bits_) c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : bits_)
            if (w) return false;
        return true;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (int b = 0; b < (int)bits_.size(); ++b) {
            std::uint64_t w = bits_[b];
            while (w) {
                int bit = __builtin_ctzll(w);
                out.push_back(b * 64 + bit);
                w &= w - 1;
            }
        }
        return out;
    }

    bool operator==(const VertexSet& o) const {
        return universe_ == o.universe_ && bits_ == o.bits_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool intersects(const VertexSet& o) const {
        std::size_t k = std::min(bits_.size(), o.bits_.size());
        for (std::size_t i = 0; i < k; ++i)
            if (bits_[i] & o.bits_[i]) return true;
        return false;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= universe_)
            throw std::invalid_argument("VertexSet: vertex " + std::to_string(v) +
                                        " outside universe of size " + std::to_string(universe_));
    }

    int universe_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Simple undirected graph with dense ids 0..n-1 and sorted adjacency lists.
/// Immutable after construction; safe to share across threads read-only.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list. Duplicate edges are collapsed, self-loops rejected.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return (int)adj_[v].size();
    }

    bool has_edge(int u, int v) const;

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("invalid vertex " + std::to_string(v) +
                                        " (graph has " + std::to_string(n_) + " vertices)");
    }

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// One decision/optimization query: find S with |S| >= ell, diameter of G[S] <= s,
/// and every member of S in at least r triangles of G[S].
struct ProblemInstance {
    Graph graph;
    int r = 1;    // triangle requirement, >= 1
    int s = 2;    // club diameter bound, >= 2
    int ell = 1;  // target solution size, >= 1 (may exceed n; such queries are trivially "no")

    void validate() const {
        if (r < 1) throw std::invalid_argument("r must be >= 1");
        if (s < 2) throw std::invalid_argument("s must be >= 2");
        if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    }
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_id;  // new id -> old id, ascending
    std::vector<int> new_id;       // old id -> new id, -1 if absent
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// BFS shortest-path length; kUnreachable when u and v are in different components.
int distance(const Graph& g, int u, int v);

/// Maximum pairwise distance inside induced_subgraph(g, s); kUnreachable if disconnected.
/// Throws on empty s.
int diameter_within(const Graph& g, const VertexSet& s);

/// For each v in s, the number of unordered pairs {x,y} in N(v) ∩ s with xy an edge.
/// Entries for vertices outside s are 0. Counts are exact, never capped.
std::vector<long long> triangle_counts(const Graph& g, const VertexSet& s);

enum class VerdictKind { ok, too_small, diameter_violated, triangle_violated };

struct Verdict {
    VerdictKind kind = VerdictKind::ok;
    int vertex_a = -1;  // violating vertex / smaller pair endpoint
    int vertex_b = -1;  // second pair endpoint for diameter violations

    bool ok() const { return kind == VerdictKind::ok; }
};

/// Checks |s| >= ell, diameter, and per-vertex triangle counts, in that order.
/// The first violation is reported deterministically (lowest vertex,
/// lexicographically smallest pair).
Verdict verify_solution(const ProblemInstance& inst, const VertexSet& s);

/// Repeatedly removes vertices with fewer than r triangles in the current induced
/// subgraph until a fixpoint. The result is the unique maximal subset in which
/// every vertex has >= r triangles; it is independent of removal order.
VertexSet peel_low_triangle_vertices(const Graph& g, int r);

/// Partition of `candidates` by the key N(v) ∩ anchor. Classes are returned in
/// canonical order (smallest member ascending), members ascending.
/// Throws if candidates and anchor overlap.
std::vector<std::vector<int>> twin_classes(const Graph& g, const VertexSet& candidates,
                                           const VertexSet& anchor);

std::string to_string(const Verdict& v);

}  // namespace triclub
