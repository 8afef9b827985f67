#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "triclub/graph.hpp"
#include "triclub/treedecomp.hpp"

namespace triclub {

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Number of triangles in G[A] containing both u and v (0 when uv is not an edge).
int r_A(const Graph& g, const VertexSet& a, int u, int v);

/// Number of edges of G[A] with both endpoints in N(v) ∩ A. Uncapped.
int edges_in_neighborhood(const Graph& g, const VertexSet& a, int v);

/// DP state: a bag subset A, triangle counts capped at r, and the family of
/// bag-neighborhoods of forgotten solution vertices. Canonical form: members
/// ascending, f aligned with members, family sets sorted and the family itself
/// sorted lexicographically.
struct DpTuple {
    std::vector<int> members;              // A, ascending
    std::vector<int> f_values;             // f(members[i]), each in 0..r
    std::vector<std::vector<int>> family;  // each ascending; family sorted

    void normalize();
    bool operator==(const DpTuple& o) const {
        return members == o.members && f_values == o.f_values && family == o.family;
    }
};

/// Definition of introduce compatibility between a parent tuple over A (v in A)
/// and a child tuple over A \ {v}:
///  1. f(u) = min(r, f'(u) + r_A(u, v)) for every u in A',
///  2. f(v) = min(r, |E(N(v) ∩ A)|),
///  3. the families are equal,
///  4. every family member intersects N(v).
bool introduce_compatible(const DpTuple& parent, const DpTuple& child, int v, const Graph& g,
                          int r);

/// Forget compatibility between a parent tuple over A and a child tuple over
/// A ∪ {v}:
///  1. f'(v) = r and f'(u) = f(u) for every u in A,
///  2. members of the child family containing v appear in the parent family with
///     v removed,
///  3. members avoiding v appear unchanged,
///  4. N(v) ∩ A is in the parent family,
///  5. every x in A shares a child-family set with v or is within distance 2 of
///     v in G[A ∪ {v}].
bool forget_compatible(const DpTuple& parent, const DpTuple& child, int v, const Graph& g, int r);

/// Join compatibility between a parent tuple and two child tuples over the same A:
///  1. the parent family is the union of the child families,
///  2. triangle counts combine as f = min(r, f1 + f2 - |E(N(u) ∩ A)|), with f = r
///     whenever either side is already capped at r,
///  3. every pair (P from family 1, Q from family 2) intersects.
/// Condition 3 is what makes cross-side forgotten vertices pairwise reachable
/// within distance 2; it implies that disjoint family pairs live on one side.
bool join_compatible(const DpTuple& parent, const DpTuple& left, const DpTuple& right,
                     const Graph& g, int r);

/// Packed DP state key local to one nice node: bag-position masks.
/// `fam` has bit m set iff the bag subset with position mask m is in the family.
struct DpKey {
    std::uint32_t a = 0;
    std::uint64_t f = 0;    // 6-bit fields per bag position
    std::uint64_t fam = 0;  // subset-of-bag bitset, members are subsets of a

    bool operator==(const DpKey& o) const { return a == o.a && f == o.f && fam == o.fam; }
};

struct DpKeyHash {
    std::size_t operator()(const DpKey& k) const {
        std::uint64_t h = k.a * 0x9e3779b97f4a7c15ULL;
        h ^= k.f + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= k.fam + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return (std::size_t)h;
    }
};

struct DpEntry {
    int value = 0;  // stored entries are never bottom; bottom states are absent
    enum class Tag : std::uint8_t { leaf, intro_copy, intro_insert, forget_copy, forget_insert, join };
    Tag tag = Tag::leaf;
    DpKey child1, child2;
};

using NodeTable = std::unordered_map<DpKey, DpEntry, DpKeyHash>;

struct DpTable {
    std::vector<NodeTable> per_node;  // indexed by nice node id
};

inline constexpr int kMaxDpBag = 6;  // fam is a 64-bit subset bitset

struct DpLimits {
    long long max_states = 5'000'000;
};

/// Bottom-up evaluation of the table over a nice tree decomposition. Entries are
/// exactly the valid tuples, each mapped to the size of a maximum candidate
/// solution, with back-pointers for witness extraction.
/// Throws ResourceLimit if a bag exceeds kMaxDpBag vertices or the state count
/// exceeds limits.max_states.
DpTable compute_table(const NiceTreeDecomposition& ntd, const Graph& g, int r,
                      const DpLimits& limits = {});

/// Decodes a packed key at a node into the vertex-id tuple form.
DpTuple decode_key(const NiceTreeDecomposition& ntd, int node, const DpKey& key);

struct SolveResult {
    int best_size = 0;
    VertexSet witness;
};

/// Exact maximum vertex r-triangle 2-club via the tree-decomposition DP.
/// Peels sub-r vertices, applies the width-based degeneracy cutoff, then
/// enumerates root guesses (bag, center vertex, closed-neighborhood subset),
/// re-rooting the nice tree per guess. `ell` does not affect the maximum
/// reported; callers compare against it.
SolveResult solve_treewidth(const Graph& g, const TreeDecomposition& td, int r, int ell,
                            const DpLimits& limits = {});

}  // namespace triclub
