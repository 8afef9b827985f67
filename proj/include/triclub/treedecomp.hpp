#pragma once

#include <array>
#include <string>
#include <vector>

#include "triclub/graph.hpp"

namespace triclub {

/// Tree decomposition: bags of graph vertices connected by tree edges.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;     // each sorted ascending
    std::vector<std::pair<int, int>> edges; // over bag node ids

    int width() const {
        int w = -1;
        for (const auto& b : bags) w = std::max(w, (int)b.size() - 1);
        return w;
    }
};

struct TdViolation {
    enum class Kind { none, malformed_tree, vertex_uncovered, edge_uncovered, disconnected_occurrence };
    Kind kind = Kind::none;
    int a = -1, b = -1;  // offending vertex / edge endpoints

    bool ok() const { return kind == Kind::none; }
};

std::string to_string(const TdViolation& v);

/// Checks that the node tree is a tree and the three decomposition conditions:
/// vertex coverage, edge coverage, connected occurrence per vertex.
/// Reports the first failing vertex/edge.
TdViolation validate(const TreeDecomposition& td, const Graph& g);

struct NiceNode {
    enum class Kind { leaf, introduce, forget, join };
    Kind kind = Kind::leaf;
    int vertex = -1;           // introduced/forgotten vertex
    std::vector<int> bag;      // sorted ascending
    int parent = -1;
    std::array<int, 2> child{-1, -1};
    int child_count = 0;
};

/// Rooted binary nice tree decomposition. Leaf bags are always empty; the root
/// bag is empty unless the tree was re-rooted for a guess.
struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    int width() const {
        int w = -1;
        for (const auto& nd : nodes) w = std::max(w, (int)nd.bag.size() - 1);
        return w;
    }
};

/// Checks the local nice-node rules (bag relations per node kind, leaf bags empty)
/// and that the bags form a valid tree decomposition of g. The root bag may be
/// nonempty when require_empty_root is false.
TdViolation validate_nice(const NiceTreeDecomposition& ntd, const Graph& g,
                          bool require_empty_root = true);

/// Converts a valid decomposition into an equivalent nice one of the same width.
/// Throws std::invalid_argument if td fails validation.
NiceTreeDecomposition make_nice(const TreeDecomposition& td, const Graph& g);

/// Re-roots the nice tree at node p and adds a chain of forget nodes above p so
/// the new root's bag is exactly `keep` (keep must be a subset of p's bag).
/// Local nice-node rules still hold; the root-empty rule is waived. Flipped join
/// nodes may require adapter nodes, all of which copy existing path bags or are
/// fresh empty-leaf introduce chains.
NiceTreeDecomposition reroot_for_guess(const NiceTreeDecomposition& ntd, int p,
                                       const std::vector<int>& keep);

/// Min-fill greedy decomposition for the CLI path. Valid, no width optimality promise.
TreeDecomposition heuristic_decomposition(const Graph& g);

}  // namespace triclub
