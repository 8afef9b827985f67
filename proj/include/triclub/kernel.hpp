#pragma once

#include <optional>

#include "triclub/graph.hpp"

namespace triclub {

/// Spanning forest plus the leftover feedback edges F = E \ T and their endpoint
/// set D. |F| = m - n + #components is minimum for any spanning forest.
struct FeedbackEdgeDecomposition {
    std::vector<std::pair<int, int>> forest_edges;
    std::vector<std::pair<int, int>> feedback_edges;  // DFS discovery order, endpoints sorted
    VertexSet endpoint_set;                           // D
};

/// Deterministic DFS (lowest-id roots, neighbors ascending); non-tree edges are F.
FeedbackEdgeDecomposition feedback_edge_decomposition(const Graph& g);

/// The unique vertex w outside D forming a triangle with the feedback edge {u,v},
/// if any. Finding two candidates means T was not a forest; that is an internal
/// invariant violation and throws std::logic_error.
std::optional<int> satisfied_vertex(const Graph& g, const FeedbackEdgeDecomposition& fed,
                                    std::pair<int, int> e);

struct KernelResult {
    ProblemInstance instance;
    std::vector<int> kept_vertices;  // kernel id -> original id; empty for the trivial no-instance
    bool trivial_no = false;
    enum class Case { r_exceeds_fes, main } case_taken = Case::main;
};

/// Reduces an instance to an equivalent one with at most 3*fes vertices and
/// 4*fes - 1 edges (fes measured after removing triangle-free vertices).
/// When r > fes and ell > |D| the output is the fixed trivial no-instance
/// (a diamond with r = 3, ell = 4, s unchanged).
KernelResult kernelize(const ProblemInstance& inst);

}  // namespace triclub
