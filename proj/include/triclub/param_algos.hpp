#pragma once

#include <optional>

#include "triclub/dp_treewidth.hpp"
#include "triclub/graph.hpp"

namespace triclub {

struct ParameterTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A vertex cover of size <= budget if one exists (deterministic branching on the
/// lowest-id uncovered edge, include-smaller-endpoint first), otherwise nullopt.
std::optional<VertexSet> vertex_cover_exact(const Graph& g, int budget);

/// Minimum vertex cover via a budget sweep; nullopt if above the budget.
std::optional<VertexSet> minimum_vertex_cover(const Graph& g, int budget);

/// Exact solve by guessing the solution's cover intersection and extending with
/// whole twin classes of the independent remainder. Works for any s >= 2.
/// Throws ParameterTooLarge when no cover within cover_budget exists.
SolveResult solve_vc(const Graph& g, int r, int s, int ell, int cover_budget = 25);

/// Same algorithm with a caller-provided vertex cover (need not be minimum).
SolveResult solve_vc_with_cover(const Graph& g, const VertexSet& cover, int r, int s, int ell);

struct HIndexDecomposition {
    int k = 0;
    VertexSet witness;  // exactly k vertices of degree >= k (degree desc, id asc prefix)
};

HIndexDecomposition h_index(const Graph& g);

/// Exact solve for s = 2 parameterized by the h-index. Guesses the cover part Y,
/// one representative per twin class of V \ X under N(.) ∩ Y, explicit subsets
/// inside conflict classes, and completes non-conflict classes by peeling.
/// Throws ParameterTooLarge when h_index(g).k > k_cap.
SolveResult solve_hindex(const Graph& g, int r, int ell, int k_cap = 3);

/// Lowest-id vertex whose deletion leaves a bipartite graph, if any.
std::optional<int> find_apex(const Graph& g);

struct ApexResult {
    SolveResult result;
    long long operations = 0;  // adjacency-probe count, for polynomial-scaling checks
};

/// Polynomial-time exact solve for s = 2 when g - x is bipartite: every triangle
/// contains x, so the candidate set is x plus its neighbors with a neighbor in
/// N(x), peeled by triangle count.
ApexResult solve_apex(const Graph& g, int x, int r, int ell);

struct ReductionOutput {
    ProblemInstance instance;       // r = 1, s = 2, ell' = (ell-1)*n + |V_E| + 1
    std::vector<int> block_of;      // instance vertex -> cover index for Y_i blocks, -1 otherwise
    std::vector<int> ve_vertices;   // ids of V_E (a vertex cover of the output)
    std::vector<int> z_vertices;    // ids of the copied independent part
};

/// Clique-to-triangle-club instance generator: one block of n copies per cover
/// vertex, one clique vertex per cover edge, incidence wiring, original
/// non-cover vertices attached to their edge vertices.
/// Requires X to be a vertex cover and ell >= 5.
ReductionOutput clique_to_vt1_reduction(const Graph& g, const VertexSet& cover, int ell);

}  // namespace triclub
