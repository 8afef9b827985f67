#pragma once

#include "triclub/graph.hpp"

namespace triclub {

struct OracleResult {
    int best_size = 0;
    VertexSet witness;  // empty when best_size == 0; otherwise the lexicographically
                        // smallest optimum (canonical across runs)
    unsigned long long subsets_examined = 0;
};

/// Exhaustive maximum vertex r-triangle s-club. Prunes with
/// peel_low_triangle_vertices, then enumerates subsets of the surviving vertices
/// in decreasing-size order with an early exit once a size is realized.
/// Refuses graphs larger than size_limit (default 20, hard cap 63).
OracleResult max_club_bruteforce(const Graph& g, int r, int s, int size_limit = 20);

struct DecideResult {
    bool yes = false;
    VertexSet witness;
};

DecideResult decide(const ProblemInstance& inst, int size_limit = 20);

}  // namespace triclub
