#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "triclub/graph.hpp"
#include "triclub/treedecomp.hpp"

namespace triclub {

/// SplitMix64: the fixed portable random source for all generators, so instances
/// are bit-identical across runs and reimplementations. next() advances
/// state += 0x9e3779b97f4a7c15 and mixes; next_unit() is next() * 2^-64;
/// below(b) is next() % b.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double next_unit() { return (double)(next() >> 11) * 0x1.0p-53; }

    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

private:
    std::uint64_t state_;
};

struct GeneratedInstance {
    Graph graph;
    std::optional<TreeDecomposition> decomposition;
    std::map<std::string, long long> certificates;  // e.g. width, apex, fes
    std::uint64_t seed = 0;
};

/// Erdős–Rényi G(n, p), deterministic per seed.
Graph gen_gnp(int n, double p, std::uint64_t seed);

/// Builds a w-tree (every new vertex attached to a random w-clique), records its
/// natural width-w decomposition, then deletes each edge with probability
/// 1 - edge_keep. Edge deletion never invalidates the decomposition.
GeneratedInstance gen_bounded_treewidth(int n, int w, double edge_keep, std::uint64_t seed);

/// Random bipartite graph plus one apex vertex (the highest id) attached to each
/// other vertex independently. The certificate records the apex.
GeneratedInstance gen_apex_bipartite(int n_left, int n_right, double p, double apex_degree_p,
                                     std::uint64_t seed);

}  // namespace triclub
