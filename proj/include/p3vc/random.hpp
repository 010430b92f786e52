#pragma once

#include <cstdint>
#include <random>

#include "p3vc/graph.hpp"

namespace p3vc {

// uniform double in [0, 1) from the top 53 bits; std::uniform_real_distribution
// is implementation-defined and would break cross-platform reproducibility
inline double unit_uniform(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Erdos-Renyi G(n, p) driven by mt19937_64; pairs (u, v), u < v, are visited
/// in lexicographic order, one draw each.
inline graph gen_random_graph(int n, double p, std::uint64_t seed)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    if (n < 0)
        throw std::invalid_argument("vertex count must be non-negative");
    std::mt19937_64 rng(seed);
    std::vector<edge> edges;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            if (unit_uniform(rng) < p)
                edges.emplace_back(u, v);
    return graph(n, edges);
}

}  // namespace p3vc
