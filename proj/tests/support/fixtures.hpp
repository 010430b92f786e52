#pragma once

#include <functional>
#include <vector>

#include "p3vc/graph.hpp"

namespace p3vc::testing {

inline graph path_graph(int n)
{
    std::vector<edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return graph(n, e);
}

inline graph cycle_graph(int n)
{
    std::vector<edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return graph(n, e);
}

inline graph complete_graph(int n)
{
    std::vector<edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return graph(n, e);
}

// sides 0..a-1 and a..a+b-1
inline graph complete_bipartite(int a, int b)
{
    std::vector<edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            e.emplace_back(i, a + j);
    return graph(a + b, e);
}

inline graph petersen()
{
    std::vector<edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return graph(10, e);
}

// subdivision of K4: vertices 0..3 of degree 3, one degree-2 vertex per edge
inline graph k4_incidence()
{
    std::vector<edge> e;
    int next = 4;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            e.emplace_back(i, next);
            e.emplace_back(j, next);
            ++next;
        }
    return graph(10, e);
}

inline graph disjoint_union(const graph& a, const graph& b)
{
    std::vector<edge> e = a.edges();
    for (auto [u, v] : b.edges())
        e.emplace_back(u + a.vertex_count(), v + a.vertex_count());
    return graph(a.vertex_count() + b.vertex_count(), e);
}

// every graph on n labelled vertices, one per subset of the n(n-1)/2 pairs
inline void for_each_graph(int n, const std::function<void(const graph&)>& f)
{
    std::vector<edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    for (unsigned long mask = 0; mask < (1UL << pairs.size()); ++mask) {
        std::vector<edge> e;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1)
                e.push_back(pairs[b]);
        f(graph(n, e));
    }
}

}  // namespace p3vc::testing
