#pragma once

#include <array>
#include <tuple>

#include "p3vc/graph.hpp"

namespace p3vc {

// Local configurations the branching steps key on. Each predicate takes the
// current graph; detect_structures reports every occurrence of each.

/// v is dominated by its neighbor u when N[u] is a subset of N[v].
template <graph_view G>
bool is_dominated_by(const G& g, vertex v, vertex u)
{
    if (u == v || !g.adjacent(u, v))
        return false;
    for (vertex x : g.neighbors(u))
        if (x != v && !g.adjacent(v, x))
            return false;
    return true;
}

/// The unique member of N[p] \ N[v] when there is exactly one, else -1.
/// A result s >= 0 means s is a satellite of v with parent p.
template <graph_view G>
vertex satellite_via(const G& g, vertex v, vertex p)
{
    vertex found = -1;
    for (vertex x : g.neighbors(p)) {
        if (x == v || g.adjacent(v, x))
            continue;
        if (found >= 0)
            return -1;
        found = x;
    }
    return found;
}

template <graph_view G>
bool has_satellite(const G& g, vertex v)
{
    for (vertex p : g.neighbors(v))
        if (satellite_via(g, v, p) >= 0)
            return true;
    return false;
}

struct tail {
    vertex v, u, w;  // deg(v) = 1, deg(u) = 2, w the other neighbor of u
    friend bool operator==(const tail&, const tail&) = default;
};

struct dominated_pair {
    vertex v, u;  // v dominated by u
    friend bool operator==(const dominated_pair&, const dominated_pair&) = default;
};

struct satellite {
    vertex v, parent, sat;
    friend bool operator==(const satellite&, const satellite&) = default;
};

struct chain {
    vertex u0, u1, u2, u3;
    friend bool operator==(const chain&, const chain&) = default;
};

// degree-3 vertex v with degree-1 neighbor u1 and adjacent neighbors u2 < u3
struct triangle_pendant {
    vertex v, u1, u2, u3;
    friend bool operator==(const triangle_pendant&, const triangle_pendant&) = default;
};

struct structure_report {
    std::vector<tail> tails;
    std::vector<dominated_pair> dominated_pairs;
    std::vector<satellite> satellites;
    std::vector<chain> chains;
    std::vector<triangle_pendant> triangle_pendants;
};

template <graph_view G>
std::vector<tail> find_tails(const G& g)
{
    std::vector<tail> out;
    for (vertex v = 0; v < g.universe(); ++v) {
        if (!g.contains(v) || g.degree(v) != 1)
            continue;
        vertex u = *g.neighbors(v).begin();
        if (g.degree(u) != 2)
            continue;
        for (vertex w : g.neighbors(u))
            if (w != v)
                out.push_back({v, u, w});
    }
    return out;
}

template <graph_view G>
std::vector<dominated_pair> find_dominated_pairs(const G& g)
{
    std::vector<dominated_pair> out;
    for (vertex v = 0; v < g.universe(); ++v) {
        if (!g.contains(v))
            continue;
        for (vertex u : g.neighbors(v))
            if (g.degree(u) <= g.degree(v) && is_dominated_by(g, v, u))
                out.push_back({v, u});
    }
    return out;
}

template <graph_view G>
std::vector<satellite> find_satellites(const G& g)
{
    std::vector<satellite> out;
    for (vertex v = 0; v < g.universe(); ++v) {
        if (!g.contains(v))
            continue;
        for (vertex p : g.neighbors(v)) {
            vertex s = satellite_via(g, v, p);
            if (s >= 0)
                out.push_back({v, p, s});
        }
    }
    return out;
}

template <graph_view G>
std::vector<chain> find_chains(const G& g)
{
    std::vector<chain> out;
    for (vertex u0 = 0; u0 < g.universe(); ++u0) {
        if (!g.contains(u0) || g.degree(u0) < 3)
            continue;
        for (vertex u1 : g.neighbors(u0)) {
            if (g.degree(u1) != 2)
                continue;
            for (vertex u2 : g.neighbors(u1)) {
                if (u2 == u0 || g.degree(u2) != 2)
                    continue;
                for (vertex u3 : g.neighbors(u2))
                    if (u3 != u1 && u3 != u0)
                        out.push_back({u0, u1, u2, u3});
            }
        }
    }
    return out;
}

template <graph_view G>
std::vector<triangle_pendant> find_triangle_pendants(const G& g)
{
    std::vector<triangle_pendant> out;
    for (vertex v = 0; v < g.universe(); ++v) {
        if (!g.contains(v) || g.degree(v) != 3)
            continue;
        std::array<vertex, 3> nb{};
        int i = 0;
        for (vertex u : g.neighbors(v))
            nb[i++] = u;
        for (int k = 0; k < 3; ++k) {
            vertex u1 = nb[k], u2 = nb[(k + 1) % 3], u3 = nb[(k + 2) % 3];
            if (u2 > u3)
                std::swap(u2, u3);
            if (g.degree(u1) == 1 && g.adjacent(u2, u3))
                out.push_back({v, u1, u2, u3});
        }
    }
    return out;
}

template <graph_view G>
structure_report detect_structures(const G& g)
{
    return {find_tails(g), find_dominated_pairs(g), find_satellites(g), find_chains(g),
            find_triangle_pendants(g)};
}

}  // namespace p3vc
