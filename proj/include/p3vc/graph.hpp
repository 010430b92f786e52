#pragma once

#include <algorithm>
#include <array>
#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace p3vc {

using vertex = int;

// sorted, duplicate-free list of vertex ids
using vertex_set = std::vector<vertex>;

using edge = std::pair<vertex, vertex>;

struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

// raised when a structural lemma the algorithms rely on is observed to fail
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline vertex_set make_set(std::vector<vertex> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline bool set_contains(const vertex_set& s, vertex v)
{
    return std::binary_search(s.begin(), s.end(), v);
}

inline vertex_set set_union(const vertex_set& a, const vertex_set& b)
{
    vertex_set out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline vertex_set set_difference(const vertex_set& a, const vertex_set& b)
{
    vertex_set out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool set_includes(const vertex_set& outer, const vertex_set& inner)
{
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

/// Simple undirected graph on vertices [0, n) with sorted adjacency lists.
/// Immutable once built; vertex deletion produces a new graph (see induced_subgraph).
class graph {
public:
    graph() = default;

    explicit graph(int n) : adj_(static_cast<std::size_t>(n))
    {
        if (n < 0)
            throw contract_error("negative vertex count");
    }

    // Duplicate edges collapse; self-loops and out-of-range endpoints are rejected.
    graph(int n, std::span<const edge> edges) : graph(n)
    {
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw contract_error("edge endpoint out of range");
            if (u == v)
                throw contract_error("self-loop");
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& list : adj_) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            m_ += list.size();
        }
        m_ /= 2;
    }

    graph(int n, std::initializer_list<edge> edges)
        : graph(n, std::span<const edge>(edges.begin(), edges.size()))
    {
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return m_; }

    // graph_view interface
    int universe() const { return vertex_count(); }
    bool contains(vertex v) const { return v >= 0 && v < vertex_count(); }
    int degree(vertex v) const { return static_cast<int>(adj_[v].size()); }
    std::span<const vertex> neighbors(vertex v) const { return adj_[v]; }
    bool adjacent(vertex u, vertex v) const
    {
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    std::vector<edge> edges() const
    {
        std::vector<edge> out;
        out.reserve(m_);
        for (vertex u = 0; u < vertex_count(); ++u)
            for (vertex v : adj_[u])
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const graph&, const graph&) = default;

private:
    std::vector<std::vector<vertex>> adj_;
    std::size_t m_ = 0;
};

/// Read-only access shared by graph and live_graph: a universe of ids of which
/// some subset is present, with adjacency restricted to present vertices.
template <class G>
concept graph_view = requires(const G& g, vertex v) {
    { g.universe() } -> std::convertible_to<int>;
    { g.contains(v) } -> std::convertible_to<bool>;
    { g.degree(v) } -> std::convertible_to<int>;
    { g.adjacent(v, v) } -> std::convertible_to<bool>;
    g.neighbors(v);
};

template <graph_view G>
vertex_set present_vertices(const G& g)
{
    vertex_set out;
    for (vertex v = 0; v < g.universe(); ++v)
        if (g.contains(v))
            out.push_back(v);
    return out;
}

/// Subgraph induced by `keep` together with the map new id -> original id.
struct relabeled_graph {
    graph g;
    std::vector<vertex> to_original;
};

inline relabeled_graph induced_subgraph(const graph& g, const vertex_set& keep)
{
    std::vector<vertex> to_new(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        to_new[keep[i]] = static_cast<vertex>(i);
    std::vector<edge> edges;
    for (auto [u, v] : g.edges())
        if (to_new[u] >= 0 && to_new[v] >= 0)
            edges.emplace_back(to_new[u], to_new[v]);
    return {graph(static_cast<int>(keep.size()), edges), keep};
}

inline relabeled_graph remove_vertices(const graph& g, const vertex_set& removed)
{
    vertex_set keep;
    for (vertex v = 0; v < g.vertex_count(); ++v)
        if (!set_contains(removed, v))
            keep.push_back(v);
    return induced_subgraph(g, keep);
}

/// N(X) when `closed` is false, N[X] otherwise.
template <graph_view G>
vertex_set neighborhood(const G& g, const vertex_set& x, bool closed = false)
{
    std::vector<char> in_x(static_cast<std::size_t>(g.universe()), 0);
    for (vertex v : x)
        in_x[v] = 1;
    std::vector<vertex> out;
    for (vertex v : x) {
        if (closed)
            out.push_back(v);
        for (vertex u : g.neighbors(v))
            if (!in_x[u])
                out.push_back(u);
    }
    return make_set(std::move(out));
}

/// Vertices at distance exactly two from v.
template <graph_view G>
vertex_set second_neighborhood(const G& g, vertex v)
{
    vertex_set closed = neighborhood(g, {v}, true);
    std::vector<vertex> out;
    for (vertex u : g.neighbors(v))
        for (vertex w : g.neighbors(u))
            if (!set_contains(closed, w))
                out.push_back(w);
    return make_set(std::move(out));
}

struct component_profile {
    int count = 0;
    std::map<int, int> by_size;  // component size -> number of components
    std::vector<vertex_set> components;  // ordered by smallest member

    int of_size(int size) const
    {
        auto it = by_size.find(size);
        return it == by_size.end() ? 0 : it->second;
    }
};

template <graph_view G>
component_profile components_profile(const G& g)
{
    component_profile prof;
    std::vector<char> seen(static_cast<std::size_t>(g.universe()), 0);
    std::vector<vertex> stack;
    for (vertex s = 0; s < g.universe(); ++s) {
        if (!g.contains(s) || seen[s])
            continue;
        std::vector<vertex> comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (vertex u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        ++prof.by_size[static_cast<int>(comp.size())];
        prof.components.push_back(std::move(comp));
    }
    prof.count = static_cast<int>(prof.components.size());
    return prof;
}

/// A path on three vertices; `middle` is adjacent to both ends.
struct path3 {
    vertex first = -1;
    vertex middle = -1;
    vertex last = -1;

    std::array<vertex, 3> vertices() const { return {first, middle, last}; }
    bool contains(vertex v) const { return v == first || v == middle || v == last; }
    bool is_end(vertex v) const { return v == first || v == last; }

    friend bool operator==(const path3&, const path3&) = default;
};

using packing = std::vector<path3>;

template <graph_view G>
bool is_path3(const G& g, const path3& p)
{
    for (vertex v : p.vertices())
        if (v < 0 || v >= g.universe() || !g.contains(v))
            return false;
    if (p.first == p.middle || p.first == p.last || p.middle == p.last)
        return false;
    return g.adjacent(p.first, p.middle) && g.adjacent(p.middle, p.last);
}

template <graph_view G>
bool is_packing(const G& g, const packing& paths)
{
    std::vector<char> used(static_cast<std::size_t>(g.universe()), 0);
    for (const auto& p : paths) {
        if (!is_path3(g, p))
            return false;
        for (vertex v : p.vertices()) {
            if (used[v])
                return false;
            used[v] = 1;
        }
    }
    return true;
}

inline vertex_set packing_vertices(const packing& paths)
{
    std::vector<vertex> out;
    for (const auto& p : paths)
        for (vertex v : p.vertices())
            out.push_back(v);
    return make_set(std::move(out));
}

/// Some 3-path, or none iff every component has at most two vertices.
/// Picks the smallest-id vertex of degree >= 2 and its two smallest neighbors.
template <graph_view G>
std::optional<path3> find_p3(const G& g)
{
    for (vertex v = 0; v < g.universe(); ++v) {
        if (!g.contains(v) || g.degree(v) < 2)
            continue;
        path3 p{-1, v, -1};
        for (vertex u : g.neighbors(v)) {
            if (p.first < 0)
                p.first = u;
            else {
                p.last = u;
                break;
            }
        }
        return p;
    }
    return std::nullopt;
}

/// Greedy maximal packing: scan middles in ascending id, each taking its two
/// smallest unused neighbors. One pass suffices because the set of unused
/// neighbors of a vertex only shrinks.
template <graph_view G>
packing maximal_p3_packing(const G& g)
{
    packing out;
    std::vector<char> used(static_cast<std::size_t>(g.universe()), 0);
    for (vertex v = 0; v < g.universe(); ++v) {
        if (!g.contains(v) || used[v])
            continue;
        vertex a = -1, b = -1;
        for (vertex u : g.neighbors(v)) {
            if (used[u])
                continue;
            if (a < 0)
                a = u;
            else {
                b = u;
                break;
            }
        }
        if (b < 0)
            continue;
        used[a] = used[v] = used[b] = 1;
        out.push_back({a, v, b});
    }
    return out;
}

}  // namespace p3vc
