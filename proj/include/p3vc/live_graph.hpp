#pragma once

#include <ranges>

#include "p3vc/graph.hpp"

namespace p3vc {

/// A graph with some vertices deleted. Ids stay those of the underlying graph,
/// so covers found on a live_graph are already in input numbering.
class live_graph {
public:
    explicit live_graph(const graph& g)
        : g_(&g)
        , alive_(static_cast<std::size_t>(g.vertex_count()), 1)
        , deg_(static_cast<std::size_t>(g.vertex_count()))
        , alive_count_(g.vertex_count())
    {
        for (vertex v = 0; v < g.vertex_count(); ++v)
            deg_[v] = g.degree(v);
    }

    const graph& base() const { return *g_; }

    int universe() const { return g_->vertex_count(); }
    bool contains(vertex v) const { return alive_[v] != 0; }
    int degree(vertex v) const { return deg_[v]; }
    int size() const { return alive_count_; }
    bool empty() const { return alive_count_ == 0; }

    bool adjacent(vertex u, vertex v) const
    {
        return alive_[u] && alive_[v] && g_->adjacent(u, v);
    }

    auto neighbors(vertex v) const
    {
        return g_->neighbors(v) | std::views::filter([this](vertex u) { return alive_[u] != 0; });
    }

    // first two live neighbors of a vertex, -1 when absent
    std::pair<vertex, vertex> first_two_neighbors(vertex v) const
    {
        vertex a = -1;
        for (vertex u : g_->neighbors(v)) {
            if (!alive_[u])
                continue;
            if (a < 0)
                a = u;
            else
                return {a, u};
        }
        return {a, -1};
    }

    void erase(vertex v)
    {
        if (!alive_[v])
            return;
        alive_[v] = 0;
        --alive_count_;
        for (vertex u : g_->neighbors(v))
            if (alive_[u])
                --deg_[u];
    }

    void erase(const vertex_set& vs)
    {
        for (vertex v : vs)
            erase(v);
    }

    live_graph without(const vertex_set& vs) const
    {
        live_graph out = *this;
        out.erase(vs);
        return out;
    }

    int max_degree() const
    {
        int d = 0;
        for (vertex v = 0; v < universe(); ++v)
            if (alive_[v])
                d = std::max(d, deg_[v]);
        return d;
    }

    // compact copy with the map back to base ids
    relabeled_graph materialize() const { return induced_subgraph(*g_, present_vertices(*this)); }

private:
    const graph* g_;
    std::vector<char> alive_;
    std::vector<int> deg_;
    int alive_count_;
};

static_assert(graph_view<graph>);
static_assert(graph_view<live_graph>);

}  // namespace p3vc
