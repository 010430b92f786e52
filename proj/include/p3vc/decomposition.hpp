#pragma once

#include <optional>
#include <string>

#include "p3vc/graph.hpp"
#include "p3vc/matching.hpp"

namespace p3vc {

/// A vertex set A inducing maximum degree <= 1, with the neighborhoods the
/// decomposition conditions count. A0: isolated in G[A]; A1: on an A-edge.
struct a_side_view {
    vertex_set A, A0, A1;
    std::vector<vertex_set> components;  // of G[A], sizes 1 and 2
    vertex_set N;        // N(A)
    vertex_set N1;       // members of N(A) adjacent to a size-1 component
    vertex_set N2;       // ... adjacent to a size-2 component
    vertex_set N2prime;  // N2 minus N1

    int comp() const { return static_cast<int>(components.size()); }
    int comp2() const { return static_cast<int>(A1.size() / 2); }
};

inline a_side_view make_a_side_view(const graph& g, const vertex_set& A)
{
    a_side_view view;
    view.A = A;
    std::vector<char> in_a(static_cast<std::size_t>(g.vertex_count()), 0);
    for (vertex v : A) {
        if (v < 0 || v >= g.vertex_count())
            throw contract_error("A contains an unknown vertex");
        in_a[v] = 1;
    }
    std::vector<vertex> n1, n2, all;
    for (vertex v : A) {
        vertex partner = -1;
        int inside = 0;
        for (vertex u : g.neighbors(v))
            if (in_a[u]) {
                partner = u;
                ++inside;
            }
        if (inside > 1)
            throw contract_error("G[A] has a vertex of degree above 1");
        (inside == 0 ? view.A0 : view.A1).push_back(v);
        if (inside == 0)
            view.components.push_back({v});
        else if (v < partner)
            view.components.push_back({v, partner});
        for (vertex u : g.neighbors(v))
            if (!in_a[u]) {
                all.push_back(u);
                (inside == 0 ? n1 : n2).push_back(u);
            }
    }
    std::sort(view.components.begin(), view.components.end());
    view.N = make_set(std::move(all));
    view.N1 = make_set(std::move(n1));
    view.N2 = make_set(std::move(n2));
    view.N2prime = set_difference(view.N2, view.N1);
    return view;
}

// Comp(G[A]) > 2|N(A)| - |N'_2(A)|
inline bool lemma_condition(const a_side_view& v)
{
    return v.comp() > 2 * static_cast<int>(v.N.size()) - static_cast<int>(v.N2prime.size());
}

// Comp_2(G[A]) > |N_2(A)|
inline bool corollary_condition(const a_side_view& v)
{
    return v.comp2() > static_cast<int>(v.N2.size());
}

/// (I, C, R) partitioning V: G[I] has maximum degree <= 1, no I-R edge, and
/// `witness` is a packing of |C| paths inside G[I + C].
struct good_decomposition {
    vertex_set I, C, R;
    packing witness;
};

/// Empty when d is a good decomposition of g; otherwise one line per failed condition.
inline std::vector<std::string> decomposition_violations(const graph& g, const good_decomposition& d)
{
    std::vector<std::string> out;
    const int n = g.vertex_count();
    std::vector<int> part(static_cast<std::size_t>(n), -1);
    bool partition_ok = true;
    int which = 0;
    for (const vertex_set* s : {&d.I, &d.C, &d.R}) {
        for (vertex v : *s) {
            if (v < 0 || v >= n || part[v] >= 0)
                partition_ok = false;
            else
                part[v] = which;
        }
        ++which;
    }
    for (vertex v = 0; v < n && partition_ok; ++v)
        partition_ok = part[v] >= 0;
    if (!partition_ok) {
        out.push_back("I, C, R do not partition the vertex set");
        return out;
    }
    for (vertex v : d.I) {
        int inside = 0;
        for (vertex u : g.neighbors(v)) {
            if (part[u] == 0)
                ++inside;
            if (part[u] == 2) {
                out.push_back("edge between I and R at " + std::to_string(v));
                break;
            }
        }
        if (inside > 1)
            out.push_back("G[I] has degree above 1 at " + std::to_string(v));
    }
    if (d.witness.size() != d.C.size())
        out.push_back("witness packing size differs from |C|");
    if (!is_packing(g, d.witness))
        out.push_back("witness is not a packing");
    for (const auto& p : d.witness)
        for (vertex v : p.vertices())
            if (v >= 0 && v < n && part[v] == 2) {
                out.push_back("witness path leaves I + C");
                break;
            }
    return out;
}

inline bool is_valid_decomposition(const graph& g, const good_decomposition& d)
{
    return decomposition_violations(g, d).empty();
}

enum class decomposition_mode {
    general,     // all components of G[A], the lemma's condition
    edges_only,  // the A-edges alone, the corollary's condition
};

/// Crown search on the auxiliary bipartite graph components -> N(A). Each
/// vertex of N(A) is offered twice when it touches a size-1 component, once
/// otherwise (edges_only: A-edges against N_2(A), capacity 1). A maximum
/// matching leaving some component unmatched yields I = components reachable
/// from unmatched ones by alternating paths and C = their neighbors, every
/// copy of which is matched into I. Whenever the mode's inequality holds the
/// capacities are exceeded, so a decomposition is found.
inline std::optional<good_decomposition> find_good_decomposition(const graph& g, const a_side_view& view,
                                                                 decomposition_mode mode)
{
    const bool edges_only = mode == decomposition_mode::edges_only;
    std::vector<const vertex_set*> left;
    for (const auto& c : view.components)
        if (!edges_only || c.size() == 2)
            left.push_back(&c);
    if (left.empty())
        return std::nullopt;

    const vertex_set& right_vertices = edges_only ? view.N2 : view.N;
    std::vector<int> first_copy(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<vertex> copy_owner;
    for (vertex c : right_vertices) {
        first_copy[c] = static_cast<int>(copy_owner.size());
        copy_owner.push_back(c);
        if (!edges_only && set_contains(view.N1, c))
            copy_owner.push_back(c);
    }

    bipartite_matching m(static_cast<int>(left.size()), static_cast<int>(copy_owner.size()));
    for (std::size_t l = 0; l < left.size(); ++l) {
        std::vector<vertex> nb;
        for (vertex a : *left[l])
            for (vertex u : g.neighbors(a))
                if (first_copy[u] >= 0)
                    nb.push_back(u);
        for (vertex u : make_set(std::move(nb)))
            for (int r = first_copy[u]; r < static_cast<int>(copy_owner.size()) && copy_owner[r] == u; ++r)
                m.add_edge(static_cast<int>(l), r);
    }
    if (m.solve() == static_cast<int>(left.size()))
        return std::nullopt;

    auto [left_seen, right_seen] = m.alternating_reach();
    good_decomposition d;
    std::vector<vertex> in_i, in_c;
    for (std::size_t l = 0; l < left.size(); ++l)
        if (left_seen[l])
            in_i.insert(in_i.end(), left[l]->begin(), left[l]->end());
    for (std::size_t r = 0; r < copy_owner.size(); ++r)
        if (right_seen[r]) {
            if (m.match_of_right(static_cast<int>(r)) < 0)
                throw internal_error("crown search: reachable right vertex is unmatched");
            in_c.push_back(copy_owner[r]);
        }
    d.I = make_set(std::move(in_i));
    d.C = make_set(std::move(in_c));

    auto neighbor_in = [&](const vertex_set& comp, vertex c) {
        for (vertex a : comp)
            if (g.adjacent(a, c))
                return a;
        return vertex{-1};
    };
    for (vertex c : d.C) {
        std::vector<const vertex_set*> mates;
        for (int r = first_copy[c]; r < static_cast<int>(copy_owner.size()) && copy_owner[r] == c; ++r)
            mates.push_back(left[m.match_of_right(r)]);
        if (mates.size() == 2) {
            d.witness.push_back({neighbor_in(*mates[0], c), c, neighbor_in(*mates[1], c)});
        } else {
            const vertex_set& k = *mates[0];
            if (k.size() != 2)
                throw internal_error("crown search: single-capacity vertex matched to a singleton");
            vertex a = neighbor_in(k, c);
            d.witness.push_back({c, a, a == k[0] ? k[1] : k[0]});
        }
    }
    vertex_set ic = set_union(d.I, d.C);
    for (vertex v = 0; v < g.vertex_count(); ++v)
        if (!set_contains(ic, v))
            d.R.push_back(v);

    auto problems = decomposition_violations(g, d);
    if (!problems.empty())
        throw internal_error("crown search produced an invalid decomposition: " + problems.front());
    if (d.I.empty() || !set_includes(view.A, d.I) || !set_includes(view.N, d.C))
        throw internal_error("crown search left the A / N(A) bounds");
    return d;
}

/// G[R] with budget k - |C|; C is committed to the solution.
struct reduced_instance {
    graph g;
    std::vector<vertex> to_original;
    int k = 0;
    vertex_set forced;
};

inline reduced_instance reduce_by_decomposition(const graph& g, int k, const good_decomposition& d)
{
    auto sub = induced_subgraph(g, d.R);
    return {std::move(sub.g), std::move(sub.to_original), k - static_cast<int>(d.C.size()), d.C};
}

}  // namespace p3vc
