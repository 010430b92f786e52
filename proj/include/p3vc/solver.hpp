#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <type_traits>

#include "p3vc/live_graph.hpp"
#include "p3vc/oracle.hpp"
#include "p3vc/structures.hpp"

namespace p3vc {

enum class rule {
    trivial,             // step 1: components of maximum degree <= 2
    tail,                // step 2
    dominated,           // step 3, rule B2
    satellite_deg4,      // step 4, rule B3
    normal_deg4,         // step 5, rule B1
    chain,               // step 6
    triangle_neighbor,   // step 7
    deg2_with_deg3_at_2, // step 8
    bipartite23,         // step 9
    regular3,            // step 10, rule B1
};

constexpr std::string_view rule_name(rule r)
{
    switch (r) {
    case rule::trivial: return "trivial";
    case rule::tail: return "tail";
    case rule::dominated: return "dominated";
    case rule::satellite_deg4: return "satellite_deg4";
    case rule::normal_deg4: return "normal_deg4";
    case rule::chain: return "chain";
    case rule::triangle_neighbor: return "triangle_neighbor";
    case rule::deg2_with_deg3_at_2: return "deg2_with_deg3_at_2";
    case rule::bipartite23: return "bipartite23";
    case rule::regular3: return "regular3";
    }
    return "?";
}

constexpr rule rule_of_step(int step)
{
    constexpr rule by_step[] = {rule::trivial,        rule::tail,        rule::dominated,
                                rule::satellite_deg4, rule::normal_deg4, rule::chain,
                                rule::triangle_neighbor, rule::deg2_with_deg3_at_2,
                                rule::bipartite23,    rule::regular3};
    return by_step[step - 1];
}

/// One child of a branching (or the single child of a reduction). Deleted
/// vertices outside `added_to_cover` are left with no 3-path through them.
struct branch_step {
    rule tag{};
    vertex_set deleted;
    vertex_set added_to_cover;
    int k_decrement = 0;
};

inline branch_step make_branch(rule tag, vertex_set deleted, vertex_set cover)
{
    int dec = static_cast<int>(cover.size());
    return {tag, std::move(deleted), std::move(cover), dec};
}

// --- primitive branching rules ---------------------------------------------

inline vertex_set closed_pair(const live_graph& g, vertex a, vertex b)
{
    return neighborhood(g, make_set({a, b}), true);
}

inline vertex_set open_pair(const live_graph& g, vertex a, vertex b)
{
    return neighborhood(g, make_set({a, b}), false);
}

/// B1 on v: take v; or take N(v); or, for each neighbor u, take N({u,v}).
inline std::vector<branch_step> rule_b1(const live_graph& g, vertex v, rule tag = rule::normal_deg4)
{
    std::vector<branch_step> out;
    out.push_back(make_branch(tag, {v}, {v}));
    out.push_back(make_branch(tag, neighborhood(g, {v}, true), neighborhood(g, {v}, false)));
    for (vertex u : g.neighbors(v))
        out.push_back(make_branch(tag, closed_pair(g, v, u), open_pair(g, v, u)));
    return out;
}

/// B2 on v dominated by u: take v; or take N({u,v}).
inline std::vector<branch_step> rule_b2(const live_graph& g, vertex v, vertex u, rule tag = rule::dominated)
{
    if (!is_dominated_by(g, v, u))
        throw contract_error("rule B2 needs v dominated by u");
    return {make_branch(tag, {v}, {v}), make_branch(tag, closed_pair(g, v, u), open_pair(g, v, u))};
}

/// B3 on an undominated v with a satellite: take v; or, for each neighbor u, take N({u,v}).
inline std::vector<branch_step> rule_b3(const live_graph& g, vertex v, rule tag = rule::satellite_deg4)
{
    if (!has_satellite(g, v))
        throw contract_error("rule B3 needs a vertex with a satellite");
    for (vertex u : g.neighbors(v))
        if (is_dominated_by(g, v, u))
            throw contract_error("rule B3 needs a vertex not dominated by any other");
    std::vector<branch_step> out;
    out.push_back(make_branch(tag, {v}, {v}));
    for (vertex u : g.neighbors(v))
        out.push_back(make_branch(tag, closed_pair(g, v, u), open_pair(g, v, u)));
    return out;
}

/// B4 on a degree-3 v with pendant u1 and adjacent neighbors u2, u3.
inline std::vector<branch_step> rule_b4(const live_graph& g, const triangle_pendant& t,
                                        rule tag = rule::triangle_neighbor)
{
    if (g.degree(t.v) != 3 || g.degree(t.u1) != 1 || !g.adjacent(t.v, t.u1) || !g.adjacent(t.v, t.u2) ||
        !g.adjacent(t.v, t.u3) || !g.adjacent(t.u2, t.u3))
        throw contract_error("rule B4 precondition violated");
    std::vector<branch_step> out;
    out.push_back(make_branch(tag, closed_pair(g, t.u1, t.v), make_set({t.u2, t.u3})));
    out.push_back(make_branch(tag, set_union(closed_pair(g, t.u2, t.u3), {t.u1}), open_pair(g, t.u2, t.u3)));
    return out;
}

/// Minimum cover of a connected bipartite component whose sides are all
/// degree 2 (V1) and all degree 3 (V2). Returns V2: a surviving degree-3
/// vertex needs two covered neighbors and each covered degree-2 vertex serves
/// at most two of them, so any cover has at least |V2| vertices.
template <graph_view G>
vertex_set solve_bipartite_23(const G& g, const vertex_set& component, bool degree2_side = false)
{
    vertex_set v1, v2;
    for (vertex v : component) {
        if (g.degree(v) == 2)
            v1.push_back(v);
        else if (g.degree(v) == 3)
            v2.push_back(v);
        else
            throw internal_error("bipartite step: vertex of degree other than 2 or 3");
        for (vertex u : g.neighbors(v))
            if (g.degree(u) == g.degree(v) || !set_contains(component, u))
                throw internal_error("bipartite step: component is not 2-3 bipartite");
    }
    if (2 * v1.size() != 3 * v2.size())
        throw internal_error("bipartite step: side sizes inconsistent");
    return degree2_side ? v1 : v2;
}

inline vertex_set solve_bipartite_23(const graph& g)
{
    vertex_set cover;
    for (const auto& comp : components_profile(g).components)
        cover = set_union(cover, solve_bipartite_23(g, comp));
    return cover;
}

// --- step selection ---------------------------------------------------------

/// The step of the search that applies first, with the vertices it binds:
///   1: a component of max degree <= 2      2: (v, u, w) tail
///   3: (v, u) v dominated by u             4, 5, 10: (v)
///   6: (u0, u1, u2, u3) chain              7: (v, u, w, u1, u2)
///   8: (v, u, w, u1)                       9: a 2-3 bipartite component
struct step_choice {
    int step = 0;
    std::vector<vertex> feature;
};

namespace detail {

// max degree first, then smallest id
template <class Pred>
vertex pick_vertex(const live_graph& g, int min_degree, Pred&& eligible)
{
    vertex best = -1;
    for (vertex v = 0; v < g.universe(); ++v) {
        if (!g.contains(v) || g.degree(v) < min_degree)
            continue;
        if (best >= 0 && g.degree(v) <= g.degree(best))
            continue;
        if (eligible(v))
            best = v;
    }
    return best;
}

enum class component_shape { small, other, regular3, bipartite23 };

inline component_shape shape_of(const live_graph& g, const vertex_set& comp)
{
    int maxd = 0;
    bool all3 = true, alternating = true;
    for (vertex v : comp) {
        int d = g.degree(v);
        maxd = std::max(maxd, d);
        all3 &= d == 3;
        if (d != 2 && d != 3)
            alternating = false;
        for (vertex u : g.neighbors(v))
            if (g.degree(u) == d)
                alternating = false;
    }
    if (maxd <= 2)
        return component_shape::small;
    if (all3)
        return component_shape::regular3;
    if (alternating)
        return component_shape::bipartite23;
    return component_shape::other;
}

}  // namespace detail

inline step_choice step_dispatch(const live_graph& g)
{
    auto prof = components_profile(g);
    if (prof.count == 0)
        return {1, {}};
    for (const auto& comp : prof.components)
        if (detail::shape_of(g, comp) == detail::component_shape::small)
            return {1, comp};

    for (const auto& t : find_tails(g))
        return {2, {t.v, t.u, t.w}};

    {
        vertex v = detail::pick_vertex(g, 3, [&](vertex x) {
            for (vertex u : g.neighbors(x))
                if (is_dominated_by(g, x, u))
                    return true;
            return false;
        });
        if (v >= 0) {
            for (vertex u : g.neighbors(v))
                if (is_dominated_by(g, v, u))
                    return {3, {v, u}};
        }
    }

    if (vertex v = detail::pick_vertex(g, 4, [&](vertex x) { return has_satellite(g, x); }); v >= 0)
        return {4, {v}};
    if (vertex v = detail::pick_vertex(g, 4, [](vertex) { return true; }); v >= 0)
        return {5, {v}};

    for (vertex u0 = 0; u0 < g.universe(); ++u0) {
        if (!g.contains(u0) || g.degree(u0) < 3)
            continue;
        for (vertex u1 : g.neighbors(u0)) {
            if (g.degree(u1) != 2)
                continue;
            auto [a, b] = g.first_two_neighbors(u1);
            vertex u2 = a == u0 ? b : a;
            if (g.degree(u2) != 2)
                continue;
            auto [c, d] = g.first_two_neighbors(u2);
            vertex u3 = c == u1 ? d : c;
            if (u3 != u0)
                return {6, {u0, u1, u2, u3}};
        }
    }

    for (vertex v = 0; v < g.universe(); ++v) {
        if (!g.contains(v) || g.degree(v) != 2)
            continue;
        auto [a, b] = g.first_two_neighbors(v);
        for (auto [u, w] : {std::pair{a, b}, std::pair{b, a}})
            for (vertex u1 : g.neighbors(u)) {
                if (u1 == v)
                    continue;
                for (vertex u2 : g.neighbors(u))
                    if (u2 > u1 && u2 != v && g.adjacent(u1, u2))
                        return {7, {v, u, w, u1, u2}};
            }
    }

    for (vertex v = 0; v < g.universe(); ++v) {
        if (!g.contains(v) || g.degree(v) != 2)
            continue;
        auto [a, b] = g.first_two_neighbors(v);
        for (auto [u, w] : {std::pair{a, b}, std::pair{b, a}})
            for (vertex u1 : g.neighbors(u))
                if (u1 != v && g.degree(u1) == 3)
                    return {8, {v, u, w, u1}};
    }

    // every component must now be 3-regular or 2-3 bipartite
    const vertex_set* regular = nullptr;
    for (const auto& comp : prof.components) {
        auto s = detail::shape_of(g, comp);
        if (s == detail::component_shape::bipartite23)
            return {9, comp};
        if (s != detail::component_shape::regular3)
            throw internal_error("after step 8 a component is neither 3-regular nor 2-3 bipartite");
        if (!regular)
            regular = &comp;
    }
    return {10, {regular->front()}};
}

namespace detail {

// vertices of a path or cycle component in walk order
inline std::vector<vertex> walk_order(const live_graph& g, const vertex_set& comp)
{
    vertex start = comp.front();
    for (vertex v : comp)
        if (g.degree(v) <= 1) {
            start = v;
            break;
        }
    std::vector<vertex> order{start};
    vertex prev = -1, cur = start;
    while (order.size() < comp.size()) {
        vertex next = -1;
        for (vertex u : g.neighbors(cur))
            if (u != prev) {
                next = u;
                break;
            }
        prev = cur;
        cur = next;
        order.push_back(cur);
    }
    return order;
}

inline void require(bool ok, const char* what)
{
    if (!ok)
        throw internal_error(what);
}

}  // namespace detail

struct expand_options {
    bool paper_literal_step9 = false;  // cover the degree-2 side in step 9
};

/// Branches of the chosen step, exactly as the step prescribes, with the
/// per-branch lower bounds of the running-time analysis checked at runtime.
inline std::vector<branch_step> expand_branches(const live_graph& g, const step_choice& choice,
                                                expand_options opts = {})
{
    using detail::require;
    const auto& f = choice.feature;
    std::vector<branch_step> out;
    auto deg = [&](vertex v) { return g.degree(v); };

    switch (choice.step) {
    case 1: {
        if (f.empty())
            return {make_branch(rule::trivial, {}, {})};
        vertex_set cover;
        int maxd = 0;
        int edges = 0;
        for (vertex v : f) {
            maxd = std::max(maxd, deg(v));
            edges += deg(v);
        }
        edges /= 2;
        require(maxd <= 2, "step 1 needs a component of maximum degree <= 2");
        if (maxd == 2) {
            auto order = detail::walk_order(g, f);
            bool cycle = edges == static_cast<int>(f.size());
            auto local = path_cycle_cover_size(cycle ? line_kind::cycle : line_kind::path,
                                               static_cast<int>(f.size()));
            for (int i : local.cover)
                cover.push_back(order[i]);
        }
        out.push_back(make_branch(rule::trivial, f, make_set(cover)));
        break;
    }
    case 2: {
        vertex v = f[0], u = f[1], w = f[2];
        require(deg(v) == 1 && deg(u) == 2 && g.adjacent(v, u) && g.adjacent(u, w), "step 2 precondition");
        out.push_back(make_branch(rule::tail, closed_pair(g, v, u), {w}));
        break;
    }
    case 3: {
        vertex v = f[0], u = f[1];
        require(deg(v) >= 3, "step 3 needs degree >= 3");
        out = rule_b2(g, v, u, rule::dominated);
        require(out[0].k_decrement == 1 && out[1].k_decrement == deg(v) - 1, "step 3 decrements");
        break;
    }
    case 4: {
        vertex v = f[0];
        require(deg(v) >= 4, "step 4 needs degree >= 4");
        out = rule_b3(g, v, rule::satellite_deg4);
        for (std::size_t i = 1; i < out.size(); ++i)
            require(out[i].k_decrement >= deg(v), "step 4 branch decrement below d(v)");
        break;
    }
    case 5: {
        vertex v = f[0];
        require(deg(v) >= 4, "step 5 needs degree >= 4");
        out = rule_b1(g, v, rule::normal_deg4);
        require(out[1].k_decrement == deg(v), "step 5 second branch");
        for (std::size_t i = 2; i < out.size(); ++i)
            require(out[i].k_decrement >= deg(v) + 1, "step 5 branch decrement below d(v)+1");
        break;
    }
    case 6: {
        vertex u0 = f[0], u1 = f[1], u2 = f[2], u3 = f[3];
        require(deg(u0) >= 3 && deg(u1) == 2 && deg(u2) == 2 && u0 != u3 && g.adjacent(u0, u1) &&
                    g.adjacent(u1, u2) && g.adjacent(u2, u3),
                "step 6 needs a chain");
        out.push_back(make_branch(rule::chain, closed_pair(g, u1, u2), open_pair(g, u1, u2)));
        require(out[0].k_decrement == 2, "step 6 first branch");
        for (vertex u : g.neighbors(u0)) {
            out.push_back(make_branch(rule::chain, closed_pair(g, u0, u), open_pair(g, u0, u)));
            require(out.back().k_decrement >= deg(u0), "step 6 branch decrement below d(u0)");
        }
        break;
    }
    case 7: {
        vertex v = f[0], u = f[1], w = f[2], u1 = f[3], u2 = f[4];
        require(deg(v) == 2 && g.adjacent(v, u) && g.adjacent(v, w) && g.adjacent(u, u1) &&
                    g.adjacent(u, u2) && g.adjacent(u1, u2),
                "step 7 precondition");
        out.push_back(make_branch(rule::triangle_neighbor, closed_pair(g, u, v), open_pair(g, u, v)));
        out.push_back(make_branch(rule::triangle_neighbor,
                                  set_union(closed_pair(g, u1, u2), make_set({v, w})),
                                  set_union(open_pair(g, u1, u2), {w})));
        for (vertex x : g.neighbors(w))
            out.push_back(make_branch(rule::triangle_neighbor, closed_pair(g, w, x), open_pair(g, w, x)));
        for (const auto& b : out)
            require(b.k_decrement >= 3, "step 7 branch decrement below 3");
        break;
    }
    case 8: {
        vertex v = f[0], u = f[1], w = f[2], u1 = f[3];
        require(deg(v) == 2 && g.adjacent(v, u) && g.adjacent(v, w) && g.adjacent(u, u1) && deg(u1) == 3,
                "step 8 precondition");
        out.push_back(make_branch(rule::deg2_with_deg3_at_2, make_set({u, v, w}), make_set({u, w})));
        out.push_back(make_branch(rule::deg2_with_deg3_at_2, closed_pair(g, w, v), open_pair(g, w, v)));
        require(out[1].k_decrement >= 3, "step 8 second branch decrement below 3");
        for (vertex x : g.neighbors(u)) {
            out.push_back(make_branch(rule::deg2_with_deg3_at_2, closed_pair(g, u, x), open_pair(g, u, x)));
            require(out.back().k_decrement >= (x == u1 ? 4 : 3), "step 8 branch decrement below bound");
        }
        break;
    }
    case 9: {
        vertex_set cover = solve_bipartite_23(g, f, opts.paper_literal_step9);
        out.push_back(make_branch(rule::bipartite23, f, std::move(cover)));
        break;
    }
    case 10: {
        vertex v = f[0];
        require(deg(v) == 3, "step 10 needs a 3-regular graph");
        out = rule_b1(g, v, rule::regular3);
        for (std::size_t i = 2; i < out.size(); ++i)
            require(out[i].k_decrement >= 3, "step 10 branch decrement below 3");
        break;
    }
    default:
        throw contract_error("unknown step " + std::to_string(choice.step));
    }

    for (const auto& b : out)
        require(b.k_decrement == static_cast<int>(b.added_to_cover.size()) &&
                    set_includes(b.deleted, b.added_to_cover),
                "branch bookkeeping");
    return out;
}

// --- search -----------------------------------------------------------------

template <graph_view G>
bool verify_cover(const G& g, const vertex_set& cover)
{
    if constexpr (std::is_same_v<G, graph>) {
        for (vertex v : cover)
            if (v < 0 || v >= g.vertex_count())
                return false;
        live_graph rest(g);
        rest.erase(cover);
        return !find_p3(rest).has_value();
    } else {
        return !find_p3(g.without(cover)).has_value();
    }
}

struct solve_stats {
    long long nodes_total = 0;
    std::map<rule, long long> nodes_per_rule;
    int max_depth = 0;
};

struct solve_outcome {
    bool yes = false;
    std::optional<vertex_set> cover;
    solve_stats stats;
};

struct solve_options {
    bool paper_literal_step9 = false;
};

namespace detail {

class search {
public:
    search(solve_options opts) : opts_(opts) {}

    bool run(live_graph g, int k, int depth, std::vector<vertex>& cover)
    {
        ++stats_.nodes_total;
        stats_.max_depth = std::max(stats_.max_depth, depth);
        for (;;) {
            if (k < 0)
                return false;
            if (!find_p3(g))
                return true;
            if (k == 0)
                return false;
            step_choice choice = step_dispatch(g);
            auto branches = expand_branches(g, choice, {opts_.paper_literal_step9});
            ++stats_.nodes_per_rule[rule_of_step(choice.step)];
            if (branches.size() == 1) {
                const auto& b = branches.front();
                g.erase(b.deleted);
                k -= b.k_decrement;
                cover.insert(cover.end(), b.added_to_cover.begin(), b.added_to_cover.end());
                continue;
            }
            for (const auto& b : branches) {
                std::size_t mark = cover.size();
                cover.insert(cover.end(), b.added_to_cover.begin(), b.added_to_cover.end());
                if (run(g.without(b.deleted), k - b.k_decrement, depth + 1, cover))
                    return true;
                cover.resize(mark);
            }
            return false;
        }
    }

    const solve_stats& stats() const { return stats_; }

private:
    solve_options opts_;
    solve_stats stats_;
};

}  // namespace detail

/// Decides whether g has a 3-path vertex cover of size at most k; on yes the
/// cover is a certificate in g's vertex ids.
inline solve_outcome solve(const graph& g, int k, solve_options opts = {})
{
    detail::search s(opts);
    std::vector<vertex> cover;
    solve_outcome out;
    out.yes = s.run(live_graph(g), k, 0, cover);
    out.stats = s.stats();
    if (out.yes) {
        out.cover = make_set(std::move(cover));
        if (static_cast<int>(out.cover->size()) > k || !verify_cover(g, *out.cover))
            throw internal_error("search produced an invalid certificate");
    }
    return out;
}

}  // namespace p3vc
