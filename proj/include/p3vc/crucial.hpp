#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

#include "p3vc/decomposition.hpp"
#include "p3vc/live_graph.hpp"
#include "p3vc/packing_search.hpp"

namespace p3vc {

// --- classification of the packing ------------------------------------------

enum class path_class {
    p0,      // no vertex adjacent to A
    single,  // |A(L)| = 1
    pm,      // one vertex adjacent to A, the middle, |A(L)| >= 2
    pl,      // one vertex adjacent to A, an end, |A(L)| >= 2
    p2,      // two vertices adjacent to A, |A(L)| >= 2
    p3,
};

constexpr std::string_view path_class_name(path_class c)
{
    switch (c) {
    case path_class::p0: return "P0";
    case path_class::single: return "P^1";
    case path_class::pm: return "PM";
    case path_class::pl: return "PL";
    case path_class::p2: return "P2";
    case path_class::p3: return "P3";
    }
    return "?";
}

struct path_label {
    path_class cls = path_class::p0;
    vertex_set attached;          // A(L)
    int attached_count = 0;       // vertices of L with an A-neighbor
    std::array<bool, 3> free{};   // by position: first, middle, last
    bool touches_a0 = false;
    bool touches_a1 = false;
    int pl_touch = 0;             // vertices of L adjacent to a free vertex of another PL path
    bool touches_good_pl = false; // some vertex of L adjacent to a free vertex of a good PL path
    bool bad = false;             // P0 and PL only
};

struct kernel_counters {
    int x1 = 0, x2 = 0, y0 = 0, y1 = 0, y2 = 0, z1 = 0, z2 = 0, w1 = 0, w2 = 0, k1 = 0;

    int sum() const { return x1 + x2 + y0 + y1 + y2 + z1 + z2 + w1 + w2; }
};

struct packing_classification {
    std::vector<path_label> labels;
    std::vector<int> owner;  // vertex -> index of its path, -1 outside B
    vertex_set pl_free;      // free vertices of PL paths
    kernel_counters counters;
};

/// Labels every path of `paths` against the partition (A, B = V(paths), Z).
/// A P0 path is bad when two or more of its vertices see free vertices of PL
/// paths; a PL path is bad when one of its free vertices sees a bad P0 path.
inline packing_classification classify_packing(const graph& g, const vertex_set& A, const packing& paths)
{
    const int n = g.vertex_count();
    std::vector<char> in_a(static_cast<std::size_t>(n), 0);
    for (vertex v : A)
        in_a[v] = 1;
    std::vector<int> a_deg(static_cast<std::size_t>(n), 0);
    for (vertex v : A)
        for (vertex u : g.neighbors(v))
            a_deg[v] += in_a[u];

    packing_classification out;
    out.owner.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (vertex v : paths[i].vertices())
            out.owner[v] = static_cast<int>(i);
    out.labels.resize(paths.size());

    for (std::size_t i = 0; i < paths.size(); ++i) {
        auto& lab = out.labels[i];
        auto vs = paths[i].vertices();
        std::vector<vertex> att;
        for (int t = 0; t < 3; ++t) {
            bool hit = false;
            for (vertex u : g.neighbors(vs[t]))
                if (in_a[u]) {
                    hit = true;
                    att.push_back(u);
                    (a_deg[u] == 0 ? lab.touches_a0 : lab.touches_a1) = true;
                }
            lab.free[t] = !hit;
            lab.attached_count += hit;
        }
        lab.attached = make_set(std::move(att));
        if (lab.attached.size() == 1)
            lab.cls = path_class::single;
        else if (lab.attached_count == 0)
            lab.cls = path_class::p0;
        else if (lab.attached_count == 1)
            lab.cls = lab.free[1] ? path_class::pl : path_class::pm;
        else
            lab.cls = lab.attached_count == 2 ? path_class::p2 : path_class::p3;
    }

    std::vector<char> is_pl_free(static_cast<std::size_t>(n), 0);
    std::vector<vertex> plf;
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (out.labels[i].cls == path_class::pl) {
            auto vs = paths[i].vertices();
            for (int t = 0; t < 3; ++t)
                if (out.labels[i].free[t]) {
                    is_pl_free[vs[t]] = 1;
                    plf.push_back(vs[t]);
                }
        }
    out.pl_free = make_set(std::move(plf));

    auto sees_pl_free = [&](vertex v, int self) {
        for (vertex u : g.neighbors(v))
            if (is_pl_free[u] && out.owner[u] != self)
                return true;
        return false;
    };
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (vertex v : paths[i].vertices())
            out.labels[i].pl_touch += sees_pl_free(v, static_cast<int>(i));
    for (auto& lab : out.labels)
        if (lab.cls == path_class::p0)
            lab.bad = lab.pl_touch >= 2;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        auto& lab = out.labels[i];
        if (lab.cls != path_class::pl)
            continue;
        auto vs = paths[i].vertices();
        for (int t = 0; t < 3 && !lab.bad; ++t) {
            if (!lab.free[t])
                continue;
            for (vertex u : g.neighbors(vs[t])) {
                int p = out.owner[u];
                if (p >= 0 && out.labels[p].cls == path_class::p0 && out.labels[p].bad) {
                    lab.bad = true;
                    break;
                }
            }
        }
    }
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (vertex v : paths[i].vertices())
            for (vertex u : g.neighbors(v))
                if (is_pl_free[u] && out.owner[u] != static_cast<int>(i) && !out.labels[out.owner[u]].bad)
                    out.labels[i].touches_good_pl = true;

    auto& c = out.counters;
    c.k1 = static_cast<int>(paths.size());
    for (const auto& lab : out.labels) {
        switch (lab.cls) {
        case path_class::pl: ++(lab.bad ? c.x2 : c.x1); break;
        case path_class::p0: ++(lab.pl_touch == 0 ? c.y0 : lab.pl_touch == 1 ? c.y1 : c.y2); break;
        case path_class::pm:
            if (lab.touches_a0 != lab.touches_a1)
                ++(lab.touches_a0 ? c.z1 : c.z2);
            break;
        case path_class::single: ++(lab.pl_touch > 0 ? c.w1 : c.w2); break;
        default: break;
        }
    }
    return out;
}

// --- the partition and its conditions -----------------------------------------

/// (A, B, Z) with B = V(paths), z_witness a packing inside G[Z] certifying
/// |Z| <= 5 * gamma(G[Z]) through |Z| <= 5 * |z_witness|.
struct crucial_partition {
    vertex_set A, B, Z;
    packing paths;
    packing z_witness;
    packing_classification classification;
};

enum class condition {
    b1, b2, b3, b4,
    e1, e2, e3, e4, e5, e6, e7,
    // two further conditions the counting needs (see README)
    single_on_a0,   // the A-vertex of a P^1 path is isolated in G[A]
    touch_good_pl,  // a P0 path with one PL-touching vertex, or a P^1 path touching PL, touches a good PL path
};

constexpr std::string_view condition_name(condition c)
{
    constexpr std::string_view names[] = {"B1", "B2", "B3", "B4", "E1", "E2", "E3", "E4", "E5",
                                          "E6", "E7", "single-on-A0", "touch-good-PL"};
    return names[static_cast<int>(c)];
}

struct condition_violation {
    condition which;
    std::vector<int> paths;  // indices into the packing involved in the violation
    std::string detail;
};

namespace detail {

inline std::vector<int> sorted_unique(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// owners of PL free vertices adjacent to a vertex of path i
inline std::vector<int> touched_pl(const graph& g, const packing& paths, const packing_classification& cls, int i)
{
    std::vector<int> out;
    for (vertex v : paths[i].vertices())
        for (vertex u : g.neighbors(v))
            if (set_contains(cls.pl_free, u) && cls.owner[u] != i)
                out.push_back(cls.owner[u]);
    return sorted_unique(std::move(out));
}

}  // namespace detail

/// Every failed condition, in checking order (B1-B4, E1-E7, then the two
/// extra conditions). With `first_only` the scan stops at the first failure.
inline std::vector<condition_violation> partition_violations(const graph& g, const vertex_set& A,
                                                             const vertex_set& Z, const packing& paths,
                                                             const packing& z_witness,
                                                             const packing_classification& cls,
                                                             bool first_only = false)
{
    std::vector<condition_violation> out;
    auto report = [&](condition c, std::vector<int> ps, std::string detail) {
        out.push_back({c, detail::sorted_unique(std::move(ps)), std::move(detail)});
        return first_only;
    };
    const int n = g.vertex_count();
    std::vector<char> in_a(static_cast<std::size_t>(n), 0), in_z(static_cast<std::size_t>(n), 0);
    for (vertex v : A)
        in_a[v] = 1;
    for (vertex v : Z)
        in_z[v] = 1;

    for (vertex v : A) {
        int d = 0;
        for (vertex u : g.neighbors(v))
            d += in_a[u];
        if (d > 1 && report(condition::b1, {}, "vertex " + std::to_string(v) + " has two A-neighbors"))
            return out;
    }
    {
        const vertex_set b = packing_vertices(paths);
        bool ok = is_packing(g, paths) && b.size() == 3 * paths.size();
        std::vector<int> seen(static_cast<std::size_t>(n), 0);
        for (const vertex_set* s : {&A, &b, &Z})
            for (vertex v : *s)
                ++seen[v];
        for (int x : seen)
            ok &= x == 1;
        if (!ok && report(condition::b2, {}, "A, V(packing), Z do not partition V or packing invalid"))
            return out;
    }
    for (vertex v : A)
        for (vertex u : g.neighbors(v))
            if (in_z[u] && report(condition::b3, {}, "A-vertex " + std::to_string(v) + " sees Z"))
                return out;
    {
        bool ok = is_packing(g, z_witness) && Z.size() <= 5 * z_witness.size();
        for (const auto& p : z_witness)
            for (vertex v : p.vertices())
                ok &= v >= 0 && v < n && in_z[v];
        if (!ok && report(condition::b4, {}, "Z witness packing invalid or too small"))
            return out;
    }

    const auto& labels = cls.labels;
    const int k1 = static_cast<int>(paths.size());
    for (int i = 0; i < k1; ++i)
        if ((labels[i].cls == path_class::p2 || labels[i].cls == path_class::p3) &&
            report(condition::e1, {i}, "path with several attached vertices"))
            return out;
    for (int i = 0; i < k1; ++i)
        if (labels[i].cls == path_class::pm && labels[i].touches_a0 && labels[i].touches_a1 &&
            report(condition::e2, {i}, "PM path sees both A0 and A1"))
            return out;
    for (vertex f : cls.pl_free)
        for (vertex u : g.neighbors(f))
            if (set_contains(cls.pl_free, u) && cls.owner[u] != cls.owner[f] &&
                report(condition::e3, {cls.owner[f], cls.owner[u]}, "free PL vertices adjacent"))
                return out;
    for (vertex f : cls.pl_free)
        for (vertex u : g.neighbors(f)) {
            int p = cls.owner[u];
            if (p < 0 || labels[p].cls != path_class::pm)
                continue;
            int pos = paths[p].first == u ? 0 : paths[p].middle == u ? 1 : 2;
            if (labels[p].free[pos] && report(condition::e4, {cls.owner[f], p}, "free PL vertex sees free PM vertex"))
                return out;
        }
    for (int i = 0; i < k1; ++i)
        if (labels[i].cls == path_class::single && labels[i].pl_touch >= 2) {
            auto ps = detail::touched_pl(g, paths, cls, i);
            ps.push_back(i);
            if (report(condition::e5, ps, "P^1 path with two vertices touching PL"))
                return out;
        }
    for (int i = 0; i < k1; ++i)
        if (labels[i].cls == path_class::p0 && labels[i].bad) {
            auto ps = detail::touched_pl(g, paths, cls, i);
            if (ps.size() >= 2) {
                ps.push_back(i);
                if (report(condition::e6, ps, "bad P0 path touches several PL paths"))
                    return out;
            }
        }
    for (vertex f : cls.pl_free)
        for (vertex u : g.neighbors(f))
            if (in_z[u] && report(condition::e7, {cls.owner[f]}, "free PL vertex sees Z"))
                return out;
    for (int i = 0; i < k1; ++i) {
        if (labels[i].cls != path_class::single)
            continue;
        vertex a = labels[i].attached.front();
        bool isolated = true;
        for (vertex u : g.neighbors(a))
            isolated &= !in_a[u];
        if (!isolated && report(condition::single_on_a0, {i}, "P^1 path attached to an A-edge"))
            return out;
    }
    for (int i = 0; i < k1; ++i) {
        const auto& lab = labels[i];
        bool needs = (lab.cls == path_class::p0 && lab.pl_touch == 1) ||
                     (lab.cls == path_class::single && lab.pl_touch >= 1);
        if (needs && !lab.touches_good_pl) {
            auto ps = detail::touched_pl(g, paths, cls, i);
            ps.push_back(i);
            if (report(condition::touch_good_pl, ps, "path touches only bad PL paths"))
                return out;
        }
    }
    return out;
}

inline std::vector<condition_violation> partition_violations(const graph& g, const crucial_partition& p)
{
    auto out = partition_violations(g, p.A, p.Z, p.paths, p.z_witness, classify_packing(g, p.A, p.paths));
    if (p.B != packing_vertices(p.paths))
        out.insert(out.begin(), {condition::b2, {}, "B differs from the packing's vertex set"});
    return out;
}

/// B*: free vertices of good PL paths.
inline vertex_set b_star(const crucial_partition& p)
{
    std::vector<vertex> out;
    for (std::size_t i = 0; i < p.paths.size(); ++i) {
        const auto& lab = p.classification.labels[i];
        if (lab.cls != path_class::pl || lab.bad)
            continue;
        auto vs = p.paths[i].vertices();
        for (int t = 0; t < 3; ++t)
            if (lab.free[t])
                out.push_back(vs[t]);
    }
    return make_set(std::move(out));
}

/// A*: A-vertices isolated in G[A] that attach to P^1 paths.
inline vertex_set a_star(const graph& g, const crucial_partition& p)
{
    std::vector<vertex> out;
    for (const auto& lab : p.classification.labels) {
        if (lab.cls != path_class::single)
            continue;
        vertex a = lab.attached.front();
        bool isolated = true;
        for (vertex u : g.neighbors(a))
            isolated &= !set_contains(p.A, u);
        if (isolated)
            out.push_back(a);
    }
    return make_set(std::move(out));
}

inline vertex_set a_prime(const graph& g, const crucial_partition& p)
{
    return set_difference(set_union(p.A, b_star(p)), a_star(g, p));
}

// --- construction -------------------------------------------------------------

struct partition_options {
    long budget_factor = 10;         // iterations allowed: budget_factor * n^2
    std::size_t augment_limit = 20;  // largest region searched for other local packings
    std::size_t region_paths = 12;   // largest number of paths a fix region may grow to
    long swap_candidates = 4000;     // packings tried per swap attempt
};

struct partition_attempt {
    std::optional<crucial_partition> partition;
    long iterations = 0;
    long augmentations = 0;
    long transfers = 0;
    long swaps = 0;
    std::optional<condition> stuck_on;  // set when a violation had no applicable fix
    std::string failure;
};

namespace detail {

class partition_builder {
public:
    partition_builder(const graph& g, partition_options opts) : g_(g), opts_(opts)
    {
        s_.paths = maximal_p3_packing(g);
        vertex_set b = packing_vertices(s_.paths);
        for (vertex v = 0; v < g.vertex_count(); ++v)
            if (!set_contains(b, v))
                s_.A.push_back(v);
    }

    partition_attempt run()
    {
        partition_attempt out;
        const long n = g_.vertex_count();
        const long budget = std::max<long>(10, opts_.budget_factor * n * n);
        for (; out.iterations < budget; ++out.iterations) {
            auto cls = classify_packing(g_, s_.A, s_.paths);
            auto v = partition_violations(g_, s_.A, s_.Z, s_.paths, s_.witness, cls, true);
            if (v.empty()) {
                crucial_partition p{s_.A, packing_vertices(s_.paths), s_.Z, s_.paths, s_.witness, std::move(cls)};
                auto all = partition_violations(g_, p);
                if (!all.empty())
                    throw internal_error("partition construction ended in an invalid state: " + all.front().detail);
                out.partition = std::move(p);
                return out;
            }
            const auto& bad = v.front();
            if (bad.which <= condition::b4)
                throw internal_error("partition construction broke basic condition " +
                                     std::string(condition_name(bad.which)));
            auto before = measure(s_);
            switch (fix(bad.paths, cls)) {
            case fix_kind::none:
                out.stuck_on = bad.which;
                out.failure = "no fix for " + std::string(condition_name(bad.which));
                return out;
            case fix_kind::augment: ++out.augmentations; break;
            case fix_kind::transfer: ++out.transfers; break;
            case fix_kind::swap: ++out.swaps; break;
            }
            if (!(before < measure(s_)))
                throw internal_error("partition construction made no progress");
        }
        out.failure = "iteration budget exhausted";
        return out;
    }

private:
    struct state {
        vertex_set A, Z;
        packing paths, witness;
    };

    enum class fix_kind { none, augment, transfer, swap };

    int violation_count(const state& s) const
    {
        auto cls = classify_packing(g_, s.A, s.paths);
        return static_cast<int>(partition_violations(g_, s.A, s.Z, s.paths, s.witness, cls).size());
    }

    // grows lexicographically with every applied fix
    std::tuple<int, int, int> measure(const state& s) const
    {
        return {g_.vertex_count() - static_cast<int>(s.A.size()), static_cast<int>(s.Z.size()), -violation_count(s)};
    }

    vertex_set region_vertices(const std::vector<int>& region) const
    {
        std::vector<vertex> out;
        for (int i : region)
            for (vertex v : s_.paths[i].vertices())
                out.push_back(v);
        return make_set(std::move(out));
    }

    // A-neighbors of X together with their partners in G[A]
    vertex_set a_closure(const vertex_set& x) const
    {
        std::vector<vertex> out;
        for (vertex v : x)
            for (vertex u : g_.neighbors(v))
                if (set_contains(s_.A, u)) {
                    out.push_back(u);
                    for (vertex w : g_.neighbors(u))
                        if (set_contains(s_.A, w))
                            out.push_back(w);
                }
        return make_set(std::move(out));
    }

    // region vertices adjacent to Z; they may not fall back into A
    vertex_set pinned(const vertex_set& vs) const
    {
        std::vector<vertex> out;
        for (vertex v : vs)
            for (vertex w : g_.neighbors(v))
                if (set_contains(s_.Z, w)) {
                    out.push_back(v);
                    break;
                }
        return make_set(std::move(out));
    }

    fix_kind attempt(const std::vector<int>& region, const vertex_set& u)
    {
        vertex_set vs = region_vertices(region);
        bool small = u.size() <= opts_.augment_limit;
        if (small && augment(region, vs, u))
            return fix_kind::augment;
        if (transfer(region, u))
            return fix_kind::transfer;
        if (small && swap(region, vs, u))
            return fix_kind::swap;
        return fix_kind::none;
    }

    fix_kind fix(std::vector<int> region, const packing_classification& cls)
    {
        for (int round = 0; round < 4; ++round) {
            vertex_set vs = region_vertices(region);
            vertex_set u = set_union(vs, a_closure(vs));
            if (auto k = attempt(region, u); k != fix_kind::none)
                return k;
            std::vector<int> near;
            for (vertex v : u)
                for (vertex w : g_.neighbors(v))
                    if (cls.owner[w] >= 0 && !std::binary_search(region.begin(), region.end(), cls.owner[w]))
                        near.push_back(cls.owner[w]);
            near = sorted_unique(std::move(near));
            if (near.empty())
                break;
            // one neighboring path at a time, then all of them
            for (int p : near) {
                auto one = region;
                one.push_back(p);
                std::sort(one.begin(), one.end());
                vertex_set vs1 = region_vertices(one);
                if (auto k = attempt(one, set_union(vs1, a_closure(vs1))); k != fix_kind::none)
                    return k;
            }
            if (region.size() + near.size() > opts_.region_paths)
                break;
            region.insert(region.end(), near.begin(), near.end());
            std::sort(region.begin(), region.end());
        }
        return fix_kind::none;
    }

    // the region's paths replaced by `found`, a packing inside U
    state replaced(const std::vector<int>& region, const vertex_set& u, const packing& found) const
    {
        state next;
        next.Z = s_.Z;
        next.witness = s_.witness;
        for (int i = 0; i < static_cast<int>(s_.paths.size()); ++i)
            if (!std::binary_search(region.begin(), region.end(), i))
                next.paths.push_back(s_.paths[i]);
        next.paths.insert(next.paths.end(), found.begin(), found.end());
        next.A = set_union(set_difference(s_.A, u), set_difference(u, packing_vertices(found)));
        normalize(next);
        return next;
    }

    bool augment(const std::vector<int>& region, const vertex_set& vs, const vertex_set& u)
    {
        local_packing_search search(g_, u, pinned(vs));
        auto found = search.run();
        if (!found || found->size() <= region.size())
            return false;
        s_ = replaced(region, u, *found);
        return true;
    }

    // another packing of the same size inside U that leaves fewer violations
    bool swap(const std::vector<int>& region, const vertex_set& vs, const vertex_set& u)
    {
        const int now = violation_count(s_);
        long tried = 0;
        std::optional<state> better;
        local_packing_search search(g_, u, pinned(vs));
        search.enumerate(region.size(), [&](const packing& cand) {
            if (++tried > opts_.swap_candidates)
                return true;
            state next = replaced(region, u, cand);
            if (next.A.size() > s_.A.size() || violation_count(next) >= now)
                return false;
            better = std::move(next);
            return true;
        });
        if (!better)
            return false;
        s_ = std::move(*better);
        return true;
    }

    // move the region and its A-closure into Z when the witness budget allows
    bool transfer(const std::vector<int>& region, const vertex_set& u)
    {
        packing inside;
        if (u.size() <= opts_.augment_limit) {
            local_packing_search search(g_, u, {});
            if (auto best = search.run())
                inside = std::move(*best);
        } else {
            live_graph h(g_);
            h.erase(set_difference(present_vertices(g_), u));
            inside = maximal_p3_packing(h);
        }
        if (inside.size() < region.size()) {
            inside.clear();
            for (int i : region)
                inside.push_back(s_.paths[i]);
        }
        if (s_.Z.size() + u.size() > 5 * (s_.witness.size() + inside.size()))
            return false;
        for (vertex v : u)
            for (vertex w : g_.neighbors(v))
                if (set_contains(s_.A, w) && !set_contains(u, w))
                    throw internal_error("transfer region is not closed under A-adjacency");
        packing kept;
        for (int i = 0; i < static_cast<int>(s_.paths.size()); ++i)
            if (!std::binary_search(region.begin(), region.end(), i))
                kept.push_back(s_.paths[i]);
        s_.paths = std::move(kept);
        s_.A = set_difference(s_.A, u);
        s_.Z = set_union(s_.Z, u);
        s_.witness.insert(s_.witness.end(), inside.begin(), inside.end());
        return true;
    }

    // restore maximum degree <= 1 in G[A] by moving 3-paths of G[A] into the packing
    void normalize(state& s) const
    {
        live_graph h(g_);
        h.erase(set_difference(present_vertices(g_), s.A));
        packing extra = maximal_p3_packing(h);
        if (extra.empty())
            return;
        s.paths.insert(s.paths.end(), extra.begin(), extra.end());
        s.A = set_difference(s.A, packing_vertices(extra));
    }

    const graph& g_;
    partition_options opts_;
    state s_;
};

}  // namespace detail

/// Builds a partition satisfying B1-B4 (B4 through the witness packing),
/// E1-E7 and the two extra conditions, by repeatedly repairing the first
/// violated condition: either a larger packing is found on the offending
/// paths plus their A-neighborhood, or that region moves into Z while
/// |Z| <= 5 |witness| stays true, or another packing of the region leaves
/// fewer violations. The region grows when none applies.
/// Returns no partition (a fallback) when a violation cannot be repaired.
inline partition_attempt build_crucial_partition(const graph& g, partition_options opts = {})
{
    return detail::partition_builder(g, opts).run();
}

// --- reduction rules ------------------------------------------------------------

struct rule_outcome {
    enum kind { halt_no, reduced, fixed_point } what = fixed_point;
    int rule = 0;  // 1, 2 or 3 when it fired
    std::optional<good_decomposition> decomposition;
    std::optional<reduced_instance> instance;
};

/// Reduction rules 1-3 against a valid partition, first applicable wins.
inline rule_outcome apply_reduction_rules(const graph& g, int k, const crucial_partition& p)
{
    rule_outcome out;
    const long long k1 = static_cast<long long>(p.paths.size());
    if (5 * k1 > 5LL * k - static_cast<long long>(p.Z.size())) {
        out.what = rule_outcome::halt_no;
        out.rule = 1;
        return out;
    }
    if (auto d = find_good_decomposition(g, make_a_side_view(g, p.A), decomposition_mode::edges_only)) {
        out.what = rule_outcome::reduced;
        out.rule = 2;
        out.instance = reduce_by_decomposition(g, k, *d);
        out.decomposition = std::move(d);
        return out;
    }
    a_side_view view;
    try {
        view = make_a_side_view(g, a_prime(g, p));
    } catch (const contract_error&) {
        throw internal_error("A' induces a vertex of degree above 1");
    }
    if (auto d = find_good_decomposition(g, view, decomposition_mode::general)) {
        out.what = rule_outcome::reduced;
        out.rule = 3;
        out.instance = reduce_by_decomposition(g, k, *d);
        out.decomposition = std::move(d);
    }
    return out;
}

// --- audit ----------------------------------------------------------------------

struct audit_check {
    std::string name;
    long long lhs = 0;
    std::string relation;  // "<=", "==" or ">="
    long long rhs = 0;
    bool ok = false;
};

struct audit_report {
    kernel_counters counters;
    std::vector<audit_check> checks;
    std::vector<condition_violation> violations;

    bool ok() const
    {
        if (!violations.empty())
            return false;
        for (const auto& c : checks)
            if (!c.ok)
                return false;
        return true;
    }
};

/// Recomputes the counters from scratch and checks the counting relations a
/// partition at the rules' fixed point must satisfy, ending in |V| <= 5k.
inline audit_report audit_bound(const graph& g, const crucial_partition& p, int k)
{
    audit_report r;
    r.violations = partition_violations(g, p);
    auto cls = classify_packing(g, p.A, p.paths);
    const auto& c = cls.counters;
    r.counters = c;
    crucial_partition fresh = p;
    fresh.classification = cls;

    auto add = [&](std::string name, long long lhs, std::string rel, long long rhs) {
        bool ok = rel == "<=" ? lhs <= rhs : rel == ">=" ? lhs >= rhs : lhs == rhs;
        r.checks.push_back({std::move(name), lhs, std::move(rel), rhs, ok});
    };
    const long long z = static_cast<long long>(p.Z.size());
    auto view = make_a_side_view(g, p.A);
    auto ap = a_prime(g, fresh);
    a_side_view view_p;
    bool ap_ok = true;
    try {
        view_p = make_a_side_view(g, ap);
    } catch (const contract_error&) {
        ap_ok = false;
    }
    add("A' max degree <= 1", ap_ok, "==", 1);
    add("(4) 5k1 <= 5k - |Z|", 5LL * c.k1, "<=", 5LL * k - z);
    add("(5) k1 = x1+x2+y0+y1+y2+z1+z2+w1+w2", c.k1, "==", c.sum());
    add("(6) |N2(A)| <= x1+x2+z2", static_cast<long long>(view.N2.size()), "<=", c.x1 + c.x2 + c.z2);
    add("(7) x2 <= y2", c.x2, "<=", c.y2);
    add("(8) Comp(A') >= Comp(A) + x1 - (w1+w2)", view_p.comp(), ">=", view.comp() + c.x1 - (c.w1 + c.w2));
    add("(9) |N(A')| <= x1+x2+y0+y1+z1+z2+w1", static_cast<long long>(view_p.N.size()), "<=",
        c.x1 + c.x2 + c.y0 + c.y1 + c.z1 + c.z2 + c.w1);
    add("(10) |N'2(A')| >= y1+z2+w1", static_cast<long long>(view_p.N2prime.size()), ">=", c.y1 + c.z2 + c.w1);
    add("rule 2 fixed: Comp2(A) <= |N2(A)|", view.comp2(), "<=", static_cast<long long>(view.N2.size()));
    add("rule 3 fixed: Comp(A') <= 2|N(A')| - |N'2(A')|", view_p.comp(), "<=",
        2LL * static_cast<long long>(view_p.N.size()) - static_cast<long long>(view_p.N2prime.size()));
    add("(11) Comp(A) <= 2(x2+y0+z1+w1)+x1+y1+z2+w2", view.comp(), "<=",
        2LL * (c.x2 + c.y0 + c.z1 + c.w1) + c.x1 + c.y1 + c.z2 + c.w2);
    add("(12) Comp2(A) <= x1+x2+z2", view.comp2(), "<=", c.x1 + c.x2 + c.z2);
    add("|A| <= 2k1", static_cast<long long>(p.A.size()), "<=", 2LL * c.k1);
    add("|B| = 3k1", static_cast<long long>(p.B.size()), "==", 3LL * c.k1);
    add("|V| <= 5k1 + |Z|", g.vertex_count(), "<=", 5LL * c.k1 + z);
    add("|V| <= 5k", g.vertex_count(), "<=", 5LL * k);
    return r;
}

}  // namespace p3vc
