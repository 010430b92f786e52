#pragma once

#include <bit>
#include <cstdint>
#include <type_traits>
#include <unordered_map>

#include "p3vc/graph.hpp"

namespace p3vc {

// Exact solvers for small instances. They share no code with the search or the
// kernel so they can serve as ground truth for both.

struct oracle_limit_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct cover_result {
    int size = 0;
    vertex_set cover;
};

struct packing_result {
    int size = 0;
    packing paths;
};

namespace detail {

class bitmask_graph {
public:
    explicit bitmask_graph(const graph& g) : adj_(static_cast<std::size_t>(g.vertex_count()), 0)
    {
        for (auto [u, v] : g.edges()) {
            adj_[u] |= std::uint32_t{1} << v;
            adj_[v] |= std::uint32_t{1} << u;
        }
    }

    int size() const { return static_cast<int>(adj_.size()); }
    std::uint32_t adj(int v) const { return adj_[v]; }

    // a 3-path avoiding `removed`, as (end, middle, end); middle < 0 if none
    std::array<int, 3> find_p3(std::uint32_t removed) const
    {
        for (int v = 0; v < size(); ++v) {
            if (removed >> v & 1)
                continue;
            std::uint32_t nb = adj_[v] & ~removed;
            if (std::popcount(nb) >= 2) {
                int a = std::countr_zero(nb);
                nb &= nb - 1;
                return {a, v, std::countr_zero(nb)};
            }
        }
        return {-1, -1, -1};
    }

private:
    std::vector<std::uint32_t> adj_;
};

class cover_search {
public:
    explicit cover_search(const graph& g) : g_(g) {}

    bool run(std::uint32_t removed, int budget)
    {
        auto p = g_.find_p3(removed);
        if (p[1] < 0) {
            found_ = removed;
            return true;
        }
        if (budget == 0)
            return false;
        auto it = failed_.find(removed);
        if (it != failed_.end() && it->second >= budget)
            return false;
        for (int x : p)
            if (run(removed | std::uint32_t{1} << x, budget - 1))
                return true;
        auto& best = failed_[removed];
        best = std::max(best, budget);
        return false;
    }

    std::uint32_t found() const { return found_; }

private:
    bitmask_graph g_;
    std::unordered_map<std::uint32_t, int> failed_;  // deleted set -> largest budget known to fail
    std::uint32_t found_ = 0;
};

class packing_search {
public:
    explicit packing_search(const graph& g) : g_(g) {}

    // best packing size inside `avail`
    int best(std::uint32_t avail)
    {
        if (avail == 0)
            return 0;
        auto it = memo_.find(avail);
        if (it != memo_.end())
            return it->second;
        int v = std::countr_zero(avail);
        std::uint32_t rest = avail & ~(std::uint32_t{1} << v);
        int result = best(rest);
        for_each_path_through(v, rest, [&](std::uint32_t used) {
            result = std::max(result, 1 + best(rest & ~used));
        });
        memo_[avail] = result;
        return result;
    }

    void reconstruct(std::uint32_t avail, packing& out)
    {
        while (avail != 0) {
            int target = best(avail);
            if (target == 0)
                return;
            int v = std::countr_zero(avail);
            std::uint32_t rest = avail & ~(std::uint32_t{1} << v);
            if (best(rest) == target) {
                avail = rest;
                continue;
            }
            bool done = false;
            for_each_path_through(v, rest, [&](std::uint32_t used, path3 p) {
                if (!done && 1 + best(rest & ~used) == target) {
                    out.push_back(p);
                    avail = rest & ~used;
                    done = true;
                }
            });
        }
    }

private:
    template <class F>
    void for_each_path_through(int v, std::uint32_t rest, F&& f)
    {
        auto emit = [&](int a, int b, int c) {
            std::uint32_t used = std::uint32_t{1} << a | std::uint32_t{1} << b | std::uint32_t{1} << c;
            if constexpr (std::is_invocable_v<F, std::uint32_t, path3>)
                f(used, path3{a, b, c});
            else
                f(used);
        };
        std::uint32_t nb = g_.adj(v) & rest;
        // v in the middle
        for (std::uint32_t x = nb; x; x &= x - 1) {
            int a = std::countr_zero(x);
            for (std::uint32_t y = x & (x - 1); y; y &= y - 1)
                emit(a, v, std::countr_zero(y));
        }
        // v at an end
        for (std::uint32_t x = nb; x; x &= x - 1) {
            int u = std::countr_zero(x);
            std::uint32_t far = g_.adj(u) & rest & ~(std::uint32_t{1} << v);
            for (std::uint32_t y = far; y; y &= y - 1)
                emit(v, u, std::countr_zero(y));
        }
    }

    bitmask_graph g_;
    std::unordered_map<std::uint32_t, int> memo_;
};

inline vertex_set mask_to_set(std::uint32_t mask)
{
    vertex_set out;
    for (; mask; mask &= mask - 1)
        out.push_back(std::countr_zero(mask));
    return out;
}

}  // namespace detail

/// Minimum 3-path vertex cover by 3-way branching with iterative deepening.
inline cover_result min_p3vc_oracle(const graph& g, int limit = 20)
{
    if (limit > 32)
        limit = 32;
    if (g.vertex_count() > limit)
        throw oracle_limit_error("oracle refuses graphs with more than " + std::to_string(limit) +
                                 " vertices");
    detail::cover_search search(g);
    for (int budget = 0;; ++budget)
        if (search.run(0, budget)) {
            vertex_set cover = detail::mask_to_set(search.found());
            return {static_cast<int>(cover.size()), cover};
        }
}

inline packing_result max_p3_packing_oracle(const graph& g)
{
    if (g.vertex_count() > 16)
        throw oracle_limit_error("packing oracle refuses graphs with more than 16 vertices");
    detail::packing_search search(g);
    std::uint32_t all = g.vertex_count() == 32 ? ~std::uint32_t{0}
                                               : (std::uint32_t{1} << g.vertex_count()) - 1;
    packing_result out;
    out.size = search.best(all);
    search.reconstruct(all, out.paths);
    return out;
}

enum class line_kind { path, cycle };

/// Minimum cover of a path or cycle on n vertices labelled 0..n-1 in order:
/// every third vertex, floor(n/3) for paths and ceil(n/3) for cycles.
inline cover_result path_cycle_cover_size(line_kind kind, int n)
{
    if (kind == line_kind::path && n < 1)
        throw std::invalid_argument("path needs at least one vertex");
    if (kind == line_kind::cycle && n < 3)
        throw std::invalid_argument("cycle needs at least three vertices");
    cover_result out;
    for (int i = kind == line_kind::path ? 2 : 0; i < n; i += 3)
        out.cover.push_back(i);
    out.size = static_cast<int>(out.cover.size());
    return out;
}

}  // namespace p3vc
