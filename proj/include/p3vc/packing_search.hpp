#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>

#include "p3vc/graph.hpp"

namespace p3vc {

/// Largest packing inside G[U] that covers every vertex of `must`, by
/// branching on the smallest remaining vertex. Meant for |U| <= 24; gives up
/// after `node_budget` search nodes and reports the best packing seen.
class local_packing_search {
public:
    local_packing_search(const graph& g, const vertex_set& U, const vertex_set& must, long node_budget = 200000)
        : ids_(U), budget_(node_budget)
    {
        if (U.size() > 24)
            throw contract_error("local packing search needs at most 24 vertices");
        adj_.assign(U.size(), 0);
        for (std::size_t i = 0; i < U.size(); ++i) {
            for (std::size_t j = 0; j < U.size(); ++j)
                if (i != j && g.adjacent(U[i], U[j]))
                    adj_[i] |= std::uint32_t{1} << j;
            if (set_contains(must, U[i]))
                must_ |= std::uint32_t{1} << i;
        }
    }

    std::optional<packing> run()
    {
        std::uint32_t all = ids_.empty() ? 0 : (std::uint32_t{0xffffffff} >> (32 - ids_.size()));
        std::vector<std::array<int, 3>> cur;
        dfs(all, cur);
        if (!found_)
            return std::nullopt;
        packing out;
        for (auto [a, b, c] : best_)
            out.push_back({ids_[a], ids_[b], ids_[c]});
        return out;
    }

    /// Calls f on each packing of G[U] with at least `min_size` paths that
    /// covers `must`, until f returns true or the node budget runs out.
    template <class F>
    bool enumerate(std::size_t min_size, F&& f)
    {
        std::uint32_t all = ids_.empty() ? 0 : (std::uint32_t{0xffffffff} >> (32 - ids_.size()));
        std::vector<std::array<int, 3>> cur;
        return each(all, cur, static_cast<int>(min_size), f);
    }

    bool exhausted() const { return budget_ <= 0; }

private:
    void dfs(std::uint32_t avail, std::vector<std::array<int, 3>>& cur)
    {
        if (--budget_ < 0)
            return;
        int have = static_cast<int>(cur.size());
        if ((avail & must_) == 0 && (!found_ || have > static_cast<int>(best_.size()))) {
            found_ = true;
            best_ = cur;
        }
        if (found_ && have + std::popcount(avail) / 3 <= static_cast<int>(best_.size()))
            return;
        if (avail == 0)
            return;
        int v = std::countr_zero(avail);
        std::uint32_t rest = avail & ~(std::uint32_t{1} << v);
        std::uint32_t nb = adj_[v] & rest;
        // v as middle
        for (std::uint32_t a = nb; a; a &= a - 1) {
            int x = std::countr_zero(a);
            for (std::uint32_t b = nb & ~((std::uint32_t{2} << x) - 1); b; b &= b - 1) {
                int y = std::countr_zero(b);
                cur.push_back({x, v, y});
                dfs(rest & ~(std::uint32_t{1} << x) & ~(std::uint32_t{1} << y), cur);
                cur.pop_back();
            }
        }
        // v as an end
        for (std::uint32_t a = nb; a; a &= a - 1) {
            int m = std::countr_zero(a);
            for (std::uint32_t b = adj_[m] & rest & ~(std::uint32_t{1} << m); b; b &= b - 1) {
                int y = std::countr_zero(b);
                cur.push_back({v, m, y});
                dfs(rest & ~(std::uint32_t{1} << m) & ~(std::uint32_t{1} << y), cur);
                cur.pop_back();
            }
        }
        if (!(must_ >> v & 1))
            dfs(rest, cur);
    }

    template <class F>
    bool each(std::uint32_t avail, std::vector<std::array<int, 3>>& cur, int min_size, F& f)
    {
        if (--budget_ < 0)
            return false;
        int have = static_cast<int>(cur.size());
        if (have + std::popcount(avail) / 3 < min_size)
            return false;
        if (avail == 0) {
            packing p;
            for (auto [a, b, c] : cur)
                p.push_back({ids_[a], ids_[b], ids_[c]});
            return f(p);
        }
        int v = std::countr_zero(avail);
        std::uint32_t rest = avail & ~(std::uint32_t{1} << v);
        std::uint32_t nb = adj_[v] & rest;
        auto take = [&](int a, int b, int c, std::uint32_t left) {
            cur.push_back({a, b, c});
            bool stop = each(left, cur, min_size, f);
            cur.pop_back();
            return stop;
        };
        for (std::uint32_t a = nb; a; a &= a - 1) {
            int x = std::countr_zero(a);
            for (std::uint32_t b = nb & ~((std::uint32_t{2} << x) - 1); b; b &= b - 1) {
                int y = std::countr_zero(b);
                if (take(x, v, y, rest & ~(std::uint32_t{1} << x) & ~(std::uint32_t{1} << y)))
                    return true;
            }
        }
        for (std::uint32_t a = nb; a; a &= a - 1) {
            int m = std::countr_zero(a);
            for (std::uint32_t b = adj_[m] & rest & ~(std::uint32_t{1} << m); b; b &= b - 1) {
                int y = std::countr_zero(b);
                if (take(v, m, y, rest & ~(std::uint32_t{1} << m) & ~(std::uint32_t{1} << y)))
                    return true;
            }
        }
        return !(must_ >> v & 1) && each(rest, cur, min_size, f);
    }

    vertex_set ids_;
    std::vector<std::uint32_t> adj_;
    std::uint32_t must_ = 0;
    long budget_;
    bool found_ = false;
    std::vector<std::array<int, 3>> best_;
};

}  // namespace p3vc
