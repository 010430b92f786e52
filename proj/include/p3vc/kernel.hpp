#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "p3vc/crucial.hpp"
#include "p3vc/decomposition.hpp"

namespace p3vc {

enum class kernel_mode { simple, crucial };

constexpr std::string_view kernel_mode_name(kernel_mode m)
{
    return m == kernel_mode::simple ? "simple" : "crucial";
}

struct kernel_event {
    std::string rule;  // "lemma", "corollary", "rule1".."rule3", "packing"
    int n_before = 0, n_after = 0;
    int k_before = 0, k_after = 0;
};

struct kernel_options {
    // called on every decomposition and partition the pipeline acts on,
    // with the graph it was computed for
    std::function<void(const graph&, const good_decomposition&)> on_decomposition;
    std::function<void(const graph&, const crucial_partition&)> on_partition;
    partition_options partition;
};

struct kernel_result {
    graph reduced;
    std::vector<vertex> to_original;  // reduced id -> input id
    int reduced_k = 0;
    vertex_set forced_cover;          // input ids committed to the solution
    kernel_mode mode = kernel_mode::simple;
    bool halted_no = false;
    bool fallback = false;            // crucial mode gave up and finished in simple mode
    std::string fallback_reason;
    int bound_factor = 12;            // |V(reduced)| <= bound_factor * reduced_k at a fixed point
    std::vector<kernel_event> trace;
    std::optional<audit_report> audit;  // crucial mode at a fixed point

    bool decided_no() const { return halted_no || reduced_k < 0; }
    bool decided_yes() const { return !decided_no() && !find_p3(reduced); }
    bool at_fixed_point() const { return !decided_no(); }
    int bound() const { return bound_factor * reduced_k; }

    /// Lifts a cover of the reduced graph to one of the input graph.
    vertex_set lift(const vertex_set& reduced_cover) const
    {
        std::vector<vertex> out(forced_cover.begin(), forced_cover.end());
        for (vertex v : reduced_cover)
            out.push_back(to_original.at(v));
        return make_set(std::move(out));
    }
};

namespace detail {

class kernelizer {
public:
    kernelizer(const graph& g, int k, const kernel_options& opts) : opts_(opts)
    {
        if (k < 0)
            throw contract_error("kernelize needs k >= 0");
        r_.reduced = g;
        r_.reduced_k = k;
        r_.to_original.resize(static_cast<std::size_t>(g.vertex_count()));
        for (vertex v = 0; v < g.vertex_count(); ++v)
            r_.to_original[v] = v;
    }

    kernel_result run(kernel_mode mode)
    {
        r_.mode = mode;
        if (mode == kernel_mode::simple)
            simple();
        else
            crucial();
        return std::move(r_);
    }

private:
    void apply(const std::string& rule, const good_decomposition& d)
    {
        if (opts_.on_decomposition)
            opts_.on_decomposition(r_.reduced, d);
        kernel_event e{rule, r_.reduced.vertex_count(), 0, r_.reduced_k, 0};
        auto next = reduce_by_decomposition(r_.reduced, r_.reduced_k, d);
        std::vector<vertex> forced(r_.forced_cover.begin(), r_.forced_cover.end());
        for (vertex c : next.forced)
            forced.push_back(r_.to_original[c]);
        r_.forced_cover = make_set(std::move(forced));
        std::vector<vertex> map;
        map.reserve(next.to_original.size());
        for (vertex v : next.to_original)
            map.push_back(r_.to_original[v]);
        r_.to_original = std::move(map);
        r_.reduced = std::move(next.g);
        r_.reduced_k = next.k;
        e.n_after = r_.reduced.vertex_count();
        e.k_after = r_.reduced_k;
        r_.trace.push_back(std::move(e));
    }

    void halt(const std::string& rule)
    {
        r_.halted_no = true;
        r_.trace.push_back({rule, r_.reduced.vertex_count(), r_.reduced.vertex_count(), r_.reduced_k, r_.reduced_k});
    }

    void simple()
    {
        r_.bound_factor = 12;
        while (r_.reduced_k >= 0) {
            const graph& g = r_.reduced;
            const int k = r_.reduced_k;
            packing s = maximal_p3_packing(g);
            if (static_cast<int>(s.size()) > k) {
                halt("packing");
                return;
            }
            vertex_set b = packing_vertices(s);
            vertex_set a;
            for (vertex v = 0; v < g.vertex_count(); ++v)
                if (!set_contains(b, v))
                    a.push_back(v);
            auto view = make_a_side_view(g, a);
            if (auto d = find_good_decomposition(g, view, decomposition_mode::general)) {
                apply("lemma", *d);
                continue;
            }
            if (auto d = find_good_decomposition(g, view, decomposition_mode::edges_only)) {
                apply("corollary", *d);
                continue;
            }
            // |A| > 9k forces one of the two inequalities, and the search is complete
            if (static_cast<long long>(a.size()) > 9LL * k)
                throw internal_error("simple kernel: |A| > 9k but no decomposition found");
            return;
        }
    }

    void crucial()
    {
        r_.bound_factor = 5;
        while (r_.reduced_k >= 0) {
            auto attempt = build_crucial_partition(r_.reduced, opts_.partition);
            if (!attempt.partition) {
                r_.fallback = true;
                r_.fallback_reason = attempt.failure;
                simple();
                return;
            }
            const auto& p = *attempt.partition;
            if (opts_.on_partition)
                opts_.on_partition(r_.reduced, p);
            auto step = apply_reduction_rules(r_.reduced, r_.reduced_k, p);
            if (step.what == rule_outcome::halt_no) {
                halt("rule1");
                return;
            }
            if (step.what == rule_outcome::reduced) {
                apply("rule" + std::to_string(step.rule), *step.decomposition);
                continue;
            }
            r_.audit = audit_bound(r_.reduced, p, r_.reduced_k);
            return;
        }
    }

    const kernel_options& opts_;
    kernel_result r_;
};

}  // namespace detail

/// Shrinks (g, k) to an equivalent instance. Simple mode reaches at most 12k
/// vertices; crucial mode at most 5k when a crucial partition is found, and
/// otherwise falls back to simple mode. A negative reduced_k or halted_no
/// means the input is a no-instance.
inline kernel_result kernelize(const graph& g, int k, kernel_mode mode, const kernel_options& opts = {})
{
    return detail::kernelizer(g, k, opts).run(mode);
}

}  // namespace p3vc
