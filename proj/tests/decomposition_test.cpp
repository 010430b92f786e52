#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <random>

#include "p3vc/decomposition.hpp"
#include "p3vc/oracle.hpp"
#include "p3vc/random.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

using namespace p3vc;
using p3vc::testing::naive_decomposition_ok;

namespace {

// Kuhn's augmenting-path matching, the textbook O(VE) version
int kuhn(const std::vector<std::vector<int>>& adj, int right)
{
    std::vector<int> mate(static_cast<std::size_t>(right), -1);
    int size = 0;
    for (int l = 0; l < static_cast<int>(adj.size()); ++l) {
        std::vector<char> seen(static_cast<std::size_t>(right), 0);
        std::function<bool(int)> go = [&](int x) {
            for (int r : adj[x]) {
                if (seen[r])
                    continue;
                seen[r] = 1;
                if (mate[r] < 0 || go(mate[r])) {
                    mate[r] = x;
                    return true;
                }
            }
            return false;
        };
        size += go(l);
    }
    return size;
}

// random A with G[A] of maximum degree <= 1: greedy over a shuffled order
vertex_set random_a(const graph& g, std::mt19937_64& rng, double keep)
{
    std::vector<vertex> order(static_cast<std::size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> deg(order.size(), 0);
    std::vector<char> in(order.size(), 0);
    std::vector<vertex> a;
    for (vertex v : order) {
        if (unit_uniform(rng) >= keep || deg[v] > 1)
            continue;
        int nb = 0;
        bool ok = true;
        for (vertex u : g.neighbors(v))
            if (in[u]) {
                ++nb;
                ok &= deg[u] == 0;
            }
        if (!ok || nb > 1)
            continue;
        in[v] = 1;
        for (vertex u : g.neighbors(v))
            if (in[u]) {
                ++deg[u];
                ++deg[v];
            }
        a.push_back(v);
    }
    return make_set(std::move(a));
}

graph star(int leaves)
{
    std::vector<edge> e;
    for (int i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return graph(leaves + 1, e);
}

}  // namespace

TEST(Matching, AgreesWithKuhnOnRandomBipartiteGraphs)
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 500; ++t) {
        int l = 1 + static_cast<int>(rng() % 12), r = 1 + static_cast<int>(rng() % 12);
        double p = unit_uniform(rng);
        std::vector<std::vector<int>> adj(l);
        bipartite_matching m(l, r);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < r; ++j)
                if (unit_uniform(rng) < p) {
                    adj[i].push_back(j);
                    m.add_edge(i, j);
                }
        int size = m.solve();
        ASSERT_EQ(size, kuhn(adj, r));
        int counted = 0;
        for (int i = 0; i < l; ++i) {
            int j = m.match_of_left(i);
            if (j < 0)
                continue;
            ++counted;
            EXPECT_EQ(m.match_of_right(j), i);
            EXPECT_NE(std::find(adj[i].begin(), adj[i].end(), j), adj[i].end());
        }
        EXPECT_EQ(counted, size);
    }
}

TEST(ASideView, StarLeaves)
{
    graph g = star(5);
    auto v = make_a_side_view(g, {1, 2, 3, 4, 5});
    EXPECT_EQ(v.comp(), 5);
    EXPECT_EQ(v.comp2(), 0);
    EXPECT_EQ(v.N, (vertex_set{0}));
    EXPECT_EQ(v.N1, (vertex_set{0}));
    EXPECT_TRUE(v.N2.empty());
    EXPECT_TRUE(lemma_condition(v));
    EXPECT_FALSE(corollary_condition(v));
}

TEST(ASideView, NeighborhoodSplit)
{
    // A = {1, 2-3}; 0 sees the singleton and the edge, 4 only the edge
    graph g(5, {{0, 1}, {0, 2}, {2, 3}, {3, 4}});
    auto v = make_a_side_view(g, {1, 2, 3});
    EXPECT_EQ(v.A0, (vertex_set{1}));
    EXPECT_EQ(v.A1, (vertex_set{2, 3}));
    EXPECT_EQ(v.N, (vertex_set{0, 4}));
    EXPECT_EQ(v.N1, (vertex_set{0}));
    EXPECT_EQ(v.N2, (vertex_set{0, 4}));
    EXPECT_EQ(v.N2prime, (vertex_set{4}));
    EXPECT_EQ(v.comp(), 2);
    EXPECT_EQ(v.comp2(), 1);
}

TEST(ASideView, RejectsDegreeTwo)
{
    graph g = p3vc::testing::path_graph(3);
    EXPECT_THROW(make_a_side_view(g, {0, 1, 2}), contract_error);
    EXPECT_THROW(make_a_side_view(g, {7}), contract_error);
}

TEST(FindDecomposition, StarOfLeaves)
{
    graph g = star(5);
    auto d = find_good_decomposition(g, make_a_side_view(g, {1, 2, 3, 4, 5}), decomposition_mode::general);
    ASSERT_TRUE(d);
    EXPECT_EQ(d->I, (vertex_set{1, 2, 3, 4, 5}));
    EXPECT_EQ(d->C, (vertex_set{0}));
    EXPECT_TRUE(d->R.empty());
    ASSERT_EQ(d->witness.size(), 1u);
    EXPECT_EQ(d->witness[0].middle, 0);
    EXPECT_TRUE(naive_decomposition_ok(g, *d));
}

TEST(FindDecomposition, TwoEdgesOnOneVertex)
{
    // c = 0; A-edges 1-2 and 3-4, only 1 and 3 touch c
    graph g(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}});
    auto view = make_a_side_view(g, {1, 2, 3, 4});
    EXPECT_TRUE(corollary_condition(view));
    auto d = find_good_decomposition(g, view, decomposition_mode::edges_only);
    ASSERT_TRUE(d);
    EXPECT_EQ(d->I, (vertex_set{1, 2, 3, 4}));
    EXPECT_EQ(d->C, (vertex_set{0}));
    EXPECT_TRUE(naive_decomposition_ok(g, *d));
}

TEST(FindDecomposition, K23DegreeTwoSideHasNone)
{
    graph g = p3vc::testing::complete_bipartite(2, 3);
    auto view = make_a_side_view(g, {2, 3, 4});
    EXPECT_FALSE(lemma_condition(view));
    EXPECT_FALSE(find_good_decomposition(g, view, decomposition_mode::general));
}

TEST(FindDecomposition, IsolatedComponentGivesEmptyC)
{
    graph g(4, {{0, 1}, {1, 2}});
    auto d = find_good_decomposition(g, make_a_side_view(g, {3}), decomposition_mode::general);
    ASSERT_TRUE(d);
    EXPECT_EQ(d->I, (vertex_set{3}));
    EXPECT_TRUE(d->C.empty());
    EXPECT_TRUE(naive_decomposition_ok(g, *d));
}

TEST(FindDecomposition, EdgesOnlyIgnoresSingletons)
{
    graph g = star(5);
    EXPECT_FALSE(find_good_decomposition(g, make_a_side_view(g, {1, 2, 3, 4, 5}), decomposition_mode::edges_only));
}

TEST(FindDecomposition, CompleteAndValidOnRandomInstances)
{
    std::mt19937_64 rng(11);
    int lemma_hits = 0, corollary_hits = 0;
    for (int t = 0; t < 3000; ++t) {
        int n = 3 + static_cast<int>(rng() % 18);
        graph g = gen_random_graph(n, std::min(1.0, (1.0 + static_cast<double>(rng() % 40) / 10.0) / n), rng());
        auto view = make_a_side_view(g, random_a(g, rng, 0.3 + 0.7 * unit_uniform(rng)));
        for (auto mode : {decomposition_mode::general, decomposition_mode::edges_only}) {
            auto d = find_good_decomposition(g, view, mode);
            bool cond = mode == decomposition_mode::general ? lemma_condition(view) : corollary_condition(view);
            if (cond) {
                ASSERT_TRUE(d);
                (mode == decomposition_mode::general ? lemma_hits : corollary_hits) += 1;
            }
            if (!d)
                continue;
            ASSERT_TRUE(naive_decomposition_ok(g, *d));
            EXPECT_FALSE(d->I.empty());
            EXPECT_TRUE(set_includes(view.A, d->I));
            EXPECT_TRUE(set_includes(view.N, d->C));
        }
    }
    EXPECT_GT(lemma_hits, 100);
    EXPECT_GT(corollary_hits, 20);
}

TEST(Reduce, StarExamples)
{
    graph g = star(5);
    auto d = *find_good_decomposition(g, make_a_side_view(g, {1, 2, 3, 4, 5}), decomposition_mode::general);
    auto r = reduce_by_decomposition(g, 1, d);
    EXPECT_EQ(r.g.vertex_count(), 0);
    EXPECT_EQ(r.k, 0);
    EXPECT_EQ(r.forced, (vertex_set{0}));
    EXPECT_EQ(min_p3vc_oracle(g).size, 1);

    auto r0 = reduce_by_decomposition(g, 0, d);
    EXPECT_EQ(r0.k, -1);
}

TEST(Reduce, EmptyCKeepsBudget)
{
    graph g(4, {{0, 1}, {1, 2}});
    good_decomposition d{{3}, {}, {0, 1, 2}, {}};
    ASSERT_TRUE(naive_decomposition_ok(g, d));
    auto r = reduce_by_decomposition(g, 1, d);
    EXPECT_EQ(r.k, 1);
    EXPECT_EQ(r.g.vertex_count(), 3);
    EXPECT_EQ(r.to_original, (std::vector<vertex>{0, 1, 2}));
    EXPECT_TRUE(r.forced.empty());
}

TEST(Reduce, PreservesOptimumOnRandomInstances)
{
    std::mt19937_64 rng(23);
    int checked = 0;
    for (int t = 0; t < 1500; ++t) {
        int n = 3 + static_cast<int>(rng() % 12);
        graph g = gen_random_graph(n, std::min(1.0, (1.0 + static_cast<double>(rng() % 30) / 10.0) / n), rng());
        auto view = make_a_side_view(g, random_a(g, rng, 0.8));
        for (auto mode : {decomposition_mode::general, decomposition_mode::edges_only}) {
            auto d = find_good_decomposition(g, view, mode);
            if (!d)
                continue;
            auto r = reduce_by_decomposition(g, n, *d);
            EXPECT_EQ(min_p3vc_oracle(g).size, min_p3vc_oracle(r.g).size + static_cast<int>(d->C.size()));
            ++checked;
        }
    }
    EXPECT_GT(checked, 300);
}

TEST(Violations, DetectsBrokenDecompositions)
{
    graph g = star(3);
    good_decomposition ok{{1, 2, 3}, {0}, {}, {{1, 0, 2}}};
    EXPECT_TRUE(decomposition_violations(g, ok).empty());

    auto missing = ok;
    missing.I = {1, 2};
    EXPECT_FALSE(is_valid_decomposition(g, missing));

    graph p = p3vc::testing::path_graph(4);  // 0-1-2-3
    good_decomposition ir{{0}, {}, {1, 2, 3}, {}};
    EXPECT_FALSE(is_valid_decomposition(p, ir));

    good_decomposition deg{{0, 1, 2}, {}, {3}, {}};
    EXPECT_FALSE(is_valid_decomposition(p, deg));

    auto short_witness = ok;
    short_witness.witness.clear();
    EXPECT_FALSE(is_valid_decomposition(g, short_witness));

    good_decomposition bad_path{{1, 2, 3}, {0}, {}, {{1, 2, 3}}};
    EXPECT_FALSE(is_valid_decomposition(g, bad_path));
}
