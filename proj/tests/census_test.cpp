#include <ringline/census.hpp>
#include <ringline/ring_graphs.hpp>

#include <doctest.h>

#include <random>

using namespace ringline;

namespace
{
    auto random_graph(std::size_t n, unsigned density, std::uint64_t seed) -> Graph
    {
        std::mt19937_64 rng{seed};
        Graph g{n};
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng() % 100 < density)
                    g.add_edge(u, v);
        return g;
    }

    /// Subset enumeration; n <= 16.
    auto brute_counts(const Graph & g) -> std::vector<BigInt>
    {
        std::vector<BigInt> counts(g.size() + 1, 0);
        for (std::uint32_t mask = 0; mask < (1u << g.size()); ++mask) {
            std::vector<Vertex> s;
            for (Vertex v = 0; v < g.size(); ++v)
                if (mask >> v & 1)
                    s.push_back(v);
            if (is_clique(g, s))
                ++counts[s.size()];
        }
        return counts;
    }

    auto with_workers(unsigned w) -> Limits
    {
        Limits l;
        l.workers = w;
        return l;
    }
}

TEST_CASE("complete graph counts are binomials")
{
    auto c = count_cliques(complete_graph(7), 8);
    for (std::size_t k = 0; k <= 8; ++k)
        CHECK(c.counts[k] == binomial(7, static_cast<std::int64_t>(k)));
    CHECK(max_clique_order(complete_graph(7)) == 7);
}

TEST_CASE("census agrees with subset enumeration on random graphs")
{
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        auto g = random_graph(14, 30 + 5 * static_cast<unsigned>(seed), seed);
        auto brute = brute_counts(g);
        auto c = count_cliques(g, 14);
        CHECK(c.counts == brute);
        std::size_t omega = 0;
        for (std::size_t k = 0; k < brute.size(); ++k)
            if (brute[k] > 0)
                omega = k;
        CHECK(max_clique_order(g) == omega);
    }
}

TEST_CASE("worker count does not change the census")
{
    auto g = random_graph(150, 40, 99);
    auto serial = count_cliques(g, 6, with_workers(1));
    for (unsigned w : {2u, 3u, 8u})
        CHECK(count_cliques(g, 6, with_workers(w)) == serial);
}

TEST_CASE("Z/6 census")
{
    auto c = count_cliques(zn_projective_line(6), 3);
    CHECK(c.counts == std::vector<BigInt>{1, 12, 36, 24});
}

TEST_CASE("P(M2(2)) census ends at k = 5")
{
    auto c = count_cliques(matrix_ring_graph(2, 2), 6);
    CHECK(c.counts == std::vector<BigInt>{1, 35, 280, 560, 280, 56, 0});
}

TEST_CASE("the loop graph has one clique of every size")
{
    auto c = count_cliques(Graph::loop_graph(), 5);
    CHECK(c.counts == std::vector<BigInt>(6, 1));
    CHECK_THROWS_AS(max_clique_order(Graph::loop_graph()), InvalidInput);
}

TEST_CASE("budget overrun throws instead of truncating")
{
    Limits tight;
    tight.census_node_budget = 1000;
    auto g = matrix_ring_graph(2, 2);
    CHECK_THROWS_AS(count_cliques(g, 6, tight), BudgetExceeded);
    tight.workers = 1;
    CHECK_THROWS_AS(count_cliques(g, 6, tight), BudgetExceeded);
    CHECK_THROWS_AS(extension_profile(g, 4, {}, tight), BudgetExceeded);
    CHECK_THROWS_AS(max_clique_order(matrix_ring_graph(2, 3), tight), BudgetExceeded);
}

TEST_CASE("extension profiles")
{
    auto g = matrix_ring_graph(2, 2);
    auto p = extension_profile(g, 2);
    CHECK(p == ExtensionProfile{{6, 280}});
    CHECK(extension_profile(g, 0) == ExtensionProfile{{35, 1}});
    CHECK(extension_profile(g, 5) == ExtensionProfile{{0, 56}});

    const Vertex base[] = {0};
    auto rooted = extension_profile(g, 2, base);
    CHECK(rooted == ExtensionProfile{{6, 16}});
    const Vertex not_clique[] = {0, 0};
    CHECK_THROWS_AS(extension_profile(g, 3, not_clique), InvalidInput);
}

TEST_CASE("clique enumeration is sorted and complete")
{
    auto g = random_graph(30, 50, 5);
    for (std::size_t k = 0; k <= 5; ++k) {
        auto list = enumerate_cliques(g, k);
        CHECK(BigInt(list.size()) == count_cliques(g, k).counts[k]);
        CHECK(std::is_sorted(list.begin(), list.end()));
        for (const auto & c : list) {
            CHECK(c.size() == k);
            CHECK(is_clique(g, c));
        }
    }
}
