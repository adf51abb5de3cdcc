#include <ringline/graph.hpp>

#include <doctest.h>

#include <random>

using namespace ringline;

namespace
{
    auto cycle(std::size_t n) -> Graph
    {
        Graph g{n};
        for (std::size_t i = 0; i < n; ++i)
            g.add_edge(i, (i + 1) % n);
        return g;
    }
}

TEST_CASE("complete graphs")
{
    auto k5 = complete_graph(5);
    CHECK(k5.size() == 5);
    CHECK(k5.edge_count() == 10);
    CHECK(k5.regular_degree() == std::optional<std::size_t>{4});
    CHECK_FALSE(k5.adjacent(2, 2));
    CHECK(complete_graph(70).edge_count() == 70 * 69 / 2);
}

TEST_CASE("loops are rejected except in T")
{
    Graph g{3};
    CHECK_THROWS_AS(g.add_edge(1, 1), InvalidInput);
    auto t = Graph::loop_graph();
    CHECK(t.is_loop_graph());
    CHECK(t.size() == 1);
    CHECK(t.adjacent(0, 0));
    CHECK(t.edge_count() == 1);
}

TEST_CASE("tensor product")
{
    auto k3 = complete_graph(3), k4 = complete_graph(4);
    auto t = tensor_product(k3, k4);
    CHECK(t.size() == 12);
    CHECK(t.regular_degree() == std::optional<std::size_t>{6});
    CHECK(t.edge_count() == 36);
    // index a * |B| + b
    CHECK(t.adjacent(0 * 4 + 1, 1 * 4 + 2));
    CHECK_FALSE(t.adjacent(0 * 4 + 1, 1 * 4 + 1));
    CHECK_FALSE(t.adjacent(0 * 4 + 1, 0 * 4 + 2));
}

TEST_CASE("T is the tensor identity")
{
    auto c5 = cycle(5);
    auto t = Graph::loop_graph();
    auto a = tensor_product(c5, t), b = tensor_product(t, c5);
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = 0; v < 5; ++v) {
            CHECK(a.adjacent(u, v) == c5.adjacent(u, v));
            CHECK(b.adjacent(u, v) == c5.adjacent(u, v));
        }
    CHECK(tensor_product(t, t).is_loop_graph());
}

TEST_CASE("tensor product with labels joins them")
{
    auto a = complete_graph(2);
    a.set_labels({"x", "y"});
    auto b = complete_graph(2);
    b.set_labels({"0", "1"});
    auto t = tensor_product(a, b);
    CHECK(t.label(1) == "x|1");
    CHECK(t.find_label("y|0") == std::optional<Vertex>{2});
}

TEST_CASE("blow-up")
{
    auto k3 = complete_graph(3);
    auto b = blowup(k3, 2);
    CHECK(b.size() == 6);
    CHECK(b.regular_degree() == std::optional<std::size_t>{4});
    CHECK_FALSE(b.adjacent(0, 1));
    CHECK(b.adjacent(0, 2));
    CHECK(blowup(k3, 1).edge_count() == 3);
    CHECK_THROWS_AS(blowup(Graph::loop_graph(), 2), InvalidInput);
    CHECK(blowup(Graph::loop_graph(), 1).is_loop_graph());
}

TEST_CASE("vertex bound")
{
    Limits l;
    l.vertex_bound = 10;
    CHECK_THROWS_AS(tensor_product(complete_graph(4), complete_graph(4), l), BudgetExceeded);
    CHECK_THROWS_AS(blowup(complete_graph(4), 3, l), BudgetExceeded);
}

TEST_CASE("complement and disjoint union")
{
    std::vector<Graph> parts(3, complete_graph(2));
    auto u = disjoint_union(parts);
    CHECK(u.size() == 6);
    CHECK(u.edge_count() == 3);
    auto oct = complement(u);
    CHECK(oct.regular_degree() == std::optional<std::size_t>{4});
    CHECK(oct.edge_count() == 12);
    CHECK_THROWS_AS(complement(Graph::loop_graph()), InvalidInput);
}

TEST_CASE("cliques, extensions and non-neighbours")
{
    auto c5 = cycle(5);
    const Vertex edge[] = {0, 1}, non_edge[] = {0, 2}, single[] = {0};
    CHECK(is_clique(c5, edge));
    CHECK_FALSE(is_clique(c5, non_edge));
    CHECK(extension_count(c5, edge) == 0);
    CHECK(extension_count(c5, single) == 2);
    CHECK_THROWS_AS(extension_count(c5, non_edge), InvalidInput);
    CHECK(is_inextensible(c5, edge));
    CHECK_FALSE(is_inextensible(c5, single));
    // Vertex 0 has neighbours 1 and 4; the rest, including 0 itself, are non-adjacent.
    CHECK(count_adjacent_to_none(c5, single) == 3);
    CHECK(count_adjacent_to_none(c5, edge) == 1);
}

TEST_CASE("isomorphism verification")
{
    auto c5 = cycle(5);
    const Vertex rotate[] = {1, 2, 3, 4, 0};
    const Vertex star[] = {0, 2, 4, 1, 3};
    const Vertex bad[] = {0, 1, 2, 4, 3};
    const Vertex not_bijective[] = {0, 0, 1, 2, 3};
    CHECK(verify_isomorphism(c5, c5, rotate));
    CHECK_FALSE(verify_isomorphism(c5, c5, star));
    CHECK_FALSE(verify_isomorphism(c5, c5, bad));
    CHECK_THROWS_AS(verify_isomorphism(c5, c5, not_bijective), InvalidInput);
}

TEST_CASE("random graph symmetry and degree sums")
{
    std::mt19937_64 rng{7};
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 5 + rng() % 120;
        Graph g{n};
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng() % 3 == 0)
                    g.add_edge(u, v);
        std::uint64_t degree_sum = 0;
        for (Vertex u = 0; u < n; ++u) {
            degree_sum += g.degree(u);
            for (Vertex v = 0; v < n; ++v)
                CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        }
        CHECK(degree_sum == 2 * g.edge_count());
        auto c = complement(g);
        CHECK(c.edge_count() + g.edge_count() == n * (n - 1) / 2);
    }
}

TEST_CASE("DOT and JSON export")
{
    auto g = complete_graph(3);
    auto dot = to_dot(g, "K3");
    CHECK(dot.find("graph \"K3\" {") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    auto j = to_adjacency_json(g);
    CHECK(j["vertices"].size() == 3);
    CHECK(j["vertices"][0]["neighbours"].size() == 2);
    auto t = to_adjacency_json(Graph::loop_graph());
    CHECK(t["loop_graph"] == true);
}
