#include <ringline/census.hpp>
#include <ringline/formulas.hpp>
#include <ringline/ring_graphs.hpp>

#include <doctest.h>

#include <numeric>
#include <set>

using namespace ringline;

namespace
{
    auto spec_of(std::initializer_list<Summand> s, std::uint64_t radical = 1) -> RingSpec
    {
        return RingSpec{std::vector<Summand>(s), radical};
    }

    auto z_mod(std::uint64_t a, std::uint64_t n) -> std::uint64_t { return a % n; }
}

TEST_CASE("local ring validation")
{
    CHECK_NOTHROW(validate_local(4, 2));
    CHECK_NOTHROW(validate_local(8, 4));
    CHECK_NOTHROW(validate_local(8, 1));
    CHECK_NOTHROW(validate_local(16, 4));
    CHECK_THROWS_AS(validate_local(6, 1), InvalidInput);
    CHECK_THROWS_AS(validate_local(8, 2), InvalidInput);
    CHECK_THROWS_AS(validate_local(9, 9), InvalidInput);
    CHECK_THROWS_AS(validate_local(4, 3), InvalidInput);
}

TEST_CASE("ring spec JSON round trip and validation")
{
    auto spec = spec_of({LocalSummand{4, 2}, MatrixSummand{2, 3}}, 1);
    CHECK(RingSpec::from_json(spec.to_json()) == spec);
    CHECK_FALSE(spec.is_commutative());
    CHECK(zn_local_decomposition(12).is_commutative());
    CHECK_THROWS_AS(RingSpec::from_json(nlohmann::json::parse(R"({"summands":[{"ring":1}]})")), InvalidInput);
    CHECK_THROWS_AS(RingSpec::from_json(nlohmann::json::parse(R"({"summands":[{"matrix":{"m":2,"q":6}}]})")),
        InvalidInput);
    CHECK_THROWS_AS(RingSpec::from_json(nlohmann::json::parse(R"({"other":1})")), InvalidInput);
    CHECK_FALSE(spec_of({LocalSummand{4, 2}}, 2).validate().empty());
}

TEST_CASE("Z/n local decomposition")
{
    auto spec = zn_local_decomposition(360);
    REQUIRE(spec.summands.size() == 3);
    CHECK(std::get<LocalSummand>(spec.summands[0]) == LocalSummand{8, 4});
    CHECK(std::get<LocalSummand>(spec.summands[1]) == LocalSummand{9, 3});
    CHECK(std::get<LocalSummand>(spec.summands[2]) == LocalSummand{5, 1});
    CHECK_THROWS_AS(zn_local_decomposition(1), InvalidInput);
}

TEST_CASE("local graph: three constructions agree")
{
    for (auto [r, j] : {std::pair<std::uint64_t, std::uint64_t>{4, 2}, {8, 4}, {9, 3}, {25, 5}, {27, 9}, {7, 1}}) {
        CAPTURE(r);
        auto g = local_graph(r, j);
        auto q = r / j;
        auto b = blowup(complete_graph(q + 1), j);
        REQUIRE(g.size() == b.size());
        for (Vertex u = 0; u < g.size(); ++u)
            for (Vertex v = 0; v < g.size(); ++v)
                CHECK(g.adjacent(u, v) == b.adjacent(u, v));
        // Z/p^e realises (p^e, p^(e-1)).
        const std::uint64_t factors[] = {r};
        auto map = zn_crt_map(r, factors);
        CHECK(verify_isomorphism(zn_projective_line(r), g, map));
    }
}

TEST_CASE("admissible pairs of Z/n are exactly the unimodular ones")
{
    for (std::uint64_t n = 2; n <= 12; ++n) {
        CAPTURE(n);
        std::set<std::pair<std::uint64_t, std::uint64_t>> admissible;
        for (std::uint64_t a = 0; a < n; ++a)
            for (std::uint64_t b = 0; b < n; ++b)
                for (std::uint64_t c = 0; c < n; ++c)
                    for (std::uint64_t d = 0; d < n; ++d)
                        if (std::gcd(z_mod(a * d + n * n - b * c, n), n) == 1)
                            admissible.insert({a, b});
        std::set<std::pair<std::uint64_t, std::uint64_t>> unimodular;
        for (std::uint64_t a = 0; a < n; ++a)
            for (std::uint64_t b = 0; b < n; ++b)
                if (std::gcd(std::gcd(a, b), n) == 1)
                    unimodular.insert({a, b});
        CHECK(admissible == unimodular);

        std::uint64_t units = 0;
        for (std::uint64_t u = 1; u < n; ++u)
            units += std::gcd(u, n) == 1 ? 1 : 0;
        CHECK(zn_projective_line(n).size() * units == unimodular.size());
    }
}

TEST_CASE("P(Z/6)")
{
    auto g = zn_projective_line(6);
    CHECK(g.size() == 12);
    CHECK(g.regular_degree() == std::optional<std::size_t>{6});
    CHECK(g.edge_count() == 36);
    CHECK(g.find_label("1:0").has_value());
    CHECK(g.find_label("0:1").has_value());
    CHECK(g.find_label("1:1").has_value());
    CHECK_FALSE(g.find_label("5:0").has_value());
}

TEST_CASE("CRT map is an isomorphism onto the local decomposition")
{
    for (std::uint64_t n : {6, 12, 30, 36, 45, 60}) {
        CAPTURE(n);
        auto spec = zn_local_decomposition(n);
        std::vector<std::uint64_t> factors;
        for (const auto & s : spec.summands)
            factors.push_back(std::get<LocalSummand>(s).ring_order);
        CHECK(verify_isomorphism(zn_projective_line(n), spec_graph(spec), zn_crt_map(n, factors)));
    }
    const std::uint64_t bad[] = {2, 2};
    CHECK_THROWS_AS(zn_crt_map(4, bad), InvalidInput);
}

TEST_CASE("subspace counts")
{
    for (std::uint64_t q : {2, 3, 4})
        for (std::size_t n = 0; n <= 5; ++n)
            for (std::size_t k = 0; k <= n; ++k)
                CHECK(count_subspaces(n, k, q) == qbinom(n, k).evaluate(q));
    auto f = GaloisField::of_order(2);
    auto s = enumerate_subspaces(4, 2, f);
    CHECK(s.size() == 35);
    for (const auto & p : s) {
        CHECK(rref(p.basis) == p.basis);
        CHECK(rank(p.basis) == 2);
    }
}

TEST_CASE("points of pairs")
{
    auto f = GaloisField::of_order(3);
    auto id = Matrix::identity(f, 2);
    Matrix zero{f, 2, 2};
    auto a = point_of_pair(id, zero), b = point_of_pair(zero, id), c = point_of_pair(id, id);
    CHECK(a.label() == "10000100");
    CHECK(b.label() == "00100001");
    CHECK(points_distant(a, b));
    CHECK(points_distant(a, c));
    CHECK(points_distant(b, c));
    CHECK_FALSE(points_distant(a, a));
    // A left unit multiple generates the same point.
    auto u = Matrix::from_digits(f, 2, 2, "1201");
    CHECK(point_of_pair(u * id, u * id) == c);
    CHECK_THROWS_AS(point_of_pair(zero, zero), InvalidInput);
}

TEST_CASE("matrix ring graphs")
{
    CHECK(matrix_ring_graph(0, 5).is_loop_graph());
    auto g = matrix_ring_graph(1, 4);
    CHECK(g.size() == 5);
    CHECK(g.edge_count() == 10);
    auto m = matrix_ring_graph(2, 2);
    CHECK(m.size() == 35);
    CHECK(m.regular_degree() == std::optional<std::size_t>{16});
    CHECK(m.edge_count() == 280);
    Limits l;
    l.vertex_bound = 100;
    CHECK_THROWS_AS(matrix_ring_graph(2, 3, l), BudgetExceeded);
}

TEST_CASE("spec graphs")
{
    CHECK(spec_graph(spec_of({MatrixSummand{0, 2}})).is_loop_graph());
    CHECK(spec_graph(spec_of({MatrixSummand{0, 2}, MatrixSummand{1, 3}})).size() == 4);
    auto g = spec_graph(spec_of({MatrixSummand{1, 2}}, 3));
    CHECK(g.size() == 9);
    CHECK(g.regular_degree() == std::optional<std::size_t>{6});
    auto h = spec_graph(spec_of({LocalSummand{4, 2}, MatrixSummand{1, 3}}));
    CHECK(h.size() == 6 * 4);
}

TEST_CASE("unit-difference graphs")
{
    auto g = unit_difference_graph(2, 3);
    CHECK(g.size() == 48);
    CHECK(g.find_label("1001").has_value());
    // Common neighbours of I and 0 in the projective line are C_{2,3}(3) = 27 matrices.
    auto u = g.find_label("1001").value();
    CHECK(g.degree(u) == 27);
}

TEST_CASE("primitive polynomials and spreads")
{
    auto f3 = GaloisField::of_order(3);
    auto p = find_primitive(2, f3);
    CHECK(p != FieldPoly{{1, 0, 1}});
    CHECK(is_irreducible(p, f3));
    auto c = companion_matrix(p, f3);
    auto power = c;
    std::size_t order = 1;
    while (power != Matrix::identity(f3, 2)) {
        power = power * c;
        ++order;
    }
    CHECK(order == 8);

    for (auto [m, q] : {std::pair<std::size_t, std::uint64_t>{1, 5}, {2, 2}, {2, 4}, {3, 3}}) {
        CAPTURE(m);
        CAPTURE(q);
        auto s = spread_clique(m, q);
        CHECK(s.size() == ipow(q, static_cast<unsigned>(m)) + 1);
        std::set<std::string> labels;
        for (const auto & pt : s)
            labels.insert(pt.label());
        CHECK(labels.size() == s.size());
    }
}

TEST_CASE("spread is a clique of P(M2(q)) at the clique number")
{
    auto g = matrix_ring_graph(2, 3);
    std::vector<Vertex> vs;
    for (const auto & p : spread_clique(2, 3))
        vs.push_back(g.find_label(p.label()).value());
    CHECK(is_clique(g, vs));
    CHECK(is_inextensible(g, vs));
    CHECK(vs.size() == max_clique_order(g));
}

TEST_CASE("F1 graphs")
{
    CHECK(f1_graph(0).is_loop_graph());
    auto g = f1_graph(3);
    CHECK(g.size() == 20);
    CHECK(g.regular_degree() == std::optional<std::size_t>{1});
    auto v = g.find_label("111000").value();
    auto w = g.find_label("000111").value();
    CHECK(g.adjacent(v, w));
}
