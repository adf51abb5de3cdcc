#include <ringline/census.hpp>
#include <ringline/fixtures.hpp>
#include <ringline/ring_graphs.hpp>

#include <doctest.h>

#include <fstream>

using namespace ringline;

TEST_CASE("fixtures load and verify their checksums")
{
    auto b = load_fixture(default_fixture_dir() / "gl2_3_triangle.json");
    CHECK(b.q == 3);
    CHECK(b.groups.size() == 4);
    CHECK(b.matrices("A").size() == 4);
    CHECK_THROWS_AS(b.matrices("D"), InvalidInput);
    auto c = load_fixture(default_fixture_dir() / "gl2_5_clique.json");
    CHECK(c.matrices("clique").size() == 20);
}

TEST_CASE("a corrupted fixture is rejected")
{
    auto fx = load_fixture(default_fixture_dir() / "gl2_5_clique.json");
    auto path = std::filesystem::temp_directory_path() / "ringline_corrupt_fixture.json";
    nlohmann::json j{{"label", fx.label}, {"q", fx.q}, {"size", fx.size}, {"groups", fx.groups},
        {"checksum", fx.checksum()}};
    j["groups"]["clique"][0] = "0113";
    std::ofstream{path} << j.dump();
    CHECK_THROWS_AS(load_fixture(path), InvalidInput);
    CHECK_THROWS_AS(load_fixture(std::filesystem::temp_directory_path() / "ringline_missing.json"), InvalidInput);
    std::filesystem::remove(path);
}

TEST_CASE("GL2(3) triangle extension classes")
{
    auto r = verify_triangle_classes();
    INFO(r.to_text());
    CHECK(r.passed());
    CHECK(r.common_extensions == 9);
    CHECK(r.class_sizes == std::array<std::size_t, 3>{4, 4, 1});
    CHECK(r.c_extension_count == 8);
    CHECK(r.a_extension_counts == std::vector<std::size_t>{4, 4, 4, 4});
    CHECK(r.b_extension_counts == std::vector<std::size_t>{4, 4, 4, 4});
    CHECK(r.a_b_edges == 0);
    CHECK(r.maximal_clique_sizes == std::vector<std::size_t>{8, 8});
}

TEST_CASE("extension profile of the triangle")
{
    auto fx = load_fixture(default_fixture_dir() / "gl2_3_triangle.json");
    auto g = gl_difference_graph(2, GaloisField::of_order(3));
    std::vector<Vertex> tri;
    for (const auto & d : fx.groups.at("triangle"))
        tri.push_back(g.find_label(d).value());
    CHECK(extension_profile(g, 4, tri) == ExtensionProfile{{4, 8}, {8, 1}});
}

TEST_CASE("inextensible 20-clique in GL2(5)")
{
    auto r = verify_inextensible_clique();
    INFO(r.to_text());
    CHECK(r.passed());
    CHECK(r.invertible == 20);
    CHECK(r.distant_pairs == 190);
    CHECK(r.candidates == 480);
    CHECK(r.extensions == 0);
    CHECK(r.clique_bound == 24);
}

TEST_CASE("fixture graph matches the ring-graph construction")
{
    auto a = gl_difference_graph(2, GaloisField::of_order(3));
    auto b = unit_difference_graph(2, 3);
    REQUIRE(a.size() == b.size());
    CHECK(a.labels() == b.labels());
    for (Vertex u = 0; u < a.size(); ++u)
        for (Vertex v = 0; v < a.size(); ++v)
            CHECK(a.adjacent(u, v) == b.adjacent(u, v));
}
