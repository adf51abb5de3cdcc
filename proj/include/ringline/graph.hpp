#pragma once

#include <ringline/common.hpp>

#include <json.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ringline
{
    using Vertex = std::size_t;
    using VertexMap = std::vector<Vertex>;

    /// Finite simple graph stored as bitset adjacency rows, or the one-vertex
    /// graph T whose single vertex carries a loop.
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(std::size_t n);

        /// The graph T: one vertex, adjacent to itself.
        static auto loop_graph() -> Graph;

        auto size() const -> std::size_t { return n_; }
        auto is_loop_graph() const -> bool { return is_loop_; }
        auto words() const -> std::size_t { return words_; }

        auto adjacent(Vertex u, Vertex v) const -> bool
        {
            return (adjacency_[u * words_ + v / 64] >> (v % 64)) & 1u;
        }
        auto row(Vertex v) const -> std::span<const std::uint64_t>
        {
            return {adjacency_.data() + v * words_, words_};
        }

        /// Throws InvalidInput for u == v.
        auto add_edge(Vertex u, Vertex v) -> void;

        auto degree(Vertex v) const -> std::size_t;
        auto edge_count() const -> std::uint64_t;
        /// The common degree if every vertex has it.
        auto regular_degree() const -> std::optional<std::size_t>;

        auto has_labels() const -> bool { return ! labels_.empty(); }
        /// Canonical construction label, or the vertex index when unlabelled.
        auto label(Vertex v) const -> std::string;
        auto labels() const -> const std::vector<std::string> & { return labels_; }
        auto set_labels(std::vector<std::string> labels) -> void;
        /// Index of the vertex with this label; nullopt when absent.
        auto find_label(const std::string & label) const -> std::optional<Vertex>;

    private:
        std::size_t n_ = 0;
        std::size_t words_ = 0;
        bool is_loop_ = false;
        std::vector<std::uint64_t> adjacency_;
        std::vector<std::string> labels_;
    };

    auto complete_graph(std::size_t n) -> Graph;

    /// Cartesian vertex set, (a1,b1) ~ (a2,b2) iff a1 ~ a2 and b1 ~ b2. Vertex (a,b) has
    /// index a * |B| + b. T is the identity.
    auto tensor_product(const Graph & a, const Graph & b, const Limits & limits = {}) -> Graph;
    /// Each vertex becomes t pairwise non-adjacent copies; copy c of v has index v * t + c.
    auto blowup(const Graph & g, std::size_t t, const Limits & limits = {}) -> Graph;
    auto complement(const Graph & g) -> Graph;
    auto disjoint_union(std::span<const Graph> parts) -> Graph;

    auto is_clique(const Graph & g, std::span<const Vertex> vertices) -> bool;
    /// Number of vertices adjacent to every member. Throws if the set is not a clique.
    auto extension_count(const Graph & g, std::span<const Vertex> clique) -> std::size_t;
    auto is_inextensible(const Graph & g, std::span<const Vertex> vertices) -> bool;
    /// Number of vertices adjacent to no member of the set (the intersection of
    /// the members' non-distant neighbourhoods).
    auto count_adjacent_to_none(const Graph & g, std::span<const Vertex> vertices) -> std::size_t;

    /// True iff map is a bijection that preserves adjacency and non-adjacency.
    /// Throws InvalidInput when map is not a bijection between the vertex sets.
    auto verify_isomorphism(const Graph & a, const Graph & b, std::span<const Vertex> map) -> bool;

    auto to_dot(const Graph & g, const std::string & name = "G") -> std::string;
    auto to_adjacency_json(const Graph & g) -> nlohmann::json;
}
