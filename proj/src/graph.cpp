#include <ringline/graph.hpp>

#include <algorithm>
#include <bit>
#include <sstream>

namespace ringline
{
    namespace
    {
        auto words_for(std::size_t n) -> std::size_t { return (n + 63) / 64; }

        auto check_vertex_bound(std::uint64_t n, const Limits & limits, const char * what) -> void
        {
            if (n > limits.vertex_bound)
                throw BudgetExceeded(std::string(what) + " would have " + std::to_string(n)
                    + " vertices, above the bound of " + std::to_string(limits.vertex_bound));
        }

        auto reject_loop_graph(const Graph & g, const char * what) -> void
        {
            if (g.is_loop_graph())
                throw InvalidInput(std::string(what) + " is not defined for the loop graph T");
        }
    }

    Graph::Graph(std::size_t n) : n_(n), words_(words_for(n)), adjacency_(n * words_for(n), 0) {}

    auto Graph::loop_graph() -> Graph
    {
        Graph g(1);
        g.is_loop_ = true;
        g.adjacency_[0] = 1;
        g.labels_ = {"T"};
        return g;
    }

    auto Graph::add_edge(Vertex u, Vertex v) -> void
    {
        if (u >= n_ || v >= n_)
            throw InvalidInput("edge endpoint out of range");
        if (u == v)
            throw InvalidInput("simple graphs have no loops");
        adjacency_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        adjacency_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }

    auto Graph::degree(Vertex v) const -> std::size_t
    {
        std::size_t d = 0;
        for (auto w : row(v))
            d += static_cast<std::size_t>(std::popcount(w));
        return d;
    }

    auto Graph::edge_count() const -> std::uint64_t
    {
        if (is_loop_)
            return 1;
        std::uint64_t total = 0;
        for (Vertex v = 0; v < n_; ++v)
            total += degree(v);
        return total / 2;
    }

    auto Graph::regular_degree() const -> std::optional<std::size_t>
    {
        if (n_ == 0)
            return std::nullopt;
        auto d = degree(0);
        for (Vertex v = 1; v < n_; ++v)
            if (degree(v) != d)
                return std::nullopt;
        return d;
    }

    auto Graph::label(Vertex v) const -> std::string
    {
        return labels_.empty() ? std::to_string(v) : labels_[v];
    }

    auto Graph::set_labels(std::vector<std::string> labels) -> void
    {
        if (! labels.empty() && labels.size() != n_)
            throw InvalidInput("label count does not match vertex count");
        labels_ = std::move(labels);
    }

    auto Graph::find_label(const std::string & label) const -> std::optional<Vertex>
    {
        for (Vertex v = 0; v < n_; ++v)
            if (this->label(v) == label)
                return v;
        return std::nullopt;
    }

    auto complete_graph(std::size_t n) -> Graph
    {
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto tensor_product(const Graph & a, const Graph & b, const Limits & limits) -> Graph
    {
        if (a.is_loop_graph() && b.is_loop_graph())
            return Graph::loop_graph();
        check_vertex_bound(std::uint64_t{a.size()} * b.size(), limits, "tensor product");

        auto nb = b.size();
        Graph g(a.size() * nb);
        for (Vertex a1 = 0; a1 < a.size(); ++a1)
            for (Vertex a2 = a1; a2 < a.size(); ++a2) {
                if (! a.adjacent(a1, a2))
                    continue;
                for (Vertex b1 = 0; b1 < nb; ++b1)
                    for (Vertex b2 = 0; b2 < nb; ++b2) {
                        auto u = a1 * nb + b1, v = a2 * nb + b2;
                        if (u < v && b.adjacent(b1, b2))
                            g.add_edge(u, v);
                    }
            }

        if (a.is_loop_graph())
            g.set_labels(b.labels());
        else if (b.is_loop_graph())
            g.set_labels(a.labels());
        else if (a.has_labels() || b.has_labels()) {
            std::vector<std::string> labels;
            labels.reserve(g.size());
            for (Vertex x = 0; x < a.size(); ++x)
                for (Vertex y = 0; y < nb; ++y)
                    labels.push_back(a.label(x) + "|" + b.label(y));
            g.set_labels(std::move(labels));
        }
        return g;
    }

    auto blowup(const Graph & g, std::size_t t, const Limits & limits) -> Graph
    {
        if (t == 0)
            throw InvalidInput("blow-up factor must be positive");
        if (t == 1)
            return g;
        reject_loop_graph(g, "blow-up");
        check_vertex_bound(std::uint64_t{g.size()} * t, limits, "blow-up");

        Graph result(g.size() * t);
        for (Vertex u = 0; u < g.size(); ++u)
            for (Vertex v = u + 1; v < g.size(); ++v)
                if (g.adjacent(u, v))
                    for (std::size_t i = 0; i < t; ++i)
                        for (std::size_t j = 0; j < t; ++j)
                            result.add_edge(u * t + i, v * t + j);

        if (g.has_labels()) {
            std::vector<std::string> labels;
            for (Vertex v = 0; v < g.size(); ++v)
                for (std::size_t i = 0; i < t; ++i)
                    labels.push_back(g.label(v) + "#" + std::to_string(i));
            result.set_labels(std::move(labels));
        }
        return result;
    }

    auto complement(const Graph & g) -> Graph
    {
        reject_loop_graph(g, "complement");
        Graph result(g.size());
        for (Vertex u = 0; u < g.size(); ++u)
            for (Vertex v = u + 1; v < g.size(); ++v)
                if (! g.adjacent(u, v))
                    result.add_edge(u, v);
        result.set_labels(g.labels());
        return result;
    }

    auto disjoint_union(std::span<const Graph> parts) -> Graph
    {
        std::size_t n = 0;
        for (const auto & p : parts) {
            reject_loop_graph(p, "disjoint union");
            n += p.size();
        }
        Graph result(n);
        std::size_t offset = 0;
        for (const auto & p : parts) {
            for (Vertex u = 0; u < p.size(); ++u)
                for (Vertex v = u + 1; v < p.size(); ++v)
                    if (p.adjacent(u, v))
                        result.add_edge(offset + u, offset + v);
            offset += p.size();
        }
        return result;
    }

    auto is_clique(const Graph & g, std::span<const Vertex> vertices) -> bool
    {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (vertices[i] >= g.size())
                throw InvalidInput("vertex out of range");
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if (! g.adjacent(vertices[i], vertices[j]))
                    return false;
        }
        return true;
    }

    auto extension_count(const Graph & g, std::span<const Vertex> clique) -> std::size_t
    {
        if (! is_clique(g, clique))
            throw InvalidInput("vertex set is not a clique");
        std::vector<std::uint64_t> common(g.words(), ~std::uint64_t{0});
        if (g.size() % 64 != 0 && ! common.empty())
            common.back() = (std::uint64_t{1} << (g.size() % 64)) - 1;
        for (auto v : clique) {
            auto r = g.row(v);
            for (std::size_t w = 0; w < common.size(); ++w)
                common[w] &= r[w];
        }
        std::size_t total = 0;
        for (auto w : common)
            total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    auto is_inextensible(const Graph & g, std::span<const Vertex> vertices) -> bool
    {
        return is_clique(g, vertices) && extension_count(g, vertices) == 0;
    }

    auto count_adjacent_to_none(const Graph & g, std::span<const Vertex> vertices) -> std::size_t
    {
        std::vector<std::uint64_t> any(g.words(), 0);
        for (auto v : vertices) {
            if (v >= g.size())
                throw InvalidInput("vertex out of range");
            auto r = g.row(v);
            for (std::size_t w = 0; w < any.size(); ++w)
                any[w] |= r[w];
        }
        std::size_t covered = 0;
        for (auto w : any)
            covered += static_cast<std::size_t>(std::popcount(w));
        return g.size() - covered;
    }

    auto verify_isomorphism(const Graph & a, const Graph & b, std::span<const Vertex> map) -> bool
    {
        if (map.size() != a.size())
            throw InvalidInput("vertex map does not cover the source graph");
        std::vector<bool> hit(b.size(), false);
        for (auto v : map) {
            if (v >= b.size() || hit[v])
                throw InvalidInput("vertex map is not a bijection");
            hit[v] = true;
        }
        if (a.size() != b.size())
            throw InvalidInput("vertex map is not a bijection");
        if (a.is_loop_graph() != b.is_loop_graph() || a.edge_count() != b.edge_count())
            return false;
        for (Vertex u = 0; u < a.size(); ++u)
            for (Vertex v = u; v < a.size(); ++v)
                if (a.adjacent(u, v) != b.adjacent(map[u], map[v]))
                    return false;
        return true;
    }

    namespace
    {
        auto dot_escape(const std::string & s) -> std::string
        {
            std::string out;
            for (auto c : s) {
                if (c == '"' || c == '\\')
                    out.push_back('\\');
                out.push_back(c);
            }
            return out;
        }
    }

    auto to_dot(const Graph & g, const std::string & name) -> std::string
    {
        std::ostringstream out;
        out << "graph \"" << dot_escape(name) << "\" {\n";
        for (Vertex v = 0; v < g.size(); ++v)
            out << "  " << v << " [label=\"" << dot_escape(g.label(v)) << "\"];\n";
        for (Vertex u = 0; u < g.size(); ++u)
            for (Vertex v = u; v < g.size(); ++v)
                if (g.adjacent(u, v))
                    out << "  " << u << " -- " << v << ";\n";
        out << "}\n";
        return out.str();
    }

    auto to_adjacency_json(const Graph & g) -> nlohmann::json
    {
        nlohmann::json vertices = nlohmann::json::array();
        for (Vertex v = 0; v < g.size(); ++v) {
            nlohmann::json neighbours = nlohmann::json::array();
            for (Vertex u = 0; u < g.size(); ++u)
                if (g.adjacent(v, u))
                    neighbours.push_back(u);
            vertices.push_back({{"label", g.label(v)}, {"neighbours", neighbours}});
        }
        return {{"loop_graph", g.is_loop_graph()}, {"vertices", vertices}};
    }
}
