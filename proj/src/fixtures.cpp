#include <ringline/fixtures.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#ifndef RINGLINE_FIXTURE_DIR
#define RINGLINE_FIXTURE_DIR "fixtures"
#endif

namespace ringline
{
    namespace
    {
        auto fnv1a64(const std::string & s) -> std::uint64_t
        {
            std::uint64_t h = 0xcbf29ce484222325ULL;
            for (unsigned char c : s) {
                h ^= c;
                h *= 0x100000001b3ULL;
            }
            return h;
        }

        auto join(const std::vector<std::size_t> & values) -> std::string
        {
            std::string out;
            for (auto v : values)
                out += (out.empty() ? "" : ",") + std::to_string(v);
            return out;
        }

        auto lookup(const Graph & g, const std::vector<Matrix> & ms) -> std::vector<Vertex>
        {
            std::vector<Vertex> out;
            for (const auto & m : ms) {
                auto v = g.find_label(m.digits());
                if (! v)
                    throw InvalidInput("fixture matrix " + m.digits() + " is not a vertex of the graph");
                out.push_back(*v);
            }
            return out;
        }

        auto as_set(std::vector<Vertex> v) -> std::set<Vertex> { return {v.begin(), v.end()}; }

        auto count_edges_between(const Graph & g, const std::vector<Vertex> & a, const std::vector<Vertex> & b)
            -> std::size_t
        {
            std::size_t n = 0;
            for (auto u : a)
                for (auto v : b)
                    n += g.adjacent(u, v) ? 1 : 0;
            return n;
        }

        auto pairwise_distant(const Graph & g, const std::vector<Vertex> & a) -> bool
        {
            return is_clique(g, a);
        }
    }

    auto MatrixFixture::matrices(const std::string & group) const -> std::vector<Matrix>
    {
        auto it = groups.find(group);
        if (it == groups.end())
            throw InvalidInput("fixture '" + label + "' has no group '" + group + "'");
        auto field = GaloisField::of_order(q);
        std::vector<Matrix> out;
        for (const auto & d : it->second)
            out.push_back(Matrix::from_digits(field, size, size, d));
        return out;
    }

    auto MatrixFixture::checksum() const -> std::string
    {
        std::string canonical;
        for (const auto & [name, entries] : groups) {
            canonical += name + ":";
            for (std::size_t i = 0; i < entries.size(); ++i)
                canonical += (i ? "," : "") + entries[i];
            canonical += ";";
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(canonical)));
        return std::string{"fnv1a64:"} + buf;
    }

    auto load_fixture(const std::filesystem::path & file) -> MatrixFixture
    {
        std::ifstream in{file};
        if (! in)
            throw InvalidInput("cannot open fixture " + file.string());
        nlohmann::json j;
        try {
            in >> j;
        }
        catch (const nlohmann::json::exception & e) {
            throw InvalidInput("malformed fixture " + file.string() + ": " + e.what());
        }

        MatrixFixture f;
        try {
            f.label = j.at("label").get<std::string>();
            f.q = j.at("q").get<std::uint64_t>();
            f.size = j.at("size").get<std::size_t>();
            for (const auto & [name, list] : j.at("groups").items())
                f.groups[name] = list.get<std::vector<std::string>>();
        }
        catch (const nlohmann::json::exception & e) {
            throw InvalidInput("fixture " + file.string() + " is missing fields: " + e.what());
        }

        auto stored = j.value("checksum", std::string{});
        if (stored != f.checksum())
            throw InvalidInput("fixture " + file.string() + " checksum mismatch: stored " + stored + ", computed " +
                f.checksum());

        // Shape and entry validation happens in from_digits.
        for (const auto & [name, _] : f.groups)
            (void)f.matrices(name);
        return f;
    }

    auto default_fixture_dir() -> std::filesystem::path { return RINGLINE_FIXTURE_DIR; }

    auto Report::passed() const -> bool
    {
        return ! lines.empty() && std::all_of(lines.begin(), lines.end(), [](const auto & l) { return l.passed; });
    }

    auto Report::add(std::string name, bool ok, std::string detail) -> void
    {
        lines.push_back({std::move(name), ok, std::move(detail)});
    }

    auto Report::to_text() const -> std::string
    {
        std::ostringstream out;
        out << title << "\n";
        for (const auto & l : lines) {
            out << "  [" << (l.passed ? "PASS" : "FAIL") << "] " << l.name;
            if (! l.detail.empty())
                out << ": " << l.detail;
            out << "\n";
        }
        return out.str();
    }

    auto gl_difference_graph(std::size_t m, const GaloisField & field) -> Graph
    {
        auto units = enumerate_gl(m, field);
        Graph g{units.size()};
        for (std::size_t i = 0; i < units.size(); ++i)
            for (std::size_t j = i + 1; j < units.size(); ++j)
                if (is_invertible(units[i] - units[j]))
                    g.add_edge(i, j);
        std::vector<std::string> labels;
        for (const auto & u : units)
            labels.push_back(u.digits());
        g.set_labels(std::move(labels));
        return g;
    }

    auto verify_triangle_classes(const std::filesystem::path & dir) -> TriangleClassReport
    {
        TriangleClassReport r;
        r.title = "GL2(3) triangle extensions";
        auto fx = load_fixture(dir / "gl2_3_triangle.json");
        auto field = GaloisField::of_order(fx.q);
        auto g = gl_difference_graph(fx.size, field);

        auto tri = lookup(g, fx.matrices("triangle"));
        auto a = lookup(g, fx.matrices("A"));
        auto b = lookup(g, fx.matrices("B"));
        auto c = lookup(g, fx.matrices("C"));
        r.add("triangle is a clique", tri.size() == 3 && is_clique(g, tri));

        std::vector<Vertex> ext;
        for (Vertex v = 0; v < g.size(); ++v)
            if (std::all_of(tri.begin(), tri.end(), [&](Vertex t) { return g.adjacent(v, t); }))
                ext.push_back(v);
        r.common_extensions = ext.size();
        auto listed = as_set(a);
        listed.insert(b.begin(), b.end());
        listed.insert(c.begin(), c.end());
        r.add("common extensions", ext.size() == 9 && as_set(ext) == listed,
            std::to_string(ext.size()) + " found, matching the listed A, B, C: " +
                (as_set(ext) == listed ? "yes" : "no"));

        // Classes from the graph alone: extensions joined to every other extension form one class,
        // the rest split into connected components of the induced subgraph.
        std::vector<Vertex> hub, rest;
        for (auto v : ext) {
            bool all = std::all_of(ext.begin(), ext.end(), [&](Vertex u) { return u == v || g.adjacent(u, v); });
            (all ? hub : rest).push_back(v);
        }
        std::vector<std::vector<Vertex>> components;
        std::vector<bool> seen(g.size(), false);
        for (auto s : rest) {
            if (seen[s])
                continue;
            std::vector<Vertex> comp, stack{s};
            seen[s] = true;
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (auto u : rest)
                    if (! seen[u] && g.adjacent(u, v)) {
                        seen[u] = true;
                        stack.push_back(u);
                    }
            }
            components.push_back(comp);
        }
        bool classes_match = components.size() == 2 && as_set(hub) == as_set(c) &&
            ((as_set(components[0]) == as_set(a) && as_set(components[1]) == as_set(b)) ||
                (as_set(components[0]) == as_set(b) && as_set(components[1]) == as_set(a)));
        if (components.size() == 2)
            r.class_sizes = {components[0].size(), components[1].size(), hub.size()};
        r.add("derived classes", classes_match && r.class_sizes == std::array<std::size_t, 3>{4, 4, 1},
            "sizes " + join({r.class_sizes[0], r.class_sizes[1], r.class_sizes[2]}));

        std::vector<Vertex> ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        r.a_b_edges = count_edges_between(g, a, b);
        r.add("A pairwise distant", pairwise_distant(g, a));
        r.add("B pairwise distant", pairwise_distant(g, b));
        r.add("C distant to A and B", count_edges_between(g, c, ab) == c.size() * ab.size());
        r.add("no A-B distances", r.a_b_edges == 0, std::to_string(r.a_b_edges) + " edges");

        auto extend = [&](Vertex v) {
            auto s = tri;
            s.push_back(v);
            return extension_count(g, s);
        };
        r.c_extension_count = extend(c.front());
        for (auto v : a)
            r.a_extension_counts.push_back(extend(v));
        for (auto v : b)
            r.b_extension_counts.push_back(extend(v));
        auto all_four = [](const std::vector<std::size_t> & v) {
            return std::all_of(v.begin(), v.end(), [](std::size_t x) { return x == 4; });
        };
        r.add("extensions via C", r.c_extension_count == 8, std::to_string(r.c_extension_count));
        r.add("extensions via A", all_four(r.a_extension_counts), join(r.a_extension_counts));
        r.add("extensions via B", all_four(r.b_extension_counts), join(r.b_extension_counts));

        // Every clique containing the triangle is the triangle plus a clique among its extensions.
        std::set<std::set<Vertex>> maximal;
        for (std::size_t mask = 0; mask < (std::size_t{1} << ext.size()); ++mask) {
            auto s = tri;
            for (std::size_t i = 0; i < ext.size(); ++i)
                if (mask >> i & 1)
                    s.push_back(ext[i]);
            if (is_clique(g, s) && is_inextensible(g, s))
                maximal.insert(as_set(s));
        }
        for (const auto & s : maximal)
            r.maximal_clique_sizes.push_back(s.size());
        auto expected_a = as_set(tri), expected_b = as_set(tri);
        expected_a.insert(a.begin(), a.end());
        expected_a.insert(c.begin(), c.end());
        expected_b.insert(b.begin(), b.end());
        expected_b.insert(c.begin(), c.end());
        r.add("maximal cliques through the triangle",
            maximal == std::set<std::set<Vertex>>{expected_a, expected_b},
            std::to_string(maximal.size()) + " of sizes " + join(r.maximal_clique_sizes));
        return r;
    }

    auto verify_inextensible_clique(const std::filesystem::path & dir) -> InextensibleCliqueReport
    {
        InextensibleCliqueReport r;
        r.title = "inextensible 20-clique in GL2(5)";
        auto fx = load_fixture(dir / "gl2_5_clique.json");
        auto field = GaloisField::of_order(fx.q);
        auto set = fx.matrices("clique");

        r.invertible = static_cast<std::size_t>(std::count_if(set.begin(), set.end(), [](const Matrix & m) {
            return is_invertible(m);
        }));
        r.add("all invertible", r.invertible == set.size(), std::to_string(r.invertible) + "/" +
            std::to_string(set.size()));

        std::size_t pairs = 0;
        for (std::size_t i = 0; i < set.size(); ++i)
            for (std::size_t j = i + 1; j < set.size(); ++j) {
                ++pairs;
                r.distant_pairs += is_invertible(set[i] - set[j]) ? 1 : 0;
            }
        r.add("pairwise differences invertible", r.distant_pairs == pairs && pairs == 190,
            std::to_string(r.distant_pairs) + "/" + std::to_string(pairs));

        auto units = enumerate_gl(fx.size, field);
        r.candidates = units.size();
        for (const auto & u : units)
            if (std::all_of(set.begin(), set.end(), [&](const Matrix & s) { return is_invertible(u - s); }))
                ++r.extensions;
        r.add("no extension", r.extensions == 0 && r.candidates == 480,
            std::to_string(r.extensions) + " of " + std::to_string(r.candidates) + " units extend the set");

        // Second route through the graph layer.
        auto g = gl_difference_graph(fx.size, field);
        auto vs = lookup(g, set);
        r.add("inextensible in the unit-difference graph", is_clique(g, vs) && is_inextensible(g, vs));

        r.clique_bound = static_cast<std::size_t>(ipow(fx.q, static_cast<unsigned>(fx.size)) - 1);
        r.add("below the clique bound", set.size() < r.clique_bound,
            std::to_string(set.size()) + " < " + std::to_string(r.clique_bound));
        return r;
    }
}
