#pragma once

#include <ringline/field.hpp>
#include <ringline/graph.hpp>

#include <filesystem>
#include <map>

namespace ringline
{
    /// Named groups of square matrices over GF(q), stored as row-major digit strings.
    struct MatrixFixture
    {
        std::string label;
        std::uint64_t q = 0;
        std::size_t size = 0;
        std::map<std::string, std::vector<std::string>> groups;

        auto matrices(const std::string & group) const -> std::vector<Matrix>;
        /// "fnv1a64:<16 hex digits>" over "name:d1,d2,...;" for each group in name order.
        auto checksum() const -> std::string;
    };

    /// Reads and validates a fixture; throws InvalidInput when the stored checksum,
    /// the matrix shapes or the entries do not match.
    auto load_fixture(const std::filesystem::path & file) -> MatrixFixture;

    /// Directory holding the bundled fixture files in the source tree.
    auto default_fixture_dir() -> std::filesystem::path;

    struct CheckLine
    {
        std::string name;
        bool passed = false;
        std::string detail;
    };

    struct Report
    {
        std::string title;
        std::vector<CheckLine> lines;

        auto passed() const -> bool;
        auto add(std::string name, bool passed, std::string detail = {}) -> void;
        auto to_text() const -> std::string;
    };

    struct TriangleClassReport : Report
    {
        std::size_t common_extensions = 0;
        /// Derived from the graph: two non-adjacent blocks and the vertex joined to both.
        std::array<std::size_t, 3> class_sizes{};
        std::size_t c_extension_count = 0;
        std::vector<std::size_t> a_extension_counts, b_extension_counts;
        std::size_t a_b_edges = 0;
        std::vector<std::size_t> maximal_clique_sizes;
    };

    struct InextensibleCliqueReport : Report
    {
        std::size_t invertible = 0;
        std::size_t distant_pairs = 0;
        std::size_t candidates = 0;
        std::size_t extensions = 0;
        std::size_t clique_bound = 0;
    };

    /// The graph on GL_m(q) with u ~ v iff u - v is invertible, built from field
    /// linear algebra only.
    auto gl_difference_graph(std::size_t m, const GaloisField & field) -> Graph;

    auto verify_triangle_classes(const std::filesystem::path & dir = default_fixture_dir()) -> TriangleClassReport;
    auto verify_inextensible_clique(const std::filesystem::path & dir = default_fixture_dir()) -> InextensibleCliqueReport;
}
