#pragma once

#include <ringline/field.hpp>
#include <ringline/graph.hpp>

#include <json.hpp>

#include <variant>

namespace ringline
{
    /// Finite local ring known only through |R| and |J|. Validated to satisfy
    /// |R| = p^(n r), |J| = p^((n-1) r); the residue field then has q = |R|/|J| = p^r.
    struct LocalSummand
    {
        std::uint64_t ring_order = 0;
        std::uint64_t radical_order = 1;

        auto residue_order() const -> std::uint64_t { return ring_order / radical_order; }
        auto operator==(const LocalSummand &) const -> bool = default;
    };

    /// M_m(GF(q)). m = 0 is the trivial ring.
    struct MatrixSummand
    {
        std::size_t m = 1;
        std::uint64_t q = 2;

        auto operator==(const MatrixSummand &) const -> bool = default;
    };

    using Summand = std::variant<LocalSummand, MatrixSummand>;

    struct RingSpec
    {
        std::vector<Summand> summands;
        /// Whole-ring blow-up factor applied after the tensor product.
        std::uint64_t radical_multiplier = 1;

        /// Throws InvalidInput on a malformed or unrealisable description.
        /// Returns human-readable warnings for legal but unusual combinations.
        auto validate() const -> std::vector<std::string>;

        /// True when every summand is local, a field (m = 1) or trivial (m = 0).
        auto is_commutative() const -> bool;

        static auto from_json(const nlohmann::json & j) -> RingSpec;
        auto to_json() const -> nlohmann::json;

        auto operator==(const RingSpec &) const -> bool = default;
    };

    auto validate_local(std::uint64_t ring_order, std::uint64_t radical_order) -> void;

    /// Local decomposition of Z/n: one LocalSummand(p^e, p^(e-1)) per prime power, ascending primes.
    auto zn_local_decomposition(std::uint64_t n) -> RingSpec;

    /// A point of P(M_m(q)): a rank-m, m x 2m basis matrix in reduced row-echelon form.
    struct SubspacePoint
    {
        Matrix basis;

        auto label() const -> std::string { return basis.digits(); }
        auto operator==(const SubspacePoint &) const -> bool = default;
    };

    /// The point generated by the admissible pair (left, right) of m x m matrices.
    auto point_of_pair(const Matrix & left, const Matrix & right) -> SubspacePoint;
    auto points_distant(const SubspacePoint & a, const SubspacePoint & b) -> bool;

    /// Number of k-dimensional subspaces of GF(q)^n, counted over pivot patterns.
    auto count_subspaces(std::size_t n, std::size_t k, std::uint64_t q) -> BigInt;
    /// All k-dimensional subspaces of GF(q)^n as RREF bases, sorted by label.
    auto enumerate_subspaces(std::size_t n, std::size_t k, const GaloisField & field, const Limits & limits = {})
        -> std::vector<SubspacePoint>;

    /// Complete multipartite graph with |R|/|J| + 1 parts of size |J|.
    /// Vertex part * |J| + copy; part q holds the points R(1, a), a in J.
    auto local_graph(std::uint64_t ring_order, std::uint64_t radical_order, const Limits & limits = {}) -> Graph;

    /// P(M_m(q)): subspace points labelled by their RREF digits; m = 0 gives T.
    auto matrix_ring_graph(std::size_t m, std::uint64_t q, const Limits & limits = {}) -> Graph;

    auto spec_graph(const RingSpec & spec, const Limits & limits = {}) -> Graph;

    /// P(Z/n) from unimodular pairs modulo unit scaling. Each vertex is the
    /// lexicographically least member of its orbit, labelled "a:b"; vertices sorted.
    auto zn_projective_line(std::uint64_t n, const Limits & limits = {}) -> Graph;

    /// Bijection from zn_projective_line(n) onto spec_graph of the Local summands
    /// (f, f/p) for the given coprime prime-power factors, via CRT on (a, b).
    auto zn_crt_map(std::uint64_t n, std::span<const std::uint64_t> factors) -> VertexMap;

    /// Graph on GL_m(q), labelled by digit strings, with u ~ v iff u - v is invertible.
    auto unit_difference_graph(std::size_t m, std::uint64_t q, const Limits & limits = {}) -> Graph;

    /// Lexicographically smallest monic irreducible of degree m whose roots
    /// generate the multiplicative group of GF(q^m).
    auto find_primitive(std::size_t degree, const GaloisField & field) -> FieldPoly;

    /// (1,0), (0,1) and (u^i, 1) for 0 <= i < q^m - 1, where u is the companion
    /// matrix of find_primitive(m, q). Pairwise distance is verified before returning.
    auto spread_clique(std::size_t m, std::uint64_t q) -> std::vector<SubspacePoint>;

    /// m-subsets of a 2m-set, adjacent iff complementary. Labels are length-2m bit strings.
    auto f1_graph(std::size_t m, const Limits & limits = {}) -> Graph;
}
