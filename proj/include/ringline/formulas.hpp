#pragma once

#include <ringline/int_poly.hpp>
#include <ringline/ring_graphs.hpp>

#include <optional>
#include <span>

namespace ringline
{
    /// Gaussian binomial [n, k]_q via the q-Pascal recurrence.
    auto qbinom(std::size_t n, std::size_t k) -> IntPoly;

    /// q^d
    auto q_power(std::size_t d) -> IntPoly;

    // Commutative rings: every summand is Local, a field (m = 1) or trivial (m = 0).
    // |J| below is the product of the local radicals and the global radical multiplier.

    /// |J|^k (k!)^(s-1) prod_i C(q_i + 1, k) over the s non-trivial summands.
    auto comm_clique_count(const RingSpec & spec, std::size_t k) -> BigInt;
    /// |J|^k prod_i C(q_i + 1, k) without the pairing factor. Agrees with
    /// comm_clique_count only when s <= 1 or k <= 1.
    auto comm_clique_count_printed(const RingSpec & spec, std::size_t k) -> BigInt;
    /// Common neighbours of any k-clique; 0 once k exceeds some q_i + 1.
    auto comm_extension_count(const RingSpec & spec, std::size_t k) -> BigInt;
    /// min(q_i) + 1; nullopt when every summand is trivial (the graph is T).
    auto comm_max_clique(const RingSpec & spec) -> std::optional<BigInt>;
    /// min(q_i^m_i) + 1 over the non-trivial summands (local summands count as m = 1).
    auto general_max_clique(const RingSpec & spec) -> std::optional<BigInt>;

    struct CapValue
    {
        BigInt value;
        /// False when the ring has no n-clique, so the value is the formula's
        /// formal evaluation rather than a count of points.
        bool clique_exists = true;
    };

    /// Inclusion-exclusion count of points non-distant to n mutually distant points.
    auto cap_n_N_comm(const RingSpec & spec, std::size_t n) -> CapValue;

    auto matrix_point_count(std::size_t m) -> IntPoly;
    auto matrix_degree(std::size_t m) -> IntPoly;
    auto matrix_codegree(std::size_t m) -> IntPoly;

    auto cap1N_matrix(std::size_t m) -> IntPoly;
    auto cap2N_matrix(std::size_t m) -> IntPoly;
    /// Uses the 4-clique extension polynomial; triangles are all equivalent.
    auto cap3N_matrix(std::size_t m) -> IntPoly;

    /// Products over summands, then scaled by |J|. Local summands enter as M_1(q_i)
    /// with their radical folded into |J|.
    auto cap1N_product(const RingSpec & spec) -> BigInt;
    auto cap2N_product(const RingSpec & spec) -> BigInt;

    /// Alternating q-weighted inclusion-exclusion over subspaces containing a k-space.
    /// weights[j] is the number of elements capturing a j-dimensional subspace, 0 <= j <= m.
    auto incexc_Wprime(std::size_t m, std::size_t k, std::span<const BigInt> weights, const BigInt & q) -> BigInt;

    /// Endomorphisms vanishing on a j-space: q^(m (m - j)).
    auto zero_capture_weights(std::size_t m, const BigInt & q) -> std::vector<BigInt>;
    /// Invertible endomorphisms fixing a j-space pointwise: q^(j (m - j)) |GL_(m-j)(q)|.
    auto identity_capture_weights(std::size_t m, const BigInt & q) -> std::vector<BigInt>;

    /// C_{m,k}(q): the number of ways to extend a k-clique of P(M_m(q)) to a
    /// (k+1)-clique, for 0 <= k <= 3. Throws InvalidInput for k > 3 since
    /// k-cliques are no longer equivalent there.
    auto c_extension_poly(std::size_t m, std::size_t k) -> IntPoly;

    /// (-1)^m q^(m(m-1)/2) sum_{i=0}^{m} prod_{j=0}^{m-i-1} (1 - q^(m-j))
    auto four_clique_sum_form(std::size_t m) -> IntPoly;
    /// (-1)^m q^(m(m-1)/2) ((1-q^m)((1-q^(m-1))( ... ((1-q)+1) ... )+1)+1)
    auto four_clique_nested_form(std::size_t m) -> IntPoly;

    /// (-1)^m q^(m(m-1)/2) prod_{j=0}^{m-1-k} (1 - q^(m-j))
    auto distinct_parity_poly(std::size_t m, std::size_t k) -> IntPoly;

    /// sum_i (-1)^i C(k, i) values[i], values[i] being the common-neighbour count of an i-clique.
    /// The summand index is i (see README).
    auto cap_k_N_from_extensions(std::span<const BigInt> values, std::size_t k) -> BigInt;

    auto radical_scale(const BigInt & value, const BigInt & radical_order) -> BigInt;
}
