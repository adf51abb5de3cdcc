#pragma once

#include <ringline/graph.hpp>

#include <map>

namespace ringline
{
    /// Exact k-clique counts for 0 <= k <= kmax.
    struct CliqueCensus
    {
        std::vector<BigInt> counts;

        auto kmax() const -> std::size_t { return counts.empty() ? 0 : counts.size() - 1; }
        auto operator==(const CliqueCensus &) const -> bool = default;
    };

    /// Sorted count-of-counts: extension count -> number of cliques having it.
    using ExtensionProfile = std::map<std::size_t, std::uint64_t>;

    /// Ordered backtracking over increasing vertex indices. One search node is one
    /// partial clique whose candidate set is examined; exceeding the node budget
    /// throws BudgetExceeded. The search forest is split across workers by first
    /// vertex, and counts are schedule independent. For T every count is 1.
    auto count_cliques(const Graph & g, std::size_t kmax, const Limits & limits = {}) -> CliqueCensus;

    /// Extension counts of every k-clique containing base (which must be a clique of at most k vertices).
    auto extension_profile(const Graph & g, std::size_t k, std::span<const Vertex> base = {}, const Limits & limits = {})
        -> ExtensionProfile;

    /// Exact clique number by branch and bound with greedy colouring bounds.
    auto max_clique_order(const Graph & g, const Limits & limits = {}) -> std::size_t;

    /// Every k-clique, each as an increasing vertex list, in lexicographic order.
    auto enumerate_cliques(const Graph & g, std::size_t k, const Limits & limits = {}) -> std::vector<std::vector<Vertex>>;
}
