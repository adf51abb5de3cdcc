#pragma once

#include <ringline/common.hpp>

#include <compare>
#include <limits>
#include <string_view>
#include <vector>

namespace ringline
{
    /// Parts in weakly decreasing order.
    struct Partition
    {
        std::vector<unsigned> parts;

        auto rows() const -> std::size_t { return parts.size(); }
        auto weight() const -> unsigned;
        auto operator<=>(const Partition &) const = default;
    };

    /// A partition whose rows are coloured red or white, each colour strictly decreasing.
    struct TwoDistinctPartition
    {
        std::vector<unsigned> red;
        std::vector<unsigned> white;

        auto rows() const -> std::size_t { return red.size() + white.size(); }
        auto weight() const -> unsigned;
        auto is_valid() const -> bool;
        auto operator<=>(const TwoDistinctPartition &) const = default;
    };

    inline constexpr unsigned unbounded = std::numeric_limits<unsigned>::max();

    /// Partitions of h with parts <= max_part and at most max_len parts,
    /// in reverse lexicographic order (largest first part first).
    auto enumerate_partitions(unsigned h, unsigned max_part = unbounded, unsigned max_len = unbounded)
        -> std::vector<Partition>;
    /// As above with all parts distinct.
    auto enumerate_distinct_partitions(unsigned h, unsigned max_part = unbounded, unsigned max_len = unbounded)
        -> std::vector<Partition>;

    /// D_2(h, k, *): two-distinct partitions of h with exactly k red rows, sorted.
    auto enumerate_D2(unsigned h, unsigned k) -> std::vector<TwoDistinctPartition>;

    /// Even-row-count members minus odd-row-count members; the empty partition is even.
    template <typename Range>
    auto parity_count(const Range & partitions) -> std::int64_t
    {
        std::int64_t total = 0;
        for (const auto & p : partitions)
            total += p.rows() % 2 == 0 ? 1 : -1;
        return total;
    }

    /// Removes one cell from each red row (a red row of length 1 disappears).
    /// Maps D_2(h, k, *) onto D_2(h-k, k, *) union D_2(h-k, k-1, *).
    auto dist2p_bijection(const TwoDistinctPartition & x) -> TwoDistinctPartition;

    /// Exhaustive check that dist2p_bijection is a bijection from D_2(h,k,*) onto
    /// the union, keeping the row count on the first part and dropping one on the second.
    auto dist2p_check(unsigned h, unsigned k) -> bool;

    /// Power series in q truncated after q^order (order + 1 coefficients).
    class QSeries
    {
    public:
        QSeries(std::vector<BigInt> coeffs, std::size_t order);

        static auto one(std::size_t order) -> QSeries;
        /// prod_{i=1}^{order} (1 - q^i), exact up to q^order.
        static auto euler(std::size_t order) -> QSeries;

        auto order() const -> std::size_t { return order_; }
        auto coefficient(std::size_t d) const -> const BigInt & { return coeffs_.at(d); }
        auto coefficients() const -> const std::vector<BigInt> & { return coeffs_; }

        /// Result is truncated at the smaller order of the operands.
        friend auto operator*(const QSeries & a, const QSeries & b) -> QSeries;
        /// Requires a constant term of +1 or -1.
        auto inverse() const -> QSeries;
        auto pow(int exponent) const -> QSeries;

    private:
        std::vector<BigInt> coeffs_;
        std::size_t order_;
    };

    /// Coefficients of prod_{i>=1} (1 - q^i)^exponent up to q^n.
    auto qseries_product(int exponent, std::size_t n) -> std::vector<BigInt>;

    /// Compares the coefficient of q^(m^2-h) in (-1)^m q^(m(m-1)/2) prod_{j=0}^{m-1-k} (1 - q^(m-j))
    /// with the parity count of D_2(h, k, *). Requires h <= m.
    auto distcoeff_check(unsigned m, unsigned k, unsigned h) -> bool;

    /// For every h <= m: coefficient of q^(m^2-h) in C_{m,k}(q) equals the
    /// coefficient of q^h in prod (1 - q^i)^(k-1). Requires k <= 3.
    auto coeffs_theorem_check(unsigned m, unsigned k) -> bool;

    /// First 12 terms of A000041, A000007, A010815 or A002107, generated from
    /// the products with exponents -1, 0, 1, 2.
    auto oeis_prefix(std::string_view tag) -> std::vector<BigInt>;
}
