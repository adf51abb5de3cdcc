#include <ringline/partitions.hpp>

#include <ringline/formulas.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace ringline
{
    auto Partition::weight() const -> unsigned { return std::accumulate(parts.begin(), parts.end(), 0u); }

    auto TwoDistinctPartition::weight() const -> unsigned
    {
        return std::accumulate(red.begin(), red.end(), 0u) + std::accumulate(white.begin(), white.end(), 0u);
    }

    auto TwoDistinctPartition::is_valid() const -> bool
    {
        auto strictly_decreasing = [](const std::vector<unsigned> & v) {
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i] == 0 || (i > 0 && v[i] >= v[i - 1]))
                    return false;
            return true;
        };
        return strictly_decreasing(red) && strictly_decreasing(white);
    }

    namespace
    {
        auto generate(unsigned remaining, unsigned max_part, unsigned max_len, bool distinct, std::vector<unsigned> & current,
            std::vector<Partition> & out) -> void
        {
            if (remaining == 0) {
                out.push_back({current});
                return;
            }
            if (max_len == 0)
                return;
            for (auto part = std::min(remaining, max_part); part >= 1; --part) {
                current.push_back(part);
                generate(remaining - part, distinct ? part - 1 : part, max_len - 1, distinct, current, out);
                current.pop_back();
            }
        }
    }

    auto enumerate_partitions(unsigned h, unsigned max_part, unsigned max_len) -> std::vector<Partition>
    {
        std::vector<Partition> out;
        std::vector<unsigned> current;
        generate(h, max_part, max_len, false, current, out);
        return out;
    }

    auto enumerate_distinct_partitions(unsigned h, unsigned max_part, unsigned max_len) -> std::vector<Partition>
    {
        std::vector<Partition> out;
        std::vector<unsigned> current;
        generate(h, max_part, max_len, true, current, out);
        return out;
    }

    auto enumerate_D2(unsigned h, unsigned k) -> std::vector<TwoDistinctPartition>
    {
        std::vector<TwoDistinctPartition> out;
        for (unsigned red_weight = 0; red_weight <= h; ++red_weight)
            for (const auto & red : enumerate_distinct_partitions(red_weight)) {
                if (red.rows() != k)
                    continue;
                for (const auto & white : enumerate_distinct_partitions(h - red_weight))
                    out.push_back({red.parts, white.parts});
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    auto dist2p_bijection(const TwoDistinctPartition & x) -> TwoDistinctPartition
    {
        auto y = x;
        for (auto & r : y.red)
            --r;
        if (! y.red.empty() && y.red.back() == 0)
            y.red.pop_back();
        return y;
    }

    auto dist2p_check(unsigned h, unsigned k) -> bool
    {
        // k = 0 is the identity; k > h leaves D_2(h, k, *) empty.
        if (k == 0 || k > h)
            return true;
        std::set<TwoDistinctPartition> same_rows, one_fewer;
        for (const auto & x : enumerate_D2(h, k)) {
            auto y = dist2p_bijection(x);
            if (! y.is_valid() || y.weight() != h - k)
                return false;
            if (y.red.size() == k) {
                if (y.rows() != x.rows() || ! same_rows.insert(y).second)
                    return false;
            }
            else if (y.red.size() + 1 == k) {
                if (y.rows() + 1 != x.rows() || ! one_fewer.insert(y).second)
                    return false;
            }
            else
                return false;
        }
        auto target_same = enumerate_D2(h - k, k);
        auto target_fewer = enumerate_D2(h - k, k - 1);
        return std::equal(same_rows.begin(), same_rows.end(), target_same.begin(), target_same.end())
            && std::equal(one_fewer.begin(), one_fewer.end(), target_fewer.begin(), target_fewer.end());
    }

    QSeries::QSeries(std::vector<BigInt> coeffs, std::size_t order) : coeffs_(std::move(coeffs)), order_(order)
    {
        coeffs_.resize(order_ + 1, 0);
    }

    auto QSeries::one(std::size_t order) -> QSeries { return QSeries({1}, order); }

    auto QSeries::euler(std::size_t order) -> QSeries
    {
        auto result = one(order);
        for (std::size_t i = 1; i <= order; ++i) {
            std::vector<BigInt> factor(i + 1, 0);
            factor[0] = 1;
            factor[i] = -1;
            result = result * QSeries(std::move(factor), order);
        }
        return result;
    }

    auto operator*(const QSeries & a, const QSeries & b) -> QSeries
    {
        auto order = std::min(a.order_, b.order_);
        std::vector<BigInt> c(order + 1, 0);
        for (std::size_t i = 0; i <= order; ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; i + j <= order; ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return QSeries(std::move(c), order);
    }

    auto QSeries::inverse() const -> QSeries
    {
        const auto & c0 = coeffs_[0];
        if (c0 != 1 && c0 != -1)
            throw InvalidInput("series inverse needs a unit constant term");
        std::vector<BigInt> inv(order_ + 1, 0);
        inv[0] = c0;
        for (std::size_t n = 1; n <= order_; ++n) {
            BigInt s = 0;
            for (std::size_t i = 1; i <= n; ++i)
                s += coeffs_[i] * inv[n - i];
            inv[n] = -s * c0;
        }
        return QSeries(std::move(inv), order_);
    }

    auto QSeries::pow(int exponent) const -> QSeries
    {
        auto base = exponent < 0 ? inverse() : *this;
        auto result = one(order_);
        for (int i = 0; i < std::abs(exponent); ++i)
            result = result * base;
        return result;
    }

    auto qseries_product(int exponent, std::size_t n) -> std::vector<BigInt>
    {
        return QSeries::euler(n).pow(exponent).coefficients();
    }

    auto distcoeff_check(unsigned m, unsigned k, unsigned h) -> bool
    {
        if (h > m)
            throw InvalidInput("distinct-coefficient check needs h <= m");
        auto poly = distinct_parity_poly(m, k);
        return poly.coefficient(m * m - h) == parity_count(enumerate_D2(h, k));
    }

    auto coeffs_theorem_check(unsigned m, unsigned k) -> bool
    {
        if (k > 3)
            throw InvalidInput("coefficient check covers k <= 3 only");
        auto poly = c_extension_poly(m, k);
        auto series = qseries_product(static_cast<int>(k) - 1, m);
        for (unsigned h = 0; h <= m; ++h)
            if (poly.coefficient(m * m - h) != series[h])
                return false;
        return true;
    }

    auto oeis_prefix(std::string_view tag) -> std::vector<BigInt>
    {
        int exponent;
        if (tag == "A000041")
            exponent = -1;
        else if (tag == "A000007")
            exponent = 0;
        else if (tag == "A010815")
            exponent = 1;
        else if (tag == "A002107")
            exponent = 2;
        else
            throw InvalidInput("unknown sequence tag " + std::string(tag));
        return qseries_product(exponent, 11);
    }
}
