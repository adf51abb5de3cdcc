#pragma once

#include <ringline/common.hpp>

#include <string>
#include <vector>

namespace ringline
{
    struct Table
    {
        std::string title;
        std::vector<std::string> header;
        std::vector<std::vector<std::string>> rows;

        /// Title line, then one line per row with cells joined by single spaces.
        auto to_text() const -> std::string;
        auto to_csv() const -> std::string;
    };

    /// [2m, m]_q for m = 0..mmax.
    auto point_count_table(std::size_t mmax = 3) -> Table;
    /// cap1N and cap2N of P(M_m(q)) for m = 0..mmax.
    auto cap_table(std::size_t mmax = 3) -> Table;
    /// Coefficients of q^(m^2 - h), h = 0..4, of C_{m,k} for k = 0..3, at the given m >= 4.
    auto c_coefficient_table(std::size_t m = 6) -> Table;
    /// Same columns for cap1N, cap2N, cap3N.
    auto cap_coefficient_table(std::size_t m = 6) -> Table;

    auto all_tables() -> std::vector<Table>;
}
