#include <ringline/tables.hpp>

#include <ringline/formulas.hpp>

namespace ringline
{
    namespace
    {
        constexpr std::size_t coefficient_columns = 5;

        auto join(const std::vector<std::string> & cells, const std::string & sep) -> std::string
        {
            std::string out;
            for (std::size_t i = 0; i < cells.size(); ++i)
                out += (i ? sep : "") + cells[i];
            return out;
        }

        auto leading_coefficients(const IntPoly & p, std::size_t m) -> std::vector<std::string>
        {
            std::vector<std::string> out;
            for (std::size_t h = 0; h < coefficient_columns; ++h)
                out.push_back(to_string(p.coefficient(m * m - h)));
            return out;
        }

        auto coefficient_header() -> std::vector<std::string>
        {
            std::vector<std::string> h{""};
            for (std::size_t i = 0; i < coefficient_columns; ++i)
                h.push_back(i == 0 ? "m^2" : "m^2-" + std::to_string(i));
            return h;
        }

        auto check_m(std::size_t m) -> void
        {
            if (m + 1 < coefficient_columns)
                throw InvalidInput("coefficient tables need m >= " + std::to_string(coefficient_columns - 1));
        }
    }

    auto Table::to_text() const -> std::string
    {
        std::string out = title + "\n";
        for (const auto & r : rows)
            out += join(r, " ") + "\n";
        return out;
    }

    auto Table::to_csv() const -> std::string
    {
        std::string out = join(header, ",") + "\n";
        for (const auto & r : rows)
            out += join(r, ",") + "\n";
        return out;
    }

    auto point_count_table(std::size_t mmax) -> Table
    {
        Table t{"points of P(M_m(q))", {"m", "points"}, {}};
        for (std::size_t m = 0; m <= mmax; ++m)
            t.rows.push_back({std::to_string(m), matrix_point_count(m).to_string()});
        return t;
    }

    auto cap_table(std::size_t mmax) -> Table
    {
        Table t{"cap1N and cap2N of P(M_m(q))", {"m", "cap1N", "cap2N"}, {}};
        for (std::size_t m = 0; m <= mmax; ++m)
            t.rows.push_back({std::to_string(m), cap1N_matrix(m).to_string(), cap2N_matrix(m).to_string()});
        return t;
    }

    auto c_coefficient_table(std::size_t m) -> Table
    {
        check_m(m);
        Table t{"leading coefficients of C_{m,k}", coefficient_header(), {}};
        for (std::size_t k = 0; k <= 3; ++k) {
            auto row = leading_coefficients(c_extension_poly(m, k), m);
            row.insert(row.begin(), "C_{m," + std::to_string(k) + "}");
            t.rows.push_back(row);
        }
        return t;
    }

    auto cap_coefficient_table(std::size_t m) -> Table
    {
        check_m(m);
        Table t{"leading coefficients of capkN", coefficient_header(), {}};
        const IntPoly polys[] = {cap1N_matrix(m), cap2N_matrix(m), cap3N_matrix(m)};
        for (std::size_t k = 1; k <= 3; ++k) {
            auto row = leading_coefficients(polys[k - 1], m);
            row.insert(row.begin(), "cap" + std::to_string(k) + "N");
            t.rows.push_back(row);
        }
        return t;
    }

    auto all_tables() -> std::vector<Table>
    {
        return {point_count_table(), cap_table(), c_coefficient_table(), cap_coefficient_table()};
    }
}
