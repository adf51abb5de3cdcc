#pragma once

#include <ringline/common.hpp>

#include <json.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace ringline
{
    /// Univariate polynomial in q with arbitrary-precision integer coefficients,
    /// ascending degree, no trailing zeros. The zero polynomial has no coefficients.
    class IntPoly
    {
    public:
        IntPoly() = default;
        IntPoly(std::initializer_list<BigInt> ascending);
        explicit IntPoly(std::vector<BigInt> ascending);

        static auto constant(BigInt c) -> IntPoly;
        /// c * q^d
        static auto monomial(std::size_t degree, BigInt coefficient = 1) -> IntPoly;

        auto is_zero() const -> bool { return coeffs_.empty(); }
        /// -1 for the zero polynomial.
        auto degree() const -> std::ptrdiff_t { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
        /// Coefficient of q^d; zero beyond the degree.
        auto coefficient(std::size_t d) const -> BigInt;
        auto coefficients() const -> const std::vector<BigInt> & { return coeffs_; }

        auto evaluate(const BigInt & q) const -> BigInt;

        auto operator+=(const IntPoly & o) -> IntPoly &;
        auto operator-=(const IntPoly & o) -> IntPoly &;
        auto operator*=(const IntPoly & o) -> IntPoly &;

        friend auto operator+(IntPoly a, const IntPoly & b) -> IntPoly { return a += b; }
        friend auto operator-(IntPoly a, const IntPoly & b) -> IntPoly { return a -= b; }
        friend auto operator*(IntPoly a, const IntPoly & b) -> IntPoly { return a *= b; }
        friend auto operator*(const BigInt & c, const IntPoly & p) -> IntPoly { return IntPoly::constant(c) * p; }
        friend auto operator-(const IntPoly & p) -> IntPoly { return IntPoly{} - p; }

        auto operator==(const IntPoly &) const -> bool = default;

        /// Descending human form, e.g. "q^4+q^3+2q^2+q+1", "q^4-2q^3-q^2+3q", "0".
        auto to_string() const -> std::string;
        /// Ascending coefficient array of decimal strings.
        auto to_json() const -> nlohmann::json;

    private:
        auto normalise() -> void;
        std::vector<BigInt> coeffs_;
    };

    auto pow(const IntPoly & p, unsigned e) -> IntPoly;
}
