#include <ringline/int_poly.hpp>

#include <algorithm>

namespace ringline
{
    IntPoly::IntPoly(std::initializer_list<BigInt> ascending) : coeffs_(ascending) { normalise(); }

    IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { normalise(); }

    auto IntPoly::constant(BigInt c) -> IntPoly { return IntPoly{std::vector<BigInt>{std::move(c)}}; }

    auto IntPoly::monomial(std::size_t degree, BigInt coefficient) -> IntPoly
    {
        std::vector<BigInt> c(degree + 1, 0);
        c[degree] = std::move(coefficient);
        return IntPoly{std::move(c)};
    }

    auto IntPoly::normalise() -> void
    {
        while (! coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    auto IntPoly::coefficient(std::size_t d) const -> BigInt { return d < coeffs_.size() ? coeffs_[d] : BigInt(0); }

    auto IntPoly::evaluate(const BigInt & q) const -> BigInt
    {
        BigInt acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * q + *it;
        return acc;
    }

    auto IntPoly::operator+=(const IntPoly & o) -> IntPoly &
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), 0);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        normalise();
        return *this;
    }

    auto IntPoly::operator-=(const IntPoly & o) -> IntPoly &
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), 0);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        normalise();
        return *this;
    }

    auto IntPoly::operator*=(const IntPoly & o) -> IntPoly &
    {
        if (is_zero() || o.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        std::vector<BigInt> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0)
                for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                    r[i + j] += coeffs_[i] * o.coeffs_[j];
        coeffs_ = std::move(r);
        normalise();
        return *this;
    }

    auto IntPoly::to_string() const -> std::string
    {
        if (is_zero())
            return "0";
        std::string out;
        for (auto d = coeffs_.size(); d-- > 0;) {
            const auto & c = coeffs_[d];
            if (c == 0)
                continue;
            BigInt magnitude = c < 0 ? BigInt(-c) : c;
            if (c < 0)
                out += "-";
            else if (! out.empty())
                out += "+";
            if (d == 0 || magnitude != 1)
                out += magnitude.str();
            if (d >= 1)
                out += "q";
            if (d >= 2)
                out += "^" + std::to_string(d);
        }
        return out;
    }

    auto IntPoly::to_json() const -> nlohmann::json
    {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto & c : coeffs_)
            arr.push_back(c.str());
        return arr;
    }

    auto pow(const IntPoly & p, unsigned e) -> IntPoly
    {
        auto result = IntPoly::constant(1);
        for (unsigned i = 0; i < e; ++i)
            result *= p;
        return result;
    }
}
