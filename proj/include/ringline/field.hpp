#pragma once

#include <ringline/common.hpp>

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ringline
{
    /// Index of an element of GF(q). 0 and 1 are the additive and multiplicative
    /// identities; in general the index is the base-p digit vector of the element
    /// in the polynomial basis of the field's defining modulus.
    using Element = std::uint32_t;

    inline constexpr std::uint64_t max_field_order = 1024;

    struct PrimePower
    {
        std::uint64_t p = 0;
        unsigned r = 0;
        std::uint64_t q = 0;

        static auto make(std::uint64_t p, unsigned r) -> PrimePower;
        /// Fails unless q is a prime power.
        static auto from_order(std::uint64_t q) -> PrimePower;

        auto operator==(const PrimePower &) const -> bool = default;
    };

    /// Table-driven GF(p^r). Immutable; copies share the same tables.
    class GaloisField
    {
    public:
        /// Defined by the lexicographically smallest monic irreducible of degree r over GF(p).
        static auto build(std::uint64_t p, unsigned r) -> GaloisField;
        static auto of_order(std::uint64_t q) -> GaloisField;

        auto order() const -> std::uint64_t { return tables_->pp.q; }
        auto characteristic() const -> std::uint64_t { return tables_->pp.p; }
        auto prime_power() const -> const PrimePower & { return tables_->pp; }
        /// Coefficients over GF(p), ascending, monic, of the defining polynomial.
        auto modulus() const -> const std::vector<Element> & { return tables_->modulus; }

        auto add(Element a, Element b) const -> Element { return tables_->add[a * size() + b]; }
        auto mul(Element a, Element b) const -> Element { return tables_->mul[a * size() + b]; }
        auto neg(Element a) const -> Element { return tables_->neg[a]; }
        auto sub(Element a, Element b) const -> Element { return add(a, neg(b)); }
        /// Throws InvalidInput on zero.
        auto inv(Element a) const -> Element;
        auto pow(Element a, std::uint64_t e) const -> Element;

        auto operator==(const GaloisField & other) const -> bool { return order() == other.order(); }

    private:
        struct Tables
        {
            PrimePower pp;
            std::vector<Element> modulus;
            std::vector<Element> add, mul, neg, inv;
        };

        explicit GaloisField(std::shared_ptr<const Tables> t) : tables_(std::move(t)) {}
        auto size() const -> std::size_t { return static_cast<std::size_t>(tables_->pp.q); }

        std::shared_ptr<const Tables> tables_;
    };

    /// Single character for an element: 0-9 then a-z. Requires q <= 36.
    auto element_digit(Element e) -> char;
    auto digit_element(char c) -> Element;

    /// Dense row-major matrix over a GaloisField.
    class Matrix
    {
    public:
        Matrix(GaloisField field, std::size_t rows, std::size_t cols);

        static auto identity(const GaloisField & field, std::size_t n) -> Matrix;
        /// Row-major digit string, e.g. "2201" for [[2,2],[0,1]] over GF(3).
        static auto from_digits(const GaloisField & field, std::size_t rows, std::size_t cols, std::string_view digits)
            -> Matrix;
        static auto from_rows(const GaloisField & field, const std::vector<std::vector<Element>> & rows) -> Matrix;

        auto rows() const -> std::size_t { return rows_; }
        auto cols() const -> std::size_t { return cols_; }
        auto field() const -> const GaloisField & { return field_; }

        auto operator()(std::size_t r, std::size_t c) const -> Element { return entries_[r * cols_ + c]; }
        auto operator()(std::size_t r, std::size_t c) -> Element & { return entries_[r * cols_ + c]; }
        auto entries() const -> std::span<const Element> { return entries_; }

        auto digits() const -> std::string;

        auto operator==(const Matrix & other) const -> bool
        {
            return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
        }
        auto operator<=>(const Matrix & other) const -> std::strong_ordering
        {
            if (auto c = rows_ <=> other.rows_; c != 0)
                return c;
            if (auto c = cols_ <=> other.cols_; c != 0)
                return c;
            return entries_ <=> other.entries_;
        }

    private:
        GaloisField field_;
        std::size_t rows_, cols_;
        std::vector<Element> entries_;
    };

    auto operator+(const Matrix & a, const Matrix & b) -> Matrix;
    auto operator-(const Matrix & a, const Matrix & b) -> Matrix;
    auto operator*(const Matrix & a, const Matrix & b) -> Matrix;

    /// Stacks a on top of b; both must have the same column count.
    auto stack(const Matrix & top, const Matrix & bottom) -> Matrix;

    auto rank(const Matrix & m) -> std::size_t;
    auto rref(const Matrix & m) -> Matrix;
    auto is_invertible(const Matrix & m) -> bool;

    /// All invertible m x m matrices in lexicographic order of their entry vectors.
    auto enumerate_gl(std::size_t m, const GaloisField & field, const Limits & limits = {}) -> std::vector<Matrix>;
    auto gl_order(std::size_t m, std::uint64_t q) -> BigInt;

    /// Polynomial over GF(q), ascending coefficients. A monic polynomial of degree d has d+1 entries.
    struct FieldPoly
    {
        std::vector<Element> coeffs;

        auto degree() const -> std::ptrdiff_t { return static_cast<std::ptrdiff_t>(coeffs.size()) - 1; }
        auto operator==(const FieldPoly &) const -> bool = default;
    };

    auto poly_rem(const FieldPoly & a, const FieldPoly & b, const GaloisField & field) -> FieldPoly;
    auto poly_eval(const FieldPoly & f, Element x, const GaloisField & field) -> Element;
    auto is_irreducible(const FieldPoly & f, const GaloisField & field) -> bool;

    /// Monic irreducible polynomials of the given degree, in ascending lexicographic order
    /// of the coefficient vector (highest non-leading coefficient most significant).
    auto monic_irreducibles(std::size_t degree, const GaloisField & field) -> std::vector<FieldPoly>;
    auto find_irreducible(std::size_t degree, const GaloisField & field) -> FieldPoly;

    /// m x m companion matrix: ones on the superdiagonal, last row -c_0 .. -c_{m-1}.
    auto companion_matrix(const FieldPoly & f, const GaloisField & field) -> Matrix;
    /// det(xI - M) by expansion over GF(q); used to self-check companion matrices.
    auto characteristic_polynomial(const Matrix & m) -> FieldPoly;
}
