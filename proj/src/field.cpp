#include <ringline/field.hpp>

#include <algorithm>

namespace ringline
{
    auto PrimePower::make(std::uint64_t p, unsigned r) -> PrimePower
    {
        if (! is_prime(p))
            throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
        if (r < 1)
            throw InvalidInput("field degree must be at least 1");
        return {p, r, ipow(p, r)};
    }

    auto PrimePower::from_order(std::uint64_t q) -> PrimePower
    {
        auto [p, e] = split_prime_power(q);
        if (p == 0)
            throw InvalidInput(std::to_string(q) + " is not a prime power");
        return {p, e, q};
    }

    namespace
    {
        auto trim(FieldPoly & f) -> void
        {
            while (! f.coeffs.empty() && f.coeffs.back() == 0)
                f.coeffs.pop_back();
        }
    }

    auto GaloisField::build(std::uint64_t p, unsigned r) -> GaloisField
    {
        auto pp = PrimePower::make(p, r);
        if (pp.q > max_field_order)
            throw InvalidInput("field order " + std::to_string(pp.q) + " exceeds bound " + std::to_string(max_field_order));

        auto q = static_cast<std::size_t>(pp.q);
        auto t = std::make_shared<Tables>();
        t->pp = pp;
        t->add.resize(q * q);
        t->mul.resize(q * q);
        t->neg.resize(q);
        t->inv.resize(q);

        if (r == 1) {
            t->modulus = {0, 1};
            for (std::size_t a = 0; a < q; ++a) {
                t->neg[a] = static_cast<Element>((q - a) % q);
                for (std::size_t b = 0; b < q; ++b) {
                    t->add[a * q + b] = static_cast<Element>((a + b) % q);
                    t->mul[a * q + b] = static_cast<Element>((a * b) % q);
                }
            }
        }
        else {
            auto base = build(p, 1);
            t->modulus = find_irreducible(r, base).coeffs;

            auto digits_of = [&](std::size_t x) {
                std::vector<Element> d(r);
                for (unsigned i = 0; i < r; ++i, x /= p)
                    d[i] = static_cast<Element>(x % p);
                return d;
            };
            auto index_of = [&](const std::vector<Element> & d) {
                std::size_t x = 0;
                for (unsigned i = r; i-- > 0;)
                    x = x * p + d[i];
                return static_cast<Element>(x);
            };

            for (std::size_t a = 0; a < q; ++a) {
                auto da = digits_of(a);
                std::vector<Element> dn(r);
                for (unsigned i = 0; i < r; ++i)
                    dn[i] = base.neg(da[i]);
                t->neg[a] = index_of(dn);
                for (std::size_t b = 0; b < q; ++b) {
                    auto db = digits_of(b);
                    std::vector<Element> sum(r);
                    for (unsigned i = 0; i < r; ++i)
                        sum[i] = base.add(da[i], db[i]);
                    t->add[a * q + b] = index_of(sum);

                    FieldPoly prod{std::vector<Element>(2 * r - 1, 0)};
                    for (unsigned i = 0; i < r; ++i)
                        for (unsigned j = 0; j < r; ++j)
                            prod.coeffs[i + j] = base.add(prod.coeffs[i + j], base.mul(da[i], db[j]));
                    auto rem = poly_rem(prod, FieldPoly{t->modulus}, base);
                    rem.coeffs.resize(r, 0);
                    t->mul[a * q + b] = index_of(rem.coeffs);
                }
            }
        }

        for (std::size_t a = 1; a < q; ++a)
            for (std::size_t b = 1; b < q; ++b)
                if (t->mul[a * q + b] == 1) {
                    t->inv[a] = static_cast<Element>(b);
                    break;
                }

        return GaloisField{std::move(t)};
    }

    auto GaloisField::of_order(std::uint64_t q) -> GaloisField
    {
        auto pp = PrimePower::from_order(q);
        return build(pp.p, pp.r);
    }

    auto GaloisField::inv(Element a) const -> Element
    {
        if (a == 0)
            throw InvalidInput("zero has no multiplicative inverse");
        return tables_->inv[a];
    }

    auto GaloisField::pow(Element a, std::uint64_t e) const -> Element
    {
        Element result = 1;
        for (; e > 0; e >>= 1, a = mul(a, a))
            if (e & 1)
                result = mul(result, a);
        return result;
    }

    auto element_digit(Element e) -> char
    {
        if (e < 10)
            return static_cast<char>('0' + e);
        if (e < 36)
            return static_cast<char>('a' + (e - 10));
        throw InvalidInput("element index " + std::to_string(e) + " has no single-digit form");
    }

    auto digit_element(char c) -> Element
    {
        if (c >= '0' && c <= '9')
            return static_cast<Element>(c - '0');
        if (c >= 'a' && c <= 'z')
            return static_cast<Element>(c - 'a' + 10);
        throw InvalidInput(std::string("invalid element digit '") + c + "'");
    }

    Matrix::Matrix(GaloisField field, std::size_t rows, std::size_t cols) :
        field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        entries_(rows * cols, 0)
    {
    }

    auto Matrix::identity(const GaloisField & field, std::size_t n) -> Matrix
    {
        Matrix result(field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            result(i, i) = 1;
        return result;
    }

    auto Matrix::from_digits(const GaloisField & field, std::size_t rows, std::size_t cols, std::string_view digits)
        -> Matrix
    {
        if (digits.size() != rows * cols)
            throw InvalidInput("digit string '" + std::string(digits) + "' does not describe a " + std::to_string(rows)
                + "x" + std::to_string(cols) + " matrix");
        Matrix result(field, rows, cols);
        for (std::size_t i = 0; i < digits.size(); ++i) {
            auto e = digit_element(digits[i]);
            if (e >= field.order())
                throw InvalidInput("entry out of range in '" + std::string(digits) + "'");
            result.entries_[i] = e;
        }
        return result;
    }

    auto Matrix::from_rows(const GaloisField & field, const std::vector<std::vector<Element>> & rows) -> Matrix
    {
        auto cols = rows.empty() ? 0 : rows.front().size();
        Matrix result(field, rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols)
                throw InvalidInput("ragged matrix rows");
            for (std::size_t c = 0; c < cols; ++c) {
                if (rows[r][c] >= field.order())
                    throw InvalidInput("matrix entry out of range for field");
                result(r, c) = rows[r][c];
            }
        }
        return result;
    }

    auto Matrix::digits() const -> std::string
    {
        std::string s;
        s.reserve(entries_.size());
        for (auto e : entries_)
            s.push_back(element_digit(e));
        return s;
    }

    namespace
    {
        auto require_same_shape(const Matrix & a, const Matrix & b) -> void
        {
            if (a.rows() != b.rows() || a.cols() != b.cols() || ! (a.field() == b.field()))
                throw InvalidInput("matrix shapes or fields differ");
        }
    }

    auto operator+(const Matrix & a, const Matrix & b) -> Matrix
    {
        require_same_shape(a, b);
        Matrix result(a.field(), a.rows(), a.cols());
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                result(r, c) = a.field().add(a(r, c), b(r, c));
        return result;
    }

    auto operator-(const Matrix & a, const Matrix & b) -> Matrix
    {
        require_same_shape(a, b);
        Matrix result(a.field(), a.rows(), a.cols());
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                result(r, c) = a.field().sub(a(r, c), b(r, c));
        return result;
    }

    auto operator*(const Matrix & a, const Matrix & b) -> Matrix
    {
        if (a.cols() != b.rows() || ! (a.field() == b.field()))
            throw InvalidInput("matrix product dimension mismatch");
        const auto & f = a.field();
        Matrix result(f, a.rows(), b.cols());
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                auto x = a(r, k);
                if (x == 0)
                    continue;
                for (std::size_t c = 0; c < b.cols(); ++c)
                    result(r, c) = f.add(result(r, c), f.mul(x, b(k, c)));
            }
        return result;
    }

    auto stack(const Matrix & top, const Matrix & bottom) -> Matrix
    {
        if (top.cols() != bottom.cols() || ! (top.field() == bottom.field()))
            throw InvalidInput("cannot stack matrices with different column counts");
        Matrix result(top.field(), top.rows() + bottom.rows(), top.cols());
        for (std::size_t r = 0; r < top.rows(); ++r)
            for (std::size_t c = 0; c < top.cols(); ++c)
                result(r, c) = top(r, c);
        for (std::size_t r = 0; r < bottom.rows(); ++r)
            for (std::size_t c = 0; c < top.cols(); ++c)
                result(top.rows() + r, c) = bottom(r, c);
        return result;
    }

    namespace
    {
        /// In-place reduction to reduced row-echelon form; returns the rank.
        auto reduce(Matrix & m) -> std::size_t
        {
            const auto & f = m.field();
            std::size_t pivot_row = 0;
            for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
                auto found = pivot_row;
                while (found < m.rows() && m(found, c) == 0)
                    ++found;
                if (found == m.rows())
                    continue;
                if (found != pivot_row)
                    for (std::size_t k = 0; k < m.cols(); ++k)
                        std::swap(m(found, k), m(pivot_row, k));

                auto scale = f.inv(m(pivot_row, c));
                for (std::size_t k = 0; k < m.cols(); ++k)
                    m(pivot_row, k) = f.mul(m(pivot_row, k), scale);

                for (std::size_t r = 0; r < m.rows(); ++r) {
                    if (r == pivot_row || m(r, c) == 0)
                        continue;
                    auto factor = m(r, c);
                    for (std::size_t k = 0; k < m.cols(); ++k)
                        m(r, k) = f.sub(m(r, k), f.mul(factor, m(pivot_row, k)));
                }
                ++pivot_row;
            }
            return pivot_row;
        }
    }

    auto rank(const Matrix & m) -> std::size_t
    {
        auto copy = m;
        return reduce(copy);
    }

    auto rref(const Matrix & m) -> Matrix
    {
        auto copy = m;
        reduce(copy);
        return copy;
    }

    auto is_invertible(const Matrix & m) -> bool
    {
        if (m.rows() != m.cols())
            throw InvalidInput("invertibility requires a square matrix");
        return rank(m) == m.rows();
    }

    auto enumerate_gl(std::size_t m, const GaloisField & field, const Limits & limits) -> std::vector<Matrix>
    {
        auto q = field.order();
        auto cells = static_cast<unsigned>(m * m);
        std::uint64_t total = 1;
        for (unsigned i = 0; i < cells; ++i) {
            total *= q;
            if (total > limits.matrix_enumeration_bound)
                throw BudgetExceeded("enumerating GL_" + std::to_string(m) + "(" + std::to_string(q)
                    + ") exceeds the matrix enumeration bound");
        }

        std::vector<Matrix> result;
        Matrix current(field, m, m);
        for (std::uint64_t code = 0; code < total; ++code) {
            auto x = code;
            for (std::size_t i = cells; i-- > 0; x /= q)
                current(i / m, i % m) = static_cast<Element>(x % q);
            if (is_invertible(current))
                result.push_back(current);
        }
        return result;
    }

    auto gl_order(std::size_t m, std::uint64_t q) -> BigInt
    {
        BigInt qm = big_pow(BigInt(q), static_cast<unsigned>(m));
        BigInt result = 1;
        for (std::size_t k = 0; k < m; ++k)
            result *= qm - big_pow(BigInt(q), static_cast<unsigned>(k));
        return result;
    }

    auto poly_rem(const FieldPoly & a, const FieldPoly & b, const GaloisField & field) -> FieldPoly
    {
        auto divisor = b;
        trim(divisor);
        if (divisor.coeffs.empty())
            throw InvalidInput("polynomial division by zero");
        auto rem = a;
        trim(rem);
        auto lead_inv = field.inv(divisor.coeffs.back());
        while (rem.degree() >= divisor.degree()) {
            auto shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
            auto factor = field.mul(rem.coeffs.back(), lead_inv);
            for (std::size_t i = 0; i < divisor.coeffs.size(); ++i)
                rem.coeffs[shift + i] = field.sub(rem.coeffs[shift + i], field.mul(factor, divisor.coeffs[i]));
            trim(rem);
        }
        return rem;
    }

    auto poly_eval(const FieldPoly & f, Element x, const GaloisField & field) -> Element
    {
        Element acc = 0;
        for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
            acc = field.add(field.mul(acc, x), *it);
        return acc;
    }

    namespace
    {
        auto monic_of_degree(std::size_t degree, std::uint64_t code, std::uint64_t q) -> FieldPoly
        {
            FieldPoly f{std::vector<Element>(degree + 1, 0)};
            f.coeffs[degree] = 1;
            for (std::size_t i = 0; i < degree; ++i, code /= q)
                f.coeffs[i] = static_cast<Element>(code % q);
            return f;
        }
    }

    auto is_irreducible(const FieldPoly & f, const GaloisField & field) -> bool
    {
        auto g = f;
        trim(g);
        if (g.degree() < 1)
            return false;
        auto d = static_cast<std::size_t>(g.degree());
        if (d == 1)
            return true;

        for (Element x = 0; x < field.order(); ++x)
            if (poly_eval(g, x, field) == 0)
                return false;

        for (std::size_t k = 2; k <= d / 2; ++k)
            for (const auto & factor : monic_irreducibles(k, field))
                if (poly_rem(g, factor, field).coeffs.empty())
                    return false;
        return true;
    }

    auto monic_irreducibles(std::size_t degree, const GaloisField & field) -> std::vector<FieldPoly>
    {
        if (degree < 1)
            throw InvalidInput("irreducible polynomials need degree at least 1");
        auto total = ipow(field.order(), static_cast<unsigned>(degree));
        std::vector<FieldPoly> result;
        for (std::uint64_t code = 0; code < total; ++code) {
            auto f = monic_of_degree(degree, code, field.order());
            if (is_irreducible(f, field))
                result.push_back(std::move(f));
        }
        return result;
    }

    auto find_irreducible(std::size_t degree, const GaloisField & field) -> FieldPoly
    {
        if (degree < 1)
            throw InvalidInput("irreducible polynomials need degree at least 1");
        auto total = ipow(field.order(), static_cast<unsigned>(degree));
        for (std::uint64_t code = 0; code < total; ++code) {
            auto f = monic_of_degree(degree, code, field.order());
            if (is_irreducible(f, field))
                return f;
        }
        throw InternalCheckFailed("no irreducible polynomial of degree " + std::to_string(degree) + " found");
    }

    auto companion_matrix(const FieldPoly & f, const GaloisField & field) -> Matrix
    {
        if (f.degree() < 1)
            throw InvalidInput("companion matrix needs degree at least 1");
        if (f.coeffs.back() != 1)
            throw InvalidInput("companion matrix needs a monic polynomial");
        auto m = static_cast<std::size_t>(f.degree());
        Matrix result(field, m, m);
        for (std::size_t i = 0; i + 1 < m; ++i)
            result(i, i + 1) = 1;
        for (std::size_t j = 0; j < m; ++j)
            result(m - 1, j) = field.neg(f.coeffs[j]);
        return result;
    }

    namespace
    {
        using PolyEntry = std::vector<Element>;

        auto padd(const PolyEntry & a, const PolyEntry & b, const GaloisField & f) -> PolyEntry
        {
            PolyEntry r(std::max(a.size(), b.size()), 0);
            for (std::size_t i = 0; i < r.size(); ++i)
                r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
            return r;
        }

        auto pmul(const PolyEntry & a, const PolyEntry & b, const GaloisField & f) -> PolyEntry
        {
            if (a.empty() || b.empty())
                return {};
            PolyEntry r(a.size() + b.size() - 1, 0);
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = 0; j < b.size(); ++j)
                    r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
            return r;
        }

        auto pneg(PolyEntry a, const GaloisField & f) -> PolyEntry
        {
            for (auto & x : a)
                x = f.neg(x);
            return a;
        }

        auto laplace(const std::vector<std::vector<PolyEntry>> & m, const GaloisField & f) -> PolyEntry
        {
            auto n = m.size();
            if (n == 0)
                return {1};
            if (n == 1)
                return m[0][0];
            PolyEntry total;
            for (std::size_t c = 0; c < n; ++c) {
                std::vector<std::vector<PolyEntry>> minor;
                for (std::size_t r = 1; r < n; ++r) {
                    std::vector<PolyEntry> row;
                    for (std::size_t k = 0; k < n; ++k)
                        if (k != c)
                            row.push_back(m[r][k]);
                    minor.push_back(std::move(row));
                }
                auto term = pmul(m[0][c], laplace(minor, f), f);
                total = padd(total, c % 2 == 0 ? term : pneg(term, f), f);
            }
            return total;
        }
    }

    auto characteristic_polynomial(const Matrix & m) -> FieldPoly
    {
        if (m.rows() != m.cols())
            throw InvalidInput("characteristic polynomial requires a square matrix");
        if (m.rows() > 8)
            throw InvalidInput("characteristic polynomial supports at most 8x8 matrices");
        const auto & f = m.field();
        auto n = m.rows();
        std::vector<std::vector<PolyEntry>> xm(n, std::vector<PolyEntry>(n));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                xm[r][c] = r == c ? PolyEntry{f.neg(m(r, c)), 1} : PolyEntry{f.neg(m(r, c))};
        FieldPoly result{laplace(xm, f)};
        trim(result);
        return result;
    }
}
