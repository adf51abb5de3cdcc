#include <ringline/field.hpp>

#include <doctest.h>

using namespace ringline;

namespace
{
    auto all_matrices(std::size_t m, const GaloisField & f) -> std::vector<Matrix>
    {
        std::vector<Matrix> out;
        auto q = f.order();
        auto total = ipow(q, static_cast<unsigned>(m * m));
        for (std::uint64_t code = 0; code < total; ++code) {
            Matrix a{f, m, m};
            auto c = code;
            for (std::size_t i = 0; i < m * m; ++i, c /= q)
                a(i / m, i % m) = static_cast<Element>(c % q);
            out.push_back(a);
        }
        return out;
    }

    /// Determinant by permutation expansion, independent of row reduction.
    auto leibniz_det(const Matrix & a) -> Element
    {
        const auto & f = a.field();
        std::vector<std::size_t> perm(a.rows());
        for (std::size_t i = 0; i < perm.size(); ++i)
            perm[i] = i;
        Element det = 0;
        do {
            std::size_t inversions = 0;
            for (std::size_t i = 0; i < perm.size(); ++i)
                for (std::size_t j = i + 1; j < perm.size(); ++j)
                    inversions += perm[i] > perm[j] ? 1 : 0;
            Element term = 1;
            for (std::size_t i = 0; i < perm.size(); ++i)
                term = f.mul(term, a(i, perm[i]));
            det = inversions % 2 ? f.sub(det, term) : f.add(det, term);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return det;
    }
}

TEST_CASE("field axioms hold exhaustively")
{
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
        CAPTURE(q);
        auto f = GaloisField::of_order(q);
        for (Element a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0)
                CHECK(f.mul(a, f.inv(a)) == 1);
            for (Element b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (Element c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("defining polynomials are the lexicographically smallest irreducibles")
{
    CHECK(GaloisField::of_order(4).modulus() == std::vector<Element>{1, 1, 1});
    CHECK(GaloisField::of_order(9).modulus() == std::vector<Element>{1, 0, 1});
    CHECK(GaloisField::of_order(8).modulus() == std::vector<Element>{1, 1, 0, 1});
}

TEST_CASE("GF(4) multiplicative group is cyclic of order 3")
{
    auto f = GaloisField::of_order(4);
    for (Element a = 1; a < 4; ++a)
        CHECK(f.pow(a, 3) == 1);
    CHECK(f.pow(2, 1) != 1);
    CHECK(f.mul(2, 2) != 1);
}

TEST_CASE("invalid fields and inverses are rejected")
{
    CHECK_THROWS_AS(GaloisField::of_order(6), InvalidInput);
    CHECK_THROWS_AS(GaloisField::of_order(1), InvalidInput);
    CHECK_THROWS_AS(GaloisField::build(4, 1), InvalidInput);
    CHECK_THROWS_AS(GaloisField::of_order(3).inv(0), InvalidInput);
    CHECK_THROWS_AS(GaloisField::of_order(2048), InvalidInput);
}

TEST_CASE("digit strings round trip")
{
    auto f = GaloisField::of_order(3);
    auto m = Matrix::from_digits(f, 2, 2, "2201");
    CHECK(m(0, 0) == 2);
    CHECK(m(1, 1) == 1);
    CHECK(m.digits() == "2201");
    CHECK_THROWS_AS(Matrix::from_digits(f, 2, 2, "2203"), InvalidInput);
    CHECK_THROWS_AS(Matrix::from_digits(f, 2, 2, "220"), InvalidInput);
}

TEST_CASE("rank, rref and invertibility")
{
    auto f = GaloisField::of_order(2);
    CHECK(rank(Matrix::from_digits(f, 2, 2, "1111")) == 1);
    CHECK(rank(Matrix::identity(f, 3)) == 3);
    CHECK(rank(Matrix{f, 2, 3}) == 0);
    Matrix wide{f, 2, 3};
    CHECK_THROWS_AS(is_invertible(wide), InvalidInput);

    auto f5 = GaloisField::of_order(5);
    for (const auto & m : all_matrices(2, f5)) {
        auto r = rref(m);
        CHECK(rref(r) == r);
        CHECK(rank(r) == rank(m));
        CHECK(is_invertible(m) == (leibniz_det(m) != 0));
    }
}

TEST_CASE("GL enumeration matches brute-force filtering and the order formula")
{
    const std::pair<std::size_t, std::uint64_t> cases[] = {{1, 7}, {2, 2}, {2, 3}, {2, 4}, {3, 2}};
    for (auto [m, q] : cases) {
        CAPTURE(m);
        CAPTURE(q);
        auto f = GaloisField::of_order(q);
        std::vector<Matrix> filtered;
        for (const auto & a : all_matrices(m, f))
            if (leibniz_det(a) != 0)
                filtered.push_back(a);
        auto gl = enumerate_gl(m, f);
        CHECK(gl.size() == filtered.size());
        CHECK(BigInt(gl.size()) == gl_order(m, q));
        CHECK(std::is_sorted(gl.begin(), gl.end()));
    }
    CHECK(gl_order(2, 3) == 48);
    CHECK(gl_order(2, 5) == 480);
    CHECK(gl_order(0, 5) == 1);
}

TEST_CASE("GL enumeration respects the matrix bound")
{
    Limits tight;
    tight.matrix_enumeration_bound = 100;
    CHECK_THROWS_AS(enumerate_gl(2, GaloisField::of_order(5), tight), BudgetExceeded);
}

TEST_CASE("matrix arithmetic")
{
    auto f = GaloisField::of_order(3);
    auto a = Matrix::from_digits(f, 2, 2, "1201");
    auto b = Matrix::from_digits(f, 2, 2, "2110");
    auto id = Matrix::identity(f, 2);
    CHECK(a * id == a);
    CHECK((a + b) - b == a);
    CHECK((a * b).digits() == "1110");
    CHECK(stack(a, b).rows() == 4);
    Matrix big{f, 3, 3};
    CHECK_THROWS_AS(a * big, InvalidInput);
}

TEST_CASE("irreducible polynomials")
{
    auto f3 = GaloisField::of_order(3);
    CHECK(is_irreducible(FieldPoly{{1, 0, 1}}, f3));
    CHECK_FALSE(is_irreducible(FieldPoly{{2, 0, 1}}, f3));
    // Monic irreducible quadratics over GF(q): (q^2 - q) / 2.
    CHECK(monic_irreducibles(2, f3).size() == 3);
    CHECK(monic_irreducibles(2, GaloisField::of_order(5)).size() == 10);
    CHECK(monic_irreducibles(3, GaloisField::of_order(2)).size() == 2);
    CHECK(find_irreducible(2, GaloisField::of_order(2)) == FieldPoly{{1, 1, 1}});
}

TEST_CASE("companion matrices")
{
    auto f2 = GaloisField::of_order(2);
    CHECK(companion_matrix(FieldPoly{{1, 1, 1}}, f2).digits() == "0111");
    auto f3 = GaloisField::of_order(3);
    auto c = companion_matrix(FieldPoly{{1, 0, 1}}, f3);
    CHECK(c.digits() == "0120");
    CHECK(characteristic_polynomial(c) == FieldPoly{{1, 0, 1}});
    FieldPoly not_monic{{1, 0, 2}};
    CHECK_THROWS_AS(companion_matrix(not_monic, f3), InvalidInput);

    // x^2 + 1 is irreducible over GF(3) but its root has order 4, not 8.
    auto p = Matrix::identity(f3, 2);
    for (int i = 0; i < 4; ++i)
        p = p * c;
    CHECK(p == Matrix::identity(f3, 2));
}
