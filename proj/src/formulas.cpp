#include <ringline/formulas.hpp>

#include <algorithm>

namespace ringline
{
    namespace
    {
        struct FieldFactor
        {
            std::size_t m;
            std::uint64_t q;
        };

        /// Non-trivial summands as (m_i, q_i) plus the total radical order.
        struct Reduced
        {
            std::vector<FieldFactor> factors;
            BigInt radical = 1;
        };

        auto reduce(const RingSpec & spec) -> Reduced
        {
            spec.validate();
            Reduced r;
            r.radical = spec.radical_multiplier;
            for (const auto & s : spec.summands) {
                if (auto l = std::get_if<LocalSummand>(&s)) {
                    r.factors.push_back({1, l->residue_order()});
                    r.radical *= l->radical_order;
                }
                else {
                    const auto & mr = std::get<MatrixSummand>(s);
                    if (mr.m > 0)
                        r.factors.push_back({mr.m, mr.q});
                }
            }
            return r;
        }

        auto reduce_commutative(const RingSpec & spec) -> Reduced
        {
            if (! spec.is_commutative())
                throw InvalidInput("formula requires a commutative ring spec");
            return reduce(spec);
        }

        auto one_minus_q_power(std::size_t d) -> IntPoly { return IntPoly::constant(1) - q_power(d); }

        auto triangular(std::size_t i) -> std::size_t { return i == 0 ? 0 : i * (i - 1) / 2; }

        /// (-1)^m q^(m(m-1)/2)
        auto sign_and_shift(std::size_t m) -> IntPoly { return IntPoly::monomial(triangular(m), m % 2 == 0 ? 1 : -1); }
    }

    auto q_power(std::size_t d) -> IntPoly { return IntPoly::monomial(d); }

    auto qbinom(std::size_t n, std::size_t k) -> IntPoly
    {
        if (k > n)
            throw InvalidInput("q-binomial needs 0 <= k <= n");
        // row[j] = [i, j]_q, filled row by row: [i, j] = [i-1, j-1] + q^j [i-1, j]
        std::vector<IntPoly> row(n + 1);
        row[0] = IntPoly::constant(1);
        for (std::size_t i = 1; i <= n; ++i)
            for (auto j = std::min(i, k); j >= 1; --j)
                row[j] = row[j - 1] + q_power(j) * row[j];
        return row[k];
    }

    auto comm_clique_count(const RingSpec & spec, std::size_t k) -> BigInt
    {
        // Ordered k-cliques multiply over tensor factors; divide the product by k! once.
        auto r = reduce_commutative(spec);
        auto total = big_pow(r.radical, static_cast<unsigned>(k));
        if (r.factors.empty())
            return total;
        BigInt k_factorial = 1;
        for (std::size_t i = 2; i <= k; ++i)
            k_factorial *= i;
        for (const auto & f : r.factors)
            total *= k_factorial * binomial(static_cast<std::int64_t>(f.q + 1), static_cast<std::int64_t>(k));
        return total / k_factorial;
    }

    auto comm_clique_count_printed(const RingSpec & spec, std::size_t k) -> BigInt
    {
        auto r = reduce_commutative(spec);
        auto total = big_pow(r.radical, static_cast<unsigned>(k));
        for (const auto & f : r.factors)
            total *= binomial(static_cast<std::int64_t>(f.q + 1), static_cast<std::int64_t>(k));
        return total;
    }

    auto comm_extension_count(const RingSpec & spec, std::size_t k) -> BigInt
    {
        auto r = reduce_commutative(spec);
        BigInt total = r.radical;
        for (const auto & f : r.factors) {
            if (k > f.q + 1)
                return 0;
            total *= BigInt(f.q + 1) - k;
        }
        return total;
    }

    auto comm_max_clique(const RingSpec & spec) -> std::optional<BigInt>
    {
        reduce_commutative(spec);
        return general_max_clique(spec);
    }

    auto general_max_clique(const RingSpec & spec) -> std::optional<BigInt>
    {
        auto r = reduce(spec);
        std::optional<BigInt> best;
        for (const auto & f : r.factors) {
            auto order = big_pow(BigInt(f.q), static_cast<unsigned>(f.m)) + 1;
            if (! best || order < *best)
                best = order;
        }
        return best;
    }

    auto cap_n_N_comm(const RingSpec & spec, std::size_t n) -> CapValue
    {
        auto r = reduce_commutative(spec);
        BigInt sum = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            BigInt term = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
            for (const auto & f : r.factors)
                term *= BigInt(f.q + 1) - k;
            sum += k % 2 == 0 ? term : BigInt(-term);
        }
        auto max = general_max_clique(spec);
        return {r.radical * sum, ! max || *max >= n};
    }

    auto matrix_point_count(std::size_t m) -> IntPoly { return qbinom(2 * m, m); }

    auto matrix_degree(std::size_t m) -> IntPoly { return q_power(m * m); }

    auto matrix_codegree(std::size_t m) -> IntPoly
    {
        auto result = IntPoly::constant(1);
        for (std::size_t k = 0; k < m; ++k)
            result *= q_power(m) - q_power(k);
        return result;
    }

    auto cap1N_matrix(std::size_t m) -> IntPoly { return matrix_point_count(m) - matrix_degree(m); }

    auto cap2N_matrix(std::size_t m) -> IntPoly
    {
        return matrix_point_count(m) - IntPoly::constant(2) * matrix_degree(m) + matrix_codegree(m);
    }

    auto cap3N_matrix(std::size_t m) -> IntPoly
    {
        IntPoly result;
        for (std::size_t i = 0; i <= 3; ++i) {
            auto term = binomial(3, static_cast<std::int64_t>(i)) * c_extension_poly(m, i);
            result = i % 2 == 0 ? result + term : result - term;
        }
        return result;
    }

    namespace
    {
        struct ProductTerms
        {
            BigInt points = 1, degree = 1, codegree = 1, radical = 1;
        };

        auto product_terms(const RingSpec & spec) -> ProductTerms
        {
            auto r = reduce(spec);
            ProductTerms t;
            t.radical = r.radical;
            for (const auto & f : r.factors) {
                BigInt q = f.q;
                t.points *= matrix_point_count(f.m).evaluate(q);
                t.degree *= matrix_degree(f.m).evaluate(q);
                t.codegree *= matrix_codegree(f.m).evaluate(q);
            }
            return t;
        }
    }

    auto cap1N_product(const RingSpec & spec) -> BigInt
    {
        auto t = product_terms(spec);
        return radical_scale(t.points - t.degree, t.radical);
    }

    auto cap2N_product(const RingSpec & spec) -> BigInt
    {
        auto t = product_terms(spec);
        return radical_scale(t.points - 2 * t.degree + t.codegree, t.radical);
    }

    auto incexc_Wprime(std::size_t m, std::size_t k, std::span<const BigInt> weights, const BigInt & q) -> BigInt
    {
        if (k > m)
            throw InvalidInput("inclusion-exclusion needs k <= m");
        if (weights.size() < m + 1)
            throw InvalidInput("capture weights must cover every dimension 0.." + std::to_string(m));
        BigInt total = 0;
        for (std::size_t i = 0; i + k <= m; ++i) {
            auto term = qbinom(m - k, i).evaluate(q) * big_pow(q, static_cast<unsigned>(triangular(i)))
                * weights[k + i];
            total += i % 2 == 0 ? term : BigInt(-term);
        }
        return total;
    }

    auto zero_capture_weights(std::size_t m, const BigInt & q) -> std::vector<BigInt>
    {
        std::vector<BigInt> w;
        for (std::size_t j = 0; j <= m; ++j)
            w.push_back(big_pow(q, static_cast<unsigned>(m * (m - j))));
        return w;
    }

    auto identity_capture_weights(std::size_t m, const BigInt & q) -> std::vector<BigInt>
    {
        std::vector<BigInt> w;
        for (std::size_t j = 0; j <= m; ++j) {
            BigInt gl = 1;
            auto qd = big_pow(q, static_cast<unsigned>(m - j));
            for (std::size_t i = 0; i < m - j; ++i)
                gl *= qd - big_pow(q, static_cast<unsigned>(i));
            w.push_back(big_pow(q, static_cast<unsigned>(j * (m - j))) * gl);
        }
        return w;
    }

    auto four_clique_sum_form(std::size_t m) -> IntPoly
    {
        IntPoly sum;
        for (std::size_t i = 0; i <= m; ++i) {
            auto term = IntPoly::constant(1);
            for (std::size_t j = 0; j + i < m; ++j)
                term *= one_minus_q_power(m - j);
            sum += term;
        }
        return sign_and_shift(m) * sum;
    }

    auto four_clique_nested_form(std::size_t m) -> IntPoly
    {
        auto acc = IntPoly::constant(1);
        for (std::size_t d = 1; d <= m; ++d)
            acc = one_minus_q_power(d) * acc + IntPoly::constant(1);
        return sign_and_shift(m) * acc;
    }

    auto distinct_parity_poly(std::size_t m, std::size_t k) -> IntPoly
    {
        auto result = sign_and_shift(m);
        for (std::size_t j = 0; j + k < m; ++j)
            result *= one_minus_q_power(m - j);
        return result;
    }

    auto c_extension_poly(std::size_t m, std::size_t k) -> IntPoly
    {
        switch (k) {
        case 0:
            return matrix_point_count(m);
        case 1:
            return matrix_degree(m);
        case 2:
            return matrix_codegree(m);
        case 3: {
            auto sum = four_clique_sum_form(m);
            if (sum != four_clique_nested_form(m))
                throw InternalCheckFailed("4-clique extension forms disagree at m=" + std::to_string(m));
            return sum;
        }
        default:
            throw InvalidInput("no closed-form extension count for k > 3; use an extension profile");
        }
    }

    auto cap_k_N_from_extensions(std::span<const BigInt> values, std::size_t k) -> BigInt
    {
        if (values.size() < k + 1)
            throw InvalidInput("extension values must cover 0.." + std::to_string(k));
        BigInt total = 0;
        for (std::size_t i = 0; i <= k; ++i) {
            auto term = binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(i)) * values[i];
            total += i % 2 == 0 ? term : BigInt(-term);
        }
        return total;
    }

    auto radical_scale(const BigInt & value, const BigInt & radical_order) -> BigInt
    {
        if (radical_order < 1)
            throw InvalidInput("radical order must be at least 1");
        return value * radical_order;
    }
}
