#include <ringline/ring_graphs.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace ringline
{
    namespace
    {
        template <typename... Ts>
        struct Overloaded : Ts...
        {
            using Ts::operator()...;
        };
        template <typename... Ts>
        Overloaded(Ts...) -> Overloaded<Ts...>;

        auto check_vertex_bound(const BigInt & n, const Limits & limits, const std::string & what) -> void
        {
            if (n > limits.vertex_bound)
                throw BudgetExceeded(what + " has " + n.str() + " vertices, above the bound of "
                    + std::to_string(limits.vertex_bound));
        }

        auto hstack(const Matrix & left, const Matrix & right) -> Matrix
        {
            if (left.rows() != right.rows() || ! (left.field() == right.field()))
                throw InvalidInput("cannot place matrices side by side");
            Matrix result(left.field(), left.rows(), left.cols() + right.cols());
            for (std::size_t r = 0; r < left.rows(); ++r) {
                for (std::size_t c = 0; c < left.cols(); ++c)
                    result(r, c) = left(r, c);
                for (std::size_t c = 0; c < right.cols(); ++c)
                    result(r, left.cols() + c) = right(r, c);
            }
            return result;
        }

        auto modinv(std::int64_t a, std::int64_t m) -> std::int64_t
        {
            std::int64_t g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
            while (a1 != 0) {
                auto t = g / a1;
                std::tie(g, a1) = std::make_tuple(a1, g - t * a1);
                std::tie(x, x1) = std::make_tuple(x1, x - t * x1);
            }
            if (g != 1)
                throw InvalidInput("value is not a unit");
            return ((x % m) + m) % m;
        }

        using ZnPoint = std::pair<std::uint64_t, std::uint64_t>;

        /// Unimodular pairs over Z/n modulo unit scaling, canonical (least) representatives, sorted.
        auto zn_points(std::uint64_t n) -> std::vector<ZnPoint>
        {
            std::vector<std::uint64_t> units;
            for (std::uint64_t u = 1; u < n; ++u)
                if (std::gcd(u, n) == 1)
                    units.push_back(u);
            std::set<ZnPoint> points;
            for (std::uint64_t a = 0; a < n; ++a)
                for (std::uint64_t b = 0; b < n; ++b) {
                    if (std::gcd(std::gcd(a, b), n) != 1)
                        continue;
                    ZnPoint best{a, b};
                    for (auto u : units)
                        best = std::min(best, ZnPoint{u * a % n, u * b % n});
                    points.insert(best);
                }
            return {points.begin(), points.end()};
        }

        auto zn_point_count(std::uint64_t n) -> BigInt
        {
            BigInt count = 1;
            for (auto p = std::uint64_t{2}; n > 1; ++p) {
                if (n % p != 0)
                    continue;
                count *= p + 1;
                n /= p;
                while (n % p == 0) {
                    count *= p;
                    n /= p;
                }
            }
            return count;
        }
    }

    auto validate_local(std::uint64_t ring_order, std::uint64_t radical_order) -> void
    {
        auto fail = [&](const std::string & why) {
            throw InvalidInput("local ring with |R|=" + std::to_string(ring_order) + ", |J|="
                + std::to_string(radical_order) + " is not realisable: " + why);
        };
        auto [p, a] = split_prime_power(ring_order);
        if (p == 0)
            fail("|R| is not a prime power");
        if (radical_order == 0 || ring_order % radical_order != 0)
            fail("|J| does not divide |R|");
        unsigned b = 0;
        if (radical_order > 1) {
            auto [pj, bj] = split_prime_power(radical_order);
            if (pj != p)
                fail("|J| is not a power of the same prime");
            b = bj;
        }
        if (b >= a)
            fail("|J| must be smaller than |R|");
        auto r = a - b;
        if (a % r != 0)
            fail("|R| = p^(n r) and |J| = p^((n-1) r) has no solution");
    }

    auto RingSpec::validate() const -> std::vector<std::string>
    {
        if (radical_multiplier < 1)
            throw InvalidInput("radical multiplier must be at least 1");
        std::vector<std::string> warnings;
        bool local_radical = false;
        for (const auto & s : summands)
            std::visit(Overloaded{[&](const LocalSummand & l) {
                                      validate_local(l.ring_order, l.radical_order);
                                      local_radical = local_radical || l.radical_order > 1;
                                  },
                           [&](const MatrixSummand & m) {
                               PrimePower::from_order(m.q);
                           }},
                s);
        if (local_radical && radical_multiplier > 1)
            warnings.emplace_back("radical given both inside local summands and as a global multiplier");
        return warnings;
    }

    auto RingSpec::is_commutative() const -> bool
    {
        return std::all_of(summands.begin(), summands.end(), [](const Summand & s) {
            auto m = std::get_if<MatrixSummand>(&s);
            return m == nullptr || m->m <= 1;
        });
    }

    auto RingSpec::from_json(const nlohmann::json & j) -> RingSpec
    {
        RingSpec spec;
        try {
            for (const auto & s : j.at("summands")) {
                if (s.contains("local")) {
                    const auto & l = s.at("local");
                    spec.summands.emplace_back(LocalSummand{l.at("R").get<std::uint64_t>(), l.at("J").get<std::uint64_t>()});
                }
                else if (s.contains("matrix")) {
                    const auto & m = s.at("matrix");
                    spec.summands.emplace_back(MatrixSummand{m.at("m").get<std::size_t>(), m.at("q").get<std::uint64_t>()});
                }
                else
                    throw InvalidInput("summand must be \"local\" or \"matrix\"");
            }
            if (j.contains("radical"))
                spec.radical_multiplier = j.at("radical").get<std::uint64_t>();
        }
        catch (const nlohmann::json::exception & e) {
            throw InvalidInput(std::string("malformed ring spec: ") + e.what());
        }
        spec.validate();
        return spec;
    }

    auto RingSpec::to_json() const -> nlohmann::json
    {
        nlohmann::json list = nlohmann::json::array();
        for (const auto & s : summands)
            std::visit(Overloaded{[&](const LocalSummand & l) {
                                      list.push_back({{"local", {{"R", l.ring_order}, {"J", l.radical_order}}}});
                                  },
                           [&](const MatrixSummand & m) {
                               list.push_back({{"matrix", {{"m", m.m}, {"q", m.q}}}});
                           }},
                s);
        return {{"summands", list}, {"radical", radical_multiplier}};
    }

    auto zn_local_decomposition(std::uint64_t n) -> RingSpec
    {
        if (n < 2)
            throw InvalidInput("Z/n needs n >= 2");
        RingSpec spec;
        for (std::uint64_t p = 2; n > 1; ++p) {
            if (n % p != 0)
                continue;
            std::uint64_t f = 1;
            while (n % p == 0) {
                n /= p;
                f *= p;
            }
            spec.summands.emplace_back(LocalSummand{f, f / p});
        }
        return spec;
    }

    auto point_of_pair(const Matrix & left, const Matrix & right) -> SubspacePoint
    {
        auto m = hstack(left, right);
        if (rank(m) != m.rows())
            throw InvalidInput("pair is not admissible: rows are linearly dependent");
        return {rref(m)};
    }

    auto points_distant(const SubspacePoint & a, const SubspacePoint & b) -> bool
    {
        return rank(stack(a.basis, b.basis)) == a.basis.cols();
    }

    auto count_subspaces(std::size_t n, std::size_t k, std::uint64_t q) -> BigInt
    {
        if (k > n)
            return 0;
        BigInt total = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != k)
                continue;
            std::size_t free = 0, row = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (mask >> c & 1) {
                    free += (n - 1 - c) - (k - 1 - row);
                    ++row;
                }
            total += big_pow(BigInt(q), static_cast<unsigned>(free));
        }
        return total;
    }

    auto enumerate_subspaces(std::size_t n, std::size_t k, const GaloisField & field, const Limits & limits)
        -> std::vector<SubspacePoint>
    {
        check_vertex_bound(count_subspaces(n, k, field.order()), limits, "subspace enumeration");
        auto q = field.order();
        std::vector<SubspacePoint> result;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != k)
                continue;
            std::vector<std::size_t> pivots;
            for (std::size_t c = 0; c < n; ++c)
                if (mask >> c & 1)
                    pivots.push_back(c);
            std::vector<std::pair<std::size_t, std::size_t>> free_cells;
            for (std::size_t r = 0; r < k; ++r)
                for (auto c = pivots[r] + 1; c < n; ++c)
                    if (! (mask >> c & 1))
                        free_cells.emplace_back(r, c);

            auto combos = ipow(q, static_cast<unsigned>(free_cells.size()));
            Matrix basis(field, k, n);
            for (std::size_t r = 0; r < k; ++r)
                basis(r, pivots[r]) = 1;
            for (std::uint64_t code = 0; code < combos; ++code) {
                auto x = code;
                for (auto [r, c] : free_cells) {
                    basis(r, c) = static_cast<Element>(x % q);
                    x /= q;
                }
                result.push_back({basis});
            }
        }
        std::sort(result.begin(), result.end(),
            [](const SubspacePoint & a, const SubspacePoint & b) { return a.basis < b.basis; });
        return result;
    }

    auto local_graph(std::uint64_t ring_order, std::uint64_t radical_order, const Limits & limits) -> Graph
    {
        validate_local(ring_order, radical_order);
        auto parts = ring_order / radical_order + 1;
        check_vertex_bound(BigInt(parts) * radical_order, limits, "local ring graph");
        auto base = complete_graph(parts);
        std::vector<std::string> labels;
        for (std::uint64_t i = 0; i < parts; ++i)
            labels.push_back(std::to_string(i));
        base.set_labels(std::move(labels));
        return blowup(base, radical_order, limits);
    }

    auto matrix_ring_graph(std::size_t m, std::uint64_t q, const Limits & limits) -> Graph
    {
        if (m == 0)
            return Graph::loop_graph();
        auto field = GaloisField::of_order(q);
        if (q > 36)
            throw InvalidInput("subspace labels need q <= 36");
        auto points = enumerate_subspaces(2 * m, m, field, limits);

        Graph g(points.size());
        for (Vertex u = 0; u < points.size(); ++u)
            for (auto v = u + 1; v < points.size(); ++v)
                if (points_distant(points[u], points[v]))
                    g.add_edge(u, v);

        std::vector<std::string> labels;
        for (const auto & p : points)
            labels.push_back(p.label());
        g.set_labels(std::move(labels));
        return g;
    }

    auto spec_graph(const RingSpec & spec, const Limits & limits) -> Graph
    {
        spec.validate();
        BigInt total = spec.radical_multiplier;
        for (const auto & s : spec.summands)
            std::visit(Overloaded{[&](const LocalSummand & l) { total *= (l.residue_order() + 1) * l.radical_order; },
                           [&](const MatrixSummand & mr) {
                               if (mr.m > 0)
                                   total *= count_subspaces(2 * mr.m, mr.m, mr.q);
                           }},
                s);
        check_vertex_bound(total, limits, "ring spec graph");

        auto g = Graph::loop_graph();
        for (const auto & s : spec.summands) {
            auto factor = std::visit(Overloaded{[&](const LocalSummand & l) {
                                                    return local_graph(l.ring_order, l.radical_order, limits);
                                                },
                                         [&](const MatrixSummand & mr) { return matrix_ring_graph(mr.m, mr.q, limits); }},
                s);
            g = tensor_product(g, factor, limits);
        }
        return blowup(g, spec.radical_multiplier, limits);
    }

    auto zn_projective_line(std::uint64_t n, const Limits & limits) -> Graph
    {
        if (n < 2)
            throw InvalidInput("Z/n needs n >= 2");
        check_vertex_bound(zn_point_count(n), limits, "P(Z/" + std::to_string(n) + ")");
        auto points = zn_points(n);
        Graph g(points.size());
        for (Vertex u = 0; u < points.size(); ++u)
            for (auto v = u + 1; v < points.size(); ++v) {
                auto [a, b] = points[u];
                auto [c, d] = points[v];
                auto det = (a * d % n + n - b * c % n) % n;
                if (std::gcd(det, n) == 1)
                    g.add_edge(u, v);
            }
        std::vector<std::string> labels;
        for (auto [a, b] : points)
            labels.push_back(std::to_string(a) + ":" + std::to_string(b));
        g.set_labels(std::move(labels));
        return g;
    }

    auto zn_crt_map(std::uint64_t n, std::span<const std::uint64_t> factors) -> VertexMap
    {
        std::uint64_t product = 1;
        std::vector<std::uint64_t> primes;
        for (auto f : factors) {
            auto [p, e] = split_prime_power(f);
            if (p == 0)
                throw InvalidInput(std::to_string(f) + " is not a prime power");
            primes.push_back(p);
            product *= f;
        }
        for (std::size_t i = 0; i < factors.size(); ++i)
            for (auto j = i + 1; j < factors.size(); ++j)
                if (std::gcd(factors[i], factors[j]) != 1)
                    throw InvalidInput("CRT factors are not coprime");
        if (product != n)
            throw InvalidInput("CRT factors do not multiply to n");

        VertexMap map;
        for (auto [a, b] : zn_points(n)) {
            std::uint64_t index = 0;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                auto f = factors[i], p = primes[i], j = f / p;
                auto ai = a % f, bi = b % f;
                std::uint64_t part, copy;
                if (std::gcd(bi, f) == 1) {
                    // R(a, b) = R(a b^-1, 1)
                    auto r = ai * static_cast<std::uint64_t>(modinv(static_cast<std::int64_t>(bi), static_cast<std::int64_t>(f))) % f;
                    part = r % p;
                    copy = r / p;
                }
                else {
                    // b in J, so a is a unit and R(a, b) = R(1, b a^-1)
                    auto s = bi * static_cast<std::uint64_t>(modinv(static_cast<std::int64_t>(ai), static_cast<std::int64_t>(f))) % f;
                    part = p;
                    copy = s / p;
                }
                index = index * ((p + 1) * j) + part * j + copy;
            }
            map.push_back(index);
        }
        return map;
    }

    auto unit_difference_graph(std::size_t m, std::uint64_t q, const Limits & limits) -> Graph
    {
        auto field = GaloisField::of_order(q);
        check_vertex_bound(gl_order(m, q), limits, "unit-difference graph");
        auto units = enumerate_gl(m, field, limits);
        Graph g(units.size());
        for (Vertex u = 0; u < units.size(); ++u)
            for (auto v = u + 1; v < units.size(); ++v)
                if (is_invertible(units[u] - units[v]))
                    g.add_edge(u, v);
        std::vector<std::string> labels;
        for (const auto & u : units)
            labels.push_back(u.digits());
        g.set_labels(std::move(labels));
        return g;
    }

    auto find_primitive(std::size_t degree, const GaloisField & field) -> FieldPoly
    {
        auto group_order = ipow(field.order(), static_cast<unsigned>(degree)) - 1;
        for (const auto & f : monic_irreducibles(degree, field)) {
            FieldPoly power{{1}};
            std::uint64_t order = 0;
            for (std::uint64_t k = 1; k <= group_order; ++k) {
                FieldPoly shifted{std::vector<Element>(power.coeffs.size() + 1, 0)};
                std::copy(power.coeffs.begin(), power.coeffs.end(), shifted.coeffs.begin() + 1);
                power = poly_rem(shifted, f, field);
                if (power.coeffs.empty())
                    break;
                if (power.coeffs == std::vector<Element>{1}) {
                    order = k;
                    break;
                }
            }
            if (order == group_order)
                return f;
        }
        throw InternalCheckFailed("no primitive polynomial of degree " + std::to_string(degree) + " found");
    }

    auto spread_clique(std::size_t m, std::uint64_t q) -> std::vector<SubspacePoint>
    {
        if (m < 1)
            throw InvalidInput("spread cliques need m >= 1");
        auto field = GaloisField::of_order(q);
        auto u = companion_matrix(find_primitive(m, field), field);
        auto identity = Matrix::identity(field, m);
        Matrix zero(field, m, m);

        std::vector<SubspacePoint> clique{point_of_pair(identity, zero), point_of_pair(zero, identity)};
        auto power = identity;
        auto group_order = ipow(q, static_cast<unsigned>(m)) - 1;
        for (std::uint64_t i = 0; i < group_order; ++i) {
            clique.push_back(point_of_pair(power, identity));
            power = power * u;
        }

        for (std::size_t i = 0; i < clique.size(); ++i)
            for (auto j = i + 1; j < clique.size(); ++j)
                if (! points_distant(clique[i], clique[j]))
                    throw InternalCheckFailed("spread clique points " + clique[i].label() + " and " + clique[j].label()
                        + " are not distant");
        return clique;
    }

    auto f1_graph(std::size_t m, const Limits & limits) -> Graph
    {
        if (m == 0)
            return Graph::loop_graph();
        if (2 * m >= 63)
            throw BudgetExceeded("F1 graph too large");
        check_vertex_bound(binomial(static_cast<std::int64_t>(2 * m), static_cast<std::int64_t>(m)), limits, "F1 graph");
        std::vector<std::uint64_t> subsets;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (2 * m)); ++mask)
            if (static_cast<std::size_t>(std::popcount(mask)) == m)
                subsets.push_back(mask);

        auto full = (std::uint64_t{1} << (2 * m)) - 1;
        Graph g(subsets.size());
        for (Vertex u = 0; u < subsets.size(); ++u)
            for (auto v = u + 1; v < subsets.size(); ++v)
                if ((subsets[u] ^ subsets[v]) == full && (subsets[u] & subsets[v]) == 0)
                    g.add_edge(u, v);

        std::vector<std::string> labels;
        for (auto s : subsets) {
            std::string l;
            for (std::size_t i = 0; i < 2 * m; ++i)
                l.push_back((s >> i & 1) ? '1' : '0');
            labels.push_back(std::move(l));
        }
        g.set_labels(std::move(labels));
        return g;
    }
}
