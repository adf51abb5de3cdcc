#include <ringline/acceptance.hpp>

#include <ringline/census.hpp>
#include <ringline/fixtures.hpp>
#include <ringline/formulas.hpp>
#include <ringline/identities.hpp>
#include <ringline/partitions.hpp>
#include <ringline/ring_graphs.hpp>
#include <ringline/tables.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <thread>

namespace ringline
{
    namespace
    {
        using Failures = std::vector<std::string>;

        auto expect(Failures & f, bool ok, const std::string & what) -> void
        {
            if (! ok)
                f.push_back(what);
        }

        auto str(const BigInt & v) -> std::string { return to_string(v); }

        const std::vector<std::uint64_t> zn_moduli{4, 6, 8, 9, 10, 12, 15, 16, 18, 20, 24, 25, 27, 30, 32};

        auto factors_of(const RingSpec & spec) -> std::vector<std::uint64_t>
        {
            std::vector<std::uint64_t> out;
            for (const auto & s : spec.summands)
                out.push_back(std::get<LocalSummand>(s).ring_order);
            return out;
        }

        auto octahedron() -> Graph
        {
            std::vector<Graph> parts(3, complete_graph(2));
            return complement(disjoint_union(parts));
        }

        auto factorial(std::size_t k) -> BigInt
        {
            BigInt r = 1;
            for (std::size_t i = 2; i <= k; ++i)
                r *= i;
            return r;
        }

        auto standard_triangle(const Graph & g, std::size_t m, std::uint64_t q) -> std::vector<Vertex>
        {
            auto field = GaloisField::of_order(q);
            auto id = Matrix::identity(field, m);
            Matrix zero{field, m, m};
            std::vector<Vertex> out;
            for (const auto & p : {point_of_pair(id, zero), point_of_pair(zero, id), point_of_pair(id, id)})
                out.push_back(g.find_label(p.label()).value());
            return out;
        }

        /// 2x2 matrices over GF(q) with neither 0 nor 1 as an eigenvalue.
        auto eigenvalue_oracle(std::uint64_t q) -> std::size_t
        {
            auto field = GaloisField::of_order(q);
            auto id = Matrix::identity(field, 2);
            std::size_t n = 0;
            for (std::uint64_t code = 0; code < q * q * q * q; ++code) {
                Matrix u{field, 2, 2};
                auto c = code;
                for (std::size_t i = 0; i < 4; ++i, c /= q)
                    u(i / 2, i % 2) = static_cast<Element>(c % q);
                if (is_invertible(u) && is_invertible(u - id))
                    ++n;
            }
            return n;
        }

        auto c1_points(const Limits & limits, Failures & f) -> std::string
        {
            const std::pair<std::size_t, std::uint64_t> cases[] = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 7}, {2, 2}, {2, 3}};
            std::string detail;
            for (auto [m, q] : cases) {
                auto n = matrix_ring_graph(m, q, limits).size();
                auto expected = qbinom(2 * m, m).evaluate(q);
                expect(f, BigInt(n) == expected, "m=" + std::to_string(m) + " q=" + std::to_string(q) + ": " +
                        std::to_string(n) + " vertices, expected " + str(expected));
                detail += (detail.empty() ? "" : " ") + std::to_string(n);
            }
            expect(f, matrix_ring_graph(2, 2, limits).size() == 35, "P(M2(2)) must have 35 points");
            expect(f, matrix_ring_graph(2, 3, limits).size() == 130, "P(M2(3)) must have 130 points");
            return "vertex counts " + detail;
        }

        auto c2_degree(const Limits & limits, Failures & f) -> std::string
        {
            std::string detail;
            for (std::uint64_t q : {2u, 3u}) {
                auto g = matrix_ring_graph(2, q, limits);
                auto degree = ipow(q, 4);
                auto codegree = gl_order(2, q);
                std::size_t bad_degree = 0, bad_codegree = 0, edges = 0;
                for (Vertex u = 0; u < g.size(); ++u) {
                    bad_degree += g.degree(u) == degree ? 0 : 1;
                    for (Vertex v = u + 1; v < g.size(); ++v)
                        if (g.adjacent(u, v)) {
                            ++edges;
                            const Vertex e[] = {u, v};
                            bad_codegree += BigInt(extension_count(g, e)) == codegree ? 0 : 1;
                        }
                }
                expect(f, bad_degree == 0, "q=" + std::to_string(q) + ": " + std::to_string(bad_degree) +
                        " vertices without degree " + std::to_string(degree));
                expect(f, bad_codegree == 0, "q=" + std::to_string(q) + ": " + std::to_string(bad_codegree) +
                        " edges without " + str(codegree) + " common neighbours");
                detail += "q=" + std::to_string(q) + ": degree " + std::to_string(degree) + ", " +
                    std::to_string(edges) + " edges with codegree " + str(codegree) + "; ";
            }
            return detail;
        }

        auto c3_cap12(const Limits & limits, Failures & f) -> std::string
        {
            const IntPoly cap1 = q_power(3) + BigInt(2) * q_power(2) + q_power(1) + q_power(0);
            const IntPoly cap2 = q_power(2) + BigInt(2) * q_power(1) + q_power(0);
            expect(f, cap1N_matrix(2) == cap1, "cap1N_matrix(2) is " + cap1N_matrix(2).to_string());
            expect(f, cap2N_matrix(2) == cap2, "cap2N_matrix(2) is " + cap2N_matrix(2).to_string());
            std::string detail;
            for (std::uint64_t q : {2u, 3u}) {
                auto g = matrix_ring_graph(2, q, limits);
                auto e1 = cap1.evaluate(q), e2 = cap2.evaluate(q);
                std::size_t bad1 = 0, bad2 = 0;
                for (Vertex u = 0; u < g.size(); ++u) {
                    const Vertex one[] = {u};
                    bad1 += BigInt(count_adjacent_to_none(g, one)) == e1 ? 0 : 1;
                    for (Vertex v = u + 1; v < g.size(); ++v)
                        if (g.adjacent(u, v)) {
                            const Vertex two[] = {u, v};
                            bad2 += BigInt(count_adjacent_to_none(g, two)) == e2 ? 0 : 1;
                        }
                }
                expect(f, bad1 == 0, "q=" + std::to_string(q) + ": cap1N differs at " + std::to_string(bad1) + " vertices");
                expect(f, bad2 == 0, "q=" + std::to_string(q) + ": cap2N differs at " + std::to_string(bad2) + " edges");
                detail += "q=" + std::to_string(q) + ": cap1N " + str(e1) + ", cap2N " + str(e2) + "; ";
            }
            return detail;
        }

        auto c4_triangle(const Limits & limits, Failures & f) -> std::string
        {
            const IntPoly c23 = q_power(4) - BigInt(2) * q_power(3) - q_power(2) + BigInt(3) * q_power(1);
            expect(f, c_extension_poly(2, 3) == c23, "c_extension_poly(2,3) is " + c_extension_poly(2, 3).to_string());
            std::string detail;
            for (auto [q, literal] : {std::pair<std::uint64_t, std::size_t>{2, 2}, {3, 27}}) {
                auto g = matrix_ring_graph(2, q, limits);
                auto tri = standard_triangle(g, 2, q);
                expect(f, is_clique(g, tri), "standard triangle is not a clique");
                auto count = extension_count(g, tri);
                auto oracle = eigenvalue_oracle(q);
                expect(f, BigInt(count) == c23.evaluate(q), "q=" + std::to_string(q) + ": " + std::to_string(count) +
                        " extensions, polynomial gives " + str(c23.evaluate(q)));
                expect(f, count == literal && oracle == literal, "q=" + std::to_string(q) + ": expected " +
                        std::to_string(literal) + ", graph " + std::to_string(count) + ", eigenvalue oracle " +
                        std::to_string(oracle));
                detail += "q=" + std::to_string(q) + ": " + std::to_string(count) + " (oracle " +
                    std::to_string(oracle) + "); ";
            }
            return detail;
        }

        auto c5_max_clique(const Limits & limits, Failures & f) -> std::string
        {
            std::string detail;
            for (std::uint64_t q : {2u, 3u}) {
                auto omega = max_clique_order(matrix_ring_graph(2, q, limits), limits);
                expect(f, omega == q * q + 1, "q=" + std::to_string(q) + ": clique number " + std::to_string(omega));
                detail += "omega(q=" + std::to_string(q) + ")=" + std::to_string(omega) + " ";
            }
            const std::pair<std::size_t, std::uint64_t> spreads[] = {{2, 2}, {2, 3}, {2, 5}, {3, 2}};
            for (auto [m, q] : spreads) {
                auto s = spread_clique(m, q);
                bool distant = true;
                for (std::size_t i = 0; i < s.size(); ++i)
                    for (std::size_t j = i + 1; j < s.size(); ++j)
                        distant = distant && points_distant(s[i], s[j]);
                auto expected = ipow(q, static_cast<unsigned>(m)) + 1;
                expect(f, distant && s.size() == expected, "spread (" + std::to_string(m) + "," + std::to_string(q) +
                        ") has " + std::to_string(s.size()) + " points, pairwise distant " + (distant ? "yes" : "no"));
                detail += "spread(" + std::to_string(m) + "," + std::to_string(q) + ")=" + std::to_string(s.size()) + " ";
            }
            return detail;
        }

        auto c6_commutative(const Limits & limits, Failures & f) -> std::string
        {
            std::size_t checked_values = 0, printed_differs = 0;
            for (auto n : zn_moduli) {
                auto tag = "Z/" + std::to_string(n) + ": ";
                auto spec = zn_local_decomposition(n);
                auto g = zn_projective_line(n, limits);
                auto h = spec_graph(spec, limits);
                auto factors = factors_of(spec);
                auto map = zn_crt_map(n, factors);
                expect(f, verify_isomorphism(g, h, map), tag + "CRT map is not an isomorphism");

                auto omega = max_clique_order(g, limits);
                auto formula_omega = comm_max_clique(spec);
                expect(f, formula_omega && BigInt(omega) == *formula_omega, tag + "clique number " + std::to_string(omega));

                auto census = count_cliques(g, omega + 1, limits);
                for (std::size_t k = 0; k <= omega + 1; ++k, ++checked_values) {
                    expect(f, census.counts[k] == comm_clique_count(spec, k), tag + std::to_string(k) + "-cliques " +
                            str(census.counts[k]) + " vs " + str(comm_clique_count(spec, k)));
                    // The printed product omits the k! pairing factor between summands.
                    bool printed_applies = spec.summands.size() <= 1 || k <= 1 || census.counts[k] == 0;
                    if (printed_applies)
                        expect(f, census.counts[k] == comm_clique_count_printed(spec, k), tag + "printed count differs at k=" +
                                std::to_string(k));
                    else
                        printed_differs += census.counts[k] != comm_clique_count_printed(spec, k) ? 1 : 0;
                }

                for (std::size_t k = 0; k <= omega; ++k, ++checked_values) {
                    auto profile = extension_profile(g, k, {}, limits);
                    auto expected = comm_extension_count(spec, k);
                    bool uniform = profile.size() == 1 && BigInt(profile.begin()->first) == expected &&
                        BigInt(profile.begin()->second) == census.counts[k];
                    expect(f, uniform, tag + "extension counts of " + std::to_string(k) + "-cliques differ from " +
                            str(expected));
                }

                for (std::size_t k = 1; k <= omega; ++k) {
                    auto cap = cap_n_N_comm(spec, k);
                    expect(f, cap.clique_exists, tag + "formula claims no " + std::to_string(k) + "-clique");
                    for (const auto & clique : enumerate_cliques(g, k, limits)) {
                        ++checked_values;
                        if (BigInt(count_adjacent_to_none(g, clique)) != cap.value) {
                            f.push_back(tag + "cap" + std::to_string(k) + "N differs from " + str(cap.value));
                            break;
                        }
                    }
                }
                expect(f, cap1N_product(spec) == cap_n_N_comm(spec, 1).value, tag + "cap1N product form differs");
                expect(f, cap2N_product(spec) == cap_n_N_comm(spec, 2).value, tag + "cap2N product form differs");
            }
            return std::to_string(zn_moduli.size()) + " moduli, " + std::to_string(checked_values) +
                " values compared; unpaired product differs at " + std::to_string(printed_differs) +
                " multi-summand (n,k)";
        }

        auto c7_tensor(const Limits & user_limits, Failures & f) -> std::string
        {
            const std::size_t kmax = 6;
            // P(M2(2)) squared has about 4.3 million cliques below size 6.
            auto limits = user_limits;
            limits.census_node_budget = std::max<std::uint64_t>(limits.census_node_budget, 10'000'000);
            std::vector<std::pair<std::string, Graph>> factors{{"K3", complete_graph(3)}, {"K4", complete_graph(4)},
                {"octahedron", octahedron()}, {"P(M2(2))", matrix_ring_graph(2, 2, limits)}};
            std::vector<CliqueCensus> single;
            for (const auto & [_, g] : factors)
                single.push_back(count_cliques(g, kmax, limits));
            std::size_t pairs = 0;
            for (std::size_t i = 0; i < factors.size(); ++i)
                for (std::size_t j = i; j < factors.size(); ++j, ++pairs) {
                    auto t = count_cliques(tensor_product(factors[i].second, factors[j].second, limits), kmax, limits);
                    for (std::size_t k = 0; k <= kmax; ++k) {
                        // Ordered cliques multiply; unordered ones pick up a k! pairing factor.
                        auto expected = factorial(k) * single[i].counts[k] * single[j].counts[k];
                        expect(f, t.counts[k] == expected, factors[i].first + " x " + factors[j].first + ", k=" +
                                std::to_string(k) + ": " + str(t.counts[k]) + " vs " + str(expected));
                    }
                }
            return std::to_string(pairs) + " factor pairs, k <= " + std::to_string(kmax) + ", ordered counts multiply";
        }

        auto c8_incexc(const Limits &, Failures & f) -> std::string
        {
            std::size_t cases = 0;
            for (std::size_t m = 0; m <= 4; ++m)
                for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
                    ++cases;
                    auto w = zero_capture_weights(m, q);
                    auto got = incexc_Wprime(m, 0, w, q);
                    expect(f, got == gl_order(m, q), "m=" + std::to_string(m) + " q=" + std::to_string(q) + ": " +
                            str(got) + " vs " + str(gl_order(m, q)));
                }
            return std::to_string(cases) + " (m,q) cases";
        }

        auto row_text(const std::vector<std::string> & row) -> std::string
        {
            std::string out;
            for (std::size_t i = 1; i < row.size(); ++i)
                out += (i > 1 ? " " : "") + row[i];
            return out;
        }

        auto c9_partitions(const Limits &, Failures & f) -> std::string
        {
            for (unsigned m = 0; m <= 5; ++m)
                for (unsigned k = 0; k <= 3; ++k)
                    expect(f, coeffs_theorem_check(m, k), "coefficient check fails at m=" + std::to_string(m) + " k=" +
                            std::to_string(k));
            std::size_t dc = 0;
            for (unsigned m = 0; m <= 6; ++m)
                for (unsigned h = 0; h <= m; ++h)
                    for (unsigned k = 0; k <= m; ++k, ++dc)
                        expect(f, distcoeff_check(m, k, h), "distCoeff fails at m=" + std::to_string(m) + " k=" +
                                std::to_string(k) + " h=" + std::to_string(h));
            std::size_t bij = 0;
            for (unsigned h = 0; h <= 14; ++h)
                for (unsigned k = 1; k <= h; ++k, ++bij)
                    expect(f, dist2p_check(h, k), "bijection fails at h=" + std::to_string(h) + " k=" + std::to_string(k));

            const std::vector<std::string> c_rows{"1 1 2 3 5", "1 0 0 0 0", "1 -1 -1 0 0", "1 -2 -1 2 1"};
            const std::vector<std::string> cap_rows{"0 1 2 3 5", "0 0 1 3 5", "0 0 0 1 4"};
            for (std::size_t m = 4; m <= 6; ++m) {
                auto ct = c_coefficient_table(m);
                auto kt = cap_coefficient_table(m);
                for (std::size_t i = 0; i < c_rows.size(); ++i)
                    expect(f, row_text(ct.rows[i]) == c_rows[i], "C row " + std::to_string(i) + " at m=" +
                            std::to_string(m) + " is '" + row_text(ct.rows[i]) + "'");
                for (std::size_t i = 0; i < cap_rows.size(); ++i)
                    expect(f, row_text(kt.rows[i]) == cap_rows[i], "cap row " + std::to_string(i + 1) + " at m=" +
                            std::to_string(m) + " is '" + row_text(kt.rows[i]) + "'");
            }
            return std::to_string(dc) + " distCoeff cases, " + std::to_string(bij) + " bijection cases, tables match";
        }

        auto c10_identities(const Limits &, Failures & f) -> std::string
        {
            expect(f, lacunary_identity_check(13, 13), "lacunary identity fails");
            std::size_t checks = 0;
            for (auto n : zn_moduli) {
                auto spec = zn_local_decomposition(n);
                for (unsigned k = 1; k <= 7; ++k, ++checks)
                    expect(f, capN_divisibility_check(spec, k), "divisibility fails for Z/" + std::to_string(n) +
                            " at n=" + std::to_string(k));
                auto cap5 = cap_n_N_comm(spec, 5).value;
                expect(f, cap5 % 30 == 0, "cap5N of Z/" + std::to_string(n) + " is " + str(cap5));
            }
            return "lacunary n,p <= 13; " + std::to_string(checks) + " divisibility checks";
        }

        auto c11_fixtures(const Limits &, Failures & f) -> std::string
        {
            auto b = verify_triangle_classes();
            auto c = verify_inextensible_clique();
            for (const auto & r : {static_cast<const Report &>(b), static_cast<const Report &>(c)})
                for (const auto & l : r.lines)
                    expect(f, l.passed, r.title + ": " + l.name + (l.detail.empty() ? "" : " (" + l.detail + ")"));
            expect(f, b.class_sizes == std::array<std::size_t, 3>{4, 4, 1}, "class sizes differ from (4,4,1)");
            expect(f, b.c_extension_count == 8, "C extends to " + std::to_string(b.c_extension_count));
            auto fours = [](const std::vector<std::size_t> & v) {
                return v.size() == 4 && std::all_of(v.begin(), v.end(), [](std::size_t x) { return x == 4; });
            };
            expect(f, fours(b.a_extension_counts) && fours(b.b_extension_counts), "A/B extension counts differ from 4");
            expect(f, b.a_b_edges == 0, "A-B adjacency present");
            expect(f, b.maximal_clique_sizes == std::vector<std::size_t>{8, 8}, "maximal cliques are not two 8-sets");
            expect(f, c.distant_pairs == 190 && c.extensions == 0 && c.candidates == 480, "GL2(5) set counts differ");
            return "GL2(3) triangle: classes (4,4,1), C->8, A/B->4; GL2(5): " + std::to_string(c.distant_pairs) + "/190 distant, " +
                std::to_string(c.extensions) + " of " + std::to_string(c.candidates) + " extend";
        }

        auto c12_f1(const Limits & limits, Failures & f) -> std::string
        {
            for (std::size_t m = 0; m <= 5; ++m) {
                auto g = f1_graph(m, limits);
                auto expected = binomial(static_cast<std::int64_t>(2 * m), static_cast<std::int64_t>(m));
                expect(f, BigInt(g.size()) == expected, "F1 m=" + std::to_string(m) + " has " + std::to_string(g.size()) +
                        " vertices");
                if (m >= 1)
                    expect(f, g.regular_degree() == std::optional<std::size_t>{1}, "F1 m=" + std::to_string(m) +
                            " is not 1-regular");
                else
                    expect(f, g.is_loop_graph(), "F1 m=0 is not T");
                expect(f, qbinom(2 * m, m).evaluate(1) == expected, "qbinom at q=1 differs for m=" + std::to_string(m));
            }
            return "m = 0..5";
        }

        auto c13_determinism(const Limits & limits, Failures & f) -> std::string
        {
            auto serial = limits, parallel = limits;
            serial.workers = 1;
            parallel.workers = std::max(4u, std::thread::hardware_concurrency());
            auto a = census_battery(serial);
            auto b = census_battery(parallel);
            expect(f, a == b, "census results differ between 1 and " + std::to_string(parallel.workers) + " workers");
            return std::to_string(a.size()) + " censuses identical with 1 and " + std::to_string(parallel.workers) +
                " workers";
        }
    }

    auto census_battery(const Limits & limits) -> std::vector<std::pair<std::string, std::vector<BigInt>>>
    {
        std::vector<std::pair<std::string, std::vector<BigInt>>> out;
        auto add = [&](std::string name, const Graph & g, std::size_t kmax) {
            out.emplace_back(std::move(name), count_cliques(g, kmax, limits).counts);
        };
        auto m22 = matrix_ring_graph(2, 2, limits);
        add("P(M2(2))", m22, 6);
        add("P(M2(3))", matrix_ring_graph(2, 3, limits), 4);
        add("P(M2(2)) x K4", tensor_product(m22, complete_graph(4), limits), 5);
        add("octahedron x K3", tensor_product(octahedron(), complete_graph(3), limits), 4);
        for (auto n : zn_moduli)
            add("P(Z/" + std::to_string(n) + ")", zn_projective_line(n, limits), 5);
        add("F1(4)", f1_graph(4, limits), 3);
        return out;
    }

    auto CriterionResult::to_line() const -> std::string
    {
        char head[96];
        std::snprintf(head, sizeof head, "criterion %2d [%-11s] %s %7.2fs (limit %.0fs) ", id, suite.c_str(),
            passed ? "PASS" : "FAIL", seconds, time_limit);
        return head + title + ": " + detail;
    }

    auto acceptance_criteria() -> const std::vector<Criterion> &
    {
        static const std::vector<Criterion> all{
            {1, "point counts", "matrix", 10, c1_points},
            {2, "degree and codegree", "matrix", 30, c2_degree},
            {3, "cap1N and cap2N", "matrix", 60, c3_cap12},
            {4, "4-clique extension", "matrix", 60, c4_triangle},
            {5, "maximal clique and spreads", "matrix", 120, c5_max_clique},
            {6, "commutative suite", "commutative", 60, c6_commutative},
            {7, "tensor multiplicativity", "commutative", 120, c7_tensor},
            {8, "inclusion-exclusion count", "matrix", 60, c8_incexc},
            {9, "leading coefficients", "partitions", 30, c9_partitions},
            {10, "identities", "identities", 60, c10_identities},
            {11, "fixtures", "fixtures", 30, c11_fixtures},
            {12, "F1 limit", "matrix", 60, c12_f1},
            {13, "determinism", "commutative", 120, c13_determinism},
        };
        return all;
    }

    auto suite_names() -> std::vector<std::string>
    {
        return {"commutative", "matrix", "partitions", "identities", "fixtures", "all"};
    }

    auto run_criterion(const Criterion & c, const Limits & limits) -> CriterionResult
    {
        CriterionResult r{c.id, c.title, c.suite, false, {}, 0, c.time_limit};
        Failures failures;
        auto start = std::chrono::steady_clock::now();
        try {
            r.detail = c.run(limits, failures);
        }
        catch (const std::exception & e) {
            failures.push_back(std::string{"exception: "} + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.seconds >= c.time_limit)
            failures.push_back("time limit exceeded");
        r.passed = failures.empty();
        if (! r.passed) {
            std::string msg = std::to_string(failures.size()) + " failure(s): " + failures.front();
            for (std::size_t i = 1; i < std::min<std::size_t>(failures.size(), 3); ++i)
                msg += "; " + failures[i];
            r.detail = msg;
        }
        return r;
    }

    auto run_suite(const std::string & suite, const Limits & limits) -> std::vector<CriterionResult>
    {
        auto names = suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end())
            throw InvalidInput("unknown suite '" + suite + "'");
        std::vector<CriterionResult> out;
        for (const auto & c : acceptance_criteria())
            if (suite == "all" || c.suite == suite)
                out.push_back(run_criterion(c, limits));
        return out;
    }
}
