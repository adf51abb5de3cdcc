#include <ringline/acceptance.hpp>
#include <ringline/census.hpp>
#include <ringline/fixtures.hpp>
#include <ringline/ring_graphs.hpp>
#include <ringline/tables.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ringline;

namespace
{
    enum class Format
    {
        text,
        json,
        csv
    };

    struct Options
    {
        std::string spec_file;
        Format format = Format::text;
        std::optional<std::uint64_t> budget;
        std::optional<unsigned> workers;
        std::optional<std::size_t> vertex_bound;
    };

    auto make_limits(const Options & o) -> Limits
    {
        Limits l;
        if (const char * env = std::getenv("RINGLINE_BUDGET")) {
            try {
                l.census_node_budget = std::stoull(env);
            }
            catch (const std::exception &) {
                throw InvalidInput(std::string{"RINGLINE_BUDGET is not a number: "} + env);
            }
        }
        if (o.budget)
            l.census_node_budget = *o.budget;
        if (o.workers)
            l.workers = *o.workers;
        if (o.vertex_bound)
            l.vertex_bound = *o.vertex_bound;
        if (l.census_node_budget == 0 || l.vertex_bound == 0)
            throw InvalidInput("budgets must be positive");
        return l;
    }

    auto read_spec(const std::string & file) -> RingSpec
    {
        std::ifstream in{file};
        if (! in)
            throw InvalidInput("cannot open spec file " + file);
        nlohmann::json j;
        try {
            in >> j;
        }
        catch (const nlohmann::json::exception & e) {
            throw InvalidInput("spec file " + file + " is not JSON: " + e.what());
        }
        auto spec = RingSpec::from_json(j);
        for (const auto & w : spec.validate())
            std::cerr << "warning: " << w << "\n";
        return spec;
    }

    auto unit_graph_of(const RingSpec & spec, const Limits & limits) -> Graph
    {
        if (spec.summands.size() != 1 || ! std::holds_alternative<MatrixSummand>(spec.summands.front()))
            throw InvalidInput("--unit-graph needs a spec with a single matrix summand");
        auto m = std::get<MatrixSummand>(spec.summands.front());
        return unit_difference_graph(m.m, m.q, limits);
    }

    auto write_file(const std::string & path, const std::string & content) -> void
    {
        std::ofstream out{path};
        if (! (out << content))
            throw InvalidInput("cannot write " + path);
    }

    auto cmd_build(const Options & o, const std::string & dot, const std::string & adjacency) -> int
    {
        auto limits = make_limits(o);
        auto g = spec_graph(read_spec(o.spec_file), limits);
        if (! dot.empty())
            write_file(dot, to_dot(g));
        if (! adjacency.empty())
            write_file(adjacency, to_adjacency_json(g).dump(1) + "\n");

        if (o.format == Format::json) {
            nlohmann::json j{{"loop_graph", g.is_loop_graph()}, {"vertices", g.size()}, {"edges", g.edge_count()}};
            auto d = g.regular_degree();
            j["regular_degree"] = d ? nlohmann::json(*d) : nlohmann::json(nullptr);
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (g.is_loop_graph()) {
            std::cout << "graph T\n";
            return 0;
        }
        std::cout << g.size() << " vertices, ";
        if (auto d = g.regular_degree())
            std::cout << *d << "-regular, ";
        std::cout << g.edge_count() << " edges\n";
        return 0;
    }

    auto split_labels(const std::string & s) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        std::stringstream in{s};
        for (std::string part; std::getline(in, part, ',');)
            if (! part.empty())
                out.push_back(part);
        return out;
    }

    auto cmd_census(const Options & o, std::size_t kmax, std::optional<std::size_t> profile, bool unit,
        const std::string & base_labels) -> int
    {
        auto limits = make_limits(o);
        auto spec = read_spec(o.spec_file);
        auto g = unit ? unit_graph_of(spec, limits) : spec_graph(spec, limits);

        if (profile) {
            std::vector<Vertex> base;
            for (const auto & l : split_labels(base_labels)) {
                auto v = g.find_label(l);
                if (! v)
                    throw InvalidInput("no vertex labelled " + l);
                base.push_back(*v);
            }
            auto p = extension_profile(g, *profile, base, limits);
            switch (o.format) {
                case Format::json: {
                    nlohmann::json j = nlohmann::json::object();
                    for (auto [ext, n] : p)
                        j[std::to_string(ext)] = n;
                    std::cout << nlohmann::json{{"k", *profile}, {"profile", j}}.dump(2) << "\n";
                    break;
                }
                case Format::csv:
                    std::cout << "extensions,cliques\n";
                    for (auto [ext, n] : p)
                        std::cout << ext << "," << n << "\n";
                    break;
                case Format::text:
                    std::cout << "extension profile of " << *profile << "-cliques:";
                    for (auto [ext, n] : p)
                        std::cout << " " << ext << ":" << n;
                    std::cout << "\n";
                    break;
            }
            return 0;
        }

        auto c = count_cliques(g, kmax, limits);
        switch (o.format) {
            case Format::json: {
                nlohmann::json counts = nlohmann::json::array();
                for (const auto & v : c.counts)
                    counts.push_back(to_string(v));
                std::cout << nlohmann::json{{"kmax", kmax}, {"counts", counts}}.dump(2) << "\n";
                break;
            }
            case Format::csv:
                std::cout << "k,count\n";
                for (std::size_t k = 0; k < c.counts.size(); ++k)
                    std::cout << k << "," << c.counts[k] << "\n";
                break;
            case Format::text:
                for (std::size_t k = 0; k < c.counts.size(); ++k)
                    std::cout << (k ? "," : "") << c.counts[k];
                std::cout << "\n";
                break;
        }
        return 0;
    }

    auto cmd_verify(const Options & o, const std::string & suite) -> int
    {
        auto results = run_suite(suite, make_limits(o));
        bool ok = std::all_of(results.begin(), results.end(), [](const auto & r) { return r.passed; });
        if (o.format == Format::json) {
            nlohmann::json j = nlohmann::json::array();
            for (const auto & r : results)
                j.push_back({{"criterion", r.id}, {"title", r.title}, {"suite", r.suite}, {"passed", r.passed},
                    {"detail", r.detail}, {"seconds", r.seconds}, {"time_limit", r.time_limit}});
            std::cout << nlohmann::json{{"suite", suite}, {"passed", ok}, {"criteria", j}}.dump(2) << "\n";
        }
        else {
            for (const auto & r : results)
                std::cout << r.to_line() << "\n";
            std::cout << (ok ? "PASS" : "FAIL") << " " << suite << "\n";
        }
        return ok ? 0 : 1;
    }

    auto cmd_tables(const Options & o) -> int
    {
        auto tables = all_tables();
        if (o.format == Format::json) {
            nlohmann::json j = nlohmann::json::array();
            for (const auto & t : tables)
                j.push_back({{"title", t.title}, {"header", t.header}, {"rows", t.rows}});
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        for (std::size_t i = 0; i < tables.size(); ++i)
            std::cout << (i ? "\n" : "") << (o.format == Format::csv ? tables[i].to_csv() : tables[i].to_text());
        return 0;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Distant graphs of projective lines over finite rings"};
    app.require_subcommand(1);

    Options o;
    std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
    auto common = [&](CLI::App * sub) {
        sub->add_option("--format", o.format, "Output format")->transform(CLI::CheckedTransformer(formats));
        sub->add_option("--budget", o.budget, "Census node budget (overrides RINGLINE_BUDGET)");
        sub->add_option("--workers", o.workers, "Census worker threads, 0 for all cores");
        sub->add_option("--vertex-bound", o.vertex_bound, "Largest graph to construct");
    };

    auto build = app.add_subcommand("build", "Construct the distant graph of a ring spec");
    std::string dot, adjacency;
    build->add_option("--spec", o.spec_file, "Ring spec JSON")->required()->check(CLI::ExistingFile);
    build->add_option("--dot", dot, "Write the graph as DOT");
    build->add_option("--adjacency", adjacency, "Write the adjacency lists as JSON");
    common(build);

    auto census = app.add_subcommand("census", "Count cliques");
    std::size_t kmax = 3;
    std::optional<std::size_t> profile;
    bool unit = false;
    std::string base;
    census->add_option("--spec", o.spec_file, "Ring spec JSON")->required()->check(CLI::ExistingFile);
    census->add_option("--kmax", kmax, "Largest clique size counted");
    census->add_option("--profile", profile, "Histogram of extension counts of k-cliques");
    census->add_flag("--unit-graph", unit, "Use the unit-difference graph on GL_m(q)");
    census->add_option("--base", base, "Comma-separated vertex labels every profiled clique must contain");
    common(census);

    auto verify = app.add_subcommand("verify", "Run an acceptance suite");
    std::string suite = "all";
    verify->add_option("suite", suite, "Suite name")->check(CLI::IsMember(suite_names()));
    common(verify);

    auto tables = app.add_subcommand("tables", "Print the polynomial and coefficient tables");
    common(tables);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed())
            return cmd_build(o, dot, adjacency);
        if (census->parsed())
            return cmd_census(o, kmax, profile, unit, base);
        if (verify->parsed())
            return cmd_verify(o, suite);
        return cmd_tables(o);
    }
    catch (const BudgetExceeded & e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    }
    catch (const InvalidInput & e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
