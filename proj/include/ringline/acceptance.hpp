#pragma once

#include <ringline/common.hpp>

#include <functional>
#include <string>
#include <vector>

namespace ringline
{
    struct CriterionResult
    {
        int id = 0;
        std::string title;
        std::string suite;
        bool passed = false;
        std::string detail;
        double seconds = 0;
        double time_limit = 0;

        /// "criterion  4 [matrix      ] PASS   0.12s (limit 60s) title: detail"
        auto to_line() const -> std::string;
    };

    struct Criterion
    {
        int id;
        std::string title;
        std::string suite;
        double time_limit;
        /// Returns a one-line detail; appends failures to the list.
        std::function<std::string(const Limits &, std::vector<std::string> &)> run;
    };

    auto acceptance_criteria() -> const std::vector<Criterion> &;
    auto suite_names() -> std::vector<std::string>;

    /// Runs one criterion. Exceptions and time-limit overruns count as failures.
    auto run_criterion(const Criterion & c, const Limits & limits) -> CriterionResult;
    /// Throws InvalidInput for an unknown suite; "all" selects every criterion.
    auto run_suite(const std::string & suite, const Limits & limits) -> std::vector<CriterionResult>;

    /// Clique censuses of a fixed graph family; used to compare worker counts.
    auto census_battery(const Limits & limits) -> std::vector<std::pair<std::string, std::vector<BigInt>>>;
}
