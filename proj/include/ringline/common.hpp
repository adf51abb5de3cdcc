#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringline
{
    using BigInt = boost::multiprecision::cpp_int;

    /// Raised when a precondition on the input is violated.
    class InvalidInput : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Raised when a configured size or search budget would be exceeded.
    /// Results are never silently truncated.
    class BudgetExceeded : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Raised when an internal self-check fails. Indicates a bug, not bad input.
    class InternalCheckFailed : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    struct Limits
    {
        std::size_t vertex_bound = 20000;
        std::uint64_t census_node_budget = 1'000'000;
        /// 0 selects std::thread::hardware_concurrency().
        unsigned workers = 0;
        /// Upper bound on q^(m*m) when enumerating full matrix spaces.
        std::uint64_t matrix_enumeration_bound = std::uint64_t{1} << 22;
    };

    auto is_prime(std::uint64_t n) -> bool;

    /// n = prime^exponent; both fields are 0 when n is not a prime power.
    struct PrimePowerSplit
    {
        std::uint64_t prime = 0;
        unsigned exponent = 0;
    };
    auto split_prime_power(std::uint64_t n) -> PrimePowerSplit;

    auto ipow(std::uint64_t base, unsigned exp) -> std::uint64_t;
    auto big_pow(const BigInt & base, unsigned exp) -> BigInt;
    auto binomial(std::int64_t n, std::int64_t k) -> BigInt;

    inline auto to_string(const BigInt & v) -> std::string { return v.str(); }
}
