#include <ringline/common.hpp>

#include <limits>

namespace ringline
{
    auto is_prime(std::uint64_t n) -> bool
    {
        if (n < 2)
            return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    }

    auto split_prime_power(std::uint64_t n) -> PrimePowerSplit
    {
        if (n < 2)
            return {};
        std::uint64_t p = 2;
        while (p * p <= n && n % p != 0)
            ++p;
        if (n % p != 0)
            p = n;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (n != 1)
            return {};
        return {p, e};
    }

    auto ipow(std::uint64_t base, unsigned exp) -> std::uint64_t
    {
        std::uint64_t result = 1;
        for (unsigned i = 0; i < exp; ++i) {
            if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
                throw BudgetExceeded("integer power overflows 64 bits");
            result *= base;
        }
        return result;
    }

    auto big_pow(const BigInt & base, unsigned exp) -> BigInt
    {
        return boost::multiprecision::pow(base, exp);
    }

    auto binomial(std::int64_t n, std::int64_t k) -> BigInt
    {
        if (k < 0 || n < 0 || k > n)
            return 0;
        k = std::min(k, n - k);
        BigInt result = 1;
        for (std::int64_t i = 1; i <= k; ++i)
            result = result * (n - k + i) / i;
        return result;
    }
}
