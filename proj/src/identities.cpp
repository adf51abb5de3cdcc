#include <ringline/identities.hpp>

#include <ringline/formulas.hpp>

namespace ringline
{
    auto lacunary_sum(unsigned n, unsigned p, unsigned m) -> BigInt
    {
        if (! is_prime(p))
            throw InvalidInput(std::to_string(p) + " is not prime");
        if (m >= p)
            throw InvalidInput("residue must satisfy 0 <= m < p");
        BigInt total = 0;
        for (auto i = m; i <= n; i += p) {
            auto term = binomial(n, i);
            total += i % 2 == 0 ? term : BigInt(-term);
        }
        return total;
    }

    auto lacunary_identity_check(unsigned n_max, unsigned p_max) -> bool
    {
        for (unsigned p = 2; p <= p_max; ++p) {
            if (! is_prime(p))
                continue;
            for (auto n = p; n <= n_max; ++n)
                for (unsigned m = 0; m < p; ++m)
                    if (lacunary_sum(n, p, m) % p != 0)
                        return false;
        }
        return true;
    }

    auto capN_divisibility_check(const RingSpec & spec, unsigned n) -> bool
    {
        auto value = cap_n_N_comm(spec, n).value;
        for (unsigned p = 2; p <= n; ++p)
            if (is_prime(p) && value % p != 0)
                return false;
        return true;
    }
}
