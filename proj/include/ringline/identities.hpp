#pragma once

#include <ringline/ring_graphs.hpp>

namespace ringline
{
    /// sum over j with 0 <= j p + m <= n of (-1)^(j p + m) C(n, j p + m).
    auto lacunary_sum(unsigned n, unsigned p, unsigned m) -> BigInt;

    /// lacunary_sum(n, p, m) = 0 mod p for every prime p <= min(n, p_max), p <= n <= n_max, 0 <= m < p.
    auto lacunary_identity_check(unsigned n_max, unsigned p_max) -> bool;

    /// Every prime p <= n divides the inclusion-exclusion value of cap_n_N_comm(spec, n).
    auto capN_divisibility_check(const RingSpec & spec, unsigned n) -> bool;
}
