#include <ringline/formulas.hpp>
#include <ringline/identities.hpp>

#include <doctest.h>

using namespace ringline;

TEST_CASE("lacunary sums")
{
    CHECK(lacunary_sum(2, 2, 0) == 2);
    CHECK(lacunary_sum(2, 2, 1) == -2);
    // (1 - 1)^n split by residue class.
    for (unsigned n = 1; n <= 12; ++n) {
        BigInt total = 0;
        for (unsigned m = 0; m < 3; ++m)
            total += lacunary_sum(n, 3, m);
        CHECK(total == 0);
    }
    CHECK_THROWS_AS(lacunary_sum(5, 4, 0), InvalidInput);
    CHECK_THROWS_AS(lacunary_sum(5, 3, 3), InvalidInput);
    CHECK(lacunary_identity_check(20, 19));
}

TEST_CASE("divisibility of capnN")
{
    for (std::uint64_t n : {2, 6, 12, 30, 60, 210})
        for (unsigned k = 1; k <= 9; ++k)
            CHECK(capN_divisibility_check(zn_local_decomposition(n), k));
    RingSpec mixed{{LocalSummand{4, 2}, LocalSummand{9, 3}, MatrixSummand{1, 7}}, 1};
    CHECK(cap_n_N_comm(mixed, 5).value % 30 == 0);
    CHECK(capN_divisibility_check(mixed, 7));
}
