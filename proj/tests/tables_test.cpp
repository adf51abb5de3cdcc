#include <ringline/tables.hpp>

#include <doctest.h>

using namespace ringline;

TEST_CASE("point-count table")
{
    CHECK(point_count_table().to_text() ==
        "points of P(M_m(q))\n"
        "0 1\n"
        "1 q+1\n"
        "2 q^4+q^3+2q^2+q+1\n"
        "3 q^9+q^8+2q^7+3q^6+3q^5+3q^4+3q^3+2q^2+q+1\n");
}

TEST_CASE("cap table")
{
    CHECK(cap_table().to_text() ==
        "cap1N and cap2N of P(M_m(q))\n"
        "0 0 0\n"
        "1 1 0\n"
        "2 q^3+2q^2+q+1 q^2+2q+1\n"
        "3 q^8+2q^7+3q^6+3q^5+3q^4+3q^3+2q^2+q+1 q^7+3q^6+4q^5+4q^4+2q^3+2q^2+q+1\n");
}

TEST_CASE("coefficient tables")
{
    for (std::size_t m : {4, 5, 6, 8}) {
        CAPTURE(m);
        CHECK(c_coefficient_table(m).to_text() ==
            "leading coefficients of C_{m,k}\n"
            "C_{m,0} 1 1 2 3 5\n"
            "C_{m,1} 1 0 0 0 0\n"
            "C_{m,2} 1 -1 -1 0 0\n"
            "C_{m,3} 1 -2 -1 2 1\n");
        CHECK(cap_coefficient_table(m).to_csv() ==
            ",m^2,m^2-1,m^2-2,m^2-3,m^2-4\n"
            "cap1N,0,1,2,3,5\n"
            "cap2N,0,0,1,3,5\n"
            "cap3N,0,0,0,1,4\n");
    }
    CHECK_THROWS_AS(c_coefficient_table(3), InvalidInput);
}

TEST_CASE("all tables")
{
    CHECK(all_tables().size() == 4);
}
