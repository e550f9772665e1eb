#include <catch2/catch_amalgamated.hpp>

#include "vancoh/chern_euler.hpp"

using namespace vancoh;

TEST_CASE("chi_stratum basics") {
    DegreeProfile p(2, {1, 2});
    CHECK(chi_stratum(p, {}) == 3);                       // chi(P^2)
    CHECK(chi_stratum(p, {0}) == 2);                      // a line
    CHECK(chi_stratum(p, {1}) == 2);                      // a smooth conic
    CHECK_THROWS_AS(chi_stratum(p, {0, 1, 0}), std::invalid_argument);
}

TEST_CASE("chi_open_series worked values") {
    CHECK(chi_open_series(DegreeProfile(2, {1, 1, 1, 1})) == 1);
    CHECK(chi_open_series(DegreeProfile(2, {2})) == 1);
    CHECK(chi_open_series(DegreeProfile(2, {1, 1})) == 0);
}

TEST_CASE("inclusion-exclusion route agrees with the series route") {
    CHECK(chi_open_inclusion_exclusion(DegreeProfile(2, {1, 1, 1, 1})) == 1);
    CHECK(chi_open_inclusion_exclusion(DegreeProfile(2, {2})) == 1);
    CHECK(chi_open_inclusion_exclusion(DegreeProfile(2, {1, 1})) == 0);
    for (int n = 1; n <= 4; ++n) {
        for (std::vector<long long> degrees :
             {std::vector<long long>{3}, {1, 2}, {2, 2}, {1, 2, 3}, {2, 2, 5}, {1, 1, 1, 4}}) {
            DegreeProfile p(n, degrees);
            CHECK(chi_open_series(p) == chi_open_inclusion_exclusion(p));
        }
    }
}

TEST_CASE("closed form route") {
    CHECK(chi_open_closed_form(DegreeProfile(2, {1, 2})) == Rat(1));
    CHECK(chi_open_closed_form(DegreeProfile(2, {1, 3})) == Rat(4));
    CHECK_THROWS_AS(chi_open_closed_form(DegreeProfile(2, {2, 2})), std::domain_error);
    CHECK_THROWS_AS(chi_open_closed_form(DegreeProfile(2, {2})), std::domain_error);

    for (int n = 1; n <= 5; ++n) {
        for (std::vector<long long> degrees :
             {std::vector<long long>{1, 2}, {1, 3}, {2, 5}, {1, 2, 3}, {1, 2, 3, 4}, {2, 3, 5}}) {
            DegreeProfile p(n, degrees);
            const Rat closed = chi_open_closed_form(p);
            CHECK(rat_is_integer(closed));
            CHECK(closed == Rat(chi_open_series(p)));
        }
    }
}

TEST_CASE("series coefficient polynomial identity") {
    CHECK(series_coefficient_polynomial_check(DegreeProfile(2, {1, 2}), 0) == Rat(1));
    CHECK(series_coefficient_polynomial_check(DegreeProfile(2, {1, 2}), 1) == Rat(-3));
    CHECK(series_coefficient_polynomial_check(DegreeProfile(2, {1, 3}), 2) == Rat(13));
    CHECK_THROWS_AS(series_coefficient_polynomial_check(DegreeProfile(2, {2, 2}), 1),
                    std::domain_error);
    for (int k = 0; k <= 4; ++k)
        CHECK_NOTHROW(series_coefficient_polynomial_check(DegreeProfile(4, {1, 2, 5}), k));
}

TEST_CASE("m = 1 homogeneous Milnor number identity") {
    for (long long d = 1; d <= 10; ++d) {
        for (int n = 1; n <= 8; ++n) {
            const long long chi = chi_open_series(DegreeProfile(n, {d}));
            BigInt rhs = 1;
            for (int t = 0; t < n + 1; ++t) rhs *= (1 - BigInt(d));
            CHECK(BigInt(1) - d * BigInt(chi) == rhs);
        }
    }
}

TEST_CASE("generic central arrangement closed form") {
    for (int m = 1; m <= 10; ++m) {
        for (int n = 1; n <= 8; ++n) {
            DegreeProfile p(n, std::vector<long long>(static_cast<size_t>(m), 1));
            const long long expected = ((n % 2 == 0) ? 1 : -1) * gen_binomial(m - 2, n);
            CHECK(chi_open_series(p) == expected);
        }
    }
}
