#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vancoh/cochain.hpp"
#include "vancoh/koszul.hpp"
#include "vancoh/matrix.hpp"
#include "vancoh/numtheory.hpp"
#include "vancoh/rational.hpp"
#include "vancoh/series.hpp"

using namespace vancoh;

namespace {

// Independent oracle for the truncated product: plain double loop over all
// index pairs, dropping anything above the order.
TruncSeries naive_product(const TruncSeries& a, const TruncSeries& b) {
    const int n = a.order();
    std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (i + j <= n) c[static_cast<size_t>(i + j)] += a.coefficient(i) * b.coefficient(j);
    return TruncSeries(n, std::move(c));
}

TruncSeries from_ints(std::vector<long long> v) {
    std::vector<Rat> c(v.size());
    for (size_t i = 0; i < v.size(); ++i) c[i] = Rat(v[i]);
    return TruncSeries(static_cast<int>(v.size()) - 1, std::move(c));
}

}  // namespace

TEST_CASE("rational helpers") {
    Rat r = make_rat(BigInt(6), BigInt(-4));
    CHECK(rat_num(r) == -3);
    CHECK(rat_den(r) == 2);
    CHECK(rat_to_string(r) == "-3/2");
    CHECK(rat_from_string("-3/2") == r);
    CHECK(rat_from_string("7") == Rat(7));
    CHECK(!rat_is_integer(r));
    CHECK(rat_to_integer(Rat(5), "test") == 5);
    CHECK_THROWS_AS(rat_to_integer(r, "test"), InternalInvariantError);
    CHECK_THROWS_AS(rat_from_string("1.5"), SchemaError);
}

TEST_CASE("series_mul matches the spec examples") {
    const auto one_plus_t = from_ints({1, 1, 0});
    CHECK(series_mul(one_plus_t, one_plus_t) == from_ints({1, 2, 1}));

    const auto f = from_ints({3, -1, 7, 2});
    CHECK(series_mul(f, TruncSeries::one(3)) == f);

    // (1 - 2T + 4T^2)(1 + 2T) truncated at order 2; oracle is the naive loop.
    const auto a = from_ints({1, -2, 4});
    const auto b = from_ints({1, 2, 0});
    const auto prod = series_mul(a, b);
    CHECK(prod == from_ints({1, 0, 0}));
    CHECK(prod == naive_product(a, b));

    CHECK_THROWS_AS(series_mul(from_ints({1, 1}), from_ints({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("series_geom_inverse") {
    CHECK(series_geom_inverse(2, 2) == from_ints({1, -2, 4}));
    CHECK(series_geom_inverse(1, 3) == from_ints({1, -1, 1, -1}));
    CHECK_THROWS_AS(series_geom_inverse(0, 2), std::invalid_argument);
}

TEST_CASE("geometric inverse multiplies back to one") {
    for (long long d = 1; d <= 7; ++d) {
        for (int n = 0; n <= 8; ++n) {
            const auto inv = series_geom_inverse(d, n);
            CHECK(series_mul(inv, TruncSeries::one_plus_dt(d, n)) == TruncSeries::one(n));
        }
    }
}

TEST_CASE("rank of small matrices") {
    CHECK(rank(RatMatrix(0, 0)) == 0);
    CHECK(rank(RatMatrix::identity(4)) == 4);
    RatMatrix ones(2, 2, {Rat(1), Rat(1), Rat(1), Rat(1)});
    CHECK(rank(ones) == 1);
    RatMatrix tall(3, 2, {Rat(1), Rat(0), Rat(0), Rat(1), Rat(1), Rat(1)});
    CHECK(rank(tall) == 2);
}

TEST_CASE("rank equals rank of the transpose on random matrices") {
    std::mt19937_64 rng(20240531);
    std::uniform_int_distribution<int> dim(0, 6), entry(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
        const size_t r = static_cast<size_t>(dim(rng)), c = static_cast<size_t>(dim(rng));
        RatMatrix m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("kernel basis vectors are kernel vectors") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dim(1, 5), entry(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
        const size_t r = static_cast<size_t>(dim(rng)), c = static_cast<size_t>(dim(rng));
        RatMatrix m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
        const auto basis = kernel_basis(m);
        CHECK(basis.size() == c - rank(m));
        for (const auto& v : basis)
            for (const auto& x : apply_matrix(m, v)) CHECK(x == 0);
    }
}

TEST_CASE("cohomology dims") {
    SECTION("zero differentials return component dims") {
        CochainComplex c(0, {2, 3}, {RatMatrix(3, 2)});
        const auto h = cohomology_dims(c);
        REQUIRE(h.size() == 2);
        CHECK(h[0] == std::pair<int, long long>{0, 2});
        CHECK(h[1] == std::pair<int, long long>{1, 3});
    }
    SECTION("identity differential is exact") {
        CochainComplex c(0, {1, 1}, {RatMatrix::identity(1)});
        for (const auto& [deg, dim] : cohomology_dims(c)) CHECK(dim == 0);
    }
    SECTION("koszul m=2 is exact, ranks 1 and 1") {
        const auto k = koszul_complex(2);
        CHECK(rank(k.differentials()[0]) == 1);
        CHECK(rank(k.differentials()[1]) == 1);
        for (const auto& [deg, dim] : cohomology_dims(k)) CHECK(dim == 0);
    }
    SECTION("d compose d nonzero is rejected") {
        CochainComplex bad(0, {1, 1, 1}, {RatMatrix::identity(1), RatMatrix::identity(1)});
        CHECK(!bad.is_complex());
        CHECK_THROWS_AS(cohomology_dims(bad), InvalidComplexError);
    }
}

TEST_CASE("euler characteristic is preserved by cohomology") {
    for (int m = 1; m <= 6; ++m) {
        for (int cut = 0; cut <= m; ++cut) {
            const auto c = sigma_truncate(koszul_complex(m), cut, TruncSide::AtLeast);
            long long chi_h = 0;
            for (const auto& [deg, dim] : cohomology_dims(c))
                chi_h += (deg % 2 == 0) ? dim : -dim;
            CHECK(chi_h == c.euler_characteristic());
        }
    }
}

TEST_CASE("gcd lcm binomial") {
    CHECK(gcd_list({2, 4}) == 2);
    CHECK(lcm_list({2, 3}) == 6);
    CHECK(gcd_list({5}) == 5);
    CHECK(binomial(3, 1) == 3);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(gen_binomial(-1, 1) == -1);
    CHECK(gen_binomial(-1, 6) == 1);
    CHECK(gen_binomial(-3, 2) == 6);
    CHECK(gen_binomial(5, 2) == 10);
    CHECK(gen_binomial(2, 5) == 0);
    CHECK_THROWS_AS(gen_binomial(3, -1), std::invalid_argument);
}

TEST_CASE("alternating binomial sum identity") {
    for (long long m = 1; m <= 20; ++m) {
        for (long long n = 1; n <= 20; ++n) {
            long long sum = 0;
            for (long long k = 0; k <= n - 1; ++k) {
                const long long term = gen_binomial(m - 1, n - 1 - k);
                sum += (k % 2 == 0) ? term : -term;
            }
            CHECK(gen_binomial(m - 2, n - 1) == sum);
        }
    }
}

TEST_CASE("the identity check catches an off-by-one binomial") {
    // mutation sanity: shifting the upper index by one must break the
    // alternating-sum identity somewhere in the checked range
    auto broken = [](long long m, long long k) { return gen_binomial(m + 1, k); };
    bool detected = false;
    for (long long m = 1; m <= 20 && !detected; ++m) {
        for (long long n = 1; n <= 20 && !detected; ++n) {
            long long sum = 0;
            for (long long k = 0; k <= n - 1; ++k) {
                const long long term = broken(m - 1, n - 1 - k);
                sum += (k % 2 == 0) ? term : -term;
            }
            detected = gen_binomial(m - 2, n - 1) != sum;
        }
    }
    CHECK(detected);
}

TEST_CASE("phi moebius divisors") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);
    CHECK(divisors(12) == std::vector<long long>{1, 2, 3, 4, 6, 12});
    long long phi_sum = 0;
    for (long long d : divisors(36)) phi_sum += euler_phi(d);
    CHECK(phi_sum == 36);
}
