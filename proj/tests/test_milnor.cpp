#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vancoh/milnor.hpp"

using namespace vancoh;

TEST_CASE("classify_eigenvalue") {
    CHECK(classify_eigenvalue(1, {3, 5, 7}) == std::vector<int>{1, 2, 3});
    CHECK(classify_eigenvalue(2, {2, 4}) == std::vector<int>{1, 2});
    CHECK(classify_eigenvalue(6, {2, 3}).empty());
    CHECK(classify_eigenvalue(3, {2, 3, 9, 4}) == std::vector<int>{2, 3});
    // J(lambda) is everything exactly when c divides gcd(a)
    for (long long c = 1; c <= 8; ++c) {
        const std::vector<long long> a = {4, 6, 10};
        const bool full = classify_eigenvalue(c, a).size() == a.size();
        CHECK(full == (gcd_list(a) % c == 0));
    }
}

TEST_CASE("eigenvalue class populations") {
    CHECK(EigenvalueClass(1).count == 1);
    CHECK(EigenvalueClass(2).count == 1);
    CHECK(EigenvalueClass(12).count == 4);
    CHECK_THROWS_AS(EigenvalueClass(0), std::invalid_argument);
}

TEST_CASE("betti table for the generic arrangement of four planes") {
    const auto in = ConeSingularityInput::smooth(2, {1, 1, 1, 1}, {1, 1, 1, 1});
    CHECK(in.e() == 4);
    CHECK(in.d() == 1);
    CHECK(in.chi_u() == 1);
    const auto t = cone_betti_table(in);
    CHECK(t.class_orders == std::vector<long long>{1, 2, 4});
    CHECK(t.entry(1, 0).value() == 1);
    CHECK(t.entry(1, 1).value() == 3);
    CHECK(t.entry(1, 2).value() == 3);
    for (long long c : {2ll, 4ll}) {
        CHECK(t.entry(c, 0).value() == 0);
        CHECK(t.entry(c, 1).value() == 0);
        CHECK(t.entry(c, 2).value() == 1);
    }
    CHECK(t.all_semisimple());
    CHECK(t.entry(1, 0).hodge_jj);
    CHECK(t.entry(1, 1).hodge_jj);
    CHECK(!t.entry(1, 2).hodge_jj);
}

TEST_CASE("betti table for the quadric cone") {
    const auto t = cone_betti_table(ConeSingularityInput::smooth(2, {1}, {2}));
    CHECK(t.class_orders == std::vector<long long>{1, 2});
    CHECK(t.entry(1, 0).value() == 1);
    CHECK(t.entry(1, 1).value() == 0);
    CHECK(t.entry(1, 2).value() == 0);   // chi(U) + binom(-1, 1) = 1 - 1
    CHECK(t.entry(2, 0).value() == 0);
    CHECK(t.entry(2, 2).value() == 1);
    // total Milnor number over all classes
    long long mu = 0;
    for (long long c : t.class_orders) mu += euler_phi(c) * t.entry(c, 2).value();
    CHECK(mu == 1);
}

TEST_CASE("betti table for a = (2,3), degrees (1,1)") {
    const auto t = cone_betti_table(ConeSingularityInput::smooth(2, {2, 3}, {1, 1}));
    CHECK(t.e == 5);
    CHECK(t.d == 1);
    CHECK(t.chi_u == 0);
    CHECK(t.entry(1, 0).value() == 1);
    CHECK(t.entry(1, 1).value() == 1);
    CHECK(t.entry(1, 2).value() == 0);
    CHECK(t.entry(5, 0).value() == 0);
    CHECK(t.entry(5, 1).value() == 0);
    CHECK(t.entry(5, 2).value() == 0);
}

TEST_CASE("explicit-data cone inputs") {
    const auto t = cone_betti_table(ConeSingularityInput::with_explicit(2, 4, 1, 1, 4));
    CHECK(t.entry(1, 1).value() == 3);
    CHECK_THROWS_AS(ConeSingularityInput::with_explicit(2, 5, 2, 1, 3), InconsistentInputError);
    // negative-rank data is rejected: first the c-not-dividing-d branch,
    // then the top unipotent rank
    CHECK_THROWS_AS(cone_betti_table(ConeSingularityInput::with_explicit(2, 4, 1, -5, 2)),
                    InconsistentInputError);
    CHECK_THROWS_AS(cone_betti_table(ConeSingularityInput::with_explicit(2, 2, 2, 0, 1)),
                    InconsistentInputError);
}

TEST_CASE("link-case bounds") {
    SECTION("n=3 m=3 unipotent class without rhm") {
        const auto t = link_betti_bounds(SncLinkInput(3, {1, 1, 1}, false));
        CHECK(t.entry(1, 0).value() == 1);
        CHECK(t.entry(1, 1).value() == 2);
        const auto& top = t.entry(1, 2);
        CHECK(top.kind == BettiEntry::Kind::Interval);
        CHECK(top.lo == 0);
        CHECK(top.hi == 1);
        CHECK(t.entry(1, 3).kind == BettiEntry::Kind::Undetermined);
    }
    SECTION("rhm upgrades the top covered degree to an equality") {
        const auto t = link_betti_bounds(SncLinkInput(3, {1, 1, 1}, true));
        CHECK(t.entry(1, 2).value() == 1);
    }
    SECTION("classes with c not dividing d vanish through the covered range") {
        const auto t = link_betti_bounds(SncLinkInput(3, {2, 2, 3}, false));
        CHECK(t.d == 1);
        // c = 2 divides a_1, a_2 but not d = 1; delta = 0 covers j <= 1
        CHECK(t.entry(2, 0).value() == 0);
        CHECK(t.entry(2, 1).value() == 0);
        CHECK(t.entry(2, 2).kind == BettiEntry::Kind::Undetermined);
        CHECK(t.entry(3, 0).value() == 0);
    }
    SECTION("semisimple flags cover exactly j <= n-2+delta") {
        const auto t = link_betti_bounds(SncLinkInput(4, {2, 4}, false));
        for (long long c : t.class_orders) {
            const int delta = c == 1 ? 1 : 0;
            for (int j = 0; j <= t.n; ++j)
                CHECK(t.entry(c, j).semisimple == (j <= t.n - 2 + delta));
        }
    }
    SECTION("n = 1 inputs are rejected") {
        CHECK_THROWS_AS(SncLinkInput(1, {1, 1}, false), InconsistentInputError);
    }
}

TEST_CASE("link bounds agree with the cone table below degree n") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> pick_n(2, 5), pick_m(1, 5), pick_a(1, 6), pick_d(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = pick_n(rng), m = pick_m(rng);
        std::vector<long long> a(static_cast<size_t>(m)), deg(static_cast<size_t>(m));
        for (auto& x : a) x = pick_a(rng);
        for (auto& x : deg) x = pick_d(rng);
        const auto t03 = cone_betti_table(ConeSingularityInput::smooth(n, a, deg));
        const auto t02 = link_betti_bounds(SncLinkInput(n, a, true));
        for (long long c : t02.class_orders) {
            if (std::find(t03.class_orders.begin(), t03.class_orders.end(), c) ==
                t03.class_orders.end())
                continue;
            for (int j = 0; j < n; ++j) {
                const auto& e02 = t02.entry(c, j);
                if (e02.is_exact()) CHECK(e02.value() == t03.entry(c, j).value());
            }
        }
    }
}

TEST_CASE("characteristic polynomials per degree") {
    SECTION("generic arrangement") {
        const auto t = cone_betti_table(ConeSingularityInput::smooth(2, {1, 1, 1, 1}, {1, 1, 1, 1}));
        const auto polys = char_poly_per_degree(t);
        REQUIRE(polys.size() == 3);
        CHECK(polys[0] == CycloProduct::factor(1, 1));
        CHECK(polys[1] == CycloProduct::factor(1, 3));
        CHECK(polys[2] == CycloProduct::factor(1, 2) * CycloProduct::factor(4, 1));
        CHECK(polys[2].to_string() == "(1-t)^2(1-t^4)");
    }
    SECTION("quadric cone degree 2 is the order-two class factor") {
        const auto t = cone_betti_table(ConeSingularityInput::smooth(2, {1}, {2}));
        const auto polys = char_poly_per_degree(t);
        CHECK(polys[2] == CycloProduct::factor(2, 1) * CycloProduct::factor(1, -1));
        const auto mult = polys[2].expanded_class_multiplicities();
        CHECK(mult.at(1) == 0);
        CHECK(mult.at(2) == 1);
    }
    SECTION("empty degree") {
        const auto t = cone_betti_table(ConeSingularityInput::smooth(2, {2, 3}, {1, 1}));
        CHECK(char_poly_per_degree(t)[2].is_one());
    }
    SECTION("interval tables are unsupported") {
        const auto t = link_betti_bounds(SncLinkInput(2, {1, 1}, false));
        CHECK_THROWS_AS(char_poly_per_degree(t), std::invalid_argument);
    }
}

TEST_CASE("zeta function identity") {
    const auto generic = cone_betti_table(
        ConeSingularityInput::smooth(2, {1, 1, 1, 1}, {1, 1, 1, 1}));
    CHECK(zeta_function(generic) == CycloProduct::factor(4, -1));
    CHECK(zeta_function(generic).to_string() == "(1-t^4)^-1");

    const auto quadric = cone_betti_table(ConeSingularityInput::smooth(2, {1}, {2}));
    CHECK(zeta_function(quadric) == CycloProduct::factor(2, -1));

    const auto chi_zero = cone_betti_table(ConeSingularityInput::smooth(2, {2, 3}, {1, 1}));
    CHECK(zeta_function(chi_zero).is_one());
}

TEST_CASE("zeta and column identities on random cone inputs") {
    std::mt19937_64 rng(20240405);
    std::uniform_int_distribution<int> pick_n(1, 6), pick_m(1, 6), pick_a(1, 6), pick_d(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = pick_n(rng), m = pick_m(rng);
        std::vector<long long> a(static_cast<size_t>(m)), deg(static_cast<size_t>(m));
        for (auto& x : a) x = pick_a(rng);
        for (auto& x : deg) x = pick_d(rng);
        const auto in = ConeSingularityInput::smooth(n, a, deg);
        const auto t = cone_betti_table(in);
        CHECK(zeta_function(t) == CycloProduct::factor(in.e(), -in.chi_u()));
        for (long long c : t.class_orders) CHECK(chi_lambda(t, c) == in.chi_u());
        for (long long c = 1; c <= in.e() + 3; ++c)
            if (in.e() % c != 0) CHECK(chi_lambda(t, c) == 0);
        for (long long c : t.class_orders)
            for (int j = 0; j <= n; ++j) CHECK(t.entry(c, j).value() >= 0);
    }
}

TEST_CASE("m = 1 Milnor number identity through the table") {
    for (long long d = 1; d <= 8; ++d) {
        for (int n = 1; n <= 6; ++n) {
            const auto t = cone_betti_table(ConeSingularityInput::smooth(n, {1}, {d}));
            BigInt mu = 0;
            for (long long c : t.class_orders)
                mu += BigInt(euler_phi(c)) * t.entry(c, n).value();
            BigInt expected = 1;
            for (int i = 0; i < n + 1; ++i) expected *= BigInt(d) - 1;
            CHECK(mu == expected);
        }
    }
}

TEST_CASE("chi_lambda columns") {
    const auto t = cone_betti_table(ConeSingularityInput::smooth(2, {1, 1, 1, 1}, {1, 1, 1, 1}));
    CHECK(chi_lambda(t, 1) == 1);
    CHECK(chi_lambda(t, 4) == 1);
    CHECK(chi_lambda(t, 3) == 0);
}

TEST_CASE("jordan bound is the plain sum") {
    CHECK(jordan_bound({}) == 0);
    CHECK(jordan_bound({{0, 0}, {1, 0}}) == 0);
    CHECK(jordan_bound({{0, 0}, {1, 1}}) == 1);
    CHECK(jordan_bound({{1, 2}, {2, 1}}) == 3);
    CHECK_THROWS_AS(jordan_bound({{0, -1}}), std::invalid_argument);
}

TEST_CASE("fiber-link rank consistency checker") {
    SECTION("f = xyz data is consistent") {
        const auto v = fiber_link_rank_check({0, 2}, {0, 3}, 1, 2);
        CHECK(v.pass);
        CHECK(v.failures.empty());
    }
    SECTION("perturbing any dim yields a reported failure") {
        CHECK(!fiber_link_rank_check({1, 2}, {0, 3}, 1, 2).pass);
        CHECK(!fiber_link_rank_check({0, 3}, {0, 3}, 1, 2).pass);
        CHECK(!fiber_link_rank_check({0, 2}, {1, 3}, 1, 2).pass);
        CHECK(!fiber_link_rank_check({0, 2}, {0, 4}, 1, 2).pass);
        CHECK(!fiber_link_rank_check({0, 2}, {0, 3}, 2, 2).pass);
    }
    SECTION("vacuous pass for n = 1 when the top relation holds") {
        CHECK(fiber_link_rank_check({0}, {0}, 0, 1).pass);
        CHECK(fiber_link_rank_check({5}, {9}, 4, 1).pass);
    }
    SECTION("direct contradiction in low degree") {
        const auto v = fiber_link_rank_check({1, 0, 0}, {0, 0, 0}, 0, 3);
        CHECK(!v.pass);
        REQUIRE(!v.failures.empty());
        CHECK(v.failures[0].find("degree 0") != std::string::npos);
    }
}

TEST_CASE("cyclo product algebra") {
    auto p = CycloProduct::factor(2, 3) * CycloProduct::factor(2, -3);
    CHECK(p.is_one());
    CHECK(CycloProduct::eigenvalue_class_factor(1, 2) == CycloProduct::factor(1, 2));
    // class of order 4: (1-t^4)/(1-t^2)
    const auto c4 = CycloProduct::eigenvalue_class_factor(4, 1);
    CHECK(c4 == CycloProduct::factor(4, 1) * CycloProduct::factor(2, -1));
    // grouping all classes dividing e recovers 1 - t^e
    for (long long e : {1ll, 2ll, 6ll, 12ll}) {
        CycloProduct total;
        for (long long c : divisors(e)) total *= CycloProduct::eigenvalue_class_factor(c, 1);
        CHECK(total == CycloProduct::factor(e, 1));
    }
    CHECK(CycloProduct::one().to_string() == "1");
}
