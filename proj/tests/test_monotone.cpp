#include <catch_amalgamated.hpp>

#include "sintk/monotone.hpp"
#include "test_util.hpp"

using namespace sintk;

TEST_CASE("SU(2) regular monotone element") {
    auto a1 = build_root_system("A1");
    auto phi = solve_monotone({a1, {}});
    CHECK(phi.coords() == QVec{Rational(1, 2)});
    CHECK(phi.vector() == QVec{Rational(1, 4), Rational(-1, 4)});
    CHECK(check_monotone(phi).monotone);
}

TEST_CASE("SU(N) block (1, N-1) monotone element") {
    for (int n = 2; n <= 8; ++n) {
        auto rs = build_root_system(CartanType{'A', n - 1});
        auto phi = solve_monotone({rs, block_s0({1, n - 1})});
        QVec expected(n, Rational(-1, 2 * n));
        expected[0] = Rational(n - 1, 2 * n);
        expected[0].canonicalize();
        CHECK(phi.vector() == expected);
        auto p = su_n_monotone({1, n - 1});
        CHECK(p.eigenvalues() == expected);
    }
}

TEST_CASE("sign-sum eigenvalue formula") {
    CHECK(su_n_monotone({1, 1}).lambdas == QVec{Rational(1, 4), Rational(-1, 4)});
    auto p = su_n_monotone({2, 3});
    CHECK(p.lambdas == QVec{Rational(3, 10), Rational(-1, 5)});
    CHECK(2 * p.lambdas[0] + 3 * p.lambdas[1] == 0);
    // The block formula agrees with 2 Pi(rho^dagger) for random block patterns.
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<int> mult;
        int blocks = testutil::random_int(rng, 2, 4);
        for (int b = 0; b < blocks; ++b) mult.push_back(testutil::random_int(rng, 1, 3));
        auto pat = su_n_monotone(mult);
        auto rs = build_root_system(CartanType{'A', pat.n() - 1});
        CHECK(solve_monotone({rs, block_s0(mult)}).vector() == pat.eigenvalues());
    }
}

TEST_CASE("G2 regular monotone element") {
    auto g2 = build_root_system("G2");
    auto phi = solve_monotone({g2, {}});
    CHECK(phi.vector() == Rational(2) * g2->dagger(g2->weyl_vector()));
    CHECK(phi.theta_value() == Rational(3, 4));
}

TEST_CASE("monotone check detects wrong constants") {
    auto a1 = build_root_system("A1");
    auto third = WeylChamberPoint::from_eigenvalues(a1, {Rational(1, 3), Rational(-1, 3)});
    auto res = check_monotone(third);
    CHECK_FALSE(res.monotone);
    REQUIRE(res.violations.size() == 1);
    CHECK(res.violations[0].killing_pairing == Rational(8, 3));
    CHECK(res.violations[0].twice_rho == 2);

    auto a2 = build_root_system("A2");
    auto phi = solve_monotone({a2, {}});
    WeylChamberPoint half(a2, Rational(1, 2) * phi.coords());
    CHECK_FALSE(check_monotone(half).monotone);
    CHECK_FALSE(kahler_consistent(half));
}

TEST_CASE("monotone solutions over all stabilizer patterns") {
    for (auto t : testutil::types_up_to_rank(6)) {
        auto rs = build_root_system(t);
        for (unsigned mask = 0; mask + 1 < (1u << rs->rank()); ++mask) {
            std::vector<int> s0;
            for (int i = 0; i < rs->rank(); ++i)
                if ((mask >> i) & 1) s0.push_back(i);
            auto phi = solve_monotone({rs, s0});
            CHECK(phi.theta_value() < 1);
            CHECK(check_monotone(phi).monotone);
            CHECK(kahler_consistent(phi));
        }
        std::vector<int> all(rs->rank());
        std::iota(all.begin(), all.end(), 0);
        CHECK_THROWS_AS(solve_monotone({rs, all}), DegeneratePattern);
    }
}

TEST_CASE("regular monotone element has theta value 1 - 1/h") {
    for (auto t : testutil::types_up_to_rank(8)) {
        auto rs = build_root_system(t);
        CHECK(solve_monotone({rs, {}}).theta_value() == 1 - Rational(1, rs->dual_coxeter()));
    }
}
