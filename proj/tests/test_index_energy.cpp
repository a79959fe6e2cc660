#include <catch_amalgamated.hpp>

#include "sintk/index_energy.hpp"
#include "test_util.hpp"

using namespace sintk;

namespace {

std::vector<Integer> zs(std::initializer_list<long> xs) {
    std::vector<Integer> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

WeylChamberPoint su2(const Rational& lambda) {
    return WeylChamberPoint::from_eigenvalues(build_root_system("A1"), {lambda, -lambda});
}

} // namespace

TEST_CASE("SU(2) dimension and energy specializations") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        Rational lambda(testutil::random_int(rng, 1, 11), 24);
        lambda.canonicalize();
        auto phi = su2(lambda);
        long k = testutil::random_int(rng, -5, 5), l = testutil::random_int(rng, -5, 5);
        int g = testutil::random_int(rng, 0, 3);
        long ss = testutil::random_int(rng, -6, 6), bp = testutil::random_int(rng, 0, 3),
             b1 = testutil::random_int(rng, 0, 3);
        SurfaceData surf{{g}, ss};
        FourManifoldData x{bp, b1};
        ChargePair c{k, zs({l})};
        CHECK(formal_dimension(phi, c, surf, x) == 8 * k + 4 * l + (2 - 2 * g) - 3 * (bp - b1 + 1));
        CHECK(energy(phi, c, surf) == 64 * (Rational(k) + 2 * lambda * l - lambda * lambda * ss));
    }
    CHECK(formal_dimension(su2(Rational(1, 4)), {0, zs({0})}, SurfaceData{{0}, 0}, {}) == -1);
    CHECK(energy(su2(Rational(1, 4)), {0, zs({0})}, SurfaceData{{0}, 0}) == 0);
}

TEST_CASE("SU(N) block (1, N-1) dimension") {
    for (int n = 2; n <= 7; ++n) {
        auto phi = su_n_point(su_n_monotone({1, n - 1}));
        for (long k = -2; k <= 2; ++k)
            for (long l = -3; l <= 3; ++l) {
                SurfaceData surf{{1, 0}, 0};
                FourManifoldData x{1, 0};
                CHECK(formal_dimension(phi, {k, zs({l})}, surf, x) ==
                      4 * n * k + 2 * n * l + (n - 1) * 2 - (n * n - 1) * 2);
            }
    }
}

TEST_CASE("block dimension formula agrees with the general formula") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> mult;
        int blocks = testutil::random_int(rng, 2, 4);
        for (int b = 0; b < blocks; ++b) mult.push_back(testutil::random_int(rng, 1, 3));
        auto pat = su_n_monotone(mult);
        auto phi = su_n_point(pat);
        std::vector<Integer> ls;
        Integer total = 0;
        for (int b = 0; b + 1 < blocks; ++b) {
            ls.emplace_back(testutil::random_int(rng, -4, 4));
            total += ls.back();
        }
        ls.push_back(-total);
        Integer k = testutil::random_int(rng, -3, 3);
        SurfaceData surf = SurfaceData::with_chi(2 * testutil::random_int(rng, -2, 1), testutil::random_int(rng, -5, 5));
        FourManifoldData x{testutil::random_int(rng, 0, 2), testutil::random_int(rng, 0, 2)};
        ChargePair c{k, su_n_lattice_coords(ls)};
        CHECK(su_n_dimension(mult, k, ls, surf, x) == formal_dimension(phi, c, surf, x));
        CHECK(su_n_energy(pat, k, ls, surf.self_intersection) == energy(phi, c, surf));
        CHECK(su_n_framed_dimension(mult, k, ls) == framed_dimension(phi, c));
    }
    CHECK(su_n_dimension({1, 1}, 2, zs({3, -3}), SurfaceData{{1}, 0}, {}) == 16 + 12 + 0 - 3);
    for (int n = 2; n <= 6; ++n)
        CHECK(su_n_dimension({1, n - 1}, 0, zs({0, 0}), SurfaceData{{1}, 0}, {}) == -(n * n - 1));
    CHECK_THROWS_AS(su_n_dimension({1, 1}, 0, zs({1, 0}), SurfaceData{{0}, 0}, {}), ChargeImbalance);
}

TEST_CASE("root-sum and Killing energy forms agree across types") {
    std::mt19937 rng(23);
    auto types = testutil::types_up_to_rank(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto rs = build_root_system(types[trial % types.size()]);
        QVec coords(rs->rank());
        for (auto& x : coords) x = frac(testutil::random_int(rng, 0, 3), 5 * rs->coxeter());
        if (is_zero(coords)) coords[0] = frac(1, 5 * rs->coxeter());
        WeylChamberPoint phi(rs, coords);
        auto lat = monopole_lattice(phi);
        ChargePair c{testutil::random_int(rng, -3, 3), {}};
        for (size_t i = 0; i < lat.rank(); ++i) c.l.emplace_back(testutil::random_int(rng, -3, 3));
        Integer ss = testutil::random_int(rng, -4, 4);
        QVec l = lat.element(c.l);
        QVec xi = detail::charge_lift(phi, c);
        CHECK(energy_killing(phi, l, c.k, ss) == energy_root_sum(phi, xi, c.k, ss));
    }
}

TEST_CASE("monotone elements make energy proportional to dimension") {
    for (auto t : testutil::types_up_to_rank(5)) {
        auto rs = build_root_system(t);
        for (unsigned mask = 0; mask + 1 < (1u << rs->rank()); ++mask) {
            std::vector<int> s0;
            for (int i = 0; i < rs->rank(); ++i)
                if ((mask >> i) & 1) s0.push_back(i);
            auto phi = solve_monotone({rs, s0});
            auto lat = monopole_lattice(phi);
            ChargePair c{2, std::vector<Integer>(lat.rank(), Integer(1))};
            QVec l = lat.element(c.l);
            Rational lin = 8 * (Rational(4 * rs->dual_coxeter()) * 2 + 2 * rs->killing(phi.vector(), l));
            CHECK(lin == 8 * Rational(framed_dimension(phi, c)));
        }
    }
}

TEST_CASE("framed dimension") {
    auto phi = su2(Rational(1, 4));
    CHECK(framed_dimension(phi, {0, zs({0})}) == 0);
    CHECK(framed_dimension(phi, {1, zs({0})}) == 8);
    CHECK_THROWS_AS(framed_dimension(phi, {1, zs({0, 1})}), LatticeMismatch);
    // On (S^4, S^2) the formal dimension is the framed one minus dim G_Phi.
    for (int n = 2; n <= 5; ++n) {
        auto p = su_n_point(su_n_monotone({1, n - 1}));
        for (long k = 0; k <= 2; ++k)
            for (long l = -2; l <= 2; ++l) {
                ChargePair c{k, zs({l})};
                int dim_stab = (n - 1) * (n - 1) - 1 + 1;
                CHECK(formal_dimension(p, c, SurfaceData{{0}, 0}, {}) == framed_dimension(p, c) - dim_stab);
            }
    }
}

TEST_CASE("action shifts and the U(N) congruence") {
    CHECK(action_shifts(2).cs_shift == -16);
    CHECK(action_shifts(2).grading_shift == -4);
    CHECK(action_shifts(3).cs_shift == -32);
    CHECK(action_shifts(3).grading_shift == -8);
    for (int n = 2; n <= 10; ++n) {
        auto s = action_shifts(n);
        CHECK(n * s.grading_shift == -4 * (n - 1) * n);
        CHECK((n * s.grading_shift) % 4 == 0);
        CHECK(n * 2 * s.cs_shift == -32 * (n - 1) * n);
    }
    CHECK(u_n_congruence(2, 1) == 6);
    CHECK(u_n_congruence(2, 0) == 0);
    CHECK(u_n_congruence(3, 2) == 4);
    CHECK(u_n_congruence(5, -3) == 4);
}

TEST_CASE("orientation parity") {
    auto a1 = build_root_system("A1");
    std::vector<QVec> zero(2, zero_vec(2));
    std::vector<std::vector<Integer>> cup{{0, 1}, {1, 0}};
    CHECK(orientation_parity(*a1, zero, zero, cup).parity == 0);

    // Even forms with coroot-lattice classes preserve orientation for SU(2).
    std::mt19937 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<Integer>> q{{2 * testutil::random_int(rng, -2, 2), testutil::random_int(rng, -3, 3)}, {0, 2 * testutil::random_int(rng, -2, 2)}};
        q[1][0] = q[0][1];
        std::vector<QVec> a, b;
        for (int i = 0; i < 2; ++i) {
            a.push_back(Rational(testutil::random_int(rng, -3, 3)) * a1->simple_coroot(0));
            b.push_back(Rational(testutil::random_int(rng, -3, 3)) * a1->simple_coroot(0));
        }
        CHECK(orientation_parity(*a1, a, b, q).parity == 0);
    }

    // Oracle: Killing-form version 1/2<a.b> + 1/4<b.b> + rho(b).rho(b).
    auto b3 = build_root_system("B3");
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::vector<Integer>> q(2, std::vector<Integer>(2));
        for (auto& row : q)
            for (auto& x : row) x = testutil::random_int(rng, -3, 3);
        q[1][0] = q[0][1];
        std::vector<QVec> a, b;
        for (int i = 0; i < 2; ++i) {
            QVec av = zero_vec(3), bv = zero_vec(3);
            for (int j = 0; j < 3; ++j) {
                av += Rational(testutil::random_int(rng, -2, 2)) * b3->simple_coroot(j);
                bv += Rational(2 * testutil::random_int(rng, -2, 2)) * b3->simple_coroot(j);
            }
            a.push_back(av);
            b.push_back(bv);
        }
        Rational oracle = 0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Rational qq = q[i][j];
                oracle += qq * (b3->killing(a[i], b[j]) / 2 + b3->killing(b[i], b[j]) / 4 +
                                dot(b3->weyl_vector(), b[i]) * dot(b3->weyl_vector(), b[j]));
            }
        REQUIRE(is_integer(oracle));
        auto res = orientation_parity(*b3, a, b, q);
        CHECK(res.t1 + res.t2 + res.t3 == oracle);
        CHECK(res.parity == (oracle.get_num() % 2 == 0 ? 0 : 1));
    }

    std::vector<QVec> half{QVec{Rational(1, 2), Rational(-1, 2)}};
    CHECK_THROWS_AS(orientation_parity(*a1, half, half, {{Integer(1)}}), NonIntegralTerm);
}

TEST_CASE("bubble inequalities") {
    auto phi = su2(Rational(1, 4));
    auto r0 = bubble_feasible(phi, {0, zs({0})});
    CHECK(r0.feasible);
    CHECK(r0.framed_dimension == 0);
    CHECK_FALSE(bubble_feasible(phi, {-1, zs({0})}).feasible);

    for (int n = 2; n <= 6; ++n)
        for (int n1 = 1; n1 < n; ++n1) {
            auto p = su_n_point(su_n_monotone({n1, n - n1}));
            Integer min_positive = -1;
            for (long k = -3; k <= 3; ++k)
                for (long l = -3 * n; l <= 3 * n; ++l) {
                    auto rep = bubble_feasible(p, {k, zs({l})});
                    if (!rep.feasible || rep.framed_dimension == 0) continue;
                    CHECK(rep.framed_dimension % (2 * n) == 0);
                    if (min_positive < 0 || rep.framed_dimension < min_positive) min_positive = rep.framed_dimension;
                }
            CHECK(min_positive == 2 * n);
        }

    // Every feasible nonzero charge has framed dimension at least 4.
    for (auto t : testutil::types_up_to_rank(4)) {
        auto rs = build_root_system(t);
        auto p = solve_monotone({rs, {}});
        std::vector<Integer> l(rs->rank());
        for (long k = 0; k <= 1; ++k)
            for (int trial = 0; trial < 81; ++trial) {
                int code = trial;
                for (auto& x : l) {
                    x = code % 3 - 1;
                    code /= 3;
                }
                auto rep = bubble_feasible(p, {k, l});
                if (rep.feasible && rep.framed_dimension != 0) CHECK(rep.framed_dimension >= 4);
            }
    }
}
