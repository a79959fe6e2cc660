#include <catch_amalgamated.hpp>

#include <chrono>
#include <numeric>
#include <random>

#include "sintk/knot/alexander.hpp"
#include "sintk/knot/compare.hpp"
#include "sintk/knot/jones.hpp"
#include "sintk/knot/khovanov.hpp"
#include "sintk/knot/presentation.hpp"

using namespace sintk;

namespace {

LaurentPoly q(int e) { return LaurentPoly::monomial(e); }

const PDCode left_trefoil = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
const PDCode figure_eight = parse_pd("PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]");

// Jones of T(a,b) in t = q^2: t^{(a-1)(b-1)/2} (1 - t^{a+1} - t^{b+1} + t^{a+b}) / (1 - t^2).
LaurentPoly torus_jones(int a, int b) {
    LaurentPoly num = LaurentPoly(1) - q(2 * (a + 1)) - q(2 * (b + 1)) + q(2 * (a + b));
    return exact_divide(num, LaurentPoly(1) - q(4)).shifted((a - 1) * (b - 1));
}

AbelianGroup grp(long free, std::vector<long> torsion = {}) {
    AbelianGroup g = AbelianGroup::free(free);
    for (long t : torsion) g.add_cyclic(Integer(t));
    return g;
}

LaurentPoly chi_times(const LaurentPoly& j) { return (q(1) + q(-1)) * j; }

std::vector<int> random_braid(std::mt19937& rng, int strands, int len) {
    std::uniform_int_distribution<int> gen(1, strands - 1), sign(0, 1);
    std::vector<int> w;
    for (int i = 0; i < len; ++i) w.push_back(sign(rng) ? gen(rng) : -gen(rng));
    return w;
}

} // namespace

TEST_CASE("PD parsing") {
    auto a = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]");
    auto b = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]");
    CHECK(a == b);
    CHECK(a.crossings.size() == 3);
    CHECK(parse_pd("PD[]").free_loops == 1);
    CHECK(parse_pd(a.to_string()) == a);
    CHECK_THROWS_AS(parse_pd("PD[X[1,2,2,3]]"), MalformedPD);
    CHECK_THROWS_AS(parse_pd("PD[X[1,4,2,5],X[3,6,4,1]]"), MalformedPD);
    CHECK_THROWS_AS(parse_pd("PD[X[1,4,2]]"), MalformedPD);
    CHECK_THROWS_AS(parse_pd("[[1,2,3]]"), MalformedPD);
    CHECK_THROWS_AS(parse_pd("[[1,2,\"a\",4]]"), MalformedPD);
    CHECK_THROWS_AS(parse_pd("knot"), MalformedPD);
    CHECK_THROWS_AS(parse_pd("   "), MalformedPD);
}

TEST_CASE("knot presentations") {
    CHECK(parse_knot("unknot").is_unknot());
    CHECK(parse_knot("torus:2,1").is_unknot());
    CHECK(parse_knot("2bridge:1/0").is_unknot());
    CHECK(parse_knot("torus:2,5").to_string() == "torus:2,5");
    CHECK(parse_knot("2bridge:7/3").to_string() == "2bridge:7/3");
    CHECK_THROWS_AS(parse_knot("torus:2,4"), InvalidInput);
    CHECK_THROWS_AS(parse_knot("2bridge:6/1"), InvalidInput);
    CHECK_THROWS_AS(parse_knot("torus:x,3"), InvalidInput);
    CHECK_THROWS_AS(parse_knot("pretzel:1,2,3"), InvalidInput);
}

TEST_CASE("oriented diagrams: writhe and mirrors") {
    CHECK(orient(braid_closure(2, {1, 1, 1})).writhe() == 3);
    CHECK(orient(left_trefoil).writhe() == -3);
    CHECK(orient(figure_eight).writhe() == 0);
    CHECK(orient(mirror(left_trefoil)).writhe() == 3);
    CHECK(orient(torus_diagram(3, 4)).writhe() == 8);
    CHECK(orient(torus_diagram(3, 4)).components == 1);
}

TEST_CASE("Jones polynomials of small knots") {
    CHECK(jones(PDCode{{}, 1}) == LaurentPoly(1));
    CHECK(jones(braid_closure(2, {1, 1, 1})) == q(2) + q(6) - q(8));
    CHECK(jones(left_trefoil) == q(-2) + q(-6) - q(-8));
    CHECK(jones(figure_eight) == q(4) - q(2) + LaurentPoly(1) - q(-2) + q(-4));
    for (int n : {3, 5, 7, 9}) CHECK(jones(torus_diagram(2, n)) == torus_jones(2, n));
    CHECK(jones(torus_diagram(3, 4)) == torus_jones(3, 4));
    CHECK(jones(torus_diagram(3, 5)) == torus_jones(3, 5));
}

TEST_CASE("mirror inverts q in the Jones polynomial") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto pd = braid_closure(3, random_braid(rng, 3, 6));
        CHECK(jones(mirror(pd)) == jones(pd).substitute_power(-1));
    }
}

TEST_CASE("unknot and trefoil Khovanov homology") {
    BigradedGroup unknot;
    unknot.add(0, 1, grp(1));
    unknot.add(0, -1, grp(1));
    CHECK(khovanov(PDCode{{}, 1}) == unknot);
    CHECK(khovanov(braid_closure(2, {1})) == unknot);
    CHECK(khovanov(braid_closure(2, {-1})) == unknot);

    BigradedGroup right;
    right.add(0, 1, grp(1));
    right.add(0, 3, grp(1));
    right.add(2, 5, grp(1));
    right.add(3, 7, grp(0, {2}));
    right.add(3, 9, grp(1));
    CHECK(khovanov(braid_closure(2, {1, 1, 1})) == right);
    CHECK(khovanov(left_trefoil).total() == grp(4, {2}));
    CHECK(khovanov(figure_eight).total() == grp(6, {2, 2}));
}

TEST_CASE("T(3,4) rational Khovanov homology") {
    auto kh = khovanov(torus_diagram(3, 4));
    std::map<std::pair<int, int>, long> free;
    for (const auto& [ij, g] : kh.entries)
        if (g.free_rank) free[ij] = g.free_rank;
    std::map<std::pair<int, int>, long> expected{{{0, 5}, 1},  {{0, 7}, 1},  {{2, 9}, 1},  {{3, 13}, 1},
                                                 {{4, 11}, 1}, {{4, 13}, 1}, {{5, 15}, 1}, {{5, 17}, 1}};
    CHECK(free == expected);
    CHECK(kh.total() == grp(8, {2}));
}

TEST_CASE("graded Euler characteristic is (q + 1/q) Jones") {
    std::vector<PDCode> diagrams{PDCode{{}, 1},       braid_closure(2, {1, 1, 1}), left_trefoil,
                                 figure_eight,        torus_diagram(2, 5),         torus_diagram(2, 7),
                                 torus_diagram(3, 4), two_bridge_diagram(7, 3),    two_bridge_diagram(9, 2)};
    for (const auto& pd : diagrams) CHECK(graded_euler_characteristic(khovanov(pd)) == chi_times(jones(pd)));
    std::mt19937 rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        auto pd = braid_closure(4, random_braid(rng, 4, 7));
        CHECK(graded_euler_characteristic(khovanov(pd)) == chi_times(jones(pd)));
    }
}

TEST_CASE("Khovanov homology is unchanged by Markov moves") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 12; ++trial) {
        auto w = random_braid(rng, 3, 6);
        auto kh = khovanov(braid_closure(3, w));
        // conjugation
        std::vector<int> conj(w.begin() + 1, w.end());
        conj.push_back(w.front());
        CHECK(khovanov(braid_closure(3, conj)) == kh);
        // stabilization, both signs
        for (int s : {4 - 1, -(4 - 1)}) {
            auto stab = w;
            stab.push_back(s);
            CHECK(khovanov(braid_closure(4, stab)) == kh);
        }
        // a cancelling pair
        auto r2 = w;
        r2.insert(r2.begin() + 2, {2, -2});
        CHECK(khovanov(braid_closure(3, r2)) == kh);
    }
}

TEST_CASE("two-bridge and torus diagrams of the same knot") {
    for (int p : {3, 5, 7}) CHECK(khovanov(two_bridge_diagram(p, 1)) == khovanov(torus_diagram(2, p)));
    CHECK(khovanov(two_bridge_diagram(5, 2)).total() == khovanov(figure_eight).total());
    CHECK(khovanov(torus_diagram(3, 2)) == khovanov(torus_diagram(2, 3)));
}

TEST_CASE("F2 Khovanov rank is twice the determinant for alternating knots") {
    auto f2_total = [](const BigradedGroup& kh) {
        long t = 0;
        for (const auto& [ij, r] : khovanov_f2_ranks(kh)) t += r;
        return t;
    };
    for (auto [p, qq] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {5, 2}, {7, 1}, {7, 2}, {7, 3}, {9, 2}, {11, 3}}) {
        Integer det = alexander_two_bridge(p, qq).evaluate(-1);
        if (det < 0) det = -det;
        CHECK(det == p);
        CHECK(Integer(f2_total(khovanov(two_bridge_diagram(p, qq)))) == 2 * det);
    }
}

TEST_CASE("T(4,5) Khovanov homology") {
    auto t0 = std::chrono::steady_clock::now();
    auto kh = khovanov(torus_diagram(4, 5));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(kh.total() == grp(14, {2, 2, 2, 2, 2, 4}));
    CHECK(graded_euler_characteristic(kh) == chi_times(torus_jones(4, 5)));
    CHECK(secs < 60);
}

TEST_CASE("crossing budget") {
    CHECK_THROWS_AS(khovanov(torus_diagram(5, 6)), TooLarge);
    CHECK_THROWS_AS(jones(torus_diagram(5, 6)), TooLarge);
    CHECK_THROWS_AS(khovanov(torus_diagram(2, 5), {4}), TooLarge);
}

TEST_CASE("Alexander polynomials") {
    CHECK(alexander(KnotPresentation::unknot()) == LaurentPoly(1));
    CHECK(alexander(KnotPresentation::torus(2, 3)) == q(1) - LaurentPoly(1) + q(-1));
    CHECK(alexander(KnotPresentation::two_bridge(5, 2)) == -q(1) + LaurentPoly(3) - q(-1));
    CHECK(alexander(KnotPresentation::two_bridge(7, 2)) == 2 * q(1) - LaurentPoly(3) + 2 * q(-1));
    for (int p : {3, 5, 7, 9, 11, 13})
        CHECK(alexander_two_bridge(p, 1) == alexander_torus(2, p));
    for (int p = 3; p <= 15; p += 2)
        for (int qq = 1; qq < p; ++qq) {
            if (std::gcd(p, qq) != 1) continue;
            auto a = alexander_two_bridge(p, qq);
            CHECK(a.evaluate(1) == 1);
            CHECK(a == a.substitute_power(-1));
            CHECK(abs(a.evaluate(-1)) == p);
            // b(p,q) and b(p,q^-1) are the same knot
            int inv = 1;
            while ((inv * qq) % p != 1) ++inv;
            CHECK(alexander_two_bridge(p, inv) == a);
        }
    CHECK_THROWS_AS(alexander(KnotPresentation::from_pd(figure_eight)), Unsupported);
}

TEST_CASE("Delta''(1) of torus knots is (p^2-1)(q^2-1)/12") {
    for (int p = 2; p <= 7; ++p)
        for (int qq = 2; qq <= 9; ++qq) {
            if (std::gcd(p, qq) != 1) continue;
            CHECK(alexander_second_derivative_at_one(KnotPresentation::torus(p, qq)) ==
                  (p * p - 1) * (qq * qq - 1) / 12);
        }
}

TEST_CASE("Khovanov homology against the representation variety") {
    for (auto k : {KnotPresentation::unknot(), KnotPresentation::torus(2, 3), KnotPresentation::torus(2, 5),
                   KnotPresentation::torus(2, 7), KnotPresentation::torus(2, 9), KnotPresentation::two_bridge(5, 2)}) {
        auto r = compare_with_repvar(k);
        INFO(k.to_string());
        CHECK(r.kh_matches_rep);
        CHECK(r.doubled_matches_critical);
    }
    auto t45 = compare_with_repvar(KnotPresentation::torus(4, 5));
    CHECK_FALSE(t45.kh_matches_rep);
    CHECK(t45.critical == grp(20, {2, 2, 2, 2, 2, 2, 2, 2}));
    CHECK(t45.critical_rank_minus_doubled == -8);
}
