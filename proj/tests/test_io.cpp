#include <catch_amalgamated.hpp>

#include <random>

#include "sintk/io/json.hpp"
#include "sintk/knot/alexander.hpp"
#include "sintk/knot/jones.hpp"
#include "test_util.hpp"

using namespace sintk;

namespace {

// Serialize, print, parse, deserialize, serialize again.
template <class T>
T round_trip(const T& value) {
    json first = value;
    json parsed = json::parse(first.dump());
    T back = parsed.get<T>();
    json second = back;
    CHECK(second == first);
    return back;
}

template <class T>
void check_round_trip(const T& value) {
    CHECK(round_trip(value) == value);
}

} // namespace

TEST_CASE("scalars and groups") {
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) check_round_trip(testutil::random_rational(rng, 1000, 1000));
    check_round_trip(Integer("123456789012345678901234567890"));
    check_round_trip(Integer("-98765432109876543210"));
    check_round_trip(Rational(Integer("123456789012345678901234567891"), Integer("7")));
    check_round_trip(std::optional<Rational>{});
    check_round_trip(std::optional<Rational>{Rational(3, 4)});
    for (int i = 0; i < 50; ++i) {
        std::vector<Integer> factors;
        for (int k = testutil::random_int(rng, 0, 4); k > 0; --k) factors.emplace_back(testutil::random_int(rng, 1, 60));
        check_round_trip(AbelianGroup::from_invariant_factors(testutil::random_int(rng, 0, 9), factors));
    }
    CHECK(json(Rational(-5, 3)) == "-5/3");
    CHECK(json(Integer(7)) == 7);
}

TEST_CASE("lie and monotone reports") {
    for (auto t : testutil::types_up_to_rank(6)) {
        auto rs = build_root_system(t);
        check_round_trip(summarize(*rs, true));
        auto r = round_trip(monotone_report(StabilizerPattern{rs, {}}));
        CHECK(r.group == t.name());
        check_round_trip(check_monotone(solve_monotone({rs, {}})));
    }
    check_round_trip(monotone_report(std::vector<int>{1, 2, 3}));
}

TEST_CASE("index and energy reports") {
    std::mt19937 rng(9);
    for (int i = 0; i < 50; ++i) {
        auto phi = su_n_point(su_n_monotone({1, 2}));
        ChargePair c{testutil::random_int(rng, -3, 3), {Integer(testutil::random_int(rng, -5, 5))}};
        auto surf = SurfaceData::with_chi(2 * testutil::random_int(rng, -2, 1), testutil::random_int(rng, -4, 4));
        check_round_trip(dimension_report(phi, c, surf, {testutil::random_int(rng, 0, 2), testutil::random_int(rng, 0, 2)}));
        check_round_trip(energy_report(phi, c, surf));
        round_trip(bubble_feasible(phi, c));
    }
    check_round_trip(two_block_bubble_scan(2, 3, 3, 15));
    round_trip(action_shifts(5));
}

TEST_CASE("reducibility verdicts") {
    ComponentClasses one{{Integer(1)}, 0};
    auto v = round_trip(check_nonintegral_simple(solve_monotone({build_root_system("B5"), {}}), one));
    REQUIRE(v.witness);
    CHECK(v.witness->sum == 0);
    CHECK_FALSE(round_trip(check_nonintegral_simple(solve_monotone({build_root_system("G2"), {}}), one)).witness);
    round_trip(check_nonintegral_su_multi(2, {Integer(4)}));
    round_trip(check_un_coprime(4, {Integer(2), Integer(6)}));
}

TEST_CASE("knot data") {
    check_round_trip(parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]"));
    check_round_trip(PDCode{{}, 1});
    for (const char* k : {"unknot", "torus:3,5", "2bridge:7/3"}) check_round_trip(parse_knot(k));
    check_round_trip(jones(torus_diagram(3, 4)));
    check_round_trip(alexander(KnotPresentation::two_bridge(9, 2)));
    check_round_trip(khovanov(torus_diagram(2, 5)));
    check_round_trip(compare_with_repvar(KnotPresentation::torus(2, 5)));
    CHECK_THROWS_AS(json::parse(R"({"crossings": [[1,2,3,4]], "free_loops": 0})").get<PDCode>(), MalformedPD);
}

TEST_CASE("representation variety reports") {
    for (auto k : {KnotPresentation::unknot(), KnotPresentation::torus(3, 5), KnotPresentation::two_bridge(11, 4)})
        check_round_trip(rep_variety(k));
    check_round_trip(rep_variety_torus(3, 4, TorusConstraint::longitude_traceless));
    check_round_trip(critical_set_report(KnotPresentation::torus(2, 3), 4));
    for (const auto& c : t3_flat_connections(4)) {
        auto back = round_trip(c);
        CHECK(back.verified());
        CHECK(back.ha == c.ha);
    }
    CHECK(json(ComponentKind::irreducible_rp3) == "irreducible_rp3");
}
