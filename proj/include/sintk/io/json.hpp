#pragma once

// JSON encoding of every report type. Rationals and big integers are written
// as strings ("p/q"); integers that fit in 64 bits are plain numbers.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sintk/index_energy.hpp"
#include "sintk/knot/compare.hpp"
#include "sintk/knot/laurent.hpp"
#include "sintk/knot/pd_code.hpp"
#include "sintk/knot/presentation.hpp"
#include "sintk/lie/summary.hpp"
#include "sintk/monotone.hpp"
#include "sintk/reducibility.hpp"
#include "sintk/repvar/critical_set.hpp"
#include "sintk/repvar/report.hpp"
#include "sintk/repvar/t3.hpp"
#include "sintk/topo/abelian_group.hpp"

NLOHMANN_JSON_NAMESPACE_BEGIN

template <>
struct adl_serializer<sintk::Rational> {
    static void to_json(json& j, const sintk::Rational& r) { j = r.get_str(); }
    static void from_json(const json& j, sintk::Rational& r) {
        if (j.is_number_integer()) r = sintk::Rational(j.get<long>());
        else r = sintk::parse_rational(j.get<std::string>());
    }
};

template <>
struct adl_serializer<sintk::Integer> {
    static void to_json(json& j, const sintk::Integer& z) {
        if (z.fits_slong_p()) j = z.get_si();
        else j = z.get_str();
    }
    static void from_json(const json& j, sintk::Integer& z) {
        if (j.is_number_integer()) z = sintk::Integer(j.get<long>());
        else z = sintk::Integer(j.get<std::string>());
    }
};

template <class T>
struct adl_serializer<std::optional<T>> {
    static void to_json(json& j, const std::optional<T>& o) {
        if (o) j = *o;
        else j = nullptr;
    }
    static void from_json(const json& j, std::optional<T>& o) {
        if (j.is_null()) o.reset();
        else o = j.get<T>();
    }
};

NLOHMANN_JSON_NAMESPACE_END

namespace sintk {

using nlohmann::json;

// topo

inline void to_json(json& j, const AbelianGroup& g) {
    j = {{"free_rank", g.free_rank}, {"torsion", g.torsion}, {"text", g.to_string()}};
}
inline void from_json(const json& j, AbelianGroup& g) {
    g = AbelianGroup::from_invariant_factors(j.at("free_rank").get<long>(), j.at("torsion").get<std::vector<Integer>>());
}

inline void to_json(json& j, const GradedGroup& g) {
    j = json::array();
    for (const auto& [d, grp] : g.by_degree) j.push_back({{"degree", d}, {"group", grp}});
}
inline void from_json(const json& j, GradedGroup& g) {
    g = {};
    for (const auto& e : j) g.add(e.at("degree").get<int>(), e.at("group").get<AbelianGroup>());
}

inline void to_json(json& j, const BigradedGroup& g) {
    j = json::array();
    for (const auto& [ij, grp] : g.entries) j.push_back({{"i", ij.first}, {"j", ij.second}, {"group", grp}});
}
inline void from_json(const json& j, BigradedGroup& g) {
    g = {};
    for (const auto& e : j) g.add(e.at("i").get<int>(), e.at("j").get<int>(), e.at("group").get<AbelianGroup>());
}

// knots

inline void to_json(json& j, const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({e, c});
    j = {{"terms", terms}, {"text", p.to_string("t")}};
}
inline void from_json(const json& j, LaurentPoly& p) {
    p = {};
    for (const auto& t : j.at("terms")) p.add_term(t.at(0).get<int>(), t.at(1).get<Integer>());
}

inline void to_json(json& j, const PDCode& pd) { j = {{"crossings", pd.crossings}, {"free_loops", pd.free_loops}}; }
inline void from_json(const json& j, PDCode& pd) {
    pd.crossings = j.at("crossings").get<std::vector<std::array<int, 4>>>();
    pd.free_loops = j.value("free_loops", 0);
    pd.validate();
}

inline void to_json(json& j, const KnotPresentation& k) { j = k.to_string(); }
inline void from_json(const json& j, KnotPresentation& k) { k = parse_knot(j.get<std::string>()); }

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ComparisonReport, knot, kh, rep, kh_matches_rep, kh_doubled, critical,
                                   doubled_matches_critical, critical_rank_minus_doubled)

// repvar

NLOHMANN_JSON_SERIALIZE_ENUM(ComponentKind, {{ComponentKind::abelian_sphere, "abelian_sphere"},
                                             {ComponentKind::irreducible_rp3, "irreducible_rp3"},
                                             {ComponentKind::isolated_point, "isolated_point"},
                                             {ComponentKind::projective_space, "projective_space"},
                                             {ComponentKind::unit_sphere_bundle, "unit_sphere_bundle"},
                                             {ComponentKind::sphere, "sphere"}})

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RepComponent, kind, parameter, descriptor, homology)

inline void to_json(json& j, const RepVarietyReport& r) {
    j = {{"knot", r.knot},
         {"constraint", r.constraint},
         {"components", r.components},
         {"copies", r.copies},
         {"total_homology", r.total_homology},
         {"ungraded", r.ungraded()}};
}
inline void from_json(const json& j, RepVarietyReport& r) {
    r.knot = j.at("knot").get<std::string>();
    r.constraint = j.at("constraint").get<std::string>();
    r.components = j.at("components").get<std::vector<RepComponent>>();
    r.copies = j.at("copies").get<long>();
    r.total_homology = j.at("total_homology").get<GradedGroup>();
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CriticalSetReport, knot, rank, full, reduced, fiber, has_fiber)

inline void to_json(json& j, const CyclotomicInt& c) { j = {{"order", c.order()}, {"coefficients", c.coefficients()}}; }
inline void from_json(const json& j, CyclotomicInt& c) {
    c = CyclotomicInt(j.at("order").get<int>(), j.at("coefficients").get<std::vector<Integer>>());
}

inline void to_json(json& j, const T3FlatClass& c) {
    j = {{"k", c.k},
         {"ha", c.ha},
         {"hb", c.hb},
         {"hc", c.hc},
         {"commutator_ab", c.commutator_ab},
         {"commutator_ac", c.commutator_ac},
         {"commutator_bc", c.commutator_bc},
         {"unit_determinant", c.unit_determinant},
         {"commutant_dimension", c.commutant_dimension},
         {"scalar_dimension", c.scalar_dimension},
         {"verified", c.verified()}};
}
inline void from_json(const json& j, T3FlatClass& c) {
    c.k = j.at("k").get<int>();
    c.ha = j.at("ha").get<CycMatrix>();
    c.hb = j.at("hb").get<CycMatrix>();
    c.hc = j.at("hc").get<CycMatrix>();
    c.commutator_ab = j.at("commutator_ab").get<bool>();
    c.commutator_ac = j.at("commutator_ac").get<bool>();
    c.commutator_bc = j.at("commutator_bc").get<bool>();
    c.unit_determinant = j.at("unit_determinant").get<bool>();
    c.commutant_dimension = j.at("commutant_dimension").get<long>();
    c.scalar_dimension = j.at("scalar_dimension").get<long>();
}

// lie, monotone, index/energy, reducibility

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LieSummary, type, rank, dim_group, positive_roots, coxeter, dual_coxeter,
                                   killing_scale, twice_rho, highest_root, theta_norm, twice_rho_theta, simple_roots,
                                   cartan_matrix, positive_root_list)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(MonotoneReport, group, s0, phi, phi_vector, theta_value, lambdas, multiplicities,
                                   monotone, kahler_consistent)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(MonotoneViolation, basis_index, killing_pairing, twice_rho)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(MonotoneCheck, monotone, violations)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DimensionReport, group, phi, k, l, chi, self_intersection, b_plus, b_one, dimension,
                                   framed_dimension)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EnergyReport, group, phi, k, l, self_intersection, energy_over_pi2)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BubbleReport, feasible, k_slack, simple_indices, slacks, framed_dimension)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BubbleScan, blocks, k_bound, l_bound, feasible_charges, min_positive_dimension)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ActionShifts, cs_shift, grading_shift)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OrientationParity, t1, t2, t3, parity)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(NonintegralWitness, weight_index, orbit_points, sum)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(NonintegralVerdict, pass, witness, tuples_checked)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SuMultiVerdict, pass, k, choices)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CoprimeVerdict, pass, failing_k)

} // namespace sintk
