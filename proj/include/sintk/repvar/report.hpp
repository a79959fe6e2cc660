#pragma once

#include <string>
#include <vector>

#include "sintk/errors.hpp"
#include "sintk/topo/abelian_group.hpp"

namespace sintk {

enum class ComponentKind { abelian_sphere, irreducible_rp3, isolated_point, projective_space, unit_sphere_bundle, sphere };

inline std::string to_string(ComponentKind k) {
    switch (k) {
        case ComponentKind::abelian_sphere: return "abelian_sphere";
        case ComponentKind::irreducible_rp3: return "irreducible_rp3";
        case ComponentKind::isolated_point: return "isolated_point";
        case ComponentKind::projective_space: return "projective_space";
        case ComponentKind::unit_sphere_bundle: return "unit_sphere_bundle";
        case ComponentKind::sphere: return "sphere";
    }
    return "?";
}

inline ComponentKind component_kind_from_string(const std::string& s) {
    for (auto k : {ComponentKind::abelian_sphere, ComponentKind::irreducible_rp3, ComponentKind::isolated_point,
                   ComponentKind::projective_space, ComponentKind::unit_sphere_bundle, ComponentKind::sphere})
        if (to_string(k) == s) return k;
    throw InvalidInput("unknown component kind '" + s + "'");
}

namespace homology {

inline GradedGroup sphere(int d) {
    GradedGroup g;
    g.add(0, AbelianGroup::free(1));
    if (d == 0) g.add(0, AbelianGroup::free(1));
    else g.add(d, AbelianGroup::free(1));
    return g;
}

inline GradedGroup point() {
    GradedGroup g;
    g.add(0, AbelianGroup::free(1));
    return g;
}

inline GradedGroup rp3() {
    GradedGroup g;
    g.add(0, AbelianGroup::free(1));
    g.add(1, AbelianGroup::from_invariant_factors(0, {2}));
    g.add(3, AbelianGroup::free(1));
    return g;
}

inline GradedGroup projective_space(int n) {  // CP^n
    GradedGroup g;
    for (int k = 0; k <= n; ++k) g.add(2 * k, AbelianGroup::free(1));
    return g;
}

// Unit sphere bundle of the tangent bundle of CP^{N-1}; Gysin sequence with Euler number N.
inline GradedGroup unit_tangent_bundle_cp(int N) {
    GradedGroup g;
    for (int k = 0; k <= 2 * N - 4; k += 2) g.add(k, AbelianGroup::free(1));
    g.add(2 * N - 3, AbelianGroup::from_invariant_factors(0, {Integer(N)}));
    for (int k = 2 * N - 1; k <= 4 * N - 5; k += 2) g.add(k, AbelianGroup::free(1));
    return g;
}

} // namespace homology

struct RepComponent {
    ComponentKind kind = ComponentKind::abelian_sphere;
    double parameter = 0;     // theta, trace or angle locating the component
    std::string descriptor;   // human-readable location
    GradedGroup homology;

    bool operator==(const RepComponent&) const = default;
};

struct RepVarietyReport {
    std::string knot;
    std::string constraint;   // "meridian" or "longitude"
    std::vector<RepComponent> components;
    long copies = 1;
    GradedGroup total_homology;

    size_t count(ComponentKind k) const {
        size_t c = 0;
        for (const auto& comp : components) c += comp.kind == k;
        return c;
    }
    AbelianGroup ungraded() const { return total_homology.total(); }

    void assemble() {
        GradedGroup one;
        for (const auto& c : components) one += c.homology;
        total_homology = one.times(copies);
    }

    bool operator==(const RepVarietyReport&) const = default;
};

} // namespace sintk
