#pragma once

#include <string>

#include "sintk/errors.hpp"
#include "sintk/knot/presentation.hpp"
#include "sintk/repvar/report.hpp"
#include "sintk/repvar/torus.hpp"

namespace sintk {

struct CriticalSetReport {
    std::string knot;
    int rank = 2;
    RepVarietyReport full;      // N copies of the base variety
    RepVarietyReport reduced;   // quotient by the Z/N action: one copy
    RepVarietyReport fiber;     // N copies of the evaluation-map fiber (unknot and trefoil only)
    bool has_fiber = false;

    bool operator==(const CriticalSetReport&) const = default;
};

namespace detail {
inline bool is_trefoil(const KnotPresentation& k) {
    if (k.kind == KnotKind::torus) return (k.p == 2 && k.q == 3) || (k.p == 3 && k.q == 2);
    if (k.kind == KnotKind::two_bridge) return k.p == 3;
    return false;
}
} // namespace detail

inline CriticalSetReport critical_set_report(const KnotPresentation& k, int N) {
    if (N < 2) throw InvalidInput("N must be at least 2");
    CriticalSetReport out;
    out.knot = k.to_string();
    out.rank = N;
    RepVarietyReport base;
    base.knot = out.knot;
    base.constraint = "meridian";
    RepVarietyReport fiber;
    fiber.knot = out.knot;
    fiber.constraint = "evaluation_fiber";
    if (k.is_unknot()) {
        base.components.push_back({ComponentKind::projective_space, 0.0, "CP^" + std::to_string(N - 1),
                                   homology::projective_space(N - 1)});
        fiber.components.push_back({ComponentKind::isolated_point, 0.0, "point", homology::point()});
        out.has_fiber = true;
    } else if (detail::is_trefoil(k)) {
        base.components.push_back({ComponentKind::projective_space, 0.0, "CP^" + std::to_string(N - 1),
                                   homology::projective_space(N - 1)});
        base.components.push_back({ComponentKind::unit_sphere_bundle, 1.0,
                                   "unit sphere bundle of T CP^" + std::to_string(N - 1),
                                   homology::unit_tangent_bundle_cp(N)});
        fiber.components.push_back({ComponentKind::isolated_point, 0.0, "point", homology::point()});
        fiber.components.push_back({ComponentKind::sphere, 1.0, "S^" + std::to_string(2 * N - 3),
                                    homology::sphere(2 * N - 3)});
        out.has_fiber = true;
    } else if (N == 2) {
        base = rep_variety(k, TorusConstraint::meridian_traceless);
    } else {
        throw Unsupported("critical sets for N > 2 are implemented for the unknot and trefoil only");
    }
    if (N == 2 && (k.is_unknot() || detail::is_trefoil(k))) {
        // at N = 2 the closed forms are S^2 and S^2 + RP^3; keep the SU(2) component names
        auto su2 = rep_variety(k, TorusConstraint::meridian_traceless);
        base.assemble();
        if (!(su2.total_homology == base.total_homology))
            throw std::logic_error("closed-form critical set disagrees with the SU(2) variety");
        base.components = su2.components;
    }
    out.full = base;
    out.full.copies = N;
    out.full.assemble();
    out.reduced = base;
    out.reduced.copies = 1;
    out.reduced.assemble();
    if (out.has_fiber) {
        out.fiber = fiber;
        out.fiber.copies = N;
        out.fiber.assemble();
    }
    return out;
}

} // namespace sintk
