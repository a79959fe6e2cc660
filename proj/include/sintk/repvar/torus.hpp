#pragma once

#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sintk/errors.hpp"
#include "sintk/knot/presentation.hpp"
#include "sintk/repvar/report.hpp"
#include "sintk/repvar/two_bridge.hpp"

namespace sintk {

enum class TorusConstraint { meridian_traceless, longitude_traceless };

inline TorusConstraint parse_constraint(const std::string& s) {
    if (s == "meridian" || s == "meridian_traceless") return TorusConstraint::meridian_traceless;
    if (s == "longitude" || s == "longitude_traceless") return TorusConstraint::longitude_traceless;
    throw InvalidInput("constraint must be meridian or longitude, got '" + s + "'");
}

// s, r with s*q + r*p = 1, so the meridian is x^s y^r in <x, y | x^p = y^q>.
inline std::pair<long, long> meridian_exponents(long p, long q) {
    long old_r = q, r = p, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        long k = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - k * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - k * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - k * t);
    }
    if (old_r != 1) throw InvalidInput("torus parameters must be coprime");
    return {old_s, old_t};
}

// Eigenvalue angles of an irreducible rep: rho(x) = exp(alpha u), rho(y) = exp(beta v) with
// alpha = pi a/p, beta = pi b/q, a = b mod 2; the axis angle phi between u and v is free.
struct TorusAnglePair {
    int a, b;
    double sa, rb;  // s*alpha, r*beta
};

inline std::vector<TorusAnglePair> torus_angle_pairs(int p, int q) {
    auto [s, r] = meridian_exponents(p, q);
    std::vector<TorusAnglePair> out;
    for (int a = 1; a < p; ++a)
        for (int b = 1; b < q; ++b)
            if ((a - b) % 2 == 0)
                out.push_back({a, b, std::numbers::pi * a * s / p, std::numbers::pi * b * r / q});
    return out;
}

inline RepVarietyReport rep_variety_torus(int p, int q, TorusConstraint constraint) {
    KnotPresentation::torus(p, q);
    RepVarietyReport rep;
    rep.knot = "torus:" + std::to_string(p) + "," + std::to_string(q);
    const double eps = 1e-12;
    char buf[128];
    if (constraint == TorusConstraint::meridian_traceless) {
        rep.constraint = "meridian";
        rep.components.push_back(abelian_sphere_component());
        if (p == 1 || q == 1) {
            rep.assemble();
            return rep;
        }
        // tr rho(x^s y^r)/2 = cos(sa)cos(rb) - sin(sa)sin(rb)cos(phi)
        for (const auto& ap : torus_angle_pairs(p, q)) {
            double num = std::cos(ap.sa) * std::cos(ap.rb), den = std::sin(ap.sa) * std::sin(ap.rb);
            if (std::abs(den) < eps) {
                if (std::abs(num) < eps) throw DegenerateRoot("meridian trace vanishes on a whole arc");
                continue;
            }
            double c = num / den;
            if (std::abs(std::abs(c) - 1) <= eps) throw DegenerateRoot("traceless solution on the reducible boundary");
            if (std::abs(c) > 1) continue;
            double phi = std::acos(c);
            std::snprintf(buf, sizeof buf, "a = %d, b = %d, phi = %.12f", ap.a, ap.b, phi);
            rep.components.push_back({ComponentKind::irreducible_rp3, phi, buf, homology::rp3()});
        }
    } else {
        rep.constraint = "longitude";
        if (p == 1 || q == 1) {
            rep.assemble();
            return rep;
        }
        // rho(longitude) = +-rho(meridian)^{-pq}; traceless iff the meridian angle is pi(2j+1)/(2pq).
        int pq = p * q;
        for (const auto& ap : torus_angle_pairs(p, q)) {
            double e1 = std::cos(ap.sa + ap.rb), e2 = std::cos(ap.sa - ap.rb);
            double lo = std::min(e1, e2), hi = std::max(e1, e2);
            for (int j = 0; j < pq; ++j) {
                double gamma = std::numbers::pi * (2 * j + 1) / (2.0 * pq), c = std::cos(gamma);
                if (std::abs(c - lo) <= eps || std::abs(c - hi) <= eps)
                    throw DegenerateRoot("longitude solution on the reducible boundary");
                if (c <= lo || c >= hi) continue;
                std::snprintf(buf, sizeof buf, "a = %d, b = %d, meridian angle = %.12f", ap.a, ap.b, gamma);
                rep.components.push_back({ComponentKind::isolated_point, gamma, buf, homology::point()});
            }
        }
    }
    rep.assemble();
    return rep;
}

inline RepVarietyReport rep_variety(const KnotPresentation& k, TorusConstraint constraint = TorusConstraint::meridian_traceless) {
    switch (k.kind) {
        case KnotKind::unknot: {
            auto rep = constraint == TorusConstraint::meridian_traceless ? rep_variety_two_bridge(1, 0)
                                                                         : rep_variety_torus(1, 1, constraint);
            rep.knot = "unknot";
            return rep;
        }
        case KnotKind::torus: return rep_variety_torus(k.p, k.q, constraint);
        case KnotKind::two_bridge:
            if (constraint != TorusConstraint::meridian_traceless)
                throw Unsupported("longitude constraint is implemented for torus knots only");
            return rep_variety_two_bridge(k.p, k.q);
        case KnotKind::pd_code: throw Unsupported("representation varieties need a torus or two-bridge presentation");
    }
    throw Unsupported("unknown knot kind");
}

} // namespace sintk
