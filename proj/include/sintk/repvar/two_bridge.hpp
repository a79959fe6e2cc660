#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Geometry>

#include "sintk/errors.hpp"
#include "sintk/knot/alexander.hpp"
#include "sintk/repvar/report.hpp"

namespace sintk {

struct RootTolerances {
    double bracket = 1e-12;     // bisection stops below this interval width
    double simplicity = 1e-6;   // |r'| threshold at a root
    double residual = 1e-9;     // |AW - WB| bound at a root
};

// Gauge-fixed traceless pair A = i, B = cos(theta) i + sin(theta) j.
inline Eigen::Quaterniond traceless_b(double theta) {
    return Eigen::Quaterniond(0.0, std::cos(theta), std::sin(theta), 0.0);
}

inline Eigen::Quaterniond two_bridge_w(int p, int q, double theta) {
    const Eigen::Quaterniond a(0.0, 1.0, 0.0, 0.0), b = traceless_b(theta);
    Eigen::Quaterniond w = Eigen::Quaterniond::Identity();
    for (int letter : two_bridge_word(p, q)) {
        const Eigen::Quaterniond& g = std::abs(letter) == 1 ? a : b;
        w = w * (letter > 0 ? g : g.conjugate());
    }
    return w;
}

// |AW - WB| for the relation a w = w b.
inline double two_bridge_relation_defect(int p, int q, double theta) {
    const Eigen::Quaterniond a(0.0, 1.0, 0.0, 0.0), b = traceless_b(theta);
    Eigen::Quaterniond w = two_bridge_w(p, q, theta);
    return ((a * w).coeffs() - (w * b).coeffs()).norm();
}

// AW - WB = 2 r(theta) (sin(theta/2) i - cos(theta/2) j) with r = w0 sin(theta/2) + w3 cos(theta/2).
inline double two_bridge_residual(int p, int q, double theta) {
    Eigen::Quaterniond w = two_bridge_w(p, q, theta);
    return w.w() * std::sin(theta / 2) + w.z() * std::cos(theta / 2);
}

inline int two_bridge_grid_points(int p) { return 64 * p + 256; }

// Roots of the residual on (0, pi), bracketed on a uniform grid and bisected.
inline std::vector<double> two_bridge_roots(int p, int q, const RootTolerances& tol = {}) {
    const double pi = std::numbers::pi;
    int n = two_bridge_grid_points(p);
    auto r = [&](double t) { return two_bridge_residual(p, q, t); };
    std::vector<double> xs(n + 1), ys(n + 1);
    for (int k = 0; k <= n; ++k) {
        xs[k] = pi * k / n;
        ys[k] = r(xs[k]);
    }
    if (std::abs(ys[n]) < tol.simplicity) throw DegenerateRoot("residual vanishes at theta = pi");
    std::vector<double> roots;
    for (int k = 1; k < n; ++k) {
        double lo = xs[k], hi = xs[k + 1], flo = ys[k], fhi = ys[k + 1];
        if (flo == 0.0) {
            roots.push_back(lo);
            continue;
        }
        if ((flo < 0) == (fhi < 0) || fhi == 0.0) {
            // a near-zero local minimum of |r| without a sign change is a double root candidate
            if (k + 1 < n && std::abs(fhi) < std::abs(flo) && std::abs(fhi) < std::abs(ys[k + 2]) &&
                (fhi < 0) == (ys[k + 2] < 0) && fhi != 0.0 && std::abs(fhi) < tol.simplicity)
                throw DegenerateRoot("near-double root of the residual near theta = " + std::to_string(hi));
            continue;
        }
        while (hi - lo > tol.bracket) {
            double mid = 0.5 * (lo + hi), fm = r(mid);
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((fm < 0) == (flo < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        roots.push_back(0.5 * (lo + hi));
    }
    for (double t : roots) {
        const double h = 1e-6;
        double deriv = (r(t + h) - r(t - h)) / (2 * h);
        if (std::abs(deriv) <= tol.simplicity)
            throw DegenerateRoot("root at theta = " + std::to_string(t) + " is not simple");
        if (two_bridge_relation_defect(p, q, t) >= tol.residual)
            throw std::logic_error("root does not satisfy the relation to tolerance");
    }
    return roots;
}

inline RepComponent abelian_sphere_component() {
    return {ComponentKind::abelian_sphere, 0.0, "theta = 0 (abelian)", homology::sphere(2)};
}

// Traceless SU(2) representation variety of the two-bridge knot b(p,q).
inline RepVarietyReport rep_variety_two_bridge(int p, int q, const RootTolerances& tol = {}) {
    RepVarietyReport rep;
    rep.constraint = "meridian";
    if (p == 1) {
        rep.knot = "unknot";
        rep.components.push_back(abelian_sphere_component());
        rep.assemble();
        return rep;
    }
    KnotPresentation::two_bridge(p, q);
    rep.knot = "2bridge:" + std::to_string(p) + "/" + std::to_string(q);
    rep.components.push_back(abelian_sphere_component());
    for (double t : two_bridge_roots(p, q, tol)) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "theta = %.12f, tr rho(ab) = %.12f", t, -2 * std::cos(t));
        rep.components.push_back({ComponentKind::irreducible_rp3, t, buf, homology::rp3()});
    }
    rep.assemble();
    return rep;
}

} // namespace sintk
