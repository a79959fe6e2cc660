#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sintk/lie/chamber.hpp"

namespace sintk {

struct StabilizerPattern {
    RootSystemPtr rs;
    std::vector<int> s0;  // vanishing simple roots, 0-based

    void validate() const {
        for (int i : s0)
            if (i < 0 || i >= rs->rank())
                throw InvalidInput("simple root index " + std::to_string(i) + " out of range");
        std::vector<int> sorted = s0;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidInput("repeated simple root index in S0");
        if (static_cast<int>(sorted.size()) == rs->rank())
            throw DegeneratePattern("S0 contains every simple root, so Phi = 0");
    }
};

// The monotone element 2 Pi(rho^dagger) for the given stabilizer pattern.
inline WeylChamberPoint solve_monotone(const StabilizerPattern& pattern) {
    pattern.validate();
    const RootSystem& rs = *pattern.rs;
    QMat pi = center_projection(rs, pattern.s0);
    QVec phi = Rational(2) * mat_vec(pi, rs.dagger(rs.weyl_vector()));
    auto point = WeylChamberPoint::from_vector(pattern.rs, phi);
    for (int i = 0; i < rs.rank(); ++i) {
        bool vanishing = std::find(pattern.s0.begin(), pattern.s0.end(), i) != pattern.s0.end();
        if (vanishing != (point.coords()[i] == 0))
            throw std::logic_error("monotone element has the wrong stabilizer");
    }
    if (!point.valid()) throw std::logic_error("monotone element violates theta(Phi) < 1");
    return point;
}

struct EigenvaluePattern {
    std::vector<int> multiplicities;
    QVec lambdas;

    int n() const {
        int s = 0;
        for (int m : multiplicities) s += m;
        return s;
    }
    // Diagonal entries lambda_s repeated N_s times.
    QVec eigenvalues() const {
        QVec v;
        for (size_t s = 0; s < multiplicities.size(); ++s)
            for (int j = 0; j < multiplicities[s]; ++j) v.push_back(lambdas[s]);
        return v;
    }
    bool traceless() const {
        Rational t = 0;
        for (size_t s = 0; s < lambdas.size(); ++s) t += multiplicities[s] * lambdas[s];
        return t == 0;
    }
    void validate() const {
        if (multiplicities.size() != lambdas.size() || multiplicities.size() < 2)
            throw InvalidInput("need at least two eigenvalue blocks");
        for (int m : multiplicities)
            if (m < 1) throw InvalidInput("block multiplicities must be positive");
        for (size_t s = 0; s + 1 < lambdas.size(); ++s)
            if (!(lambdas[s] > lambdas[s + 1]))
                throw InvalidInput("eigenvalues must be strictly decreasing");
        if (!traceless()) throw InvalidInput("eigenvalues are not traceless");
        if (!(lambdas.front() - lambdas.back() < 1))
            throw InvalidInput("lambda_1 - lambda_m must be < 1");
    }
};

inline EigenvaluePattern su_n_monotone(const std::vector<int>& multiplicities) {
    if (multiplicities.size() < 2) throw InvalidInput("need at least two eigenvalue blocks");
    EigenvaluePattern p;
    p.multiplicities = multiplicities;
    int n = p.n();
    for (size_t s = 0; s < multiplicities.size(); ++s) {
        Rational sum = 0;
        for (size_t t = 0; t < multiplicities.size(); ++t) {
            if (t > s) sum += multiplicities[t];
            if (t < s) sum -= multiplicities[t];
        }
        p.lambdas.push_back(sum / Rational(2 * n));
    }
    p.validate();
    return p;
}

// Simple roots of A_{N-1} that vanish for a block-diagonal pattern.
inline std::vector<int> block_s0(const std::vector<int>& multiplicities) {
    std::vector<int> s0;
    int pos = 0;
    for (int m : multiplicities) {
        for (int j = 0; j + 1 < m; ++j) s0.push_back(pos + j);
        pos += m;
    }
    return s0;
}

inline WeylChamberPoint su_n_point(const EigenvaluePattern& p) {
    p.validate();
    return WeylChamberPoint::from_eigenvalues(build_root_system(CartanType{'A', p.n() - 1}),
                                              p.eigenvalues());
}

struct MonotoneViolation {
    size_t basis_index;
    Rational killing_pairing;  // <Phi, l>
    Rational twice_rho;        // 2 rho(l)
    bool operator==(const MonotoneViolation&) const = default;
};

struct MonotoneCheck {
    bool monotone = true;
    std::vector<MonotoneViolation> violations;
    bool operator==(const MonotoneCheck&) const = default;
};

inline MonotoneCheck check_monotone(const WeylChamberPoint& phi) {
    const RootSystem& rs = phi.root_system();
    auto lat = monopole_lattice(phi);
    MonotoneCheck out;
    for (size_t i = 0; i < lat.basis.size(); ++i) {
        Rational lhs = rs.killing(phi.vector(), lat.basis[i]);
        Rational rhs = 2 * dot(rs.weyl_vector(), lat.basis[i]);
        if (lhs != rhs) {
            out.monotone = false;
            out.violations.push_back({i, lhs, rhs});
        }
    }
    return out;
}

// Kahler-class form of monotonicity: on each lattice basis vector l the first
// Chern class sum over R+(Phi) of beta(l) must equal <Phi, l>.
inline bool kahler_consistent(const WeylChamberPoint& phi) {
    const RootSystem& rs = phi.root_system();
    auto sd = stabilizer_data(phi);
    auto lat = monopole_lattice(phi);
    for (const auto& l : lat.basis) {
        Rational c1 = 0;
        for (const auto& b : sd.rplus_phi) c1 += dot(b, l);
        if (c1 != rs.killing(phi.vector(), l)) return false;
    }
    return true;
}

struct MonotoneReport {
    std::string group;
    std::vector<int> s0;
    QVec phi;            // simple-root values
    QVec phi_vector;     // ambient coordinates
    Rational theta_value;
    QVec lambdas;        // SU(N) block eigenvalues, empty otherwise
    std::vector<int> multiplicities;
    bool monotone = false;
    bool kahler_consistent = false;
    bool operator==(const MonotoneReport&) const = default;
};

inline MonotoneReport monotone_report(const StabilizerPattern& pattern) {
    auto phi = solve_monotone(pattern);
    MonotoneReport r;
    r.group = pattern.rs->cartan_type().name();
    r.s0 = stabilizer_data(phi).s0;
    r.phi = phi.coords();
    r.phi_vector = phi.vector();
    r.theta_value = phi.theta_value();
    r.monotone = check_monotone(phi).monotone;
    r.kahler_consistent = kahler_consistent(phi);
    return r;
}

inline MonotoneReport monotone_report(const std::vector<int>& multiplicities) {
    auto pattern = su_n_monotone(multiplicities);
    auto rs = build_root_system(CartanType{'A', pattern.n() - 1});
    auto r = monotone_report(StabilizerPattern{rs, block_s0(multiplicities)});
    r.lambdas = pattern.lambdas;
    r.multiplicities = multiplicities;
    return r;
}

} // namespace sintk
