#pragma once

#include <vector>

#include "sintk/lie/root_system.hpp"

namespace sintk {

// Phi in the closed fundamental chamber, stored by its simple-root values.
class WeylChamberPoint {
public:
    WeylChamberPoint(RootSystemPtr rs, QVec coords) : rs_(std::move(rs)), coords_(std::move(coords)) {
        if (static_cast<int>(coords_.size()) != rs_->rank())
            throw InvalidInput("expected " + std::to_string(rs_->rank()) + " simple-root values");
        vec_ = zero_vec(rs_->ambient_dim());
        for (int i = 0; i < rs_->rank(); ++i) vec_ += coords_[i] * rs_->fundamental_coweights()[i];
    }

    static WeylChamberPoint from_vector(RootSystemPtr rs, const QVec& v) {
        if (v.size() != rs->ambient_dim() || !rs->in_span(v))
            throw InvalidInput("vector " + to_string(v) + " is not in the Cartan algebra of " +
                               rs->cartan_type().name());
        QVec coords(rs->rank());
        for (int i = 0; i < rs->rank(); ++i) coords[i] = dot(rs->simple_roots()[i], v);
        return WeylChamberPoint(std::move(rs), coords);
    }

    // A-family: Phi = diag(i lambda_1, ..., i lambda_N).
    static WeylChamberPoint from_eigenvalues(RootSystemPtr rs, const QVec& lambdas) {
        if (rs->cartan_type().family != 'A')
            throw InvalidInput("eigenvalue input is only defined for type A");
        return from_vector(std::move(rs), lambdas);
    }

    const RootSystem& root_system() const { return *rs_; }
    const RootSystemPtr& root_system_ptr() const { return rs_; }
    const QVec& coords() const { return coords_; }
    const QVec& vector() const { return vec_; }

    Rational eval(const QVec& covector) const { return dot(covector, vec_); }
    Rational theta_value() const { return eval(rs_->highest_root()); }

    bool in_chamber() const {
        for (const auto& x : coords_)
            if (x < 0) return false;
        return true;
    }
    bool valid() const { return in_chamber() && theta_value() < 1; }

    void require_valid() const {
        if (!valid())
            throw InvalidInput("Phi " + to_string(coords_) +
                               " is not in the chamber with theta(Phi) < 1");
    }

private:
    RootSystemPtr rs_;
    QVec coords_;
    QVec vec_;
};

struct StabilizerData {
    std::vector<int> s0;           // indices of simple roots vanishing on Phi
    std::vector<int> s_plus;       // the complement
    std::vector<QVec> rplus_phi;   // roots positive on Phi
    int dim_orbit = 0;
    QMat center_projection;        // orthogonal projection onto the center of the stabilizer
};

inline QMat center_projection(const RootSystem& rs, const std::vector<int>& s0) {
    QMat pi = rs.span_projector();
    if (s0.empty()) return pi;
    size_t d = rs.ambient_dim(), m = s0.size();
    QMat gram(m, QVec(m));
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b)
            gram[a][b] = dot(rs.simple_roots()[s0[a]], rs.simple_roots()[s0[b]]);
    QMat ginv = inverse(gram);
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
            const QVec& u = rs.simple_roots()[s0[a]];
            const QVec& v = rs.simple_roots()[s0[b]];
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j) pi[i][j] -= u[i] * ginv[a][b] * v[j];
        }
    return pi;
}

inline StabilizerData stabilizer_data(const WeylChamberPoint& phi) {
    const RootSystem& rs = phi.root_system();
    StabilizerData sd;
    for (int i = 0; i < rs.rank(); ++i) (phi.coords()[i] == 0 ? sd.s0 : sd.s_plus).push_back(i);
    for (const auto& r : rs.roots())
        if (phi.eval(r) > 0) sd.rplus_phi.push_back(r);
    sd.dim_orbit = 2 * static_cast<int>(sd.rplus_phi.size());
    sd.center_projection = center_projection(rs, sd.s0);
    return sd;
}

// Basis {Pi(alpha_i^vee) : i in S+} of the monopole charge lattice. A lattice
// element with coordinates m has m_i = w_i(l).
struct MonopoleLattice {
    std::vector<int> s_plus;
    std::vector<QVec> basis;

    size_t rank() const { return basis.size(); }

    QVec element(const std::vector<Integer>& m) const {
        if (m.size() != basis.size())
            throw LatticeMismatch("charge vector has " + std::to_string(m.size()) +
                                  " entries, lattice rank is " + std::to_string(basis.size()));
        QVec l = zero_vec(basis.empty() ? 0 : basis[0].size());
        for (size_t i = 0; i < m.size(); ++i) l += Rational(m[i]) * basis[i];
        return l;
    }
};

inline MonopoleLattice monopole_lattice(const WeylChamberPoint& phi) {
    const RootSystem& rs = phi.root_system();
    auto sd = stabilizer_data(phi);
    MonopoleLattice lat;
    lat.s_plus = sd.s_plus;
    for (int i : sd.s_plus) lat.basis.push_back(mat_vec(sd.center_projection, rs.simple_coroot(i)));
    return lat;
}

} // namespace sintk
