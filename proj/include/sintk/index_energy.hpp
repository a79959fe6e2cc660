#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "sintk/lie/chamber.hpp"
#include "sintk/monotone.hpp"

namespace sintk {

struct SurfaceData {
    std::vector<int> genus_list;  // one entry per component
    Integer self_intersection = 0;

    int components() const { return static_cast<int>(genus_list.size()); }
    Integer chi() const {
        Integer c = 0;
        for (int g : genus_list) c += 2 - 2 * g;
        return c;
    }
    // Surface with prescribed Euler characteristic: one component of the
    // matching genus when chi is even and <= 2, otherwise spheres and tori.
    static SurfaceData with_chi(long chi, Integer self_int = 0) {
        SurfaceData s;
        s.self_intersection = self_int;
        if (chi % 2 != 0) throw InvalidInput("Euler characteristic of a closed orientable surface is even");
        if (chi <= 2) {
            s.genus_list = {static_cast<int>((2 - chi) / 2)};
        } else {
            s.genus_list.assign(static_cast<size_t>(chi / 2), 0);
        }
        return s;
    }
};

struct FourManifoldData {
    Integer b_plus = 0;
    Integer b_one = 0;
};

struct ChargePair {
    Integer k = 0;
    std::vector<Integer> l;  // coordinates in the monopole lattice basis
};

namespace detail {

inline QVec charge_vector(const WeylChamberPoint& phi, const ChargePair& c) {
    return monopole_lattice(phi).element(c.l);
}

// Lift xi of l to the coroot lattice with Pi(xi) = l.
inline QVec charge_lift(const WeylChamberPoint& phi, const ChargePair& c) {
    const RootSystem& rs = phi.root_system();
    auto lat = monopole_lattice(phi);
    if (c.l.size() != lat.rank())
        throw LatticeMismatch("charge vector has " + std::to_string(c.l.size()) +
                              " entries, lattice rank is " + std::to_string(lat.rank()));
    QVec xi = zero_vec(rs.ambient_dim());
    for (size_t i = 0; i < c.l.size(); ++i) xi += Rational(c.l[i]) * rs.simple_coroot(lat.s_plus[i]);
    return xi;
}

inline Integer as_integer(const Rational& r, const char* what) {
    if (!is_integer(r)) throw std::logic_error(std::string(what) + " is not integral: " + r.get_str());
    return r.get_num();
}

} // namespace detail

// 4 h^vee k + 4 rho(l) + |R+(Phi)| chi - dim G (b+ - b1 + 1).
inline Integer formal_dimension(const WeylChamberPoint& phi, const ChargePair& c,
                                const SurfaceData& surf, const FourManifoldData& x) {
    const RootSystem& rs = phi.root_system();
    QVec l = detail::charge_vector(phi, c);
    auto sd = stabilizer_data(phi);
    Rational d = Rational(4 * rs.dual_coxeter()) * Rational(c.k) +
                 4 * dot(rs.weyl_vector(), l) +
                 Rational(sd.dim_orbit / 2) * Rational(surf.chi()) -
                 Rational(rs.dim_group()) * Rational(x.b_plus - x.b_one + 1);
    return detail::as_integer(d, "formal dimension");
}

inline Integer framed_dimension(const WeylChamberPoint& phi, const ChargePair& c) {
    const RootSystem& rs = phi.root_system();
    QVec l = detail::charge_vector(phi, c);
    Rational d = Rational(4 * rs.dual_coxeter()) * Rational(c.k) + 4 * dot(rs.weyl_vector(), l);
    return detail::as_integer(d, "framed dimension");
}

// Root-sum form: 32(h^vee k + sum_{R+} beta(Phi) beta(xi) - 1/2 sum beta(Phi)^2 S.S).
inline Rational energy_root_sum(const WeylChamberPoint& phi, const QVec& xi, const Integer& k,
                                const Integer& self_int) {
    const RootSystem& rs = phi.root_system();
    Rational cross = 0, square = 0;
    for (const auto& b : rs.positive_roots()) {
        Rational bp = phi.eval(b);
        cross += bp * dot(b, xi);
        square += bp * bp;
    }
    return 32 * (Rational(rs.dual_coxeter()) * Rational(k) + cross -
                 Rational(1, 2) * square * Rational(self_int));
}

// Killing form: 8(4 h^vee k + 2<Phi,l> - <Phi,Phi> S.S).
inline Rational energy_killing(const WeylChamberPoint& phi, const QVec& l, const Integer& k,
                               const Integer& self_int) {
    const RootSystem& rs = phi.root_system();
    return 8 * (Rational(4 * rs.dual_coxeter()) * Rational(k) +
                2 * rs.killing(phi.vector(), l) -
                rs.killing(phi.vector(), phi.vector()) * Rational(self_int));
}

// Energy as the coefficient of pi^2; both closed forms are evaluated and must agree.
inline Rational energy(const WeylChamberPoint& phi, const ChargePair& c, const SurfaceData& surf) {
    QVec l = detail::charge_vector(phi, c);
    QVec xi = detail::charge_lift(phi, c);
    Rational e1 = energy_killing(phi, l, c.k, surf.self_intersection);
    Rational e2 = energy_root_sum(phi, xi, c.k, surf.self_intersection);
    if (e1 != e2)
        throw std::logic_error("energy forms disagree: " + e1.get_str() + " vs " + e2.get_str());
    return e1;
}

// Block charges l_s (summing to zero) to lattice coordinates m_s = l_1 + ... + l_s.
inline std::vector<Integer> su_n_lattice_coords(const std::vector<Integer>& ls) {
    Integer total = 0;
    for (const auto& x : ls) total += x;
    if (total != 0) throw ChargeImbalance("block charges sum to " + total.get_str() + ", not 0");
    std::vector<Integer> m;
    Integer run = 0;
    for (size_t s = 0; s + 1 < ls.size(); ++s) {
        run += ls[s];
        m.push_back(run);
    }
    return m;
}

inline int sign(long x) { return (x > 0) - (x < 0); }

inline Integer su_n_dimension(const std::vector<int>& mult, const Integer& k,
                              const std::vector<Integer>& ls, const SurfaceData& surf,
                              const FourManifoldData& x) {
    if (ls.size() != mult.size()) throw LatticeMismatch("need one block charge per block");
    su_n_lattice_coords(ls);
    long n = std::accumulate(mult.begin(), mult.end(), 0L);
    Integer d = 4 * n * k;
    Integer cross = 0, pairs = 0;
    for (size_t s = 0; s < mult.size(); ++s)
        for (size_t t = 0; t < mult.size(); ++t) {
            cross += sign(static_cast<long>(t) - static_cast<long>(s)) * mult[t] * ls[s];
            if (s < t) pairs += mult[s] * mult[t];
        }
    d += 2 * cross + pairs * surf.chi() - (n * n - 1) * (x.b_plus - x.b_one + 1);
    return d;
}

// 32 N (k + sum lambda_s l_s - 1/2 (sum lambda_s^2 N_s) S.S), coefficient of pi^2.
inline Rational su_n_energy(const EigenvaluePattern& p, const Integer& k,
                            const std::vector<Integer>& ls, const Integer& self_int) {
    if (ls.size() != p.multiplicities.size()) throw LatticeMismatch("need one block charge per block");
    su_n_lattice_coords(ls);
    Rational lin = 0, sq = 0;
    for (size_t s = 0; s < ls.size(); ++s) {
        lin += p.lambdas[s] * Rational(ls[s]);
        sq += p.lambdas[s] * p.lambdas[s] * p.multiplicities[s];
    }
    return 32 * p.n() * (Rational(k) + lin - Rational(1, 2) * sq * Rational(self_int));
}

// Sum over s of 2(N_{s-1} + N_s) K_s, indices cyclic, K_s = k + l_1 + ... + l_{s-1}.
inline Integer su_n_framed_dimension(const std::vector<int>& mult, const Integer& k,
                                     const std::vector<Integer>& ls) {
    if (ls.size() != mult.size()) throw LatticeMismatch("need one block charge per block");
    su_n_lattice_coords(ls);
    size_t m = mult.size();
    Integer total = 0, ks = k;
    for (size_t s = 0; s < m; ++s) {
        int prev = mult[(s + m - 1) % m];
        total += 2 * (prev + mult[s]) * ks;
        ks += ls[s];
    }
    return total;
}

struct ActionShifts {
    Rational cs_shift;  // coefficient of pi^2
    Integer grading_shift;
};

inline ActionShifts action_shifts(int n) {
    if (n < 2) throw InvalidInput("N must be at least 2");
    return {Rational(-16 * (n - 1)), Integer(-4 * (n - 1))};
}

// -2(N-1) c1^2 reduced into [0, 4N).
inline Integer u_n_congruence(int n, const Integer& c1_squared) {
    if (n < 1) throw InvalidInput("N must be positive");
    Integer mod = 4 * n;
    Integer r = (-2 * (n - 1) * c1_squared) % mod;
    if (r < 0) r += mod;
    return r;
}

struct OrientationParity {
    Rational t1, t2, t3;
    int parity = 0;
};

// Classes a = sum a_i e_i and b = sum b_i e_i with a_i, b_i in t and
// cup[i][j] = e_i . e_j.
inline OrientationParity orientation_parity(const RootSystem& rs, const std::vector<QVec>& a,
                                            const std::vector<QVec>& b,
                                            const std::vector<std::vector<Integer>>& cup) {
    size_t n = cup.size();
    if (a.size() != n || b.size() != n) throw InvalidInput("class data does not match cup matrix");
    for (const auto& row : cup)
        if (row.size() != n) throw InvalidInput("cup matrix must be square");
    OrientationParity out;
    Rational hv = rs.dual_coxeter();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational q = cup[i][j];
            out.t1 += hv * q * rs.norm2(a[i], b[j]);
            out.t2 += hv / 2 * q * rs.norm2(b[i], b[j]);
            out.t3 += q * dot(rs.weyl_vector(), b[i]) * dot(rs.weyl_vector(), b[j]);
        }
    for (const auto* t : {&out.t1, &out.t2, &out.t3})
        if (!is_integer(*t)) throw NonIntegralTerm("parity summand " + t->get_str() + " is not an integer");
    Rational sum = out.t1 + out.t2 + out.t3;
    Integer total = sum.get_num() % 2;
    out.parity = total == 0 ? 0 : 1;
    return out;
}

struct BubbleReport {
    bool feasible = false;
    Integer k_slack;                 // k itself
    std::vector<int> simple_indices; // alpha in S+
    std::vector<Rational> slacks;    // n^vee_alpha k + w_alpha(l)
    Integer framed_dimension;
};

inline BubbleReport bubble_feasible(const WeylChamberPoint& phi, const ChargePair& c) {
    const RootSystem& rs = phi.root_system();
    auto lat = monopole_lattice(phi);
    QVec l = lat.element(c.l);
    BubbleReport out;
    out.k_slack = c.k;
    out.feasible = c.k >= 0;
    for (int i : lat.s_plus) {
        Rational s = rs.theta_dual_coefficients()[i] * Rational(c.k) + dot(rs.fundamental_weights()[i], l);
        out.simple_indices.push_back(i);
        out.slacks.push_back(s);
        if (s < 0) out.feasible = false;
    }
    out.framed_dimension = framed_dimension(phi, c);
    if (out.feasible) {
        bool zero_charge = c.k == 0 && std::all_of(c.l.begin(), c.l.end(), [](const Integer& x) { return x == 0; });
        if (zero_charge != (out.framed_dimension == 0) || (!zero_charge && out.framed_dimension < 4))
            throw std::logic_error("feasible charge with framed dimension " +
                                   out.framed_dimension.get_str());
    }
    return out;
}

struct BubbleScan {
    std::vector<int> blocks;
    long k_bound = 0, l_bound = 0;
    long feasible_charges = 0;
    Integer min_positive_dimension = -1;  // -1 when no feasible charge has positive dimension
    bool operator==(const BubbleScan&) const = default;
};

// Scans |k| <= k_bound, |l| <= l_bound for the monotone two-block SU(N) holonomy.
inline BubbleScan two_block_bubble_scan(int n1, int n2, long k_bound, long l_bound) {
    auto phi = su_n_point(su_n_monotone({n1, n2}));
    BubbleScan out{{n1, n2}, k_bound, l_bound, 0, -1};
    for (long k = -k_bound; k <= k_bound; ++k)
        for (long l = -l_bound; l <= l_bound; ++l) {
            auto rep = bubble_feasible(phi, {k, {Integer(l)}});
            if (!rep.feasible) continue;
            ++out.feasible_charges;
            if (rep.framed_dimension > 0 &&
                (out.min_positive_dimension < 0 || rep.framed_dimension < out.min_positive_dimension))
                out.min_positive_dimension = rep.framed_dimension;
        }
    return out;
}

struct DimensionReport {
    std::string group;
    QVec phi;                 // simple-root values
    Integer k;
    std::vector<Integer> l;
    Integer chi, self_intersection, b_plus, b_one;
    Integer dimension;
    Integer framed_dimension;
    bool operator==(const DimensionReport&) const = default;
};

inline DimensionReport dimension_report(const WeylChamberPoint& phi, const ChargePair& c, const SurfaceData& surf,
                                        const FourManifoldData& x) {
    return {phi.root_system().cartan_type().name(), phi.coords(), c.k, c.l, surf.chi(), surf.self_intersection,
            x.b_plus, x.b_one, formal_dimension(phi, c, surf, x), framed_dimension(phi, c)};
}

struct EnergyReport {
    std::string group;
    QVec phi;
    Integer k;
    std::vector<Integer> l;
    Integer self_intersection;
    Rational energy_over_pi2;  // root-sum and Killing forms agree
    bool operator==(const EnergyReport&) const = default;
};

inline EnergyReport energy_report(const WeylChamberPoint& phi, const ChargePair& c, const SurfaceData& surf) {
    return {phi.root_system().cartan_type().name(), phi.coords(), c.k, c.l, surf.self_intersection,
            energy(phi, c, surf)};
}

} // namespace sintk
