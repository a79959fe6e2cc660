#pragma once

// End-to-end checks shared by the acceptance binary and `sintk corpus`.

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sintk/index_energy.hpp"
#include "sintk/knot/alexander.hpp"
#include "sintk/knot/compare.hpp"
#include "sintk/knot/jones.hpp"
#include "sintk/knot/khovanov.hpp"
#include "sintk/lie/summary.hpp"
#include "sintk/monotone.hpp"
#include "sintk/reducibility.hpp"
#include "sintk/repvar/critical_set.hpp"
#include "sintk/repvar/t3.hpp"
#include "sintk/repvar/torus.hpp"
#include "sintk/repvar/two_bridge.hpp"

namespace sintk::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool checks_pass = false;
    double seconds = 0;
    double limit_seconds = 0;  // 0 means untimed
    std::vector<std::string> failures;

    bool pass() const { return checks_pass && (limit_seconds == 0 || seconds < limit_seconds); }
};

namespace detail {

class Recorder {
public:
    void check(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    std::vector<std::string> take() { return std::move(failures_); }

private:
    std::vector<std::string> failures_;
};

inline CriterionResult run(int id, std::string title, double limit, const std::function<void(Recorder&)>& body) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.limit_seconds = limit;
    Recorder rec;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(rec);
    } catch (const std::exception& e) {
        rec.check(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.failures = rec.take();
    r.checks_pass = r.failures.empty();
    return r;
}

inline std::vector<CartanType> types_up_to_rank(int max_rank) {
    std::vector<CartanType> out;
    for (char f : {'A', 'B', 'C', 'D', 'E', 'F', 'G'})
        for (int r = 1; r <= max_rank; ++r)
            if (CartanType{f, r}.admissible()) out.push_back({f, r});
    return out;
}

inline long uniform(std::mt19937& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline std::string str(const std::string& label, const auto& value) {
    std::ostringstream os;
    os << label << " = " << value;
    return os.str();
}

// Two-bridge residual via 2x2 complex matrices, independent of the quaternion path.
inline double matrix_residual(int p, int q, double theta) {
    using C = std::complex<double>;
    using M = std::array<C, 4>;
    const C I(0, 1);
    auto mul = [](const M& a, const M& b) {
        return M{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                 a[2] * b[1] + a[3] * b[3]};
    };
    auto adjoint = [](const M& a) { return M{std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}; };
    M qi{I, 0, 0, -I}, qj{0, 1, -1, 0};
    M a = qi, b{std::cos(theta) * qi[0] + std::sin(theta) * qj[0], std::cos(theta) * qi[1] + std::sin(theta) * qj[1],
                std::cos(theta) * qi[2] + std::sin(theta) * qj[2], std::cos(theta) * qi[3] + std::sin(theta) * qj[3]};
    M w{1, 0, 0, 1};
    int qq = q % 2 == 0 ? q - p : q;
    for (int i = 1; i < p; ++i) {
        double fl = std::floor(static_cast<double>(i) * qq / p);
        long e = std::fmod(std::abs(fl), 2.0) == 0 ? 1 : -1;
        const M& g = i % 2 == 1 ? b : a;
        w = mul(w, e > 0 ? g : adjoint(g));
    }
    // w = w0 + w3 k with k = [[0, i], [i, 0]]
    double w0 = w[0].real(), w3 = w[1].imag();
    return w0 * std::sin(theta / 2) + w3 * std::cos(theta / 2);
}

// Sign changes of the residual on a grid 10x finer than the bracketing grid.
inline int fine_grid_census(int p, int q) {
    int n = 10 * two_bridge_grid_points(p);
    int changes = 0;
    double prev = matrix_residual(p, q, std::numbers::pi / n);
    for (int k = 2; k <= n; ++k) {
        double cur = matrix_residual(p, q, std::numbers::pi * k / n);
        if ((prev < 0) != (cur < 0)) ++changes;
        prev = cur;
    }
    return changes;
}

inline AbelianGroup group(long free, std::vector<long> torsion = {}) {
    AbelianGroup g = AbelianGroup::free(free);
    for (long t : torsion) g.add_cyclic(Integer(t));
    return g;
}

} // namespace detail

inline CriterionResult criterion_lie_identities() {
    return detail::run(1, "Lie identities", 1.0, [](detail::Recorder& rec) {
        for (auto t : detail::types_up_to_rank(8)) {
            auto s = summarize(RootSystem(t));
            rec.check(s.identities_hold(), t.name() + " theta/rho identities");
        }
        RootSystem b4({'B', 4});
        rec.check(Rational(2) * b4.weyl_vector() == QVec{7, 5, 3, 1}, "B4 2rho");
        bool euclid = b4.killing_scale() == 14;
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) euclid = euclid && b4.killing_gram()[i][j] == Rational(i == j ? 14 : 0);
        rec.check(euclid, "B4 Killing = 14 x Euclidean");
    });
}

inline CriterionResult criterion_monotone() {
    return detail::run(2, "Monotone solver", 1.0, [](detail::Recorder& rec) {
        auto su2 = su_n_monotone({1, 1});
        rec.check(su2.lambdas == QVec{Rational(1, 4), Rational(-1, 4)}, "SU(2) lambda = 1/4");
        for (int n = 2; n <= 8; ++n) {
            auto p = su_n_monotone({1, n - 1});
            rec.check(p.lambdas == QVec{frac(n - 1, 2 * n), frac(-1, 2 * n)}, detail::str("SU(N) (1,N-1) N", n));
        }
        for (auto t : detail::types_up_to_rank(8)) {
            auto rs = build_root_system(t);
            for (unsigned mask = 0; mask + 1 < (1u << rs->rank()); ++mask) {
                std::vector<int> s0;
                for (int i = 0; i < rs->rank(); ++i)
                    if ((mask >> i) & 1) s0.push_back(i);
                // solve_monotone itself rejects a wrong stabilizer
                auto phi = solve_monotone({rs, s0});
                if (!(phi.theta_value() < 1))
                    rec.check(false, t.name() + detail::str(" pattern", mask));
            }
        }
    });
}

inline CriterionResult criterion_dimension_energy() {
    return detail::run(3, "Dimension and energy", 1.0, [](detail::Recorder& rec) {
        std::mt19937 rng(20240603);
        auto a1 = build_root_system("A1");
        for (int trial = 0; trial < 100; ++trial) {
            Rational lambda = frac(detail::uniform(rng, 1, 11), 24);
            WeylChamberPoint phi = WeylChamberPoint::from_eigenvalues(a1, {lambda, -lambda});
            long k = detail::uniform(rng, -5, 5), l = detail::uniform(rng, -5, 5);
            int g = static_cast<int>(detail::uniform(rng, 0, 3));
            long ss = detail::uniform(rng, -6, 6), bp = detail::uniform(rng, 0, 3), b1 = detail::uniform(rng, 0, 3);
            SurfaceData surf{{g}, ss};
            ChargePair c{k, {Integer(l)}};
            rec.check(formal_dimension(phi, c, surf, {bp, b1}) == 8 * k + 4 * l + (2 - 2 * g) - 3 * (bp - b1 + 1),
                      detail::str("SU(2) dimension trial", trial));
            rec.check(energy(phi, c, surf) == 64 * (Rational(k) + 2 * lambda * l - lambda * lambda * ss),
                      detail::str("SU(2) energy trial", trial));
        }
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<int> mult;
            int blocks = static_cast<int>(detail::uniform(rng, 2, 4));
            for (int b = 0; b < blocks; ++b) mult.push_back(static_cast<int>(detail::uniform(rng, 1, 3)));
            auto pat = su_n_monotone(mult);
            auto phi = su_n_point(pat);
            std::vector<Integer> ls;
            Integer total = 0;
            for (int b = 0; b + 1 < blocks; ++b) {
                ls.emplace_back(detail::uniform(rng, -4, 4));
                total += ls.back();
            }
            ls.push_back(-total);
            Integer k = detail::uniform(rng, -3, 3);
            SurfaceData surf = SurfaceData::with_chi(2 * detail::uniform(rng, -2, 1), detail::uniform(rng, -5, 5));
            FourManifoldData x{detail::uniform(rng, 0, 2), detail::uniform(rng, 0, 2)};
            ChargePair c{k, su_n_lattice_coords(ls)};
            rec.check(su_n_dimension(mult, k, ls, surf, x) == formal_dimension(phi, c, surf, x),
                      detail::str("SU(N) dictionary trial", trial));
        }
        auto types = detail::types_up_to_rank(8);
        for (int trial = 0; trial < 100; ++trial) {
            auto rs = build_root_system(types[trial % types.size()]);
            QVec coords(rs->rank());
            for (auto& v : coords) v = frac(detail::uniform(rng, 0, 3), 5 * rs->coxeter());
            if (is_zero(coords)) coords[0] = frac(1, 5 * rs->coxeter());
            WeylChamberPoint phi(rs, coords);
            auto lat = monopole_lattice(phi);
            ChargePair c{detail::uniform(rng, -3, 3), {}};
            for (size_t i = 0; i < lat.rank(); ++i) c.l.emplace_back(detail::uniform(rng, -3, 3));
            Integer ss = detail::uniform(rng, -4, 4);
            rec.check(energy_killing(phi, lat.element(c.l), c.k, ss) ==
                          energy_root_sum(phi, ::sintk::detail::charge_lift(phi, c), c.k, ss),
                      detail::str("energy forms trial", trial));
        }
    });
}

inline CriterionResult criterion_bubbles() {
    return detail::run(4, "Bubble inequalities", 5.0, [](detail::Recorder& rec) {
        for (int n = 2; n <= 6; ++n)
            for (int n1 = 1; n1 < n; ++n1) {
                auto scan = two_block_bubble_scan(n1, n - n1, 3, 3 * n);
                rec.check(scan.min_positive_dimension == 2 * n,
                          detail::str("blocks (" + std::to_string(n1) + "," + std::to_string(n - n1) + ") minimum",
                                      scan.min_positive_dimension));
            }
    });
}

inline CriterionResult criterion_nonintegrality() {
    return detail::run(5, "Non-integrality verdicts", 10.0, [](detail::Recorder& rec) {
        ComponentClasses one{{Integer(1)}, 0};
        auto spin9 = check_nonintegral_simple(solve_monotone({build_root_system("B4"), {}}), one);
        rec.check(spin9.pass, spin9.witness ? "Spin(9) FAIL: weight w" + std::to_string(spin9.witness->weight_index + 1) +
                                                  " orbit point " + to_string(spin9.witness->orbit_points[0]) +
                                                  " pairs to " + spin9.witness->sum.get_str()
                                            : "Spin(9) FAIL");
        auto spin11 = check_nonintegral_simple(solve_monotone({build_root_system("B5"), {}}), one);
        rec.check(!spin11.pass && spin11.witness && spin11.witness->sum == 0, "Spin(11) FAIL with pairing 0");
        rec.check(check_nonintegral_simple(solve_monotone({build_root_system("G2"), {}}), one).pass, "G2 PASS");
        for (int n = 2; n <= 8; ++n)
            for (int n1 = 1; n1 < n; ++n1) {
                auto v = check_nonintegral_simple(su_n_point(su_n_monotone({n1, n - n1})), one);
                rec.check(v.pass == (std::gcd(n1, n - n1) == 1),
                          "SU(" + std::to_string(n) + ") blocks " + std::to_string(n1) + "," + std::to_string(n - n1));
            }
        for (int n = 2; n <= 9; ++n)
            for (long a = 0; a <= 12; ++a)
                for (long b = 0; b <= 12; ++b) {
                    Integer g = gcd(gcd(Integer(a), Integer(b)), Integer(n));
                    if (check_un_coprime(n, {Integer(a), Integer(b)}).pass != (g == 1))
                        rec.check(false, "U(" + std::to_string(n) + ") coprime rule");
                }
    });
}

inline CriterionResult criterion_representation_varieties() {
    return detail::run(6, "Representation varieties", 30.0, [](detail::Recorder& rec) {
        auto unknot = rep_variety(KnotPresentation::unknot());
        rec.check(unknot.components.size() == 1 && unknot.count(ComponentKind::abelian_sphere) == 1 &&
                      unknot.ungraded() == detail::group(2),
                  "unknot S^2");
        for (auto k : {KnotPresentation::two_bridge(3, 1), KnotPresentation::torus(2, 3)}) {
            auto r = rep_variety(k);
            rec.check(r.count(ComponentKind::abelian_sphere) == 1 && r.count(ComponentKind::irreducible_rp3) == 1 &&
                          r.ungraded() == detail::group(4, {2}),
                      k.to_string() + " S^2 + RP^3");
        }
        for (int p : {3, 5, 7, 9}) {
            rec.check(rep_variety_two_bridge(p, 1).count(ComponentKind::irreducible_rp3) == size_t(p - 1) / 2,
                      detail::str("2bridge p", p));
            rec.check(rep_variety_torus(2, p, TorusConstraint::meridian_traceless).count(ComponentKind::irreducible_rp3) ==
                          size_t(p - 1) / 2,
                      detail::str("torus 2,p", p));
        }
        rec.check(rep_variety_torus(2, 3, TorusConstraint::longitude_traceless).components.size() == 4,
                  "trefoil longitude count");
        for (int p = 2; p <= 7; ++p)
            for (int q = 2; q <= 7; ++q) {
                if (std::gcd(p, q) != 1) continue;
                auto pts = rep_variety_torus(p, q, TorusConstraint::longitude_traceless).components.size();
                rec.check(Integer(static_cast<long>(pts)) == 2 * alexander_second_derivative_at_one(KnotPresentation::torus(p, q)),
                          "longitude count T(" + std::to_string(p) + "," + std::to_string(q) + ")");
            }
        for (int p = 3; p <= 15; p += 2)
            for (int q = 1; q < p; ++q) {
                if (std::gcd(p, q) != 1) continue;
                auto roots = two_bridge_roots(p, q).size();
                rec.check(static_cast<int>(roots) == detail::fine_grid_census(p, q),
                          "census b(" + std::to_string(p) + "," + std::to_string(q) + ")");
            }
    });
}

inline CriterionResult criterion_t3() {
    return detail::run(7, "T^3 flat connections", 1.0, [](detail::Recorder& rec) {
        for (int n = 2; n <= 6; ++n) {
            auto classes = t3_flat_connections(n);
            rec.check(static_cast<int>(classes.size()) == n, detail::str("class count N", n));
            for (const auto& c : classes) rec.check(c.verified(), detail::str("relations N", n) + detail::str(" k", c.k));
        }
    });
}

inline CriterionResult criterion_khovanov() {
    return detail::run(8, "Khovanov homology", 60.0, [](detail::Recorder& rec) {
        const PDCode left_trefoil = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
        const PDCode figure_eight = parse_pd("PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]");
        std::vector<std::pair<std::string, std::vector<PDCode>>> knots{
            {"unknot", {PDCode{{}, 1}, braid_closure(2, {1}), braid_closure(2, {-1}), braid_closure(3, {1, -2})}},
            {"right trefoil", {braid_closure(2, {1, 1, 1}), two_bridge_diagram(3, 1), braid_closure(3, {1, 1, 1, 2})}},
            {"left trefoil", {left_trefoil, mirror(braid_closure(2, {1, 1, 1})), braid_closure(2, {-1, -1, -1})}},
            {"figure-eight", {figure_eight, braid_closure(3, {1, -2, 1, -2}), two_bridge_diagram(5, 2)}},
            {"T(2,5)", {torus_diagram(2, 5), two_bridge_diagram(5, 1)}},
            {"T(2,7)", {torus_diagram(2, 7), two_bridge_diagram(7, 1)}},
        };
        const LaurentPoly q_plus_inv = LaurentPoly::monomial(1) + LaurentPoly::monomial(-1);
        for (const auto& [name, diagrams] : knots) {
            BigradedGroup first = khovanov(diagrams.front());
            for (size_t d = 0; d < diagrams.size(); ++d) {
                BigradedGroup kh = d == 0 ? first : khovanov(diagrams[d]);
                rec.check(kh == first, name + detail::str(" diagram", d) + " differs");
                rec.check(graded_euler_characteristic(kh) == q_plus_inv * jones(diagrams[d]),
                          name + detail::str(" Euler characteristic diagram", d));
            }
            if (name == "unknot") rec.check(first.total() == detail::group(2), "unknot Z^2");
            if (name.find("trefoil") != std::string::npos)
                rec.check(first.total() == detail::group(4, {2}), name + " Z^4 + Z/2");
        }
    });
}

inline CriterionResult criterion_observation() {
    return detail::run(9, "Khovanov vs representation variety", 120.0, [](detail::Recorder& rec) {
        for (auto k : {KnotPresentation::unknot(), KnotPresentation::torus(2, 3), KnotPresentation::torus(2, 5),
                       KnotPresentation::torus(2, 7)}) {
            auto c = compare_with_repvar(k);
            rec.check(c.kh_matches_rep, k.to_string() + ": kh " + c.kh.to_string() + " vs H(R) " + c.rep.to_string());
        }
        auto t45 = compare_with_repvar(KnotPresentation::torus(4, 5));
        rec.check(!t45.doubled_matches_critical && t45.critical_rank_minus_doubled < 0,
                  "T(4,5): critical " + t45.critical.to_string() + " vs kh+kh " + t45.kh_doubled.to_string());
    });
}

inline CriterionResult criterion_action_shifts() {
    return detail::run(10, "Z/N action bookkeeping", 0.0, [](detail::Recorder& rec) {
        for (int n = 2; n <= 12; ++n) {
            auto s = action_shifts(n);
            rec.check(s.cs_shift == Rational(-16 * (n - 1)) && s.grading_shift == -4 * (n - 1), detail::str("shifts N", n));
            rec.check(n * s.grading_shift == -4 * (n - 1) * n, detail::str("closed loop N", n));
        }
    });
}

inline std::vector<CriterionResult> run_all() {
    return {criterion_lie_identities(),   criterion_monotone(),
            criterion_dimension_energy(), criterion_bubbles(),
            criterion_nonintegrality(),   criterion_representation_varieties(),
            criterion_t3(),               criterion_khovanov(),
            criterion_observation(),      criterion_action_shifts()};
}

} // namespace sintk::acceptance
