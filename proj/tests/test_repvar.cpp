#include <catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "sintk/knot/alexander.hpp"
#include "sintk/repvar/critical_set.hpp"
#include "sintk/repvar/t3.hpp"
#include "sintk/repvar/torus.hpp"
#include "sintk/repvar/two_bridge.hpp"

using namespace sintk;

namespace {

using C = std::complex<double>;
using M2 = std::array<C, 4>;
const double pi = std::numbers::pi;

M2 mul(const M2& a, const M2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}
M2 adj(const M2& a) { return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}; }
M2 lin(double x, const M2& a, double y, const M2& b) {
    return {x * a[0] + y * b[0], x * a[1] + y * b[1], x * a[2] + y * b[2], x * a[3] + y * b[3]};
}
M2 power(const M2& a, long n) {
    M2 out{1, 0, 0, 1};
    M2 g = n >= 0 ? a : adj(a);
    for (long i = 0; i < std::abs(n); ++i) out = mul(out, g);
    return out;
}

const M2 QI{C(0, 1), 0, 0, C(0, -1)}, QJ{0, 1, -1, 0}, ONE{1, 0, 0, 1};

// Schubert word for b(p,q) built straight from the matrices; q made odd by q - p.
M2 schubert_w(int p, int q, const M2& a, const M2& b) {
    if (q % 2 == 0) q -= p;
    M2 w = ONE;
    for (int i = 1; i < p; ++i) {
        int e = static_cast<int>(std::floor(double(i) * q / p)) % 2 == 0 ? 1 : -1;
        const M2& g = i % 2 == 1 ? b : a;
        w = mul(w, e > 0 ? g : adj(g));
    }
    return w;
}

// Frobenius norm of aw - wb divided by sqrt 2, i.e. the quaternion norm.
double matrix_defect(int p, int q, double theta) {
    M2 a = QI, b = lin(std::cos(theta), QI, std::sin(theta), QJ);
    M2 w = schubert_w(p, q, a, b);
    M2 l = mul(a, w), r = mul(w, b);
    double s = 0;
    for (int i = 0; i < 4; ++i) s += std::norm(l[i] - r[i]);
    return std::sqrt(s / 2);
}

double matrix_residual(int p, int q, double theta) {
    M2 w = schubert_w(p, q, QI, lin(std::cos(theta), QI, std::sin(theta), QJ));
    return w[0].real() * std::sin(theta / 2) + w[1].imag() * std::cos(theta / 2);
}

int grid_census(int p, int q, int n) {
    int changes = 0;
    double prev = matrix_residual(p, q, pi / n);
    for (int k = 2; k <= n; ++k) {
        double cur = matrix_residual(p, q, pi * k / n);
        changes += (prev < 0) != (cur < 0);
        prev = cur;
    }
    return changes;
}

// Traceless meridian x^s y^r on T(p,q): scan the axis angle for every conjugacy-class pair.
int torus_meridian_census(int p, int q, int n) {
    auto [s, r] = meridian_exponents(p, q);
    int count = 0;
    for (int a = 1; a < p; ++a)
        for (int b = 1; b < q; ++b) {
            if ((a - b) % 2 != 0) continue;
            double al = pi * a / p, be = pi * b / q;
            auto trace = [&](double phi) {
                M2 x = lin(std::cos(al), ONE, std::sin(al), QI);
                M2 v = lin(std::cos(phi), QI, std::sin(phi), QJ);
                M2 y = lin(std::cos(be), ONE, std::sin(be), v);
                M2 m = mul(power(x, s), power(y, r));
                return (m[0] + m[3]).real();
            };
            double prev = trace(pi / (2.0 * n));
            for (int k = 1; k < n; ++k) {
                double cur = trace(pi * (k + 0.5) / n);
                count += (prev < 0) != (cur < 0);
                prev = cur;
            }
        }
    return count;
}

long totient(int n) {
    long phi = 0;
    for (int k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
    return phi;
}

AbelianGroup grp(long free, std::vector<long> torsion = {}) {
    AbelianGroup g = AbelianGroup::free(free);
    for (long t : torsion) g.add_cyclic(Integer(t));
    return g;
}

} // namespace

TEST_CASE("relation defect equals twice the scalar residual") {
    for (int p : {3, 5, 7, 9, 11})
        for (int q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (double theta : {0.1, 0.7, 1.3, 2.2, 3.0}) {
                CHECK(two_bridge_relation_defect(p, q, theta) == Catch::Approx(matrix_defect(p, q, theta)).margin(1e-12));
                CHECK(two_bridge_relation_defect(p, q, theta) ==
                      Catch::Approx(2 * std::abs(two_bridge_residual(p, q, theta))).margin(1e-12));
                CHECK(two_bridge_residual(p, q, theta) == Catch::Approx(matrix_residual(p, q, theta)).margin(1e-12));
            }
        }
}

TEST_CASE("bisection roots match a 10x grid census and satisfy the relation") {
    for (int p = 3; p <= 21; p += 2)
        for (int q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto roots = two_bridge_roots(p, q);
            INFO("b(" << p << "," << q << ")");
            CHECK(static_cast<int>(roots.size()) == grid_census(p, q, 10 * two_bridge_grid_points(p)));
            for (double t : roots) CHECK(matrix_defect(p, q, t) < 1e-9);
        }
}

TEST_CASE("two-bridge varieties have (p-1)/2 projective components") {
    for (int p = 3; p <= 15; p += 2)
        for (int q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto r = rep_variety_two_bridge(p, q);
            CHECK(r.count(ComponentKind::abelian_sphere) == 1);
            CHECK(r.count(ComponentKind::irreducible_rp3) == size_t(p - 1) / 2);
            long m = (p - 1) / 2;
            CHECK(r.ungraded() == grp(2 + 2 * m, std::vector<long>(m, 2)));
        }
}

TEST_CASE("unknot and trefoil varieties") {
    auto u = rep_variety(KnotPresentation::unknot());
    REQUIRE(u.components.size() == 1);
    CHECK(u.components[0].kind == ComponentKind::abelian_sphere);
    CHECK(u.total_homology == homology::sphere(2));

    GradedGroup trefoil;
    trefoil.add(0, grp(2));
    trefoil.add(1, grp(0, {2}));
    trefoil.add(2, grp(1));
    trefoil.add(3, grp(1));
    CHECK(rep_variety(KnotPresentation::two_bridge(3, 1)).total_homology == trefoil);
    CHECK(rep_variety(KnotPresentation::torus(2, 3)).total_homology == trefoil);
    CHECK(rep_variety(KnotPresentation::torus(3, 2)).total_homology == trefoil);
}

TEST_CASE("torus meridian counts match an axis-angle scan") {
    for (int p = 2; p <= 7; ++p)
        for (int q = p + 1; q <= 9; ++q) {
            if (std::gcd(p, q) != 1) continue;
            INFO("T(" << p << "," << q << ")");
            auto r = rep_variety_torus(p, q, TorusConstraint::meridian_traceless);
            CHECK(static_cast<int>(r.count(ComponentKind::irreducible_rp3)) == torus_meridian_census(p, q, 4000));
        }
    CHECK(rep_variety_torus(3, 4, TorusConstraint::meridian_traceless).count(ComponentKind::irreducible_rp3) == 3);
    CHECK(rep_variety_torus(3, 5, TorusConstraint::meridian_traceless).count(ComponentKind::irreducible_rp3) == 4);
    CHECK(rep_variety_torus(4, 5, TorusConstraint::meridian_traceless).ungraded() == grp(10, {2, 2, 2, 2}));
}

TEST_CASE("torus and two-bridge presentations of the same knot agree") {
    for (int p : {3, 5, 7, 9, 11})
        CHECK(rep_variety_torus(2, p, TorusConstraint::meridian_traceless).ungraded() ==
              rep_variety_two_bridge(p, 1).ungraded());
}

TEST_CASE("longitude counts equal (p^2-1)(q^2-1)/6") {
    for (int p = 2; p <= 7; ++p)
        for (int q = 2; q <= 7; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto r = rep_variety_torus(p, q, TorusConstraint::longitude_traceless);
            long expected = (p * p - 1) * (q * q - 1) / 6;
            CHECK(static_cast<long>(r.components.size()) == expected);
            CHECK(Integer(expected) == 2 * alexander_second_derivative_at_one(KnotPresentation::torus(p, q)));
        }
    CHECK(rep_variety_torus(2, 3, TorusConstraint::longitude_traceless).components.size() == 4);
}

TEST_CASE("longitude constraint is rejected for two-bridge input") {
    CHECK_THROWS_AS(rep_variety(KnotPresentation::two_bridge(5, 2), TorusConstraint::longitude_traceless), Unsupported);
    CHECK_THROWS_AS(parse_constraint("equator"), InvalidInput);
}

TEST_CASE("T^3 classes match complex clock and shift matrices") {
    for (int n = 2; n <= 6; ++n) {
        auto classes = t3_flat_connections(n);
        REQUIRE(static_cast<int>(classes.size()) == n);
        const C x = std::polar(1.0, pi / n), zeta = x * x;
        auto eval = [&](const CyclotomicInt& c) {
            C s = 0;
            for (size_t i = 0; i < c.coefficients().size(); ++i) s += c.coefficients()[i].get_d() * std::pow(x, int(i));
            return s;
        };
        for (const auto& c : classes) {
            CHECK(c.verified());
            CHECK(c.scalar_dimension == totient(2 * n));
            // ha hb = zeta hb ha, hc = zeta^k, determinants 1
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    C ab = 0, ba = 0;
                    for (int m = 0; m < n; ++m) {
                        ab += eval(c.ha[i][m]) * eval(c.hb[m][j]);
                        ba += eval(c.hb[i][m]) * eval(c.ha[m][j]);
                    }
                    CHECK(std::abs(ab - zeta * ba) < 1e-9);
                    C expected = i == j ? std::pow(zeta, c.k) : C(0);
                    CHECK(std::abs(eval(c.hc[i][j]) - expected) < 1e-9);
                }
        }
    }
    CHECK_THROWS_AS(t3_flat_connections(1), InvalidInput);
}

TEST_CASE("unit tangent bundle of CP^{N-1} has Euler characteristic 0 and torsion Z/N") {
    for (int n = 2; n <= 7; ++n) {
        auto h = homology::unit_tangent_bundle_cp(n);
        long chi = 0;
        for (const auto& [d, g] : h.by_degree) chi += (d % 2 == 0 ? 1 : -1) * g.free_rank;
        CHECK(chi == 0);
        CHECK(h.total().torsion == grp(0, {n}).torsion);
        CHECK(h.total().free_rank == 2 * (n - 1));
    }
}

TEST_CASE("critical sets") {
    auto unknot = critical_set_report(KnotPresentation::unknot(), 4);
    CHECK(unknot.full.ungraded() == grp(16));
    CHECK(unknot.fiber.ungraded() == grp(4));

    auto t3 = critical_set_report(KnotPresentation::torus(2, 3), 3);
    CHECK(t3.full.ungraded() == grp(21, {3, 3, 3}));
    CHECK(t3.reduced.ungraded() == grp(7, {3}));
    CHECK(t3.fiber.ungraded() == grp(9));

    // N = 2: two copies of the SU(2) variety
    for (auto k : {KnotPresentation::torus(2, 5), KnotPresentation::torus(4, 5), KnotPresentation::two_bridge(5, 2)}) {
        auto r = critical_set_report(k, 2);
        CHECK(r.full.ungraded() == rep_variety(k).ungraded() + rep_variety(k).ungraded());
    }
    CHECK_THROWS_AS(critical_set_report(KnotPresentation::torus(2, 5), 3), Unsupported);
}
