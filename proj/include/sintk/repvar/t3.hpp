#pragma once

#include <string>
#include <vector>

#include "sintk/errors.hpp"
#include "sintk/knot/laurent.hpp"
#include "sintk/rational.hpp"

namespace sintk {

// Cyclotomic polynomial Phi_n as an ordinary polynomial.
inline LaurentPoly cyclotomic_polynomial(int n) {
    LaurentPoly p = LaurentPoly::monomial(n) - LaurentPoly(1);
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = exact_divide(p, cyclotomic_polynomial(d));
    return p;
}

// Element of Z[x]/Phi_n(x), x a primitive n-th root of unity; coefficients of 1, x, ..., x^{deg-1}.
class CyclotomicInt {
public:
    CyclotomicInt() = default;
    CyclotomicInt(int n, std::vector<Integer> c) : n_(n), c_(std::move(c)) {}

    int order() const { return n_; }
    const std::vector<Integer>& coefficients() const { return c_; }
    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }
    bool operator==(const CyclotomicInt& o) const { return n_ == o.n_ && c_ == o.c_; }

    std::string to_string() const {
        LaurentPoly p;
        for (size_t i = 0; i < c_.size(); ++i) p.add_term(static_cast<int>(i), c_[i]);
        return p.to_string("z");
    }

private:
    int n_ = 0;
    std::vector<Integer> c_;
};

class CyclotomicRing {
public:
    explicit CyclotomicRing(int n) : n_(n), phi_(cyclotomic_polynomial(n)) { deg_ = phi_.max_degree(); }

    int order() const { return n_; }
    int degree() const { return deg_; }

    CyclotomicInt reduce(const LaurentPoly& p) const {
        // Laurent exponents are taken mod n first; x^n = 1.
        LaurentPoly q;
        for (const auto& [e, c] : p.terms()) q.add_term(((e % n_) + n_) % n_, c);
        while (!q.is_zero() && q.max_degree() >= deg_) {
            int e = q.max_degree();
            Integer c = q.coefficient(e);
            q -= LaurentPoly::monomial(e - deg_, c) * phi_;
        }
        std::vector<Integer> out(deg_, Integer(0));
        for (const auto& [e, c] : q.terms()) out[e] = c;
        return CyclotomicInt(n_, out);
    }
    CyclotomicInt zero() const { return reduce(LaurentPoly()); }
    CyclotomicInt one() const { return reduce(LaurentPoly(1)); }
    CyclotomicInt power(int k) const { return reduce(LaurentPoly::monomial(k)); }

    LaurentPoly lift(const CyclotomicInt& a) const {
        LaurentPoly p;
        for (size_t i = 0; i < a.coefficients().size(); ++i) p.add_term(static_cast<int>(i), a.coefficients()[i]);
        return p;
    }
    CyclotomicInt add(const CyclotomicInt& a, const CyclotomicInt& b) const { return reduce(lift(a) + lift(b)); }
    CyclotomicInt mul(const CyclotomicInt& a, const CyclotomicInt& b) const { return reduce(lift(a) * lift(b)); }

    // Matrix of multiplication by a on the Q-basis 1, x, ..., x^{deg-1}.
    QMat multiplication_matrix(const CyclotomicInt& a) const {
        QMat m(deg_, QVec(deg_, Rational(0)));
        for (int j = 0; j < deg_; ++j) {
            auto col = mul(a, power(j));
            for (int i = 0; i < deg_; ++i) m[i][j] = Rational(col.coefficients()[i]);
        }
        return m;
    }

private:
    int n_;
    LaurentPoly phi_;
    int deg_;
};

using CycMatrix = std::vector<std::vector<CyclotomicInt>>;

inline CycMatrix cyc_mul(const CyclotomicRing& R, const CycMatrix& a, const CycMatrix& b) {
    size_t n = a.size();
    CycMatrix out(n, std::vector<CyclotomicInt>(n, R.zero()));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            LaurentPoly s;
            for (size_t k = 0; k < n; ++k) s += R.lift(a[i][k]) * R.lift(b[k][j]);
            out[i][j] = R.reduce(s);
        }
    return out;
}

inline CycMatrix cyc_scalar(const CyclotomicRing& R, size_t n, const CyclotomicInt& c) {
    CycMatrix out(n, std::vector<CyclotomicInt>(n, R.zero()));
    for (size_t i = 0; i < n; ++i) out[i][i] = c;
    return out;
}

// Determinant by permutation expansion over rows (Leibniz via recursion on minors).
inline CyclotomicInt cyc_determinant(const CyclotomicRing& R, const CycMatrix& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    LaurentPoly s;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        CycMatrix minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<CyclotomicInt> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        LaurentPoly term = R.lift(m[0][j]) * R.lift(cyc_determinant(R, minor));
        s += j % 2 == 0 ? term : -term;
    }
    return R.reduce(s);
}

struct T3FlatClass {
    int k = 0;                        // h(c) = zeta^k, zeta = exp(2 pi i / N)
    CycMatrix ha, hb, hc;
    bool commutator_ab = false;       // h(a) h(b) h(a)^-1 h(b)^-1 = zeta
    bool commutator_ac = false;
    bool commutator_bc = false;
    bool unit_determinant = false;
    long commutant_dimension = 0;     // over Q; equals [Q(zeta_2N):Q] iff the commutant is scalar
    long scalar_dimension = 0;
    bool irreducible() const { return commutant_dimension == scalar_dimension; }
    bool verified() const { return commutator_ab && commutator_ac && commutator_bc && unit_determinant && irreducible(); }
};

// Dimension over Q of {M : M g = g M for all g in gens}, entries in Q(x).
inline long commutant_dimension(const CyclotomicRing& R, const std::vector<CycMatrix>& gens) {
    size_t n = gens.front().size();
    int d = R.degree();
    size_t unknowns = n * n * d;
    QMat sys;
    // unknown (i, j, t): coefficient of x^t in M[i][j]
    auto var = [&](size_t i, size_t j, int t) { return (i * n + j) * d + t; };
    for (const auto& g : gens) {
        std::vector<std::vector<QMat>> mult(n, std::vector<QMat>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) mult[i][j] = R.multiplication_matrix(g[i][j]);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                // (M g - g M)[i][j] = sum_k M[i][k] g[k][j] - g[i][k] M[k][j]
                for (int row = 0; row < d; ++row) {
                    QVec eq(unknowns, Rational(0));
                    for (size_t k = 0; k < n; ++k)
                        for (int t = 0; t < d; ++t) {
                            eq[var(i, k, t)] += mult[k][j][row][t];
                            eq[var(k, j, t)] -= mult[i][k][row][t];
                        }
                    sys.push_back(std::move(eq));
                }
            }
    }
    return static_cast<long>(unknowns) - static_cast<long>(rank(sys));
}

// The N flat connections on T^3 with h(a), h(b) the scaled clock and shift matrices.
inline std::vector<T3FlatClass> t3_flat_connections(int N) {
    if (N < 2) throw InvalidInput("N must be at least 2");
    CyclotomicRing R(2 * N);  // x = exp(pi i / N), zeta = x^2
    // epsilon^N = -1 for even N so that the determinants are 1
    auto eps_pow = [&](int sign) { return N % 2 == 0 ? R.power(sign) : R.one(); };
    auto build = [&](int inverse) {
        CycMatrix clock(N, std::vector<CyclotomicInt>(N, R.zero())), shift = clock;
        for (int i = 0; i < N; ++i) {
            clock[i][i] = R.mul(eps_pow(inverse ? -1 : 1), R.power((inverse ? -2 : 2) * i));
            // shift e_i -> e_{i+1}; inverse is the transpose
            int r = inverse ? i : (i + 1) % N, c = inverse ? (i + 1) % N : i;
            shift[r][c] = eps_pow(inverse ? -1 : 1);
        }
        return std::make_pair(clock, shift);
    };
    auto [clock, shift] = build(0);
    auto [clock_inv, shift_inv] = build(1);
    CyclotomicInt zeta = R.power(2);

    // clock * shift * clock^-1 * shift^-1 = zeta
    CycMatrix ha = clock, hb = shift, ha_inv = clock_inv, hb_inv = shift_inv;
    auto identity = cyc_scalar(R, N, R.one());
    if (!(cyc_mul(R, ha, ha_inv) == identity) || !(cyc_mul(R, hb, hb_inv) == identity))
        throw std::logic_error("clock/shift inverses are wrong");
    auto comm_ab = cyc_mul(R, cyc_mul(R, ha, hb), cyc_mul(R, ha_inv, hb_inv));
    bool ab = comm_ab == cyc_scalar(R, N, zeta);
    bool det1 = cyc_determinant(R, ha) == R.one() && cyc_determinant(R, hb) == R.one();
    long scalar = R.degree();
    long commutant = commutant_dimension(R, {ha, hb});

    std::vector<T3FlatClass> out;
    for (int k = 0; k < N; ++k) {
        T3FlatClass c;
        c.k = k;
        c.ha = ha;
        c.hb = hb;
        c.hc = cyc_scalar(R, N, R.power(2 * k));
        auto hc_inv = cyc_scalar(R, N, R.power(-2 * k));
        c.commutator_ab = ab;
        c.commutator_ac = cyc_mul(R, cyc_mul(R, ha, c.hc), cyc_mul(R, ha_inv, hc_inv)) == identity;
        c.commutator_bc = cyc_mul(R, cyc_mul(R, hb, c.hc), cyc_mul(R, hb_inv, hc_inv)) == identity;
        c.unit_determinant = det1 && cyc_determinant(R, c.hc) == R.one();
        c.commutant_dimension = commutant;
        c.scalar_dimension = scalar;
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace sintk
