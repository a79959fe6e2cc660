#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <set>
#include <vector>

#include "sintk/lie/cartan_type.hpp"
#include "sintk/rational.hpp"

namespace sintk {

// Simple root system in a fixed Euclidean ambient space. The Cartan algebra
// and its dual are both identified with V = span(roots) via the dot product;
// the Killing form is c times the dot product on V.
class RootSystem {
public:
    explicit RootSystem(CartanType type) : type_(type) {
        type_.validate();
        build_simple_roots();
        build();
    }

    const CartanType& cartan_type() const { return type_; }
    int rank() const { return type_.rank; }
    size_t ambient_dim() const { return dim_; }

    const std::vector<QVec>& simple_roots() const { return simple_; }
    const std::vector<QVec>& roots() const { return roots_; }
    const std::vector<QVec>& positive_roots() const { return positive_; }
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
    const std::vector<QVec>& fundamental_weights() const { return weights_; }
    const std::vector<QVec>& fundamental_coweights() const { return coweights_; }
    const QVec& weyl_vector() const { return rho_; }
    const QVec& highest_root() const { return theta_; }
    QVec highest_coroot() const { return coroot(theta_); }
    const std::vector<Rational>& theta_coefficients() const { return n_; }
    const std::vector<Rational>& theta_dual_coefficients() const { return ndual_; }
    int coxeter() const { return h_; }
    int dual_coxeter() const { return hdual_; }
    // Killing form = killing_scale * dot product on V.
    const Rational& killing_scale() const { return c_; }
    const QMat& killing_gram() const { return killing_; }
    int dim_group() const { return static_cast<int>(roots_.size()) + rank(); }

    QVec coroot(const QVec& a) const { return (Rational(2) / dot(a, a)) * a; }
    QVec simple_coroot(int i) const { return coroot(simple_[i]); }

    Rational killing(const QVec& x, const QVec& y) const { return c_ * dot(x, y); }
    // Inner product on the dual induced by the Killing form.
    Rational dual_killing(const QVec& a, const QVec& b) const { return dot(a, b) / c_; }
    // Normalization in which long roots have squared length 2.
    Rational norm2(const QVec& x, const QVec& y) const {
        return killing(x, y) / Rational(2 * hdual_);
    }
    Rational dual_norm2(const QVec& a, const QVec& b) const {
        return dual_killing(a, b) * Rational(2 * hdual_);
    }
    // The element of t Killing-dual to a covector.
    QVec dagger(const QVec& a) const { return (1 / c_) * a; }

    // Coefficients of v in the basis of simple roots.
    QVec simple_coefficients(const QVec& v) const {
        QVec r(rank());
        for (int i = 0; i < rank(); ++i) r[i] = dot(v, coweights_[i]);
        return r;
    }
    // Coefficients of v in the basis of simple coroots.
    QVec coroot_coefficients(const QVec& v) const {
        QVec r(rank());
        for (int i = 0; i < rank(); ++i) r[i] = dot(v, weights_[i]);
        return r;
    }

    QVec reflect(int i, const QVec& v) const {
        const QVec& a = simple_[i];
        return v - (2 * dot(v, a) / dot(a, a)) * a;
    }

    bool in_span(const QVec& v) const { return projection_to_span(v) == v; }
    QVec projection_to_span(const QVec& v) const { return mat_vec(pv_, v); }
    const QMat& span_projector() const { return pv_; }

    bool is_positive(const QVec& root) const {
        for (const auto& x : simple_coefficients(root))
            if (x < 0) return false;
        return true;
    }

    std::uint64_t weyl_group_order() const {
        auto fact = [](int n) {
            std::uint64_t f = 1;
            for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
            return f;
        };
        int n = rank();
        switch (type_.family) {
            case 'A': return fact(n + 1);
            case 'B':
            case 'C': return (std::uint64_t{1} << n) * fact(n);
            case 'D': return (std::uint64_t{1} << (n - 1)) * fact(n);
            case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
            case 'F': return 1152;
            default: return 12;
        }
    }

private:
    void build_simple_roots() {
        int n = rank();
        auto e = [&](size_t d, size_t i) {
            QVec v = zero_vec(d);
            v[i] = 1;
            return v;
        };
        auto half = Rational(1, 2);
        switch (type_.family) {
            case 'A':
                dim_ = n + 1;
                for (int i = 0; i < n; ++i) simple_.push_back(e(dim_, i) - e(dim_, i + 1));
                break;
            case 'B':
            case 'C':
            case 'D':
                dim_ = n;
                for (int i = 0; i + 1 < n; ++i) simple_.push_back(e(dim_, i) - e(dim_, i + 1));
                if (type_.family == 'B') simple_.push_back(e(dim_, n - 1));
                if (type_.family == 'C') simple_.push_back(Rational(2) * e(dim_, n - 1));
                if (type_.family == 'D') simple_.push_back(e(dim_, n - 2) + e(dim_, n - 1));
                break;
            case 'E': {
                // Bourbaki numbering in R^8; E7 and E6 use the first simple roots.
                dim_ = 8;
                QVec a1 = zero_vec(8);
                a1[0] = half;
                a1[7] = half;
                for (int i = 1; i < 7; ++i) a1[i] = -half;
                simple_.push_back(a1);
                simple_.push_back(e(8, 0) + e(8, 1));
                for (int i = 1; i < 7; ++i) simple_.push_back(e(8, i) - e(8, i - 1));
                simple_.resize(n);
                break;
            }
            case 'F':
                dim_ = 4;
                simple_ = {e(4, 1) - e(4, 2), e(4, 2) - e(4, 3), e(4, 3),
                           QVec{half, -half, -half, -half}};
                break;
            default:
                dim_ = 3;
                simple_ = {e(3, 0) - e(3, 1), QVec{Rational(-2), Rational(1), Rational(1)}};
                break;
        }
    }

    void build() {
        int n = rank();
        cartan_.assign(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                cartan_[i][j] = static_cast<int>(to_long(2 * dot(simple_[i], simple_[j]) /
                                                         dot(simple_[i], simple_[i])));

        QMat gram(n, QVec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) gram[i][j] = dot(simple_[i], simple_[j]);
        QMat ginv = inverse(gram);
        coweights_.assign(n, zero_vec(dim_));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) coweights_[i] += ginv[i][k] * simple_[k];
        for (int i = 0; i < n; ++i)
            weights_.push_back((dot(simple_[i], simple_[i]) / 2) * coweights_[i]);

        pv_.assign(dim_, zero_vec(dim_));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                for (size_t a = 0; a < dim_; ++a)
                    for (size_t b = 0; b < dim_; ++b)
                        pv_[a][b] += simple_[i][a] * ginv[i][k] * simple_[k][b];

        std::set<QVec> seen(simple_.begin(), simple_.end());
        std::deque<QVec> queue(simple_.begin(), simple_.end());
        while (!queue.empty()) {
            QVec v = queue.front();
            queue.pop_front();
            for (int i = 0; i < n; ++i) {
                QVec w = reflect(i, v);
                if (seen.insert(w).second) queue.push_back(w);
            }
        }
        roots_.assign(seen.begin(), seen.end());

        std::vector<std::pair<Rational, QVec>> pos;
        for (const auto& r : roots_) {
            if (!is_positive(r)) continue;
            Rational height = 0;
            for (const auto& x : simple_coefficients(r)) height += x;
            pos.emplace_back(height, r);
        }
        std::sort(pos.begin(), pos.end());
        for (auto& [ht, r] : pos) positive_.push_back(r);
        theta_ = positive_.back();

        rho_ = zero_vec(dim_);
        for (const auto& r : positive_) rho_ += r;
        rho_ = Rational(1, 2) * rho_;

        n_ = simple_coefficients(theta_);
        ndual_ = coroot_coefficients(coroot(theta_));
        Rational h = 1, hd = 1;
        for (const auto& x : n_) h += x;
        for (const auto& x : ndual_) hd += x;
        h_ = static_cast<int>(to_long(h));
        hdual_ = static_cast<int>(to_long(hd));

        killing_.assign(dim_, zero_vec(dim_));
        for (const auto& r : roots_)
            for (size_t a = 0; a < dim_; ++a)
                for (size_t b = 0; b < dim_; ++b) killing_[a][b] += r[a] * r[b];
        c_ = dot(mat_vec(killing_, simple_[0]), simple_[0]) / dot(simple_[0], simple_[0]);
    }

    CartanType type_;
    size_t dim_ = 0;
    std::vector<QVec> simple_, roots_, positive_, weights_, coweights_;
    std::vector<std::vector<int>> cartan_;
    QVec rho_, theta_;
    std::vector<Rational> n_, ndual_;
    int h_ = 0, hdual_ = 0;
    Rational c_;
    QMat killing_, pv_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

inline RootSystemPtr build_root_system(CartanType type) {
    return std::make_shared<const RootSystem>(type);
}

inline RootSystemPtr build_root_system(const std::string& name) {
    return build_root_system(CartanType::parse(name));
}

// Closure of {w} under the simple reflections, sorted lexicographically.
inline std::vector<QVec> weyl_orbit(const QVec& w, const RootSystem& rs) {
    std::set<QVec> seen{w};
    std::deque<QVec> queue{w};
    while (!queue.empty()) {
        QVec v = queue.front();
        queue.pop_front();
        for (int i = 0; i < rs.rank(); ++i) {
            QVec u = rs.reflect(i, v);
            if (seen.insert(u).second) queue.push_back(u);
        }
    }
    return {seen.begin(), seen.end()};
}

} // namespace sintk
