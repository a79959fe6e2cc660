#pragma once

#include <string>
#include <vector>

#include "sintk/lie/root_system.hpp"

namespace sintk {

struct LieSummary {
    std::string type;
    int rank = 0;
    int dim_group = 0;
    int positive_roots = 0;
    int coxeter = 0;
    int dual_coxeter = 0;
    Rational killing_scale;       // Killing form = killing_scale * dot
    QVec twice_rho;
    QVec highest_root;
    Rational theta_norm;          // <theta, theta>
    Rational twice_rho_theta;     // 2 <rho, theta>
    std::vector<QVec> simple_roots;
    std::vector<std::vector<int>> cartan_matrix;
    std::vector<QVec> positive_root_list;  // filled only on request

    bool identities_hold() const {
        return theta_norm == Rational(1, dual_coxeter) && twice_rho_theta == 1 - Rational(1, dual_coxeter);
    }
    bool operator==(const LieSummary&) const = default;
};

inline LieSummary summarize(const RootSystem& rs, bool with_roots = false) {
    LieSummary s;
    s.type = rs.cartan_type().name();
    s.rank = rs.rank();
    s.dim_group = rs.dim_group();
    s.positive_roots = static_cast<int>(rs.positive_roots().size());
    s.coxeter = rs.coxeter();
    s.dual_coxeter = rs.dual_coxeter();
    s.killing_scale = rs.killing_scale();
    s.twice_rho = Rational(2) * rs.weyl_vector();
    s.highest_root = rs.highest_root();
    s.theta_norm = rs.dual_killing(rs.highest_root(), rs.highest_root());
    s.twice_rho_theta = 2 * rs.dual_killing(rs.weyl_vector(), rs.highest_root());
    s.simple_roots = rs.simple_roots();
    s.cartan_matrix = rs.cartan_matrix();
    if (with_roots) s.positive_root_list = rs.positive_roots();
    return s;
}

} // namespace sintk
