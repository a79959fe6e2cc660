#pragma once

#include <string>

#include "sintk/knot/khovanov.hpp"
#include "sintk/knot/presentation.hpp"
#include "sintk/repvar/critical_set.hpp"
#include "sintk/repvar/torus.hpp"

namespace sintk {

struct ComparisonReport {
    std::string knot;
    AbelianGroup kh;              // ungraded Khovanov homology
    AbelianGroup rep;             // ungraded H_*(R(K))
    bool kh_matches_rep = false;
    AbelianGroup kh_doubled;      // kh + kh
    AbelianGroup critical;        // ungraded homology of the N = 2 critical set
    bool doubled_matches_critical = false;
    long critical_rank_minus_doubled = 0;  // free ranks; negative means the critical side is smaller

    bool operator==(const ComparisonReport&) const = default;
};

inline ComparisonReport compare_with_repvar(const KnotPresentation& k, const KhovanovOptions& opt = {}) {
    ComparisonReport r;
    r.knot = k.to_string();
    r.kh = khovanov(k.diagram(), opt).total();
    r.rep = rep_variety(k, TorusConstraint::meridian_traceless).ungraded();
    r.kh_matches_rep = r.kh == r.rep;
    r.kh_doubled = r.kh + r.kh;
    r.critical = critical_set_report(k, 2).full.ungraded();
    r.doubled_matches_critical = r.kh_doubled == r.critical;
    r.critical_rank_minus_doubled = r.critical.free_rank - r.kh_doubled.free_rank;
    return r;
}

} // namespace sintk
