#pragma once

#include <numeric>
#include <vector>

#include "sintk/errors.hpp"
#include "sintk/knot/khovanov.hpp"
#include "sintk/knot/laurent.hpp"
#include "sintk/knot/pd_code.hpp"

namespace sintk {

// Kauffman bracket <D> in the variable A, normalized so the unknot is 1.
inline LaurentPoly kauffman_bracket(const PDCode& pd) {
    pd.validate();
    OrientedDiagram od = orient(pd);
    int n = static_cast<int>(od.crossings.size());
    // loop count histogram by (number of A-smoothings - number of B-smoothings)
    std::map<std::pair<int, int>, long> census;
    std::vector<int> parent(od.edges);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t s = 0; s < (size_t{1} << n); ++s) {
        std::iota(parent.begin(), parent.end(), 0);
        int a_minus_b = 0;
        for (int c = 0; c < n; ++c) {
            const auto& x = od.crossings[c];
            if ((s >> c) & 1) {
                parent[find(x[0])] = find(x[3]);
                parent[find(x[1])] = find(x[2]);
                --a_minus_b;
            } else {
                parent[find(x[0])] = find(x[1]);
                parent[find(x[2])] = find(x[3]);
                ++a_minus_b;
            }
        }
        int loops = od.free_loops;
        for (int e = 0; e < od.edges; ++e)
            if (find(e) == e) ++loops;
        ++census[{a_minus_b, loops}];
    }
    LaurentPoly delta = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
    LaurentPoly out;
    for (const auto& [key, count] : census)
        out += LaurentPoly::monomial(key.first, Integer(count)) * delta.pow(static_cast<unsigned>(key.second - 1));
    return out;
}

// Jones polynomial in q with t^{1/2} = -q; the right-handed trefoil is q^2 + q^6 - q^8.
inline LaurentPoly jones(const PDCode& pd, int crossing_budget = default_crossing_budget()) {
    if (static_cast<int>(pd.crossings.size()) > crossing_budget)
        throw TooLarge("diagram has " + std::to_string(pd.crossings.size()) + " crossings; budget is " +
                       std::to_string(crossing_budget));
    OrientedDiagram od = orient(pd);
    int w = od.writhe();
    LaurentPoly f = kauffman_bracket(pd) * LaurentPoly::monomial(-3 * w, (w % 2 == 0) ? 1 : -1);
    LaurentPoly q;
    for (const auto& [e, c] : f.terms()) {
        if (e % 2 != 0) throw std::logic_error("odd power of A in normalized bracket");
        int m = e / 2;
        q.add_term(-m, (m % 2 == 0) ? c : Integer(-c));
    }
    return q;
}

} // namespace sintk
