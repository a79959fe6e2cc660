#pragma once

#include <utility>
#include <vector>

#include "sintk/errors.hpp"
#include "sintk/knot/laurent.hpp"
#include "sintk/knot/presentation.hpp"

namespace sintk {

// Shift so the support is centred on 0 and fix the sign so that p(1) = 1.
inline LaurentPoly symmetrize(const LaurentPoly& p) {
    if (p.is_zero()) throw InvalidInput("cannot symmetrize the zero polynomial");
    int lo = p.min_degree(), hi = p.max_degree();
    if ((lo + hi) % 2 != 0) throw InvalidInput("polynomial has odd degree span");
    LaurentPoly s = p.shifted(-(lo + hi) / 2);
    Integer v = s.evaluate(1);
    if (v == -1) s = -s;
    else if (v != 1) throw std::logic_error("Alexander polynomial has |Delta(1)| != 1");
    if (!(s == s.substitute_power(-1))) throw std::logic_error("Alexander polynomial is not symmetric");
    return s;
}

// (t^{pq}-1)(t-1)/((t^p-1)(t^q-1)), symmetrized.
inline LaurentPoly alexander_torus(int p, int q) {
    auto tm1 = [](int k) { return LaurentPoly::monomial(k) - LaurentPoly(1); };
    LaurentPoly num = tm1(p * q) * tm1(1);
    LaurentPoly den = tm1(p) * tm1(q);
    return symmetrize(exact_divide(num, den));
}

// Two-bridge relator a w b^-1 w^-1 with w = prod_{i<p} L_i^{e_i}, L_i = b for odd i and
// a for even i, e_i = (-1)^floor(iq/p). Letters are +-1 (a) and +-2 (b).
// The formula needs q odd; an even q is replaced by q - p, which gives the same knot.
inline std::vector<int> two_bridge_word(int p, int q) {
    if (q % 2 == 0) q -= p;
    std::vector<int> w;
    for (int i = 1; i < p; ++i) {
        long t = static_cast<long>(i) * q;
        long fl = t >= 0 ? t / p : -((-t + p - 1) / p);
        int e = fl % 2 == 0 ? 1 : -1;
        w.push_back((i % 2 == 1 ? 2 : 1) * e);
    }
    return w;
}

inline std::vector<int> two_bridge_relator(int p, int q) {
    auto w = two_bridge_word(p, q);
    std::vector<int> r{1};
    r.insert(r.end(), w.begin(), w.end());
    r.push_back(-2);
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
    return r;
}

// Fox derivative d/da of a word, with a, b both sent to t.
inline LaurentPoly fox_derivative_a(const std::vector<int>& word) {
    LaurentPoly out;
    int prefix = 0;
    for (int letter : word) {
        if (letter == 1) out.add_term(prefix, 1);
        if (letter == -1) out.add_term(prefix - 1, -1);
        prefix += letter > 0 ? 1 : -1;
    }
    if (prefix != 0) throw std::logic_error("relator is not in the commutator subgroup");
    return out;
}

inline LaurentPoly alexander_two_bridge(int p, int q) {
    if (p == 1) return LaurentPoly(1);
    return symmetrize(fox_derivative_a(two_bridge_relator(p, q)));
}

inline LaurentPoly alexander(const KnotPresentation& k) {
    if (k.is_unknot()) return LaurentPoly(1);
    switch (k.kind) {
        case KnotKind::torus: return alexander_torus(k.p, k.q);
        case KnotKind::two_bridge: return alexander_two_bridge(k.p, k.q);
        default: throw Unsupported("Alexander polynomial needs a torus or two-bridge presentation");
    }
}

inline Integer alexander_second_derivative_at_one(const KnotPresentation& k) {
    Integer d2 = alexander(k).second_derivative_at_one();
    if (d2 % 2 != 0) throw std::logic_error("Delta''(1) is odd for " + k.to_string());
    return d2;
}

} // namespace sintk
