#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "sintk/lie/chamber.hpp"

namespace sintk {

inline std::uint64_t default_budget() {
    if (const char* env = std::getenv("SINTK_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
    }
    return 10'000'000;
}

struct ComponentClasses {
    std::vector<Integer> multiplicities;  // m_j, one per component
    Integer c1_pairing = 0;
};

struct NonintegralWitness {
    int weight_index = 0;          // fundamental weight w_alpha
    std::vector<QVec> orbit_points;  // one per component
    Rational sum;                  // sum_j (orbit point)(Phi) m_j, an integer
};

struct NonintegralVerdict {
    bool pass = true;
    std::optional<NonintegralWitness> witness;
    std::uint64_t tuples_checked = 0;
};

// Enumerates every tuple of Weyl-orbit values of each fundamental weight. The
// reported witness minimizes |sum|, then the weight index, then the tuple of
// orbit points lexicographically; the scan stops at the first zero sum.
inline NonintegralVerdict check_nonintegral_simple(const WeylChamberPoint& phi,
                                                   const ComponentClasses& comps,
                                                   std::uint64_t budget = default_budget()) {
    const RootSystem& rs = phi.root_system();
    size_t r = comps.multiplicities.size();
    if (r == 0) throw InvalidInput("need at least one component");

    struct Value {
        Rational v;
        size_t first;  // lexicographically first orbit point with this value
    };
    std::vector<std::vector<QVec>> orbits;
    std::vector<std::vector<Value>> values;
    std::uint64_t total = 0;
    for (int a = 0; a < rs.rank(); ++a) {
        orbits.push_back(weyl_orbit(rs.fundamental_weights()[a], rs));
        std::map<Rational, size_t> first;
        for (size_t i = 0; i < orbits.back().size(); ++i) first.emplace(phi.eval(orbits.back()[i]), i);
        std::vector<Value> vals;
        for (auto& [v, i] : first) vals.push_back({v, i});
        std::sort(vals.begin(), vals.end(), [](const Value& x, const Value& y) { return x.first < y.first; });
        std::uint64_t count = 1;
        for (size_t j = 0; j < r; ++j) {
            if (count > budget / vals.size() + 1) throw BudgetExceeded("orbit tuple count exceeds budget");
            count *= vals.size();
        }
        total += count;
        if (total > budget) throw BudgetExceeded("orbit tuple count " + std::to_string(total) +
                                                 " exceeds budget " + std::to_string(budget));
        values.push_back(std::move(vals));
    }

    NonintegralVerdict out;
    Rational best_abs = -1;
    for (int a = 0; a < rs.rank(); ++a) {
        const auto& vals = values[a];
        std::vector<size_t> idx(r, 0);
        while (true) {
            ++out.tuples_checked;
            Rational s = 0;
            for (size_t j = 0; j < r; ++j) s += vals[idx[j]].v * Rational(comps.multiplicities[j]);
            if (is_integer(s)) {
                Rational as = abs(s);
                if (best_abs < 0 || as < best_abs) {
                    best_abs = as;
                    NonintegralWitness w{a, {}, s};
                    for (size_t j = 0; j < r; ++j) w.orbit_points.push_back(orbits[a][vals[idx[j]].first]);
                    out.witness = w;
                    out.pass = false;
                    if (as == 0) return out;
                }
            }
            size_t j = r;
            while (j > 0 && ++idx[j - 1] == vals.size()) idx[--j] = 0;
            if (j == 0) break;
        }
    }
    return out;
}

struct SuMultiVerdict {
    bool pass = true;
    int k = 0;                       // failing fundamental weight index, 1-based
    std::vector<Rational> choices;   // orbit value chosen for each component
};

// Phi = (i/2N) diag(N-1, -1, ..., -1); w_k takes the values -k/2N and (N-k)/2N on its orbit.
inline SuMultiVerdict check_nonintegral_su_multi(int n, const std::vector<Integer>& m) {
    if (n < 2) throw InvalidInput("N must be at least 2");
    if (m.empty()) throw InvalidInput("need at least one component");
    if (m.size() > 30) throw BudgetExceeded("too many components for exhaustive split enumeration");
    SuMultiVerdict out;
    for (int k = 1; k < n; ++k) {
        Rational lo = frac(-k, 2 * n), hi = frac(n - k, 2 * n);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.size()); ++mask) {
            Rational s = 0;
            std::vector<Rational> ch;
            for (size_t j = 0; j < m.size(); ++j) {
                ch.push_back((mask >> (m.size() - 1 - j)) & 1 ? hi : lo);
                s += ch.back() * Rational(m[j]);
            }
            if (is_integer(s)) return {false, k, ch};
        }
    }
    return out;
}

struct CoprimeVerdict {
    bool pass = true;
    int failing_k = 0;  // some k in [1, N-1] with every (k/N) c1 integral
};

// Fails iff some k in [1, N-1] makes (k/N) c for every listed pairing c integral.
inline CoprimeVerdict check_un_coprime(int n, const std::vector<Integer>& c1_pairings) {
    if (n < 2) throw InvalidInput("N must be at least 2");
    for (int k = 1; k < n; ++k) {
        bool all_integral = true;
        for (const auto& c : c1_pairings)
            if ((k * c) % n != 0) all_integral = false;
        if (all_integral) return {false, k};
    }
    return {};
}

} // namespace sintk
