#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sintk/rational.hpp"

namespace sintk {

// Finitely generated abelian group: Z^free_rank plus cyclic groups of prime-power order.
struct AbelianGroup {
    long free_rank = 0;
    std::vector<Integer> torsion;  // prime powers, sorted ascending

    static AbelianGroup free(long rank) { return {rank, {}}; }

    // Invariant factors (any positive integers) are split into prime powers; 1s are dropped.
    static AbelianGroup from_invariant_factors(long free_rank, const std::vector<Integer>& factors) {
        AbelianGroup g{free_rank, {}};
        for (const auto& f : factors) g.add_cyclic(f);
        return g;
    }

    void add_cyclic(Integer n) {
        if (n < 0) n = -n;
        if (n == 0) {
            ++free_rank;
            return;
        }
        for (Integer p = 2; p * p <= n; ++p) {
            if (n % p != 0) continue;
            Integer q = 1;
            while (n % p == 0) {
                n /= p;
                q *= p;
            }
            torsion.push_back(q);
        }
        if (n > 1) torsion.push_back(n);
        std::sort(torsion.begin(), torsion.end());
    }

    bool trivial() const { return free_rank == 0 && torsion.empty(); }

    AbelianGroup& operator+=(const AbelianGroup& o) {
        free_rank += o.free_rank;
        torsion.insert(torsion.end(), o.torsion.begin(), o.torsion.end());
        std::sort(torsion.begin(), torsion.end());
        return *this;
    }
    friend AbelianGroup operator+(AbelianGroup a, const AbelianGroup& b) { return a += b; }

    AbelianGroup times(long copies) const {
        AbelianGroup g;
        for (long i = 0; i < copies; ++i) g += *this;
        return g;
    }

    bool operator==(const AbelianGroup&) const = default;

    // Number of summands Z/2^e; these contribute to F2 ranks.
    long even_torsion_count() const {
        long c = 0;
        for (const auto& t : torsion)
            if (t % 2 == 0) ++c;
        return c;
    }

    std::string to_string() const {
        if (trivial()) return "0";
        std::string s;
        if (free_rank) s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
        size_t i = 0;
        while (i < torsion.size()) {
            size_t j = i;
            while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
            if (!s.empty()) s += " + ";
            s += "(Z/" + torsion[i].get_str() + ")";
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
        return s;
    }
};

// Singly graded group, e.g. homology of a space by degree.
struct GradedGroup {
    std::map<int, AbelianGroup> by_degree;

    void add(int degree, const AbelianGroup& g) {
        if (g.trivial()) return;
        by_degree[degree] += g;
    }
    GradedGroup& operator+=(const GradedGroup& o) {
        for (const auto& [d, g] : o.by_degree) add(d, g);
        return *this;
    }
    GradedGroup times(long copies) const {
        GradedGroup out;
        for (long i = 0; i < copies; ++i) out += *this;
        return out;
    }
    AbelianGroup total() const {
        AbelianGroup t;
        for (const auto& [d, g] : by_degree) t += g;
        return t;
    }
    bool operator==(const GradedGroup&) const = default;
};

// Bigraded group indexed by (homological i, quantum j).
struct BigradedGroup {
    std::map<std::pair<int, int>, AbelianGroup> entries;

    void add(int i, int j, const AbelianGroup& g) {
        if (g.trivial()) return;
        entries[{i, j}] += g;
    }
    AbelianGroup total() const {
        AbelianGroup t;
        for (const auto& [k, g] : entries) t += g;
        return t;
    }
    BigradedGroup& operator+=(const BigradedGroup& o) {
        for (const auto& [k, g] : o.entries) add(k.first, k.second, g);
        return *this;
    }
    bool operator==(const BigradedGroup&) const = default;
};

} // namespace sintk
