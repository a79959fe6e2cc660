#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <vector>

#include "sintk/errors.hpp"
#include "sintk/knot/laurent.hpp"
#include "sintk/knot/pd_code.hpp"
#include "sintk/topo/abelian_group.hpp"
#include "sintk/topo/cochain.hpp"

namespace sintk {

inline int default_crossing_budget() {
    if (const char* env = std::getenv("SINTK_CROSSINGS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 16;
}

namespace detail {

// Circles of every smoothing. Crossing slots are X[a,b,c,d]; the 0-smoothing
// joins (a,b),(c,d) and the 1-smoothing joins (a,d),(b,c).
struct CubeOfResolutions {
    int n = 0, edges = 0, free_loops = 0;
    std::vector<std::vector<int>> circle_of;  // [state][edge] -> circle index
    std::vector<int> circles;                 // [state] -> circle count including free loops

    explicit CubeOfResolutions(const OrientedDiagram& od) {
        n = static_cast<int>(od.crossings.size());
        edges = od.edges;
        free_loops = od.free_loops;
        size_t states = size_t{1} << n;
        circle_of.resize(states);
        circles.resize(states);
        std::vector<int> parent(edges);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (size_t s = 0; s < states; ++s) {
            std::iota(parent.begin(), parent.end(), 0);
            for (int c = 0; c < n; ++c) {
                const auto& x = od.crossings[c];
                if ((s >> c) & 1) {
                    parent[find(x[0])] = find(x[3]);
                    parent[find(x[1])] = find(x[2]);
                } else {
                    parent[find(x[0])] = find(x[1]);
                    parent[find(x[2])] = find(x[3]);
                }
            }
            auto& co = circle_of[s];
            co.assign(edges, -1);
            std::vector<int> id(edges, -1);
            int k = 0;
            for (int e = 0; e < edges; ++e) {
                int r = find(e);
                if (id[r] < 0) id[r] = k++;
                co[e] = id[r];
            }
            circles[s] = k + free_loops;
        }
    }
};

} // namespace detail

struct KhovanovOptions {
    int crossing_budget = default_crossing_budget();
};

// Integral Khovanov homology, bigraded by (homological i, quantum j).
inline BigradedGroup khovanov(const PDCode& pd, const KhovanovOptions& opt = {}) {
    if (static_cast<int>(pd.crossings.size()) > opt.crossing_budget)
        throw TooLarge("diagram has " + std::to_string(pd.crossings.size()) + " crossings; budget is " +
                       std::to_string(opt.crossing_budget));
    OrientedDiagram od = orient(pd);
    const int n = static_cast<int>(od.crossings.size());
    const int np = od.n_plus(), nm = od.n_minus();
    detail::CubeOfResolutions cube(od);
    const size_t states = size_t{1} << n;
    int kmax = *std::max_element(cube.circles.begin(), cube.circles.end());

    // rank of a label among labels with the same popcount
    std::vector<int> rank_in_pc(size_t{1} << kmax);
    {
        std::vector<int> counter(kmax + 1, 0);
        for (size_t l = 0; l < rank_in_pc.size(); ++l) rank_in_pc[l] = counter[std::popcount(l)]++;
    }
    std::vector<std::vector<long>> binom(kmax + 1, std::vector<long>(kmax + 1, 0));
    for (int a = 0; a <= kmax; ++a) {
        binom[a][0] = 1;
        for (int b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + binom[a - 1][b];
    }

    // j = 2*popcount(label) - k + |s| + n+ - 2n-
    auto popcount_for = [&](size_t s, int j) {
        int k = cube.circles[s];
        int twice = j + k - std::popcount(s) - np + 2 * nm;
        if (twice % 2 != 0) return -1;
        int pc = twice / 2;
        return (pc < 0 || pc > k) ? -1 : pc;
    };

    int jmin = 1 << 30, jmax = -(1 << 30);
    for (size_t s = 0; s < states; ++s) {
        int k = cube.circles[s];
        int base = -k + std::popcount(s) + np - 2 * nm;
        jmin = std::min(jmin, base);
        jmax = std::max(jmax, base + 2 * k);
    }

    // For each state and each 0-bit crossing, the circle map into the target state.
    struct CubeEdge {
        size_t target;
        int sign;
        bool merge;
        int a, b;                   // merged pair (source circles) or split pair (target circles)
        int joined;                 // merge: target circle; split: source circle
        std::vector<int> carry;     // source circle -> target circle for uninvolved circles, -1 otherwise
    };
    std::vector<std::vector<CubeEdge>> cube_edges(states);
    for (size_t s = 0; s < states; ++s) {
        for (int c = 0; c < n; ++c) {
            if ((s >> c) & 1) continue;
            size_t t = s | (size_t{1} << c);
            const auto& x = od.crossings[c];
            const auto& cs = cube.circle_of[s];
            const auto& ct = cube.circle_of[t];
            CubeEdge e;
            e.target = t;
            e.sign = (std::popcount(s & ((size_t{1} << c) - 1)) % 2) ? -1 : 1;
            int ks = cube.circles[s];
            e.carry.assign(ks, -1);
            for (int ed = 0; ed < cube.edges; ++ed) e.carry[cs[ed]] = ct[ed];
            for (int f = 0; f < cube.free_loops; ++f)
                e.carry[ks - cube.free_loops + f] = cube.circles[t] - cube.free_loops + f;
            if (cs[x[0]] != cs[x[2]]) {
                e.merge = true;
                e.a = cs[x[0]];
                e.b = cs[x[2]];
                e.joined = ct[x[0]];
                e.carry[e.a] = e.carry[e.b] = -1;
            } else {
                e.merge = false;
                e.joined = cs[x[0]];
                e.a = ct[x[0]];
                e.b = ct[x[1]];
                e.carry[e.joined] = -1;
            }
            cube_edges[s].push_back(std::move(e));
        }
    }

    BigradedGroup out;
    std::vector<long> offset(states);
    for (int j = jmin; j <= jmax; ++j) {
        SparseCochain<std::int64_t> cx;
        cx.r_min = -nm;
        cx.dims.assign(n + 1, 0);
        for (size_t s = 0; s < states; ++s) {
            int pc = popcount_for(s, j);
            int lvl = std::popcount(s);
            offset[s] = static_cast<long>(cx.dims[lvl]);
            if (pc >= 0) cx.dims[lvl] += static_cast<size_t>(binom[cube.circles[s]][pc]);
        }
        if (std::all_of(cx.dims.begin(), cx.dims.end(), [](size_t d) { return d == 0; })) continue;
        cx.d.resize(n + 1);
        for (int t = 0; t <= n; ++t) cx.d[t].resize(cx.dims[t]);
        for (size_t s = 0; s < states; ++s) {
            int pc = popcount_for(s, j);
            if (pc < 0) continue;
            int lvl = std::popcount(s);
            int k = cube.circles[s];
            for (unsigned label = 0; label < (1u << k); ++label) {
                if (std::popcount(label) != pc) continue;
                auto& col = cx.d[lvl][offset[s] + rank_in_pc[label]];
                for (const auto& e : cube_edges[s]) {
                    unsigned base = 0;
                    for (int ci = 0; ci < k; ++ci)
                        if (e.carry[ci] >= 0 && ((label >> ci) & 1)) base |= 1u << e.carry[ci];
                    long toff = offset[e.target];
                    if (e.merge) {
                        unsigned ba = (label >> e.a) & 1, bb = (label >> e.b) & 1;
                        if (!(ba | bb)) continue;
                        unsigned tl = base | ((ba & bb) << e.joined);
                        col.emplace_back(static_cast<int>(toff + rank_in_pc[tl]), e.sign);
                    } else if ((label >> e.joined) & 1) {
                        unsigned t1 = base | (1u << e.a), t2 = base | (1u << e.b);
                        col.emplace_back(static_cast<int>(toff + rank_in_pc[t1]), e.sign);
                        col.emplace_back(static_cast<int>(toff + rank_in_pc[t2]), e.sign);
                    } else {
                        col.emplace_back(static_cast<int>(toff + rank_in_pc[base]), e.sign);
                    }
                }
                std::sort(col.begin(), col.end());
            }
        }
        for (const auto& [r, g] : cohomology(cx)) out.add(r, j, g);
    }
    return out;
}

// F2 ranks by universal coefficients: dim H^r(F2) = free(H^r) + #even(H^r) + #even(H^{r+1}).
inline std::map<std::pair<int, int>, long> khovanov_f2_ranks(const BigradedGroup& kh) {
    std::map<std::pair<int, int>, long> out;
    for (const auto& [ij, g] : kh.entries) {
        long v = g.free_rank + g.even_torsion_count();
        if (v) out[ij] += v;
        long t = g.even_torsion_count();
        if (t) out[{ij.first - 1, ij.second}] += t;
    }
    return out;
}

// Graded Euler characteristic sum (-1)^i q^j rank Kh^{i,j}.
inline LaurentPoly graded_euler_characteristic(const BigradedGroup& kh) {
    LaurentPoly p;
    for (const auto& [ij, g] : kh.entries) p.add_term(ij.second, Integer(ij.first % 2 == 0 ? g.free_rank : -g.free_rank));
    return p;
}

} // namespace sintk
