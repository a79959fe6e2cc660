#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sintk/topo/abelian_group.hpp"
#include "sintk/topo/smith.hpp"

namespace sintk {

struct CoefficientOverflow : std::overflow_error {
    CoefficientOverflow() : std::overflow_error("int64 coefficient overflow") {}
};

namespace detail {

inline std::int64_t coef_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow();
    return r;
}
inline std::int64_t coef_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw CoefficientOverflow();
    return r;
}
inline Integer coef_mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer coef_sub(const Integer& a, const Integer& b) { return a - b; }
inline Integer to_integer(std::int64_t x) { return Integer(static_cast<long>(x)); }
inline Integer to_integer(const Integer& x) { return x; }

} // namespace detail

// Cochain complex of free modules C^{r_min} -> C^{r_min+1} -> ... with sparse
// differentials stored by column: d[t][x] lists (row, coefficient) sorted by row.
template <class Coef>
struct SparseCochain {
    using Column = std::vector<std::pair<int, Coef>>;
    int r_min = 0;
    std::vector<size_t> dims;
    std::vector<std::vector<Column>> d;

    template <class Other>
    SparseCochain<Other> convert() const {
        SparseCochain<Other> o;
        o.r_min = r_min;
        o.dims = dims;
        o.d.resize(d.size());
        for (size_t t = 0; t < d.size(); ++t) {
            o.d[t].resize(d[t].size());
            for (size_t x = 0; x < d[t].size(); ++x)
                for (const auto& [y, c] : d[t][x]) o.d[t][x].emplace_back(y, Other(detail::to_integer(c)));
        }
        return o;
    }
};

// Cancels every +-1 entry by Gaussian elimination (a chain homotopy
// equivalence), then finishes with dense Smith normal form on what remains.
template <class Coef>
std::map<int, AbelianGroup> cohomology_by_reduction(SparseCochain<Coef> cx) {
    using Column = typename SparseCochain<Coef>::Column;
    size_t levels = cx.dims.size();
    std::vector<std::vector<char>> alive(levels);
    for (size_t t = 0; t < levels; ++t) alive[t].assign(cx.dims[t], 1);

    auto entry = [](const Column& col, int y) -> const Coef* {
        auto it = std::lower_bound(col.begin(), col.end(), y,
                                   [](const std::pair<int, Coef>& e, int v) { return e.first < v; });
        return it != col.end() && it->first == y ? &it->second : nullptr;
    };

    for (size_t t = 0; t + 1 < levels; ++t) {
        auto& cols = cx.d[t];
        std::vector<std::vector<int>> rows(cx.dims[t + 1]);
        for (size_t x = 0; x < cols.size(); ++x) {
            if (!alive[t][x]) {
                cols[x].clear();
                continue;
            }
            for (const auto& [y, c] : cols[x]) rows[y].push_back(static_cast<int>(x));
        }
        bool progress = true;
        while (progress) {
            progress = false;
            for (size_t x = 0; x < cols.size(); ++x) {
                if (!alive[t][x]) continue;
                int y = -1;
                Coef u{};
                size_t best = 0;
                for (const auto& [row, c] : cols[x])
                    if ((c == 1 || c == -1) && (y < 0 || rows[row].size() < best)) {
                        y = row;
                        u = c;
                        best = rows[row].size();
                    }
                if (y < 0) continue;
                progress = true;
                Column px = cols[x];
                std::vector<int> touched = rows[y];
                for (int z : touched) {
                    if (z == static_cast<int>(x) || !alive[t][z]) continue;
                    const Coef* bp = entry(cols[z], y);
                    if (!bp) continue;
                    Coef f = detail::coef_mul(*bp, u);
                    Column merged;
                    merged.reserve(cols[z].size() + px.size());
                    auto a = cols[z].begin(), ae = cols[z].end();
                    auto b = px.begin(), be = px.end();
                    while (a != ae || b != be) {
                        if (b == be || (a != ae && a->first < b->first)) {
                            merged.push_back(*a++);
                        } else if (a == ae || b->first < a->first) {
                            Coef v = detail::coef_sub(Coef(0), detail::coef_mul(f, b->second));
                            rows[b->first].push_back(z);
                            merged.emplace_back(b->first, v);
                            ++b;
                        } else {
                            Coef v = detail::coef_sub(a->second, detail::coef_mul(f, b->second));
                            if (v != 0) merged.emplace_back(a->first, v);
                            ++a;
                            ++b;
                        }
                    }
                    cols[z] = std::move(merged);
                }
                alive[t][x] = 0;
                cols[x].clear();
                alive[t + 1][y] = 0;
                rows[y].clear();
            }
        }
    }

    // Dense Smith normal form on the surviving generators.
    std::vector<std::vector<int>> index(levels);
    for (size_t t = 0; t < levels; ++t) {
        index[t].assign(cx.dims[t], -1);
        int k = 0;
        for (size_t x = 0; x < cx.dims[t]; ++x)
            if (alive[t][x]) index[t][x] = k++;
    }
    std::vector<size_t> live(levels), ranks(levels, 0);
    std::vector<std::vector<Integer>> factors(levels);
    for (size_t t = 0; t < levels; ++t)
        live[t] = static_cast<size_t>(std::count(alive[t].begin(), alive[t].end(), 1));
    for (size_t t = 0; t + 1 < levels; ++t) {
        size_t nr = live[t + 1], nc = live[t];
        if (nr == 0 || nc == 0) continue;
        IntMatrix m(nr, std::vector<Integer>(nc, Integer(0)));
        bool any = false;
        for (size_t x = 0; x < cx.dims[t]; ++x) {
            if (!alive[t][x]) continue;
            for (const auto& [y, c] : cx.d[t][x]) {
                if (!alive[t + 1][y]) continue;
                m[index[t + 1][y]][index[t][x]] = detail::to_integer(c);
                any = true;
            }
        }
        if (!any) continue;
        auto snf = smith_normal_form(std::move(m), nr, nc, false);
        ranks[t] = snf.rank();
        factors[t] = snf.diagonal;
    }
    std::map<int, AbelianGroup> out;
    for (size_t t = 0; t < levels; ++t) {
        long free = static_cast<long>(live[t]) - static_cast<long>(ranks[t]) -
                    (t > 0 ? static_cast<long>(ranks[t - 1]) : 0L);
        AbelianGroup g = AbelianGroup::free(free);
        if (t > 0)
            for (const auto& f : factors[t - 1])
                if (f > 1) g.add_cyclic(f);
        if (!g.trivial()) out[cx.r_min + static_cast<int>(t)] = g;
    }
    return out;
}

// Cohomology with machine-integer elimination, retried in GMP integers on overflow.
inline std::map<int, AbelianGroup> cohomology(const SparseCochain<std::int64_t>& cx) {
    try {
        return cohomology_by_reduction(cx);
    } catch (const CoefficientOverflow&) {
        return cohomology_by_reduction(cx.template convert<Integer>());
    }
}

} // namespace sintk
