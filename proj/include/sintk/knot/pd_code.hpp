#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <regex>
#include <string>
#include <vector>

#include <json.hpp>

#include "sintk/errors.hpp"

namespace sintk {

// Planar diagram code. Each crossing X[a,b,c,d] lists its four edge labels
// counterclockwise, starting from the incoming under-strand edge. Crossingless
// unknotted components are counted in free_loops.
struct PDCode {
    std::vector<std::array<int, 4>> crossings;
    int free_loops = 0;

    size_t size() const { return crossings.size(); }

    void validate() const {
        std::map<int, int> count;
        for (const auto& x : crossings)
            for (int e : x) ++count[e];
        for (const auto& [e, n] : count)
            if (n != 2)
                throw MalformedPD("edge label " + std::to_string(e) + " appears " + std::to_string(n) +
                                  " times, expected exactly 2");
        if (free_loops < 0) throw MalformedPD("negative free loop count");
        if (crossings.empty() && free_loops == 0) throw MalformedPD("empty diagram");
    }

    std::string to_string() const {
        std::string s = "PD[";
        for (size_t i = 0; i < crossings.size(); ++i) {
            const auto& x = crossings[i];
            s += (i ? ", X[" : "X[") + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," +
                 std::to_string(x[2]) + "," + std::to_string(x[3]) + "]";
        }
        return s + "]";
    }

    bool operator==(const PDCode&) const = default;
};

// Diagram with edges relabelled 0..E-1 and crossing signs determined by
// following each component.
struct OrientedDiagram {
    std::vector<std::array<int, 4>> crossings;
    std::vector<int> signs;
    int edges = 0;
    int free_loops = 0;
    int components = 0;

    int n_plus() const { return static_cast<int>(std::count(signs.begin(), signs.end(), 1)); }
    int n_minus() const { return static_cast<int>(std::count(signs.begin(), signs.end(), -1)); }
    int writhe() const { return n_plus() - n_minus(); }
};

inline OrientedDiagram orient(const PDCode& pd) {
    pd.validate();
    OrientedDiagram od;
    od.free_loops = pd.free_loops;
    std::map<int, int> relabel;
    for (const auto& x : pd.crossings)
        for (int e : x) relabel.emplace(e, 0);
    int next = 0;
    for (auto& [e, id] : relabel) id = next++;
    od.edges = next;
    for (const auto& x : pd.crossings)
        od.crossings.push_back({relabel[x[0]], relabel[x[1]], relabel[x[2]], relabel[x[3]]});

    size_t n = od.crossings.size();
    // occurrences of each edge as (crossing, slot)
    std::vector<std::vector<std::pair<int, int>>> occ(od.edges);
    for (size_t c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) occ[od.crossings[c][s]].push_back({static_cast<int>(c), s});

    // incoming[c][s]: 1 if the strand enters crossing c through slot s, 0 if it leaves, -1 unknown
    std::vector<std::array<int, 4>> incoming(n, {-1, -1, -1, -1});
    auto walk = [&](int c0, int s0) {
        int c = c0, s = s0;
        while (true) {
            if (incoming[c][s] == 0 || incoming[c][(s + 2) % 4] == 1)
                throw MalformedPD("under-strand orientations are inconsistent");
            if (incoming[c][s] == 1) return;
            incoming[c][s] = 1;
            int out = (s + 2) % 4;
            incoming[c][out] = 0;
            int e = od.crossings[c][out];
            auto [c1, s1] = occ[e][0];
            if (c1 == c && s1 == out) std::tie(c1, s1) = occ[e][1];
            c = c1;
            s = s1;
        }
    };
    for (size_t c = 0; c < n; ++c)
        if (incoming[c][0] == -1) {
            ++od.components;
            walk(static_cast<int>(c), 0);
        }
    for (size_t c = 0; c < n; ++c)
        if (incoming[c][1] == -1) {
            ++od.components;
            walk(static_cast<int>(c), 1);
        }
    od.components += od.free_loops;
    for (size_t c = 0; c < n; ++c) {
        if (incoming[c][0] != 1) throw MalformedPD("slot 0 of a crossing must be the incoming under edge");
        od.signs.push_back(incoming[c][3] == 1 ? 1 : -1);
    }
    return od;
}

// Same diagram with every crossing switched.
inline PDCode mirror(const PDCode& pd) {
    auto od = orient(pd);
    PDCode out;
    out.free_loops = pd.free_loops;
    for (size_t c = 0; c < pd.crossings.size(); ++c) {
        const auto& x = pd.crossings[c];
        // The old over strand becomes the under strand; start from its incoming slot.
        if (od.signs[c] == 1)
            out.crossings.push_back({x[3], x[0], x[1], x[2]});
        else
            out.crossings.push_back({x[1], x[2], x[3], x[0]});
    }
    return out;
}

// Builds a PD code from crossings whose four slots are given counterclockwise
// as stubs; stubs are glued into edges by join().
class DiagramBuilder {
public:
    int stub() {
        parent_.push_back(static_cast<int>(parent_.size()));
        return parent_.back();
    }
    // over02: the over strand runs through slots 0 and 2. incoming_under: slot
    // where the under strand enters, or -1 to orient by traversal.
    void crossing(std::array<int, 4> stubs, bool over02, int incoming_under = -1) {
        slots_.push_back(stubs);
        over02_.push_back(over02);
        hint_.push_back(incoming_under);
    }
    void join(int a, int b) { parent_[find(a)] = find(b); }

    PDCode finish() {
        std::map<int, int> label;
        for (const auto& s : slots_)
            for (int st : s) label.emplace(find(st), 0);
        int next = 1;
        for (auto& [root, l] : label) l = next++;
        PDCode pd;
        std::vector<char> used(parent_.size(), 0);
        for (const auto& s : slots_)
            for (int st : s) used[find(st)] = 1;
        for (size_t st = 0; st < parent_.size(); ++st)
            if (find(static_cast<int>(st)) == static_cast<int>(st) && !used[st]) ++pd.free_loops;

        size_t n = slots_.size();
        std::vector<std::array<int, 4>> lab(n);
        for (size_t c = 0; c < n; ++c)
            for (int s = 0; s < 4; ++s) lab[c][s] = label[find(slots_[c][s])];

        std::vector<int> in(n, -1);
        bool hinted = std::all_of(hint_.begin(), hint_.end(), [](int h) { return h >= 0; });
        if (hinted) {
            in = hint_;
        } else {
            std::map<int, std::vector<std::pair<int, int>>> occ;
            for (size_t c = 0; c < n; ++c)
                for (int s = 0; s < 4; ++s) occ[lab[c][s]].push_back({static_cast<int>(c), s});
            std::vector<std::array<char, 4>> seen(n, {0, 0, 0, 0});
            for (size_t c0 = 0; c0 < n; ++c0)
                for (int s0 = 0; s0 < 4; ++s0) {
                    if (seen[c0][s0]) continue;
                    int c = static_cast<int>(c0), s = s0;
                    while (!seen[c][s]) {
                        int out = (s + 2) % 4;
                        seen[c][s] = seen[c][out] = 1;
                        bool under_slot = over02_[c] ? (s % 2 == 1) : (s % 2 == 0);
                        if (under_slot) in[c] = s;
                        auto [c1, s1] = occ[lab[c][out]][0];
                        if (c1 == c && s1 == out) std::tie(c1, s1) = occ[lab[c][out]][1];
                        c = c1;
                        s = s1;
                    }
                }
        }
        for (size_t c = 0; c < n; ++c) {
            int s = in[c];
            pd.crossings.push_back({lab[c][s], lab[c][(s + 1) % 4], lab[c][(s + 2) % 4], lab[c][(s + 3) % 4]});
        }
        return pd;
    }

private:
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    std::vector<int> parent_;
    std::vector<std::array<int, 4>> slots_;
    std::vector<char> over02_;
    std::vector<int> hint_;
};

namespace detail {

// Applies braid generators +-i (1-based) to the strand stubs in pos.
inline void apply_braid(DiagramBuilder& b, std::vector<int>& pos, const std::vector<int>& word) {
    for (int g : word) {
        int i = std::abs(g);
        if (g == 0 || i >= static_cast<int>(pos.size()))
            throw InvalidInput("braid generator " + std::to_string(g) + " out of range");
        int x = pos[i - 1], y = pos[i];
        int nl = b.stub(), nr = b.stub();
        // slots counterclockwise: SW, SE, NE, NW; strands run upward.
        if (g > 0)
            b.crossing({x, y, nr, nl}, true, 1);
        else
            b.crossing({x, y, nr, nl}, false, 0);
        pos[i - 1] = nl;
        pos[i] = nr;
    }
}

} // namespace detail

// Closure of a braid on the given number of strands; sigma_i is a positive crossing.
inline PDCode braid_closure(int strands, const std::vector<int>& word) {
    if (strands < 1) throw InvalidInput("need at least one strand");
    DiagramBuilder b;
    std::vector<int> bottom(strands), pos;
    for (auto& s : bottom) s = b.stub();
    pos = bottom;
    detail::apply_braid(b, pos, word);
    for (int k = 0; k < strands; ++k) b.join(pos[k], bottom[k]);
    return b.finish();
}

// Torus knot T(p,q) as the closure of (sigma_1 ... sigma_{m-1})^M with m = min(p,q).
inline PDCode torus_diagram(int p, int q) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1) throw InvalidInput("torus parameters must be coprime and positive");
    int m = std::min(p, q), big = std::max(p, q);
    if (m == 1) return PDCode{{}, 1};
    std::vector<int> word;
    for (int r = 0; r < big; ++r)
        for (int i = 1; i < m; ++i) word.push_back(i);
    return braid_closure(m, word);
}

// Continued fraction p/q = [a1; a2, ..., an] with positive terms and n odd.
inline std::vector<int> odd_continued_fraction(int p, int q) {
    std::vector<int> a;
    while (q != 0) {
        a.push_back(p / q);
        int r = p % q;
        p = q;
        q = r;
    }
    if (a.size() % 2 == 0) {
        a.back() -= 1;
        a.push_back(1);
    }
    return a;
}

// Two-bridge knot b(p,q) as the plat closure of sigma2^a1 sigma1^-a2 sigma2^a3 ...
// on four strands. Chirality conventions are not tracked.
inline PDCode two_bridge_diagram(int p, int q) {
    if (p == 1) return PDCode{{}, 1};
    if (p < 1 || q <= 0 || q >= p || std::gcd(p, q) != 1)
        throw InvalidInput("two-bridge parameters need 0 < q < p coprime");
    auto a = odd_continued_fraction(p, q);
    std::vector<int> word;
    for (size_t i = 0; i < a.size(); ++i)
        for (int k = 0; k < a[i]; ++k) word.push_back(i % 2 == 0 ? 2 : -1);
    // Strands do not all run upward in a plat, so orientation comes from traversal.
    DiagramBuilder plat;
    std::vector<int> pb(4);
    for (auto& s : pb) s = plat.stub();
    std::vector<int> pp = pb;
    for (int g : word) {
        int i = std::abs(g);
        int x = pp[i - 1], y = pp[i];
        int nl = plat.stub(), nr = plat.stub();
        plat.crossing({x, y, nr, nl}, g > 0);
        pp[i - 1] = nl;
        pp[i] = nr;
    }
    plat.join(pb[0], pb[1]);
    plat.join(pb[2], pb[3]);
    plat.join(pp[0], pp[1]);
    plat.join(pp[2], pp[3]);
    return plat.finish();
}

// Accepts "PD[X[1,4,2,5], ...]" (round or square brackets) or a JSON list of 4-tuples.
inline PDCode parse_pd(const std::string& text) {
    PDCode pd;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw MalformedPD("empty PD input");
    if (text[first] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw MalformedPD(std::string("bad JSON PD code: ") + e.what());
        }
        if (!j.is_array()) throw MalformedPD("JSON PD code must be a list of 4-tuples");
        for (const auto& x : j) {
            if (!x.is_array() || x.size() != 4) throw MalformedPD("each crossing needs 4 labels");
            std::array<int, 4> c{};
            for (int s = 0; s < 4; ++s) {
                if (!x[s].is_number_integer()) throw MalformedPD("edge labels must be integers");
                c[s] = x[s].get<int>();
            }
            pd.crossings.push_back(c);
        }
    } else {
        std::string body = text.substr(first);
        if (body.rfind("PD", 0) != 0) throw MalformedPD("PD text must start with 'PD['");
        static const std::regex cross(R"(X\s*[\[(]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\])])");
        for (auto it = std::sregex_iterator(body.begin(), body.end(), cross); it != std::sregex_iterator(); ++it)
            pd.crossings.push_back({std::stoi((*it)[1]), std::stoi((*it)[2]), std::stoi((*it)[3]), std::stoi((*it)[4])});
        std::string stripped = std::regex_replace(body, cross, "");
        if (stripped.find_first_of("0123456789") != std::string::npos)
            throw MalformedPD("unparsed content in PD text");
    }
    if (pd.crossings.empty()) pd.free_loops = 1;
    pd.validate();
    return pd;
}

} // namespace sintk
