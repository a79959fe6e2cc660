#pragma once

#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "sintk/errors.hpp"
#include "sintk/knot/pd_code.hpp"

namespace sintk {

enum class KnotKind { unknot, two_bridge, torus, pd_code };

inline std::string to_string(KnotKind k) {
    switch (k) {
        case KnotKind::unknot: return "unknot";
        case KnotKind::two_bridge: return "two_bridge";
        case KnotKind::torus: return "torus";
        case KnotKind::pd_code: return "pd_code";
    }
    return "?";
}

struct KnotPresentation {
    KnotKind kind = KnotKind::unknot;
    int p = 1, q = 0;
    PDCode pd;
    int framing = 0;

    static KnotPresentation unknot() { return {}; }
    static KnotPresentation two_bridge(int p, int q) {
        KnotPresentation k{KnotKind::two_bridge, p, q, {}, 0};
        k.validate();
        return k;
    }
    static KnotPresentation torus(int p, int q) {
        KnotPresentation k{KnotKind::torus, p, q, {}, 0};
        k.validate();
        return k;
    }
    static KnotPresentation from_pd(PDCode pd) {
        pd.validate();
        return {KnotKind::pd_code, 0, 0, std::move(pd), 0};
    }

    // Torus parameters with a 1, and the two-bridge knot b(1,0), are unknots.
    bool is_unknot() const {
        switch (kind) {
            case KnotKind::unknot: return true;
            case KnotKind::two_bridge: return p == 1;
            case KnotKind::torus: return p == 1 || q == 1;
            case KnotKind::pd_code: return false;
        }
        return false;
    }

    void validate() const {
        switch (kind) {
            case KnotKind::unknot: return;
            case KnotKind::two_bridge:
                if (p == 1 && q == 0) return;
                if (p < 3 || p % 2 == 0) throw InvalidInput("two-bridge p must be odd and at least 3");
                if (q <= 0 || q >= p || std::gcd(p, q) != 1)
                    throw InvalidInput("two-bridge q must satisfy 0 < q < p and gcd(p,q) = 1");
                return;
            case KnotKind::torus:
                if (p < 1 || q < 1 || std::gcd(p, q) != 1) throw InvalidInput("torus p,q must be positive and coprime");
                return;
            case KnotKind::pd_code: pd.validate(); return;
        }
    }

    PDCode diagram() const {
        switch (kind) {
            case KnotKind::unknot: return PDCode{{}, 1};
            case KnotKind::two_bridge: return two_bridge_diagram(p, q);
            case KnotKind::torus: return torus_diagram(p, q);
            case KnotKind::pd_code: return pd;
        }
        return {};
    }

    std::string to_string() const {
        switch (kind) {
            case KnotKind::unknot: return "unknot";
            case KnotKind::two_bridge: return "2bridge:" + std::to_string(p) + "/" + std::to_string(q);
            case KnotKind::torus: return "torus:" + std::to_string(p) + "," + std::to_string(q);
            case KnotKind::pd_code: return "pd:" + pd.to_string();
        }
        return "?";
    }

    bool operator==(const KnotPresentation&) const = default;
};

namespace detail {
inline int parse_int(const std::string& s, const std::string& what) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw InvalidInput("bad integer in " + what + ": '" + s + "'");
    }
    if (pos != s.size()) throw InvalidInput("bad integer in " + what + ": '" + s + "'");
    return v;
}
} // namespace detail

// Accepts "unknot", "2bridge:p/q", "torus:p,q", "pd:<PD text>", "pdfile:<path>",
// or a bare PD text.
inline KnotPresentation parse_knot(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon), rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (spec == "unknot") return KnotPresentation::unknot();
    if (head == "2bridge" || head == "two_bridge") {
        auto slash = rest.find('/');
        if (slash == std::string::npos) throw InvalidInput("expected 2bridge:p/q");
        int p = detail::parse_int(rest.substr(0, slash), "2bridge"), q = detail::parse_int(rest.substr(slash + 1), "2bridge");
        if (p == 1) return KnotPresentation{KnotKind::two_bridge, 1, 0, {}, 0};
        return KnotPresentation::two_bridge(p, q);
    }
    if (head == "torus") {
        auto comma = rest.find(',');
        if (comma == std::string::npos) throw InvalidInput("expected torus:p,q");
        return KnotPresentation::torus(detail::parse_int(rest.substr(0, comma), "torus"),
                                       detail::parse_int(rest.substr(comma + 1), "torus"));
    }
    if (head == "pd") return KnotPresentation::from_pd(parse_pd(rest));
    if (head == "pdfile") {
        std::ifstream in(rest);
        if (!in) throw InvalidInput("cannot read PD file '" + rest + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return KnotPresentation::from_pd(parse_pd(ss.str()));
    }
    if (spec.rfind("PD", 0) == 0 || spec.rfind("[", 0) == 0) return KnotPresentation::from_pd(parse_pd(spec));
    throw InvalidInput("unrecognised knot '" + spec + "'");
}

} // namespace sintk
