#pragma once

#include <cctype>
#include <string>

#include "sintk/errors.hpp"

namespace sintk {

struct CartanType {
    char family = 'A';
    int rank = 1;

    std::string name() const { return std::string(1, family) + std::to_string(rank); }

    bool admissible() const {
        switch (family) {
            case 'A': return rank >= 1;
            case 'B': return rank >= 2;
            case 'C': return rank >= 3;
            case 'D': return rank >= 4;
            case 'E': return rank >= 6 && rank <= 8;
            case 'F': return rank == 4;
            case 'G': return rank == 2;
            default: return false;
        }
    }

    void validate() const {
        if (!admissible()) throw InvalidRank("inadmissible Cartan type " + name());
    }

    // Accepts "B4", "b4", "E_8".
    static CartanType parse(const std::string& s) {
        std::string t;
        for (char ch : s)
            if (ch != '_' && ch != ' ') t += ch;
        if (t.size() < 2 || !std::isalpha(static_cast<unsigned char>(t[0])))
            throw InvalidInput("bad Cartan type '" + s + "'");
        CartanType ct;
        ct.family = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
        try {
            size_t used = 0;
            ct.rank = std::stoi(t.substr(1), &used);
            if (used != t.size() - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw InvalidInput("bad Cartan type '" + s + "'");
        }
        ct.validate();
        return ct;
    }

    bool operator==(const CartanType&) const = default;
};

} // namespace sintk
