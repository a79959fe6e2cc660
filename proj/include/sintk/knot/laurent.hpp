#pragma once

#include <map>
#include <string>

#include "sintk/rational.hpp"

namespace sintk {

// Laurent polynomial with integer coefficients; only nonzero terms are stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) { add_term(0, Integer(c)); }
    static LaurentPoly monomial(int exponent, const Integer& c = 1) {
        LaurentPoly p;
        p.add_term(exponent, c);
        return p;
    }

    const std::map<int, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    Integer coefficient(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(int e, const Integer& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [e1, c1] : a.terms_)
            for (const auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    LaurentPoly operator-() const { return LaurentPoly() - *this; }

    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
        return r;
    }
    // p(x) -> p(x^k); k = -1 gives the mirror substitution.
    LaurentPoly substitute_power(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.add_term(e * k, c);
        return r;
    }
    LaurentPoly pow(unsigned n) const {
        LaurentPoly r(1), base = *this;
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    Integer evaluate(long x) const {
        if (x == 0 && min_degree() < 0) throw InvalidInput("negative power evaluated at 0");
        Rational s = 0;
        for (const auto& [e, c] : terms_) {
            Rational term = Rational(c);
            for (int i = 0; i < std::abs(e); ++i) {
                if (e > 0) term *= x;
                else term /= x;
            }
            s += term;
        }
        if (!is_integer(s)) throw InvalidInput("non-integral evaluation");
        return s.get_num();
    }

    // Second derivative at 1, exact.
    Integer second_derivative_at_one() const {
        Integer s = 0;
        for (const auto& [e, c] : terms_) s += c * Integer(e) * Integer(e - 1);
        return s;
    }

    bool operator==(const LaurentPoly&) const = default;

    std::string to_string(const std::string& var = "t") const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Integer a = abs(c);
            bool neg = c < 0;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            std::string mono = e == 0 ? "" : e == 1 ? var : var + "^" + std::to_string(e);
            if (mono.empty())
                s += a.get_str();
            else
                s += (a == 1 ? "" : a.get_str() + "*") + mono;
        }
        return s;
    }

private:
    std::map<int, Integer> terms_;
};

// Exact division of ordinary polynomials (nonnegative exponents) with unit leading coefficient.
inline LaurentPoly exact_divide(LaurentPoly num, const LaurentPoly& den) {
    if (den.is_zero()) throw InvalidInput("division by zero polynomial");
    int dd = den.max_degree();
    Integer lead = den.coefficient(dd);
    if (lead != 1 && lead != -1) throw InvalidInput("divisor must have unit leading coefficient");
    LaurentPoly q;
    while (!num.is_zero() && num.max_degree() >= dd) {
        int e = num.max_degree() - dd;
        Integer c = num.coefficient(num.max_degree()) * lead;
        q.add_term(e, c);
        num -= LaurentPoly::monomial(e, c) * den;
    }
    if (!num.is_zero()) throw InvalidInput("polynomial division is not exact");
    return q;
}

} // namespace sintk
