#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rat.hpp"

namespace v22 {

// Dense univariate polynomial in the parameter u over the rationals.
// coeffs[k] is the coefficient of u^k; the leading coefficient is nonzero.
struct UPoly {
    std::vector<Rat> c;

    UPoly() = default;
    explicit UPoly(Rat r) {
        if (!v22::is_zero(r)) c.push_back(std::move(r));
    }
    explicit UPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

    static UPoly zero() { return UPoly(); }
    static UPoly one() { return UPoly(Rat(1)); }
    static UPoly var() { return UPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

    void trim() {
        while (!c.empty() && v22::is_zero(c.back())) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rat& lead() const { return c.back(); }
    Rat coeff(size_t k) const { return k < c.size() ? c[k] : Rat(0); }
    bool is_constant() const { return c.size() <= 1; }
    Rat constant() const { return coeff(0); }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c == b.c; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) - b.coeff(i);
        r.trim();
        return r;
    }
    UPoly operator-() const {
        UPoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        UPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    friend UPoly operator*(const UPoly& a, const Rat& s) {
        if (v22::is_zero(s)) return UPoly();
        UPoly r = a;
        for (auto& x : r.c) x *= s;
        return r;
    }

    UPoly pow(unsigned long e) const {
        UPoly r = one(), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UPoly derivative() const {
        UPoly r;
        for (size_t k = 1; k < c.size(); ++k) r.c.push_back(c[k] * Rat(static_cast<long>(k)));
        r.trim();
        return r;
    }
};

// Quotient and remainder over the field of rationals.
inline std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    UPoly rem = a, quo;
    int db = b.degree();
    if (rem.degree() >= db) quo.c.assign(rem.degree() - db + 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= db) {
        Rat f = rem.lead() / b.lead();
        int shift = rem.degree() - db;
        quo.c[shift] = f;
        for (int i = 0; i <= db; ++i) rem.c[shift + i] -= f * b.c[i];
        rem.trim();
    }
    quo.trim();
    return {quo, rem};
}

inline bool divides(const UPoly& d, const UPoly& p) {
    if (p.is_zero()) return true;
    if (d.is_zero()) return false;
    return divmod(p, d).second.is_zero();
}

inline UPoly monic(const UPoly& p) {
    if (p.is_zero()) return p;
    return p * (Rat(1) / p.lead());
}

inline UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = monic(r);
    }
    return monic(x);
}

// Primitive integer form: positive-leading integer-coefficient multiple with
// content 1. Used for printing factors and for rational-root search.
inline UPoly primitive(const UPoly& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm(1);
    for (const auto& x : p.c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    mpz_class content(0);
    for (const auto& x : p.c) {
        mpz_class n = x.get_num() * den_lcm / x.get_den();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
    Rat scale(den_lcm, content);
    scale.canonicalize();
    UPoly r = p * scale;
    if (sgn(r.lead()) < 0) r = -r;
    return r;
}

// Exact square root of a polynomial square; nullopt when p is not a square.
inline std::optional<UPoly> upoly_sqrt(const UPoly& p) {
    if (p.is_zero()) return UPoly();
    if (p.degree() % 2 != 0) return std::nullopt;
    auto lead_root = rat_sqrt(p.lead());
    if (!lead_root) return std::nullopt;
    int half = p.degree() / 2;
    UPoly s;
    s.c.assign(half + 1, Rat(0));
    s.c[half] = *lead_root;
    UPoly rem = p - s * s;
    for (int k = half - 1; k >= 0; --k) {
        // coefficient of u^(k+half) in rem must come from 2*s[half]*s[k]
        Rat target = rem.coeff(static_cast<size_t>(k + half));
        s.c[k] = target / (Rat(2) * (*lead_root));
        rem = p - s * s;
    }
    s.trim();
    if (p - s * s == UPoly()) return s;
    return std::nullopt;
}

inline std::string to_string_in(const UPoly& p, const std::string& name) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        Rat a = p.coeff(static_cast<size_t>(k));
        if (v22::is_zero(a)) continue;
        bool neg = sgn(a) < 0;
        Rat mag = neg ? Rat(-a) : a;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? "-" : "+";
        bool unit = (mag == 1);
        if (k == 0) {
            out += v22::to_string(mag);
        } else {
            if (!unit) out += v22::to_string(mag) + "*";
            out += name;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

inline std::string to_string(const UPoly& p) { return to_string_in(p, "u"); }

}  // namespace v22
