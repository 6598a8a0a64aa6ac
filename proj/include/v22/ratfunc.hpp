#pragma once

#include <optional>
#include <string>
#include <utility>

#include "upoly.hpp"

namespace v22 {

// Element of Q(u): num/den with den monic and gcd(num, den) = 1.
struct RatFunc {
    UPoly num;
    UPoly den = UPoly::one();

    RatFunc() = default;
    explicit RatFunc(Rat r) : num(UPoly(std::move(r))) {}
    explicit RatFunc(UPoly n) : num(std::move(n)) {}
    RatFunc(UPoly n, UPoly d) : num(std::move(n)), den(std::move(d)) { reduce(); }

    static RatFunc u() { return RatFunc(UPoly::var()); }

    void reduce() {
        if (den.is_zero()) throw DomainError("rational function with zero denominator");
        if (num.is_zero()) {
            den = UPoly::one();
            return;
        }
        UPoly g = gcd(num, den);
        if (g.degree() > 0) {
            num = divmod(num, g).first;
            den = divmod(den, g).first;
        }
        Rat scale = Rat(1) / den.lead();
        num = num * scale;
        den = den * scale;
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_poly() const { return den == UPoly::one(); }
    bool is_constant() const { return is_poly() && num.is_constant(); }
    Rat constant() const { return num.constant(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num = -r.num;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.num, a.den * b.den);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DomainError("division by zero in Q(u)");
        return RatFunc(a.num * b.den, a.den * b.num);
    }

    RatFunc pow(unsigned long e) const {
        RatFunc r(Rat(1)), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // Evaluation at a rational point of the parameter line.
    Rat eval(const Rat& u0) const {
        Rat d = den.eval(u0);
        if (v22::is_zero(d)) throw DomainError("denominator vanishes at u = " + v22::to_string(u0));
        return num.eval(u0) / d;
    }
};

inline std::optional<RatFunc> ratfunc_sqrt(const RatFunc& f) {
    auto n = upoly_sqrt(f.num);
    if (!n) return std::nullopt;
    auto d = upoly_sqrt(f.den);
    if (!d) return std::nullopt;
    return RatFunc(*n, *d);
}

inline std::string to_string(const RatFunc& f) {
    if (f.is_poly()) return to_string(f.num);
    return "(" + to_string(f.num) + ")/(" + to_string(f.den) + ")";
}

}  // namespace v22
