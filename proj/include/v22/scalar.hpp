#pragma once

#include <string>
#include <utility>
#include <variant>

#include "quadext.hpp"

namespace v22 {

struct SpecializeError : DomainError {
    explicit SpecializeError(const std::string& m) : DomainError(m) {}
};

// Coefficient for every polynomial in the system: a tagged union over the
// tower Q -> Q(u) -> Q(u)(sqrt(d)). Binary operations promote both operands
// to the join of their tags; equality is decided exactly after promotion.
class Scalar {
    std::variant<Rat, RatFunc, QuadExt> v_;

    template <class F>
    static auto apply(const Scalar& x, const Scalar& y, F f) {
        if (x.is_quadext() || y.is_quadext()) {
            RatFunc d = x.is_quadext() ? x.quadext().d : y.quadext().d;
            return f(x.as_quadext(d), y.as_quadext(d));
        }
        if (x.is_ratfunc() || y.is_ratfunc()) return f(x.as_ratfunc(), y.as_ratfunc());
        return f(x.rat(), y.rat());
    }

public:
    Scalar() : v_(Rat(0)) {}
    Scalar(long n) : v_(Rat(n)) {}  // NOLINT: implicit by design
    Scalar(Rat r) : v_(std::move(r)) {}
    Scalar(RatFunc f) : v_(std::move(f)) { demote(); }
    Scalar(QuadExt q) : v_(std::move(q)) { demote(); }

    static Scalar u() { return Scalar(RatFunc::u()); }
    static Scalar sqrt_of(RatFunc d) { return Scalar(QuadExt::root_of(std::move(d))); }

    bool is_rat() const { return std::holds_alternative<Rat>(v_); }
    bool is_ratfunc() const { return std::holds_alternative<RatFunc>(v_); }
    bool is_quadext() const { return std::holds_alternative<QuadExt>(v_); }

    const Rat& rat() const { return std::get<Rat>(v_); }
    const QuadExt& quadext() const { return std::get<QuadExt>(v_); }

    // View at or above the current level of the tower.
    RatFunc as_ratfunc() const {
        if (is_rat()) return RatFunc(rat());
        if (is_ratfunc()) return std::get<RatFunc>(v_);
        const auto& q = quadext();
        if (!q.is_base()) throw DomainError("scalar is irrational over Q(u): " + to_str(*this));
        return q.a;
    }
    QuadExt as_quadext(const RatFunc& d) const {
        if (is_quadext()) return quadext();
        return QuadExt(as_ratfunc(), RatFunc(), d);
    }

    bool is_zero() const {
        if (is_rat()) return v22::is_zero(rat());
        if (is_ratfunc()) return std::get<RatFunc>(v_).is_zero();
        return quadext().is_zero();
    }
    bool is_one() const { return *this == Scalar(1); }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return apply(x, y, [](const auto& a, const auto& b) { return a == b; });
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        return apply(x, y, [](const auto& a, const auto& b) { return Scalar(a + b); });
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) {
        return apply(x, y, [](const auto& a, const auto& b) { return Scalar(a - b); });
    }
    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        return apply(x, y, [](const auto& a, const auto& b) { return Scalar(a * b); });
    }
    friend Scalar operator/(const Scalar& x, const Scalar& y) {
        if (y.is_zero()) throw DomainError("scalar division by zero");
        return apply(x, y, [](const auto& a, const auto& b) { return Scalar(a / b); });
    }
    Scalar operator-() const { return Scalar(0) - *this; }
    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

    Scalar pow(unsigned long e) const {
        Scalar r(1), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    Scalar inverse() const { return Scalar(1) / *this; }

    // Substitute a rational value for u. The radicand of a quadratic
    // extension specializes formally (no square roots are taken).
    Scalar specialize_u(const Rat& u0) const {
        try {
            if (is_rat()) return *this;
            if (is_ratfunc()) return Scalar(std::get<RatFunc>(v_).eval(u0));
            const auto& q = quadext();
            return Scalar(QuadExt(RatFunc(q.a.eval(u0)), RatFunc(q.b.eval(u0)),
                                  RatFunc(q.d.eval(u0))));
        } catch (const DomainError& e) {
            throw SpecializeError(e.what());
        }
    }

    friend std::string to_str(const Scalar& s) {
        if (s.is_rat()) return to_string(s.rat());
        if (s.is_ratfunc()) return to_string(std::get<RatFunc>(s.v_));
        return to_string(s.quadext());
    }

private:
    // Keep the representation at the lowest level that holds the value, so
    // that e.g. (u+1)-u compares equal to the rational 1.
    void demote() {
        if (is_quadext()) {
            const auto& q = quadext();
            if (q.is_base()) {
                RatFunc a = q.a;
                v_ = std::move(a);
            }
        }
        if (is_ratfunc()) {
            const auto& f = std::get<RatFunc>(v_);
            if (f.is_constant()) v_ = f.constant();
        }
    }
};

inline std::string to_string(const Scalar& s) { return to_str(s); }

}  // namespace v22
