#pragma once

#include <string>
#include <utility>

#include "ratfunc.hpp"

namespace v22 {

// Element a + b*sqrt(d) of a quadratic extension of Q(u). The radical is
// formal: sqrt(d) is a symbol with square d, and the two roots are told apart
// by the sign of b. Elements over different radicands cannot be mixed; that
// raises an error instead of building a bigger tower.
struct QuadExt {
    RatFunc a;
    RatFunc b;
    RatFunc d;

    QuadExt() = default;
    QuadExt(RatFunc a_, RatFunc b_, RatFunc d_)
        : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
        normalize();
    }

    static QuadExt root_of(RatFunc d_) { return QuadExt(RatFunc(), RatFunc(Rat(1)), std::move(d_)); }

    void normalize() {
        if (d.is_zero()) b = RatFunc();  // sqrt(0) = 0
    }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_base() const { return b.is_zero(); }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        if (x.a != y.a) return false;
        if (x.b.is_zero() && y.b.is_zero()) return true;
        return x.b == y.b && x.d == y.d;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
};

// Radicand shared by two operands; base elements are radicand-agnostic.
inline RatFunc join_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.b.is_zero()) return y.d;
    if (y.b.is_zero()) return x.d;
    if (x.d != y.d)
        throw DomainError("mixing two different radicands: sqrt(" + to_string(x.d) +
                          ") vs sqrt(" + to_string(y.d) + ")");
    return x.d;
}

inline QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a + y.a, x.b + y.b, join_radicand(x, y));
}
inline QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a - y.a, x.b - y.b, join_radicand(x, y));
}
inline QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a, -x.b, x.d); }
inline QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    RatFunc d = join_radicand(x, y);
    return QuadExt(x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d);
}
inline QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    if (y.is_zero()) throw DomainError("division by zero in quadratic extension");
    RatFunc d = join_radicand(x, y);
    RatFunc n = y.a * y.a - y.b * y.b * d;
    if (n.is_zero())
        throw DomainError("division by a zero divisor: norm of " + to_string(y.a) + "+(" +
                          to_string(y.b) + ")*sqrt(" + to_string(d) + ") vanishes");
    QuadExt conj(y.a, -y.b, d);
    QuadExt num = x * conj;
    return QuadExt(num.a / n, num.b / n, d);
}

inline std::string to_string(const QuadExt& x) {
    if (x.b.is_zero()) return to_string(x.a);
    std::string root = "sqrt(" + to_string(x.d) + ")";
    std::string out;
    if (!x.a.is_zero()) out += to_string(x.a) + "+";
    out += "(" + to_string(x.b) + ")*" + root;
    return out;
}

}  // namespace v22
