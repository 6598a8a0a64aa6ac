#pragma once

#include <random>
#include <vector>

#include "v22/v22.hpp"

namespace vt {

using namespace v22;

// Deterministic generator for property-style tests.
struct Gen {
    std::mt19937_64 rng;
    explicit Gen(uint64_t seed = 20240611) : rng(seed) {}

    long intval(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    }
    Rat rat(long m = 9) {
        long num = intval(-m, m);
        long den = intval(1, m);
        return ratq(num, den);
    }
    Rat nonzero_rat(long m = 9) {
        for (;;) {
            Rat r = rat(m);
            if (!is_zero(r)) return r;
        }
    }
    UPoly upoly(int maxdeg = 3, long m = 5) {
        std::vector<Rat> c;
        int d = static_cast<int>(intval(0, maxdeg));
        for (int i = 0; i <= d; ++i) c.push_back(rat(m));
        return UPoly(c);
    }
    UPoly nonzero_upoly(int maxdeg = 3, long m = 5) {
        for (;;) {
            UPoly p = upoly(maxdeg, m);
            if (!p.is_zero()) return p;
        }
    }
    RatFunc ratfunc(int maxdeg = 2) { return RatFunc(upoly(maxdeg), nonzero_upoly(maxdeg)); }
    Scalar scalar(bool allow_u = true) {
        long pick = intval(0, allow_u ? 3 : 1);
        if (pick <= 1) return Scalar(rat());
        return Scalar(ratfunc(1));
    }
    // sparse polynomial with small exponents
    MPoly mpoly(const Vars& vars, int terms = 4, unsigned maxexp = 3, bool allow_u = false) {
        MPoly p(vars);
        for (int k = 0; k < terms; ++k) {
            Expo e(vars.size(), 0);
            for (auto& x : e) x = static_cast<unsigned>(intval(0, maxexp));
            p.add_term(std::move(e), scalar(allow_u));
        }
        return p;
    }
    MPoly nonzero_mpoly(const Vars& vars, int terms = 4, unsigned maxexp = 3,
                        bool allow_u = false) {
        for (;;) {
            MPoly p = mpoly(vars, terms, maxexp, allow_u);
            if (!p.is_zero()) return p;
        }
    }
};

// Naive Laplace-expansion determinant: the independent oracle for the
// fraction-free path used by the library.
inline MPoly naive_det(const std::vector<std::vector<MPoly>>& m, const Vars& vars) {
    size_t n = m.size();
    if (n == 0) return MPoly::constant(vars, Scalar(1));
    if (n == 1) return m[0][0];
    MPoly acc(vars);
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        std::vector<std::vector<MPoly>> sub(n - 1);
        for (size_t i = 1; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (j != k) sub[i - 1].push_back(m[i][j]);
        MPoly term = m[0][k] * naive_det(sub, vars);
        acc = sign > 0 ? acc + term : acc - term;
        sign = -sign;
    }
    return acc;
}

// Sylvester resultant by brute force.
inline MPoly sylvester_brute(const MPoly& p, const MPoly& q, const std::string& var) {
    auto pc = coeffs_in(p, var);
    auto qc = coeffs_in(q, var);
    size_t dp = pc.size() - 1, dq = qc.size() - 1;
    size_t n = dp + dq;
    std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n, MPoly(p.vars)));
    for (size_t row = 0; row < dq; ++row)
        for (size_t k = 0; k < pc.size(); ++k) m[row][row + (dp - k)] = pc[k];
    for (size_t row = 0; row < dp; ++row)
        for (size_t k = 0; k < qc.size(); ++k) m[dq + row][row + (dq - k)] = qc[k];
    return naive_det(m, p.vars);
}

}  // namespace vt
