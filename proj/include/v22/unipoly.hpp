#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mpoly.hpp"
#include "ratfunc.hpp"

namespace v22 {

// Coefficient list of p with respect to one variable; entry k is the
// coefficient of var^k as a polynomial in the remaining variables.
inline std::vector<MPoly> coeffs_in(const MPoly& p, const std::string& var) {
    int idx = p.var_index(var);
    if (idx < 0) throw VarMismatchError("coeffs_in: variable " + var + " not present");
    long d = p.degree_in(static_cast<size_t>(idx));
    std::vector<MPoly> out(static_cast<size_t>(std::max(d + 1, 1L)), MPoly(p.vars));
    for (const auto& [e, c] : p.terms) {
        Expo e2 = e;
        unsigned k = e2[static_cast<size_t>(idx)];
        e2[static_cast<size_t>(idx)] = 0;
        out[k].add_term(std::move(e2), c);
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

// Scalar coefficient list for a polynomial that is univariate in var (all
// other exponents zero).
inline std::vector<Scalar> scalar_coeffs_in(const MPoly& p, const std::string& var) {
    int idx = p.var_index(var);
    if (idx < 0) throw VarMismatchError("scalar_coeffs_in: variable " + var + " not present");
    long d = p.degree_in(static_cast<size_t>(idx));
    std::vector<Scalar> out(static_cast<size_t>(std::max(d + 1, 1L)), Scalar(0));
    for (const auto& [e, c] : p.terms) {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0 && i != static_cast<size_t>(idx))
                throw DomainError("scalar_coeffs_in: polynomial not univariate in " + var);
        out[e[static_cast<size_t>(idx)]] = c;
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

// --- univariate polynomials with Scalar (field) coefficients ---------------

using UniS = std::vector<Scalar>;  // coefficient list, ascending degree

inline void unis_trim(UniS& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}
inline int unis_degree(const UniS& p) { return static_cast<int>(p.size()) - 1; }

inline std::pair<UniS, UniS> unis_divmod(const UniS& a, const UniS& b) {
    if (b.empty()) throw DomainError("unis_divmod: division by zero");
    UniS rem = a, quo;
    unis_trim(rem);
    int db = unis_degree(b);
    if (unis_degree(rem) >= db) quo.assign(static_cast<size_t>(unis_degree(rem) - db + 1), Scalar(0));
    while (!rem.empty() && unis_degree(rem) >= db) {
        Scalar f = rem.back() / b.back();
        size_t shift = rem.size() - b.size();
        quo[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
        unis_trim(rem);
    }
    return {quo, rem};
}

inline UniS unis_monic(const UniS& p) {
    if (p.empty()) return p;
    UniS r = p;
    Scalar inv = p.back().inverse();
    for (auto& c : r) c *= inv;
    return r;
}

// Monic gcd over the coefficient field.
inline UniS unis_gcd(UniS a, UniS b) {
    unis_trim(a);
    unis_trim(b);
    while (!b.empty()) {
        UniS r = unis_divmod(a, b).second;
        a = std::move(b);
        b = unis_monic(r);
    }
    return unis_monic(a);
}

inline UniS unis_from(const MPoly& p, const std::string& var) {
    auto sc = scalar_coeffs_in(p, var);
    unis_trim(sc);
    return sc;
}

// --- determinants and resultants --------------------------------------------

// Fraction-free Bareiss determinant of a square matrix of polynomials.
inline MPoly bareiss_det(std::vector<std::vector<MPoly>> m, const Vars& vars) {
    size_t n = m.size();
    if (n == 0) return MPoly::constant(vars, Scalar(1));
    int sign = 1;
    MPoly prev = MPoly::constant(vars, Scalar(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MPoly(vars);  // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                MPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divide_exact(num, prev);
            }
        prev = m[k][k];
    }
    MPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// Resultant of p and q with respect to var: the determinant of the Sylvester
// matrix, a polynomial in the remaining variables. Zero iff p and q share a
// factor involving var (over the algebraic closure of the coefficient field).
inline MPoly resultant_in(const MPoly& p, const MPoly& q, const std::string& var) {
    if (p.is_zero() || q.is_zero()) throw DomainError("resultant of a zero polynomial");
    auto pc = coeffs_in(p, var);
    auto qc = coeffs_in(q, var);
    size_t dp = pc.size() - 1, dq = qc.size() - 1;
    if (dp == 0 && dq == 0) return MPoly::constant(p.vars, Scalar(1));
    size_t n = dp + dq;
    std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n, MPoly(p.vars)));
    for (size_t row = 0; row < dq; ++row)
        for (size_t k = 0; k < pc.size(); ++k) m[row][row + (dp - k)] = pc[k];
    for (size_t row = 0; row < dp; ++row)
        for (size_t k = 0; k < qc.size(); ++k) m[dq + row][row + (dq - k)] = qc[k];
    return bareiss_det(std::move(m), p.vars);
}

// Spec interface: resultant of two polynomials that are univariate in the
// same variable with coefficients in Q[u]; the result is returned in Q[u].
inline UPoly resultant(const MPoly& p, const MPoly& q, const std::string& var) {
    MPoly r = resultant_in(p, q, var);
    if (!r.is_constant()) throw DomainError("resultant: inputs were not univariate in " + var);
    RatFunc f = r.constant_term().as_ratfunc();
    if (!f.is_poly()) throw DomainError("resultant: coefficients were not polynomial in u");
    return f.num;
}

}  // namespace v22
