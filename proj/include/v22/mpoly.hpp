#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace v22 {

struct VarMismatchError : DomainError {
    explicit VarMismatchError(const std::string& m) : DomainError(m) {}
};
struct NotDivisibleError : DomainError {
    explicit NotDivisibleError(const std::string& m) : DomainError(m) {}
};

using Expo = std::vector<unsigned>;
using Vars = std::vector<std::string>;

// Graded lexicographic order on exponent vectors (ties broken by the declared
// variable order). Affects printing and leading terms, never semantics.
struct GrlexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        unsigned long da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Sparse multivariate polynomial over Scalar in a fixed ordered variable set.
// No zero coefficients are stored.
struct MPoly {
    Vars vars;
    std::map<Expo, Scalar, GrlexLess> terms;

    MPoly() = default;
    explicit MPoly(Vars v) : vars(std::move(v)) {}
    MPoly(Vars v, Scalar c) : vars(std::move(v)) {
        if (!c.is_zero()) terms.emplace(Expo(vars.size(), 0), std::move(c));
    }

    static MPoly constant(Vars v, Scalar c) { return MPoly(std::move(v), std::move(c)); }
    static MPoly variable(Vars v, const std::string& name) {
        MPoly p(std::move(v));
        Expo e(p.vars.size(), 0);
        auto it = std::find(p.vars.begin(), p.vars.end(), name);
        if (it == p.vars.end()) throw VarMismatchError("unknown variable " + name);
        e[static_cast<size_t>(it - p.vars.begin())] = 1;
        p.terms.emplace(std::move(e), Scalar(1));
        return p;
    }

    size_t nvars() const { return vars.size(); }
    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        if (terms.empty()) return true;
        if (terms.size() > 1) return false;
        const Expo& e = terms.begin()->first;
        return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
    }
    Scalar constant_term() const {
        auto it = terms.find(Expo(vars.size(), 0));
        return it == terms.end() ? Scalar(0) : it->second;
    }

    int var_index(const std::string& name) const {
        auto it = std::find(vars.begin(), vars.end(), name);
        return it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
    }

    long total_degree() const {
        long d = -1;
        for (const auto& [e, c] : terms) {
            long td = 0;
            for (auto x : e) td += x;
            d = std::max(d, td);
        }
        return d;
    }
    long degree_in(size_t var) const {
        long d = -1;
        for (const auto& [e, c] : terms) d = std::max(d, static_cast<long>(e[var]));
        return d;
    }

    void add_term(Expo e, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.emplace(std::move(e), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    Scalar coeff(const Expo& e) const {
        auto it = terms.find(e);
        return it == terms.end() ? Scalar(0) : it->second;
    }

    static void check_same(const MPoly& a, const MPoly& b) {
        if (a.vars != b.vars)
            throw VarMismatchError("operands have different variable sets");
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.vars == b.vars && a.terms == b.terms;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        check_same(a, b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        check_same(a, b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, -c);
        return r;
    }
    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, c] : r.terms) c = -c;
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        check_same(a, b);
        MPoly r(a.vars);
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                Expo e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }
    friend MPoly operator*(const MPoly& a, const Scalar& s) {
        MPoly r(a.vars);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : a.terms) r.terms.emplace(e, c * s);
        return r;
    }
    friend MPoly operator/(const MPoly& a, const Scalar& s) { return a * s.inverse(); }

    MPoly pow(unsigned long e) const {
        MPoly r = constant(vars, Scalar(1)), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // Evaluation at a full point, one Scalar per variable.
    Scalar eval(const std::vector<Scalar>& point) const {
        if (point.size() != vars.size())
            throw VarMismatchError("evaluation point arity mismatch");
        Scalar acc(0);
        for (const auto& [e, c] : terms) {
            Scalar m = c;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i]) m *= point[i].pow(e[i]);
            acc += m;
        }
        return acc;
    }

    // Part of given total degree; with a mask, degree is counted over the
    // masked variables only and the others ride along in coefficients.
    MPoly homogeneous_part(unsigned long k, const std::vector<bool>* mask = nullptr) const {
        MPoly r(vars);
        for (const auto& [e, c] : terms) {
            unsigned long d = 0;
            for (size_t i = 0; i < e.size(); ++i)
                if (!mask || (*mask)[i]) d += e[i];
            if (d == k) r.terms.emplace(e, c);
        }
        return r;
    }

    bool is_homogeneous() const {
        long d = -1;
        for (const auto& [e, c] : terms) {
            long td = 0;
            for (auto x : e) td += x;
            if (d < 0) d = td;
            if (td != d) return false;
        }
        return true;
    }

    MPoly map_coeffs(const std::function<Scalar(const Scalar&)>& f) const {
        MPoly r(vars);
        for (const auto& [e, c] : terms) {
            Scalar v = f(c);
            if (!v.is_zero()) r.terms.emplace(e, std::move(v));
        }
        return r;
    }

    MPoly specialize_u(const Rat& u0) const {
        return map_coeffs([&](const Scalar& c) { return c.specialize_u(u0); });
    }
};

// Formal partial derivative.
inline MPoly partial(const MPoly& p, const std::string& var) {
    int idx = p.var_index(var);
    if (idx < 0) throw VarMismatchError("partial: variable " + var + " not in polynomial");
    MPoly r(p.vars);
    for (const auto& [e, c] : p.terms) {
        unsigned k = e[static_cast<size_t>(idx)];
        if (k == 0) continue;
        Expo e2 = e;
        e2[static_cast<size_t>(idx)] = k - 1;
        r.add_term(std::move(e2), c * Scalar(Rat(static_cast<long>(k))));
    }
    return r;
}

// Simultaneous substitution var -> image. Every bound variable must occur in
// p; unbound variables pass through to the target set, and no image may
// mention a bound variable.
inline MPoly substitute(const MPoly& p, const std::map<std::string, MPoly>& bindings) {
    for (const auto& [name, img] : bindings)
        if (p.var_index(name) < 0)
            throw VarMismatchError("substitute: bound variable " + name + " not in polynomial");
    // Target variable order: variables actually used by the images in
    // first-seen order, then unbound variables of p.
    Vars target;
    auto add_var = [&target](const std::string& v) {
        if (std::find(target.begin(), target.end(), v) == target.end()) target.push_back(v);
    };
    for (const auto& v : p.vars) {
        auto it = bindings.find(v);
        if (it == bindings.end()) continue;
        const MPoly& img = it->second;
        for (size_t i = 0; i < img.vars.size(); ++i) {
            bool used = false;
            for (const auto& [e, c] : img.terms)
                if (e[i] > 0) used = true;
            if (used) add_var(img.vars[i]);
        }
    }
    for (const auto& v : p.vars)
        if (!bindings.count(v)) add_var(v);

    // Re-express binding images (and pass-through variables) on the target set.
    std::vector<MPoly> images;
    images.reserve(p.vars.size());
    for (const auto& v : p.vars) {
        auto it = bindings.find(v);
        if (it == bindings.end()) {
            images.push_back(MPoly::variable(target, v));
        } else {
            MPoly img(target);
            for (const auto& [e, c] : it->second.terms) {
                Expo e2(target.size(), 0);
                for (size_t i = 0; i < e.size(); ++i) {
                    if (e[i] == 0) continue;
                    auto pos = std::find(target.begin(), target.end(), it->second.vars[i]);
                    e2[static_cast<size_t>(pos - target.begin())] = e[i];
                }
                img.add_term(std::move(e2), c);
            }
            images.push_back(std::move(img));
        }
    }

    MPoly result(target);
    std::vector<std::vector<MPoly>> powers(p.vars.size());  // powers[i][k] = images[i]^k
    auto power = [&](size_t i, unsigned k) -> const MPoly& {
        auto& tab = powers[i];
        if (tab.empty()) tab.push_back(MPoly::constant(target, Scalar(1)));
        while (tab.size() <= k) tab.push_back(tab.back() * images[i]);
        return tab[k];
    };
    for (const auto& [e, c] : p.terms) {
        MPoly m = MPoly::constant(target, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) m = m * power(i, e[i]);
        result = result + m;
    }
    return result;
}

// Exact division: returns r with p = q*r, or throws NotDivisibleError.
inline MPoly divide_exact(const MPoly& p, const MPoly& q) {
    MPoly::check_same(p, q);
    if (q.is_zero()) throw DomainError("divide_exact: division by zero polynomial");
    MPoly rem = p, quo(p.vars);
    const auto& [qe, qc] = *q.terms.rbegin();
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms.rbegin();
        Expo diff(re.size());
        for (size_t i = 0; i < re.size(); ++i) {
            if (re[i] < qe[i])
                throw NotDivisibleError("divide_exact: leading term not divisible");
            diff[i] = re[i] - qe[i];
        }
        Scalar f = rc / qc;
        quo.add_term(diff, f);
        MPoly t(p.vars);
        t.terms.emplace(std::move(diff), std::move(f));
        rem = rem - t * q;
    }
    return quo;
}

inline bool divides_exactly(const MPoly& q, const MPoly& p) {
    try {
        divide_exact(p, q);
        return true;
    } catch (const NotDivisibleError&) {
        return false;
    }
}

}  // namespace v22
