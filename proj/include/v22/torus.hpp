#pragma once

#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "parse.hpp"

namespace v22 {

using WeightVector = std::vector<long>;

// Projective point with one integer torus weight per coordinate.
struct WeightedPoint {
    std::vector<Scalar> coords;
    WeightVector weights;

    WeightedPoint() = default;
    WeightedPoint(std::vector<Scalar> c, WeightVector w)
        : coords(std::move(c)), weights(std::move(w)) {
        if (coords.size() != weights.size())
            throw DomainError("weighted point: coordinate/weight arity mismatch");
        if (coords.size() < 2) throw DomainError("weighted point needs at least 2 coordinates");
        bool nonzero = false;
        for (const auto& c0 : coords) nonzero = nonzero || !c0.is_zero();
        if (!nonzero) throw DomainError("weighted point: all coordinates vanish");
    }

    std::vector<size_t> support() const {
        std::vector<size_t> s;
        for (size_t i = 0; i < coords.size(); ++i)
            if (!coords[i].is_zero()) s.push_back(i);
        return s;
    }
};

// Two projective points are equal iff the cross products of coordinates agree.
inline bool projectively_equal(const std::vector<Scalar>& p, const std::vector<Scalar>& q) {
    if (p.size() != q.size()) return false;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] * q[j] != p[j] * q[i]) return false;
    // rule out pairing a point with the zero vector
    bool pz = true, qz = true;
    for (const auto& c : p) pz = pz && c.is_zero();
    for (const auto& c : q) qz = qz && c.is_zero();
    return pz == qz;
}

// Result of weight_of: either the common weight of all monomials, or two
// witness monomials of different weights.
struct SemiInvariance {
    std::optional<long> weight;
    std::string witness_a, witness_b;  // set when not semi-invariant
    long weight_a = 0, weight_b = 0;
    bool ok() const { return weight.has_value(); }
};

inline std::string monomial_string(const MPoly& p, const Expo& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += p.vars[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

inline SemiInvariance weight_of(const MPoly& p, const WeightVector& action) {
    if (p.is_zero()) throw DomainError("weight_of: zero polynomial");
    if (p.nvars() != action.size())
        throw VarMismatchError("weight_of: action arity does not match variable set");
    SemiInvariance out;
    const Expo* first = nullptr;
    for (const auto& [e, c] : p.terms) {
        long w = 0;
        for (size_t i = 0; i < e.size(); ++i) w += static_cast<long>(e[i]) * action[i];
        if (!first) {
            first = &e;
            out.weight = w;
        } else if (w != *out.weight) {
            SemiInvariance bad;
            bad.witness_a = monomial_string(p, *first);
            bad.weight_a = *out.weight;
            bad.witness_b = monomial_string(p, e);
            bad.weight_b = w;
            return bad;
        }
    }
    return out;
}

// The involution (x:y:z:t:w) -> (w:t:z:y:x), i.e. reversal of the coordinate
// order. Requires the ambient variable set.
inline MPoly apply_involution(const MPoly& p) {
    static const Vars ambient = {"x", "y", "z", "t", "w"};
    if (p.vars != ambient)
        throw VarMismatchError("apply_involution: variable set must be (x,y,z,t,w)");
    MPoly r(p.vars);
    for (const auto& [e, c] : p.terms) {
        Expo rev(e.rbegin(), e.rend());
        r.terms.emplace(std::move(rev), c);
    }
    return r;
}

// Orbit-closure data of a one-parameter orbit: for support indices S with
// weights r_i, d = gcd(r_i - r_min) and deg = (r_max - r_min)/d; the closure
// is a rational normal curve iff the normalized exponents fill {0..deg}.
// Repeated weights inside the support count once.
struct OrbitInfo {
    long degree = 0;
    std::vector<size_t> support;
    long gcd_d = 1;
    std::vector<long> normalized;  // sorted, deduplicated
    bool is_rational_normal = false;
    bool is_fixed_point = false;
};

inline OrbitInfo orbit_info(const WeightedPoint& pt) {
    OrbitInfo info;
    info.support = pt.support();
    std::set<long> ws;
    for (size_t i : info.support) ws.insert(pt.weights[i]);
    if (ws.size() < 2) {
        info.is_fixed_point = true;
        info.normalized = {0};
        return info;
    }
    long rmin = *ws.begin(), rmax = *ws.rbegin();
    long d = 0;
    for (long r : ws) d = std::gcd(d, r - rmin);
    info.gcd_d = d;
    info.degree = (rmax - rmin) / d;
    for (long r : ws) info.normalized.push_back((r - rmin) / d);
    info.is_rational_normal = true;
    for (long k = 0; k <= info.degree; ++k)
        if (static_cast<size_t>(k) >= info.normalized.size() || info.normalized[static_cast<size_t>(k)] != k)
            info.is_rational_normal = false;
    return info;
}

// Limits of the orbit at lambda -> 0 and lambda -> infinity: the point keeps
// exactly its minimal-weight (resp. maximal-weight) support coordinates.
inline std::pair<WeightedPoint, WeightedPoint> orbit_limits(const WeightedPoint& pt) {
    auto sup = pt.support();
    long rmin = pt.weights[sup.front()], rmax = rmin;
    for (size_t i : sup) {
        rmin = std::min(rmin, pt.weights[i]);
        rmax = std::max(rmax, pt.weights[i]);
    }
    std::vector<Scalar> at0(pt.coords.size(), Scalar(0)), atinf(pt.coords.size(), Scalar(0));
    for (size_t i : sup) {
        if (pt.weights[i] == rmin) at0[i] = pt.coords[i];
        if (pt.weights[i] == rmax) atinf[i] = pt.coords[i];
    }
    return {WeightedPoint(std::move(at0), pt.weights), WeightedPoint(std::move(atinf), pt.weights)};
}

// Coordinate points of the ambient space lying on {hyp = 0}. With pairwise
// distinct weights these are exactly the torus-fixed points.
inline std::vector<size_t> fixed_points_on(const MPoly& hyp, const WeightVector& action) {
    if (hyp.nvars() != action.size())
        throw VarMismatchError("fixed_points_on: action arity mismatch");
    for (size_t i = 0; i < action.size(); ++i)
        for (size_t j = i + 1; j < action.size(); ++j)
            if (action[i] == action[j])
                throw DomainError("fixed_points_on: weights must be pairwise distinct");
    std::vector<size_t> out;
    for (size_t i = 0; i < action.size(); ++i) {
        std::vector<Scalar> e(action.size(), Scalar(0));
        e[i] = Scalar(1);
        if (hyp.eval(e).is_zero()) out.push_back(i);
    }
    return out;
}

}  // namespace v22
