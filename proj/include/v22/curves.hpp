#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "ufactor.hpp"
#include "unipoly.hpp"

namespace v22 {

enum class System { Gamma, Zeta };

struct AllCoordinatesZero : DomainError {
    explicit AllCoordinatesZero(const std::string& m) : DomainError(m) {}
};

// Restriction of one of the two linear systems to a parameterized curve: one
// polynomial in the curve parameters per slot.
struct RestrictedSystem {
    std::vector<std::string> labels;
    WeightVector weights;
    std::vector<MPoly> images;

    std::vector<size_t> zero_slots() const {
        std::vector<size_t> out;
        for (size_t i = 0; i < images.size(); ++i)
            if (images[i].is_zero()) out.push_back(i);
        return out;
    }
};

inline const std::vector<Slot>& system_slots(const Catalog& cat, System sys) {
    return sys == System::Zeta ? cat.zeta() : cat.gamma();
}

inline RestrictedSystem restrict_system(const Catalog& cat, System sys,
                                        const std::vector<MPoly>& param,
                                        std::optional<Rat> u0 = std::nullopt) {
    if (param.size() != 5) throw DomainError("restrict: parameterization needs 5 coordinates");
    std::map<std::string, MPoly> bind;
    for (size_t i = 0; i < 5; ++i)
        bind[ambient_vars()[i]] = u0 ? param[i].specialize_u(*u0) : param[i];
    RestrictedSystem out;
    for (const auto& slot : system_slots(cat, sys)) {
        out.labels.push_back(slot.label);
        out.weights.push_back(slot.weight);
        MPoly p = u0 ? slot.poly.specialize_u(*u0) : slot.poly;
        out.images.push_back(substitute(p, bind));
    }
    // For an equal-degree parameterization every image is homogeneous of the
    // common degree (or zero).
    bool homogeneous_param = true;
    long pd = -1;
    for (const auto& c : param) {
        if (c.is_zero()) continue;
        if (!c.is_homogeneous()) homogeneous_param = false;
        if (pd < 0) pd = c.total_degree();
        if (c.total_degree() != pd) homogeneous_param = false;
    }
    if (homogeneous_param && pd >= 0)
        for (size_t i = 0; i < out.images.size(); ++i)
            if (!out.images[i].is_zero() &&
                (!out.images[i].is_homogeneous() || out.images[i].total_degree() != 5 * pd))
                throw DomainError("restrict: image " + out.labels[i] + " lost homogeneity");
    return out;
}

// Image of a curve generator under gamma or zeta, as a weighted point in the
// target space; errors out when the generator hits the base scheme.
inline WeightedPoint system_image(const Catalog& cat, System sys, const WeightedPoint& pt,
                                  std::optional<Rat> u0 = std::nullopt) {
    std::vector<Scalar> coords;
    WeightVector weights;
    bool any = false;
    for (const auto& slot : system_slots(cat, sys)) {
        Scalar v = (u0 ? slot.poly.specialize_u(*u0) : slot.poly).eval(pt.coords);
        any = any || !v.is_zero();
        coords.push_back(std::move(v));
        weights.push_back(slot.weight);
    }
    if (!any) throw AllCoordinatesZero("system image: all coordinates vanish at the generator");
    return WeightedPoint(std::move(coords), std::move(weights));
}

inline OrbitInfo image_degree(const Catalog& cat, System sys, const WeightedPoint& pt,
                              std::optional<Rat> u0 = std::nullopt) {
    return orbit_info(system_image(cat, sys, pt, u0));
}

// Projective limit at lambda -> 0 of the image of a family lying on the
// quadric: divide the image vector by lambda^v at the minimal valuation v and
// set lambda = 0.
inline WeightedPoint family_limit(const Catalog& cat, const std::vector<MPoly>& family,
                                  std::optional<Rat> u0 = std::nullopt) {
    if (family.size() != 5) throw DomainError("family_limit: family needs 5 coordinates");
    std::map<std::string, MPoly> bind;
    for (size_t i = 0; i < 5; ++i)
        bind[ambient_vars()[i]] = u0 ? family[i].specialize_u(*u0) : family[i];
    if (!substitute(u0 ? cat.poly("Qu").specialize_u(*u0) : cat.poly("Qu"), bind).is_zero())
        throw DomainError("family_limit: family does not lie on the quadric");

    std::vector<std::vector<Scalar>> images;  // lambda-coefficient lists
    long minval = -1;
    for (const auto& slot : cat.zeta()) {
        MPoly img = substitute(u0 ? slot.poly.specialize_u(*u0) : slot.poly, bind);
        std::vector<Scalar> cs;
        if (!img.is_zero()) {
            cs = scalar_coeffs_in(img, "lambda");
            long v = 0;
            while (cs[static_cast<size_t>(v)].is_zero()) ++v;
            if (minval < 0 || v < minval) minval = v;
        }
        images.push_back(std::move(cs));
    }
    if (minval < 0) throw AllCoordinatesZero("family_limit: every slot vanishes identically");
    std::vector<Scalar> limit;
    for (const auto& cs : images)
        limit.push_back(static_cast<size_t>(minval) < cs.size() ? cs[static_cast<size_t>(minval)]
                                                                : Scalar(0));
    return WeightedPoint(std::move(limit), cat.zeta_weights());
}

// Orbit-closure membership in the hyperplane {slot = 0}: the coordinate must
// vanish at the generator and at both torus limits.
inline bool hyperplane_membership(const WeightedPoint& generator, size_t slot) {
    if (slot >= generator.coords.size()) throw DomainError("hyperplane_membership: bad slot");
    if (!generator.coords[slot].is_zero()) return false;
    auto [at0, atinf] = orbit_limits(generator);
    return at0.coords[slot].is_zero() && atinf.coords[slot].is_zero();
}

// --- the factor table of the restricted quintic system ----------------------

struct FactorClaim {
    std::string slot;           // e.g. "p9"
    std::vector<size_t> slots;  // zeta slot indices the claim covers
    Scalar constant;
    // monomial part: exponents of a, b, (a-b), ((u-1)a-ub)
    int ea, eb, eab, el;
    std::vector<std::string> qs;  // q-factors, with multiplicity by repetition
};

inline std::vector<FactorClaim> factor_table() {
    return {
        {"p9", {0, 13}, Scalar(-8) * Scalar::u() + Scalar(8), 2, 1, 1, 2, {"q0"}},
        {"p10", {1, 12}, Scalar(4), 2, 0, 0, 2, {"q1", "q2", "q3"}},
        {"p11", {2, 11}, Scalar(-8) * Scalar::u() + Scalar(8), 2, 1, 1, 2, {"q1", "q4"}},
        {"p12", {3, 10}, Scalar(16) * (Scalar::u() - 1).pow(2), 2, 2, 2, 2, {"q2"}},
        {"p13", {4, 9}, Scalar(16) * (Scalar::u() - 1).pow(2), 2, 2, 2, 2, {"q1"}},
        {"p14", {5, 8}, Scalar(-8) * Scalar::u() + Scalar(8), 2, 1, 1, 2, {"q1", "q2"}},
        {"p15", {6}, Scalar(-16) * (Scalar::u() - 1).pow(2), 2, 2, 2, 2, {"q5"}},
        {"p15'", {7}, Scalar(4) * (Scalar::u() - 1), 2, 0, 0, 2, {"q1", "q1", "q6"}},
    };
}

inline MPoly factor_claim_product(const Catalog& cat, const FactorClaim& c) {
    const Vars& ab = binary_vars();
    MPoly a = MPoly::variable(ab, "a"), b = MPoly::variable(ab, "b");
    MPoly lin = a * (Scalar::u() - Scalar(1)) - b * Scalar::u();
    MPoly prod = MPoly::constant(ab, c.constant) * a.pow(static_cast<unsigned long>(c.ea)) *
                 b.pow(static_cast<unsigned long>(c.eb)) *
                 (a - b).pow(static_cast<unsigned long>(c.eab)) *
                 lin.pow(static_cast<unsigned long>(c.el));
    for (const auto& q : c.qs) prod = prod * cat.poly(q);
    return prod;
}

// The four parameter values at which a pair of the binary quadrics degenerates;
// all other pairs stay coprime for every admissible u.
struct CoprimalityException {
    std::string qi, qj;
    UPoly locus;  // primitive polynomial whose roots are the exceptional u
};

inline std::vector<CoprimalityException> coprimality_exceptions() {
    auto up = [](std::vector<long> c) {
        std::vector<Rat> rc;
        for (long x : c) rc.emplace_back(x);
        return UPoly(rc);
    };
    return {
        {"q0", "q6", up({2, -2, 1})},   // u^2-2u+2
        {"q1", "q6", up({-2, 1})},      // u-2
        {"q3", "q5", up({1, 1})},       // u+1
        {"q2", "q3", up({-1, 1, 1})},   // u^2+u-1
    };
}

// Exact verification of the eight factorization identities and of the
// coprimality table with its four exceptional loci.
inline std::vector<CheckResult> verify_factor_table(const Catalog& cat,
                                                    std::optional<Rat> u0 = std::nullopt) {
    std::vector<CheckResult> out;
    if (u0 && (*u0 == Rat(0) || *u0 == Rat(1)))
        return {CheckResult::skipped("lemma-3.4-factor-table",
                                     "the coprimality table assumes u outside {0,1}")};
    const NamedCurve& theta = cat.curve("Theta");
    RestrictedSystem rs = restrict_system(cat, System::Zeta, theta.param);

    auto maybe_spec = [&](const MPoly& p) { return u0 ? p.specialize_u(*u0) : p; };

    for (const auto& claim : factor_table()) {
        MPoly rhs = maybe_spec(factor_claim_product(cat, claim));
        bool ok = true;
        std::string witness;
        for (size_t slot : claim.slots) {
            MPoly lhs = maybe_spec(rs.images[slot]);
            if (lhs != rhs) {
                ok = false;
                witness = "difference at " + rs.labels[slot] + ": " + print_poly(lhs - rhs);
                break;
            }
        }
        out.push_back(expect("lemma-3.4-factor-" + claim.slot, ok, witness));
    }

    // pairwise coprimality over Q(u) (generic) or over Q at a specialization
    auto exceptions = coprimality_exceptions();
    std::map<std::string, MPoly> b1{{"b", MPoly::constant(Vars{}, Scalar(1))}};
    for (int i = 0; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            std::string ni = "q" + std::to_string(i), nj = "q" + std::to_string(j);
            const UPoly* expected = nullptr;
            for (const auto& e : exceptions)
                if (e.qi == ni && e.qj == nj) expected = &e.locus;
            std::string id = "lemma-3.4-coprime-" + ni + "-" + nj;
            if (!u0) {
                UPoly res = resultant(substitute(cat.poly(ni), b1), substitute(cat.poly(nj), b1), "a");
                bool ok = expected ? locus_equals(res, *expected)
                                   : locus_equals(res, UPoly::one());
                std::string want = expected ? to_string(*expected) : "(none)";
                out.push_back(expect(id, ok,
                                     "Res(" + ni + "," + nj + ") = " +
                                         to_string(factor_square_free_in_u(res)) +
                                         ", expected exceptional locus " + want));
            } else {
                // at a rational parameter: a common factor exists iff u0 is a
                // root of the exceptional locus
                MPoly pi = cat.poly(ni).specialize_u(*u0), pj = cat.poly(nj).specialize_u(*u0);
                UniS g = unis_gcd(unis_from(substitute(pi, b1), "a"), unis_from(substitute(pj, b1), "a"));
                bool common = unis_degree(g) > 0;
                bool should = expected && v22::is_zero(expected->eval(*u0));
                out.push_back(expect(id, common == should,
                                     "gcd degree " + std::to_string(unis_degree(g)) +
                                         " disagrees with locus at u=" + to_string(*u0)));
            }
        }

    // q0 is divisible by q6 exactly on u^2-2u+2 = 0: specialize u to the
    // formal root 1+sqrt(-1) and divide.
    {
        Scalar root = Scalar(1) + Scalar::sqrt_of(RatFunc(Rat(-1)));
        auto specialize_at = [&](const MPoly& p) {
            return p.map_coeffs([&](const Scalar& c) {
                RatFunc f = c.as_ratfunc();
                Scalar acc(0), pw(1);
                for (size_t k = 0; k < f.num.c.size(); ++k) {
                    acc += Scalar(f.num.c[k]) * pw;
                    pw *= root;
                }
                Scalar den(0);
                pw = Scalar(1);
                for (size_t k = 0; k < f.den.c.size(); ++k) {
                    den += Scalar(f.den.c[k]) * pw;
                    pw *= root;
                }
                return acc / den;
            });
        };
        bool generic_not = !divides_exactly(cat.poly("q6"), cat.poly("q0"));
        bool at_root = false;
        std::string quotient;
        try {
            MPoly q = divide_exact(specialize_at(cat.poly("q0")), specialize_at(cat.poly("q6")));
            at_root = true;
            quotient = print_poly(q);
        } catch (const NotDivisibleError&) {
        }
        out.push_back(expect("lemma-3.4-q0-divisible-q6", generic_not && at_root,
                             "generic divisibility or reduction at u^2-2u+2=0 failed",
                             at_root ? "quotient at the root: " + quotient : ""));
    }
    return out;
}

// --- the image of the quartic surface: an embedded conic --------------------

// Restrict zeta to the torus chart (x, y, 1, 1/y, 1/x) of the surface
// {xw = z^2 = yt}, cleared of denominators. The eleven product slots vanish
// identically; the residual three-coordinate map satisfies exactly one
// quadratic relation, so the image is a conic.
inline std::vector<CheckResult> s_image_conic(const Catalog& cat,
                                              std::optional<Rat> u0 = std::nullopt) {
    std::vector<CheckResult> out;
    if (u0 && (*u0 == Rat(0) || *u0 == Rat(1)))
        return {CheckResult::skipped("remark-2.6",
                                     "the conic relation degenerates at u in {0,1}")};
    Vars sv = {"s", "v"};
    std::vector<MPoly> chart;  // (x,y,z,t,w) = (s^2 v, s v^2, s v, s, v)
    for (const char* txt : {"s^2*v", "s*v^2", "s*v", "s", "v"}) chart.push_back(parse_poly(txt, sv));

    RestrictedSystem rs = restrict_system(cat, System::Zeta, chart);
    if (u0)
        for (auto& img : rs.images) img = img.specialize_u(*u0);

    std::vector<size_t> residual = {1, 12, 7};  // g10, g20, g15'
    {
        bool ok = true;
        std::string bad;
        for (size_t i = 0; i < rs.images.size(); ++i) {
            bool should_vanish =
                std::find(residual.begin(), residual.end(), i) == residual.end();
            if (rs.images[i].is_zero() != should_vanish) ok = false, bad += rs.labels[i] + " ";
        }
        out.push_back(expect("remark-2.6-surface-slots", ok,
                             "unexpected vanishing pattern on the quartic surface: " + bad));
    }

    const MPoly &X = rs.images[1], &Y = rs.images[12], &Z = rs.images[7];

    // nonconstant image: compare two chart points projectively
    {
        auto at = [&](long s0, long v0) {
            std::vector<Scalar> pt = {Scalar(Rat(s0)), Scalar(Rat(v0))};
            return std::vector<Scalar>{X.eval(pt), Y.eval(pt), Z.eval(pt)};
        };
        bool ok = !projectively_equal(at(1, 2), at(1, 3));
        out.push_back(expect("remark-2.6-image-nonconstant", ok,
                             "residual map collapses to a point"));
    }

    // one conic relation by exact linear algebra on the 6 monomials
    {
        std::vector<MPoly> prods = {X * X, Y * Y, Z * Z, X * Y, X * Z, Y * Z};
        std::map<Expo, size_t, GrlexLess> rows;
        for (const auto& p : prods)
            for (const auto& [e, c] : p.terms)
                rows.emplace(e, rows.size());
        // matrix rows indexed by monomials, columns by the 6 products
        std::vector<std::vector<Scalar>> m(rows.size(), std::vector<Scalar>(6, Scalar(0)));
        for (size_t col = 0; col < 6; ++col)
            for (const auto& [e, c] : prods[col].terms) m[rows[e]][col] = c;
        // Gaussian elimination to find the nullspace
        size_t nr = m.size(), nc = 6;
        std::vector<int> pivot_of_col(nc, -1);
        size_t rank = 0;
        for (size_t col = 0; col < nc && rank < nr; ++col) {
            size_t pr = rank;
            while (pr < nr && m[pr][col].is_zero()) ++pr;
            if (pr == nr) continue;
            std::swap(m[rank], m[pr]);
            Scalar inv = m[rank][col].inverse();
            for (size_t j = col; j < nc; ++j) m[rank][j] *= inv;
            for (size_t i = 0; i < nr; ++i) {
                if (i == rank || m[i][col].is_zero()) continue;
                Scalar f = m[i][col];
                for (size_t j = col; j < nc; ++j) m[i][j] -= f * m[rank][j];
            }
            pivot_of_col[col] = static_cast<int>(rank);
            ++rank;
        }
        size_t nullity = nc - rank;
        std::vector<Scalar> rel(6, Scalar(0));
        if (nullity == 1) {
            size_t free_col = 0;
            for (size_t c = 0; c < nc; ++c)
                if (pivot_of_col[c] < 0) free_col = c;
            rel[free_col] = Scalar(1);
            for (size_t c = 0; c < nc; ++c)
                if (pivot_of_col[c] >= 0)
                    rel[c] = -m[static_cast<size_t>(pivot_of_col[c])][free_col];
        }
        bool ok = nullity == 1;
        MPoly combo(sv);
        std::string rel_str;
        if (ok) {
            combo = prods[0] * rel[0];
            for (size_t c = 1; c < 6; ++c) combo = combo + prods[c] * rel[c];
            ok = combo.is_zero();
            // irreducibility: the relation's 3x3 symmetric matrix has rank 3
            // coefficients in order XX,YY,ZZ,XY,XZ,YZ
            Scalar two(2);
            std::vector<std::vector<Scalar>> q = {
                {rel[0] * two, rel[3], rel[4]},
                {rel[3], rel[1] * two, rel[5]},
                {rel[4], rel[5], rel[2] * two}};
            Scalar det = q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1]) -
                         q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0]) +
                         q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0]);
            ok = ok && !det.is_zero();
            const char* names[] = {"T10^2", "T20^2", "T15'^2", "T10*T20", "T10*T15'", "T20*T15'"};
            for (size_t c = 0; c < 6; ++c)
                if (!rel[c].is_zero()) rel_str += std::string(rel_str.empty() ? "" : " + ") +
                                                  "(" + to_str(rel[c]) + ")*" + names[c];
        }
        out.push_back(expect("remark-2.6-conic-relation", ok,
                             "expected a single irreducible quadratic relation",
                             ok ? "relation: " + rel_str : ""));
    }
    return out;
}

}  // namespace v22
