#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "unipoly.hpp"
#include "upoly.hpp"

namespace v22 {

// A surface equation written in an affine chart of the quadric: one ambient
// coordinate set to 1, one eliminated by the linear solve of the quadric, and
// the result cleared by a stated multiplier so displayed u-powers match.
struct ChartEq {
    std::string chart_var;
    std::string solved_var;
    MPoly solved_expr;  // value of the eliminated coordinate in the chart
    MPoly local;        // equation in the three remaining coordinates
    Scalar multiplier;
};

namespace detail {
// Chart restriction before denominator clearing; coefficients live in Q(u).
inline ChartEq chart_raw(const Catalog& cat, const MPoly& surface, const std::string& chart_var,
                         const std::string& solved_var) {
    MPoly one_chart = MPoly::constant(Vars{}, Scalar(1));
    std::map<std::string, MPoly> set_chart{{chart_var, one_chart}};
    MPoly q_chart = substitute(cat.poly("Qu"), set_chart);

    int solved = q_chart.var_index(solved_var);
    if (solved < 0) throw DomainError("chart_eq: solved variable absent from the quadric chart");
    if (q_chart.degree_in(static_cast<size_t>(solved)) != 1)
        throw DomainError("chart_eq: elimination not linear in " + solved_var);
    auto cs = coeffs_in(q_chart, solved_var);
    if (!cs[1].is_constant())
        throw DomainError("chart_eq: coefficient of " + solved_var + " is not constant");
    Scalar lead = cs[1].constant_term();
    if (lead.is_zero()) throw DomainError("chart_eq: coefficient of " + solved_var + " vanishes");
    MPoly expr = -(cs[0] / lead);
    // drop the solved variable from expr's variable set
    expr = substitute(expr, {{solved_var, MPoly::constant(Vars{}, Scalar(0))}});

    MPoly local = substitute(surface, set_chart);
    if (local.var_index(solved_var) >= 0) local = substitute(local, {{solved_var, expr}});

    ChartEq out;
    out.chart_var = chart_var;
    out.solved_var = solved_var;
    out.solved_expr = expr;
    out.local = std::move(local);
    out.multiplier = Scalar(1);
    return out;
}
}  // namespace detail

inline ChartEq chart_eq(const Catalog& cat, const MPoly& surface, const std::string& chart_var,
                        const std::string& solved_var, const Scalar& multiplier) {
    ChartEq out = detail::chart_raw(cat, surface, chart_var, solved_var);
    out.local = out.local * multiplier;
    out.multiplier = multiplier;
    for (const auto& [e, c] : out.local.terms)
        if (!c.as_ratfunc().is_poly())
            throw DomainError("chart_eq: multiplier does not clear all denominators");
    return out;
}

// Variant with the minimal monic denominator-clearing multiplier; used where
// only the vanishing locus matters, not the displayed normalization.
inline ChartEq chart_eq_cleared(const Catalog& cat, const MPoly& surface,
                                const std::string& chart_var, const std::string& solved_var) {
    ChartEq out = detail::chart_raw(cat, surface, chart_var, solved_var);
    UPoly lcm = UPoly::one();
    for (const auto& [e, c] : out.local.terms) {
        const UPoly& den = c.as_ratfunc().den;
        lcm = divmod(lcm * den, gcd(lcm, den)).first;
    }
    out.multiplier = Scalar(RatFunc(lcm));
    out.local = out.local * out.multiplier;
    return out;
}

// Re-substituting the eliminated coordinate must reproduce the chart-restricted
// surface modulo the quadric: multiplier*surface|chart - local is divisible by
// the quadric's chart equation.
inline bool chart_roundtrip_ok(const Catalog& cat, const MPoly& surface, const ChartEq& ce) {
    std::map<std::string, MPoly> set_chart{{ce.chart_var, MPoly::constant(Vars{}, Scalar(1))}};
    MPoly q_chart = substitute(cat.poly("Qu"), set_chart);
    MPoly surf_chart = substitute(surface, set_chart) * ce.multiplier;
    // align variable sets
    Vars vs = q_chart.vars;
    MPoly local4(vs);
    for (const auto& [e, c] : ce.local.terms) {
        Expo e2(vs.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            auto it = std::find(vs.begin(), vs.end(), ce.local.vars[i]);
            if (it == vs.end()) return false;
            e2[static_cast<size_t>(it - vs.begin())] = e[i];
        }
        local4.add_term(std::move(e2), c);
    }
    return divides_exactly(q_chart, surf_chart - local4);
}

// Taylor data of a local equation at a point: the shifted polynomial together
// with its homogeneous jets in the shifted variables. Extra variables (e.g. a
// pencil parameter) ride along inside coefficients.
struct Germ {
    Vars vars;
    std::vector<bool> local_mask;  // true for shifted variables
    MPoly shifted;

    MPoly jet(unsigned long k) const { return shifted.homogeneous_part(k, &local_mask); }
    long order() const {
        for (unsigned long k = 0;; ++k) {
            if (!jet(k).is_zero()) return static_cast<long>(k);
            if (k > 64) return -1;  // zero polynomial
        }
    }
};

inline Germ expand_at(const MPoly& eq, const std::map<std::string, Scalar>& center) {
    std::map<std::string, MPoly> shift;
    for (const auto& [name, value] : center) {
        MPoly image = MPoly::variable(eq.vars, name) + MPoly::constant(eq.vars, value);
        shift.emplace(name, std::move(image));
    }
    Germ g;
    g.shifted = substitute(eq, shift);
    g.vars = g.shifted.vars;
    g.local_mask.assign(g.vars.size(), false);
    for (size_t i = 0; i < g.vars.size(); ++i)
        if (center.count(g.vars[i])) g.local_mask[i] = true;
    if (!g.jet(0).is_zero())
        throw DomainError("expand_at: center does not lie on the surface");
    return g;
}

// Linear coefficient vector of a germ over its shifted variables.
inline std::vector<Scalar> linear_jet_coeffs(const Germ& g) {
    MPoly j = g.jet(1);
    std::vector<Scalar> out;
    for (size_t i = 0; i < g.vars.size(); ++i) {
        if (!g.local_mask[i]) continue;
        Expo e(g.vars.size(), 0);
        e[i] = 1;
        out.push_back(j.coeff(e));
    }
    return out;
}

enum class PropKind { Always, Never, OnLocus };
struct Proportionality {
    PropKind kind;
    UPoly locus;  // primitive; meaningful for OnLocus
};

// Vanishing condition in u for the linear parts of two germs to be
// proportional: the gcd of all 2x2 minors of the stacked coefficient rows.
inline Proportionality linear_parts_proportional(const Germ& f1, const Germ& f2) {
    auto r1 = linear_jet_coeffs(f1), r2 = linear_jet_coeffs(f2);
    if (r1.size() != r2.size())
        throw DomainError("linear_parts_proportional: germs have different local variables");
    bool z1 = true, z2 = true;
    for (const auto& c : r1) z1 = z1 && c.is_zero();
    for (const auto& c : r2) z2 = z2 && c.is_zero();
    if (z1 || z2) throw DomainError("linear_parts_proportional: a linear jet vanishes");

    UPoly g;  // gcd of minor numerators
    bool all_zero = true;
    for (size_t i = 0; i < r1.size(); ++i)
        for (size_t j = i + 1; j < r1.size(); ++j) {
            Scalar minor = r1[i] * r2[j] - r1[j] * r2[i];
            if (minor.is_zero()) continue;
            all_zero = false;
            g = g.is_zero() ? minor.as_ratfunc().num : gcd(g, minor.as_ratfunc().num);
        }
    if (all_zero) return {PropKind::Always, UPoly()};
    if (g.degree() < 1) return {PropKind::Never, UPoly()};
    return {PropKind::OnLocus, primitive(g)};
}

// All 2x2 minors of the Jacobian of (quadric, g) vanish along the curve.
inline bool gradient_dependent_on_curve(const Catalog& cat, const MPoly& g0,
                                        const std::vector<MPoly>& param0,
                                        std::optional<Rat> u0 = std::nullopt) {
    MPoly g = u0 ? g0.specialize_u(*u0) : g0;
    MPoly qu = u0 ? cat.poly("Qu").specialize_u(*u0) : cat.poly("Qu");
    std::map<std::string, MPoly> bind;
    for (size_t i = 0; i < 5; ++i)
        bind[ambient_vars()[i]] = u0 ? param0[i].specialize_u(*u0) : param0[i];
    if (!substitute(qu, bind).is_zero() || !substitute(g, bind).is_zero())
        throw DomainError("gradient_dependent_on_curve: curve not on both hypersurfaces");
    std::vector<MPoly> dq, dg;
    for (const auto& v : ambient_vars()) {
        dq.push_back(partial(qu, v));
        dg.push_back(partial(g, v));
    }
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = i + 1; j < 5; ++j) {
            MPoly minor = dq[i] * dg[j] - dq[j] * dg[i];
            if (!substitute(minor, bind).is_zero()) return false;
        }
    return true;
}

struct MultCertificate {
    bool at_least_two = false;
    bool at_most_two = false;
    std::string witness;
    bool exactly_two() const { return at_least_two && at_most_two; }
};

// Multiplicity along the curve: >= 2 when the polynomial and its first
// partials vanish along the whole curve; <= 2 when the transversal 2-jet at
// the base point (1:1:1:1:1), computed in the chart x = 1, is nonzero.
inline MultCertificate mult_along_curve(const Catalog& cat, const MPoly& g0,
                                        const std::vector<MPoly>& param0,
                                        std::optional<Rat> u0 = std::nullopt) {
    MultCertificate out;
    MPoly g = u0 ? g0.specialize_u(*u0) : g0;
    std::map<std::string, MPoly> bind;
    for (size_t i = 0; i < 5; ++i)
        bind[ambient_vars()[i]] = u0 ? param0[i].specialize_u(*u0) : param0[i];
    out.at_least_two = substitute(g, bind).is_zero();
    for (const auto& v : ambient_vars())
        out.at_least_two = out.at_least_two && substitute(partial(g, v), bind).is_zero();

    ChartEq ce = chart_eq_cleared(cat, g0, "x", "w");
    MPoly local = u0 ? ce.local.specialize_u(*u0) : ce.local;
    std::map<std::string, Scalar> center{{"y", Scalar(1)}, {"z", Scalar(1)}, {"t", Scalar(1)}};
    Germ germ = expand_at(local, center);
    MPoly j2 = germ.jet(2);
    out.at_most_two = !j2.is_zero();
    if (out.at_most_two) out.witness = "transversal 2-jet: " + print_poly(j2);
    return out;
}

// --- quadratic forms ---------------------------------------------------------

struct QuadFormInfo {
    int rank = 0;
    // rank 1: form = scale * square^2
    std::optional<std::pair<Scalar, MPoly>> square;
    // rank 2: form = f1 * f2 (linear forms, possibly over a radical extension)
    std::optional<std::pair<MPoly, MPoly>> two_forms;
};

// Symmetric coefficient matrix of a homogeneous quadratic in the masked
// variables.
inline std::vector<std::vector<Scalar>> quad_matrix(const MPoly& q, const std::vector<size_t>& idx) {
    size_t n = idx.size();
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar(0)));
    Scalar half = Scalar(ratq(1, 2));
    for (const auto& [e, c] : q.terms) {
        unsigned long outside = 0;
        for (size_t i = 0; i < e.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) outside += e[i];
        if (outside)
            throw DomainError("quad_matrix: term involves a variable outside the local set");
        std::vector<size_t> pos;
        for (size_t k = 0; k < n; ++k)
            for (unsigned r = 0; r < e[idx[k]]; ++r) pos.push_back(k);
        if (pos.size() != 2) throw DomainError("quad_matrix: input not homogeneous quadratic");
        if (pos[0] == pos[1])
            m[pos[0]][pos[0]] += c;
        else {
            m[pos[0]][pos[1]] += c * half;
            m[pos[1]][pos[0]] += c * half;
        }
    }
    return m;
}

inline int matrix_rank(std::vector<std::vector<Scalar>> m) {
    size_t nr = m.size(), nc = nr ? m[0].size() : 0, rank = 0;
    for (size_t col = 0; col < nc && rank < nr; ++col) {
        size_t pr = rank;
        while (pr < nr && m[pr][col].is_zero()) ++pr;
        if (pr == nr) continue;
        std::swap(m[rank], m[pr]);
        Scalar inv = m[rank][col].inverse();
        for (size_t j = 0; j < nc; ++j) m[rank][j] *= inv;
        for (size_t i = 0; i < nr; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            Scalar f = m[i][col];
            for (size_t j = 0; j < nc; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

// Exact analysis of a quadratic form in up to three local variables: rank,
// the perfect-square decomposition at rank 1, and the two-linear-form
// factorization at rank 2 (over the base field when the diagonal ratio is a
// square, otherwise over the quadratic extension by its root).
inline QuadFormInfo quad_form_analyze(const MPoly& q, const std::vector<std::string>& local) {
    QuadFormInfo info;
    if (q.is_zero()) return info;
    std::vector<size_t> idx;
    for (const auto& name : local) {
        int i = q.var_index(name);
        if (i < 0) throw DomainError("quad_form_analyze: variable " + name + " missing");
        idx.push_back(static_cast<size_t>(i));
    }
    auto m = quad_matrix(q, idx);
    info.rank = matrix_rank(m);

    auto var = [&](size_t k) { return MPoly::variable(q.vars, local[k]); };

    // symmetric Gaussian reduction to a sum alpha_i * L_i^2
    std::vector<std::pair<Scalar, MPoly>> diag;
    MPoly rest = q;
    for (size_t step = 0; step < local.size() && !rest.is_zero(); ++step) {
        auto mm = quad_matrix(rest, idx);
        // find a nonzero diagonal entry, or create one from an off-diagonal pair
        size_t piv = local.size();
        for (size_t i = 0; i < local.size(); ++i)
            if (!mm[i][i].is_zero()) {
                piv = i;
                break;
            }
        MPoly axis(q.vars);
        if (piv == local.size()) {
            // all squares vanish: use (v_i + v_j) with m[i][j] != 0
            size_t bi = 0, bj = 0;
            for (size_t i = 0; i < local.size(); ++i)
                for (size_t j = i + 1; j < local.size(); ++j)
                    if (!mm[i][j].is_zero()) bi = i, bj = j;
            axis = var(bi) + var(bj);
        } else {
            axis = var(piv);
        }
        // L = (1/alpha) * (gradient/2 against axis); alpha = q(axis)
        // compute linear form l(v) = B(axis, v) where B is the polar form
        std::vector<Scalar> axis_coords(local.size(), Scalar(0));
        for (size_t k = 0; k < local.size(); ++k) {
            Expo e(q.vars.size(), 0);
            e[idx[k]] = 1;
            axis_coords[k] = axis.coeff(e);
        }
        Scalar alpha(0);
        std::vector<Scalar> row(local.size(), Scalar(0));
        for (size_t i = 0; i < local.size(); ++i) {
            for (size_t j = 0; j < local.size(); ++j) row[i] += mm[i][j] * axis_coords[j];
        }
        for (size_t i = 0; i < local.size(); ++i) alpha += axis_coords[i] * row[i];
        if (alpha.is_zero()) throw DomainError("quad_form_analyze: reduction pivot vanished");
        MPoly L(q.vars);
        for (size_t i = 0; i < local.size(); ++i) L = L + var(i) * (row[i] / alpha);
        diag.emplace_back(alpha, L);
        rest = rest - L * L * alpha;
    }
    if (!rest.is_zero()) throw DomainError("quad_form_analyze: reduction did not terminate");

    if (info.rank == 1) {
        auto [alpha, L] = diag[0];
        // normalize L monic in its highest-index variable
        Scalar leadc(0);
        for (size_t k = local.size(); k-- > 0;) {
            Expo e(q.vars.size(), 0);
            e[idx[k]] = 1;
            Scalar c = L.coeff(e);
            if (!c.is_zero()) {
                leadc = c;
                break;
            }
        }
        L = L / leadc;
        info.square = {alpha * leadc * leadc, L};
    } else if (info.rank == 2) {
        auto [a1, L1] = diag[0];
        auto [a2, L2] = diag[1];
        Scalar r = -(a2 / a1);
        if (r.is_quadext())
            throw DomainError("quad_form_analyze: radicand already lives in an extension");
        // q = a1 (L1 - s L2)(L1 + s L2) with s^2 = r
        Scalar s(0);
        if (auto root = ratfunc_sqrt(r.as_ratfunc()))
            s = Scalar(*root);
        else
            s = Scalar::sqrt_of(r.as_ratfunc());
        MPoly f1 = (L1 - L2 * s) * a1, f2 = L1 + L2 * s;
        if (f1 * f2 != q) throw DomainError("quad_form_analyze: factorization check failed");
        info.two_forms = {f1, f2};
    }
    return info;
}

// --- plane-curve germ classification ----------------------------------------

enum class SingType { Smooth, A1, A2, A3, D4, Unclassified };

inline const char* to_cstr(SingType t) {
    switch (t) {
        case SingType::Smooth: return "Smooth";
        case SingType::A1: return "A1";
        case SingType::A2: return "A2";
        case SingType::A3: return "A3";
        case SingType::D4: return "D4";
        default: return "Unclassified";
    }
}

struct SingClass {
    SingType type = SingType::Unclassified;
    Scalar quad_disc;   // discriminant of the quadratic jet (A1 witness)
    Scalar cubic_disc;  // discriminant of the cubic jet (D4 witness)
    Scalar order4;      // weighted order-4 coefficient after the square change (A3)
    Scalar order3;      // pure cubic coefficient (A2)
    std::string detail;
};

// Discriminant of a binary cubic a*x^3 + b*x^2*y + c*x*y^2 + d*y^3.
inline Scalar binary_cubic_disc(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    Scalar s18(18), s4(4), s27(27);
    return s18 * a * b * c * d - s4 * b * b * b * d + b * b * c * c - s4 * a * c * c * c -
           s27 * a * a * d * d;
}

// Classification of a bivariate germ at the origin into the types that occur
// here: Smooth, A1 (node), A2 (cusp), A3 (tacnode), D4 (ordinary triple
// point); anything else is reported Unclassified with its jets.
inline SingClass classify_plane_germ(const Germ& g) {
    std::vector<size_t> idx;
    std::vector<std::string> local;
    for (size_t i = 0; i < g.vars.size(); ++i)
        if (g.local_mask[i]) {
            idx.push_back(i);
            local.push_back(g.vars[i]);
        }
    if (idx.size() != 2) throw DomainError("classify_plane_germ: need exactly 2 local variables");
    if (g.shifted.is_zero()) throw DomainError("classify_plane_germ: zero polynomial");

    SingClass out;
    if (!g.jet(1).is_zero()) {
        out.type = SingType::Smooth;
        return out;
    }

    auto coeff2 = [&](unsigned ex, unsigned ey, const MPoly& p) {
        Expo e(g.vars.size(), 0);
        e[idx[0]] = ex;
        e[idx[1]] = ey;
        return p.coeff(e);
    };

    MPoly j2 = g.jet(2);
    if (j2.is_zero()) {
        MPoly j3 = g.jet(3);
        if (j3.is_zero()) {
            out.detail = "order >= 4";
            return out;
        }
        out.cubic_disc = binary_cubic_disc(coeff2(3, 0, j3), coeff2(2, 1, j3), coeff2(1, 2, j3),
                                           coeff2(0, 3, j3));
        if (!out.cubic_disc.is_zero()) {
            out.type = SingType::D4;
            return out;
        }
        out.detail = "degenerate cubic jet: " + print_poly(j3);
        return out;
    }

    Scalar a = coeff2(2, 0, j2), b = coeff2(1, 1, j2), c = coeff2(0, 2, j2);
    out.quad_disc = b * b - Scalar(4) * a * c;
    if (!out.quad_disc.is_zero()) {
        out.type = SingType::A1;
        return out;
    }

    // quadratic jet is a nonzero perfect square; write it as scale * L^2 with
    // L monic in the highest-index local variable it involves
    Scalar scale;
    std::string keep, repl;  // x-like and replaced variable names
    Scalar gamma_coeff;      // L = repl + gamma * keep
    if (!c.is_zero()) {
        scale = c;
        repl = local[1];
        keep = local[0];
        gamma_coeff = b / (Scalar(2) * c);
    } else {
        // b = 0 since the discriminant vanishes, so j2 = a * x^2
        scale = a;
        repl = local[0];
        keep = local[1];
        gamma_coeff = Scalar(0);
    }
    // substitute repl -> v - gamma*keep, on variable set (keep, v)
    Vars tv = {keep, "v#"};
    MPoly image = MPoly::variable(tv, "v#") - MPoly::variable(tv, keep) * gamma_coeff;
    MPoly f = substitute(g.shifted, {{repl, image}});
    f = f / scale;

    auto coeff_f = [&](const std::string& vn, unsigned evn, const std::string& xn, unsigned exn) {
        Expo e(f.vars.size(), 0);
        int vi = f.var_index(vn), xi = f.var_index(xn);
        if (vi >= 0) e[static_cast<size_t>(vi)] = evn;
        if (xi >= 0) e[static_cast<size_t>(xi)] = exn;
        if ((vi < 0 && evn) || (xi < 0 && exn)) return Scalar(0);
        return f.coeff(e);
    };

    out.order3 = coeff_f("v#", 0, keep, 3);
    if (!out.order3.is_zero()) {
        out.type = SingType::A2;
        return out;
    }
    Scalar e_vx2 = coeff_f("v#", 1, keep, 2);
    Scalar beta = coeff_f("v#", 0, keep, 4);
    out.order4 = beta - e_vx2 * e_vx2 / Scalar(4);
    if (!out.order4.is_zero()) {
        out.type = SingType::A3;
        out.detail = "quadratic jet = (" + to_str(scale) + ")*(" + repl +
                     (gamma_coeff.is_zero() ? "" : "+(" + to_str(gamma_coeff) + ")*" + keep) + ")^2";
        return out;
    }
    out.detail = "weighted order-4 part degenerate";
    return out;
}

}  // namespace v22
