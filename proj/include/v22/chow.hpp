#pragma once

#include <string>
#include <utility>
#include <vector>

#include "checkresult.hpp"
#include "parse.hpp"
#include "unipoly.hpp"

namespace v22 {

inline const Vars& chow_vars() {
    static const Vars v = {"n", "m"};
    return v;
}

// Intersection rules on the blowup of a threefold along a smooth rational
// curve: H = pullback of the hyperplane class, E = exceptional divisor.
// H^3 = h3, H^2 E = 0, H E^2 = -dH, E^3 = 2 - k*dH, where -K = k*H on the
// base and dH = H.C; the E^3 rule encodes deg N_{C/X} = -K.C - 2 for a
// rational curve.
struct ChowContext {
    long h3;
    long antican_k;
    long curve_deg;

    long e_cube() const { return 2 - antican_k * curve_deg; }
};

inline ChowContext quadric_context(long curve_deg) { return {2, 3, curve_deg}; }
inline ChowContext fano22_context(long curve_deg) { return {22, 1, curve_deg}; }

// Formal divisor class a*H + b*E with coefficients polynomial in the formal
// symbols n, m.
struct ChowExpr {
    MPoly a, b;

    ChowExpr() : a(chow_vars()), b(chow_vars()) {}
    ChowExpr(MPoly a_, MPoly b_) : a(std::move(a_)), b(std::move(b_)) {}

    static ChowExpr H() { return {MPoly::constant(chow_vars(), Scalar(1)), MPoly(chow_vars())}; }
    static ChowExpr E() { return {MPoly(chow_vars()), MPoly::constant(chow_vars(), Scalar(1))}; }
    static ChowExpr from(const std::string& a_text, const std::string& b_text) {
        return {parse_poly(a_text, chow_vars()), parse_poly(b_text, chow_vars())};
    }

    friend ChowExpr operator+(const ChowExpr& x, const ChowExpr& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend ChowExpr operator-(const ChowExpr& x, const ChowExpr& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend ChowExpr operator*(const ChowExpr& x, const Scalar& s) { return {x.a * s, x.b * s}; }
};

// Multilinear expansion of a triple product under the context rules; the
// result is a polynomial in (n, m).
inline MPoly triple(const ChowContext& ctx, const ChowExpr& e1, const ChowExpr& e2,
                    const ChowExpr& e3) {
    MPoly hhh = e1.a * e2.a * e3.a;
    MPoly hee = e1.a * e2.b * e3.b + e1.b * e2.a * e3.b + e1.b * e2.b * e3.a;
    MPoly eee = e1.b * e2.b * e3.b;
    return hhh * Scalar(Rat(ctx.h3)) + hee * Scalar(Rat(-ctx.curve_deg)) +
           eee * Scalar(Rat(ctx.e_cube()));
}

inline long e_cube(const ChowContext& ctx) { return ctx.e_cube(); }

// (-K)^3 of the blowup, with -K = k*H - E.
inline Rat anticanonical_cube(const ChowContext& ctx) {
    ChowExpr mk =
        ChowExpr::H() * Scalar(Rat(ctx.antican_k)) - ChowExpr::E();
    MPoly v = triple(ctx, mk, mk, mk);
    if (!v.is_constant()) throw DomainError("anticanonical_cube: expected a constant");
    return v.constant_term().as_ratfunc().constant();
}

// --- Hirzebruch surface arithmetic ------------------------------------------

// Divisor class a*s + b*l on F_n: s^2 = -n, s.l = 1, l^2 = 0. The index n is
// carried as a formal symbol so identities hold for every n at once.
inline const Vars& hb_vars() {
    static const Vars v = {"n"};
    return v;
}

struct HbClass {
    MPoly a, b;  // over ("n")

    HbClass() : a(hb_vars()), b(hb_vars()) {}
    HbClass(MPoly a_, MPoly b_) : a(std::move(a_)), b(std::move(b_)) {}
    static HbClass from(const std::string& a_text, const std::string& b_text) {
        return {parse_poly(a_text, hb_vars()), parse_poly(b_text, hb_vars())};
    }

    friend HbClass operator+(const HbClass& x, const HbClass& y) { return {x.a + y.a, x.b + y.b}; }
    friend HbClass operator-(const HbClass& x, const HbClass& y) { return {x.a - y.a, x.b - y.b}; }
};

inline MPoly hb_intersect(const HbClass& c1, const HbClass& c2) {
    MPoly n = MPoly::variable(hb_vars(), "n");
    return -(n * c1.a * c2.a) + c1.a * c2.b + c2.a * c1.b;
}

// kappa with (s + kappa*l)^2 = e3, i.e. kappa = (n + e3)/2; e3 may itself be
// a polynomial in n.
inline MPoly hb_solve_kappa(const MPoly& e3) {
    MPoly n = MPoly::variable(hb_vars(), "n");
    return (n + e3) * Scalar(ratq(1, 2));
}
inline MPoly hb_solve_kappa(long e3) {
    return hb_solve_kappa(MPoly::constant(hb_vars(), Scalar(Rat(e3))));
}

// --- the affine inequality ledger --------------------------------------------

// Bound from c0 + c1*m >= 0 with c1 < 0: m <= -c0/c1.
inline Rat linear_upper_bound(const MPoly& expr) {
    auto cs = coeffs_in(expr, "m");
    if (cs.size() != 2 || !cs[0].is_constant() || !cs[1].is_constant())
        throw DomainError("linear_upper_bound: expression not linear in m");
    Rat c0 = cs[0].constant_term().as_ratfunc().constant();
    Rat c1 = cs[1].constant_term().as_ratfunc().constant();
    if (sgn(c1) >= 0) throw DomainError("linear_upper_bound: coefficient of m not negative");
    return -c0 / c1;
}

// Every displayed intersection-number and affine-arithmetic claim of the
// blowup analysis, verified as exact identities in the formal symbols.
inline std::vector<CheckResult> chow_ledger() {
    std::vector<CheckResult> out;
    const Vars& nm = chow_vars();
    auto C = [&](const char* t) { return parse_poly(t, nm); };
    ChowExpr H = ChowExpr::H(), E = ChowExpr::E();
    ChowExpr HmE = H - E, Hm2E = H - E * Scalar(2), Hm3E = H - E * Scalar(3);
    ChowExpr nHmE = ChowExpr::from("n", "-m");
    ChowExpr HmmE = ChowExpr::from("1", "-m");
    ChowContext v4 = fano22_context(4), v6 = fano22_context(6), v2 = fano22_context(2);
    ChowContext q6 = quadric_context(6);

    auto eq = [&](std::string id, const MPoly& got, const char* want, std::string note = "") {
        MPoly w = C(want);
        out.push_back(expect(std::move(id), got == w,
                             "got " + print_poly(got) + ", want " + print_poly(w),
                             std::move(note)));
    };

    // exceptional-cube table
    {
        bool ok = e_cube(q6) == -16 && e_cube(v4) == -2 && e_cube(v6) == -4 && e_cube(v2) == 0;
        out.push_back(expect("chow-e-cube", ok,
                             "E^3 table mismatch: " + std::to_string(e_cube(q6)) + "," +
                                 std::to_string(e_cube(v4)) + "," + std::to_string(e_cube(v6)) +
                                 "," + std::to_string(e_cube(v2))));
    }

    // anticanonical cubes of the blowups, and the crepant value 16 twice
    {
        bool ok = anticanonical_cube(v4) == Rat(12) && anticanonical_cube(v6) == Rat(8) &&
                  anticanonical_cube(v2) == Rat(16) && anticanonical_cube(q6) == Rat(16);
        out.push_back(expect("chow-minus-k-cube", ok,
                             "got " + to_string(anticanonical_cube(v4)) + "," +
                                 to_string(anticanonical_cube(v6)) + "," +
                                 to_string(anticanonical_cube(v2)) + "," +
                                 to_string(anticanonical_cube(q6))));
    }

    // contraction criteria on the degree-4 blowup
    eq("lemma-6.3-18n-6m", triple(v4, HmE, HmE, nHmE), "18*n-6*m");
    eq("lemma-6.3-14n-8m", triple(v4, HmE, nHmE, Hm2E), "14*n-8*m");
    eq("lemma-6.3-contracted-T15p", triple(v4, HmE, HmE, Hm3E), "0");
    eq("sec6-bad-link-d6", triple(v6, HmE, HmE, Hm2E), "0");

    // multiplicity bounds
    {
        MPoly b74 = triple(v4, HmE, HmmE, Hm2E);
        eq("lemma-7.4-14-8m", b74, "14-8*m");
        out.push_back(expect("lemma-7.4-m-bound", linear_upper_bound(b74) == ratq(7, 4),
                             "bound " + to_string(linear_upper_bound(b74))));
        MPoly b74u2 = triple(v4, HmE, HmmE, Hm3E);
        eq("lemma-7.4-u2-10-10m", b74u2, "10-10*m");
        MPoly b72 = triple(v6, HmE, HmmE, Hm2E);
        eq("lemma-7.2-10-10m", b72, "10-10*m");
        out.push_back(expect("lemma-7.2-m-bound", linear_upper_bound(b72) == Rat(1),
                             "bound " + to_string(linear_upper_bound(b72))));
    }

    // epsilon arithmetic of the final descent
    {
        Rat eps(5, 6);
        bool ok = eps * ratq(7, 4) == ratq(35, 24) && ratq(35, 24) < Rat(2);
        out.push_back(expect("lemma-7.4-eps-m", ok, "eps*m bound failed"));
        Rat mult3e2 = Rat(3) * eps - 2;
        out.push_back(expect("lemma-7.4-mult-3eps-2", mult3e2 == ratq(1, 2) && mult3e2 < Rat(1),
                             "3*eps-2 = " + to_string(mult3e2)));
        Rat cls = Rat(2) * eps - 1;
        bool le_all = cls <= ratq(4, 5) && cls <= ratq(3, 4) && cls <= ratq(2, 3);
        out.push_back(expect("lemma-7.4-class-2eps-1", cls == ratq(2, 3) && le_all,
                             "2*eps-1 = " + to_string(cls)));
        // mult_{C4'}(D') = 3-2m and the pushed-forward pair identities, in m
        Vars mv = {"m"};
        MPoly m = MPoly::variable(mv, "m");
        MPoly mult_dp = MPoly::constant(mv, Scalar(3)) - m * Scalar(2);
        MPoly lhs = mult_dp * Scalar(eps) +
                    (m * Scalar(eps) - MPoly::constant(mv, Scalar(1))) * Scalar(2);
        bool id1 = lhs == MPoly::constant(mv, Scalar(mult3e2));
        // class: eps*(2-m) + (eps*m-1) == 2eps-1 identically in m
        MPoly cls_lhs = (MPoly::constant(mv, Scalar(2)) - m) * Scalar(eps) + m * Scalar(eps) -
                        MPoly::constant(mv, Scalar(1));
        bool id2 = cls_lhs == MPoly::constant(mv, Scalar(cls));
        out.push_back(expect("lemma-7.4-D-prime-mult", id1 && id2,
                             "push-forward bookkeeping identities failed",
                             "mult_{C4'}(D') = 3-2m; eps*mult + 2*(eps*m-1) = 3eps-2"));
    }

    // m <= 5/2 on the conic blowup: H - mE = (1/2)(2H-5E) + (5/2-m)E
    {
        ChowExpr lhs = ChowExpr::from("1", "-m");
        ChowExpr rhs = ChowExpr::from("1", "-5/2") + ChowExpr::from("0", "5/2-m");
        bool ok = lhs.a == rhs.a && lhs.b == rhs.b;
        MPoly coeff = parse_poly("5/2-m", nm);
        out.push_back(expect("lemma-7.1-m-5-2", ok && linear_upper_bound(coeff) == ratq(5, 2),
                             "decomposition against half the double-anticanonical surface failed"));
        out.push_back(expect("lemma-7.1-trigger", Rat(1) / ratq(4, 5) == ratq(5, 4),
                             "non-log-canonical multiplicity trigger is 1/eps"));
    }

    // Hirzebruch ledger of the exceptional surface over the sextic curve
    {
        MPoly kappa = hb_solve_kappa(-16);
        out.push_back(expect("lemma-4.3-kappa", kappa == parse_poly("(n-16)/2", hb_vars()),
                             "kappa = " + print_poly(kappa)));
        HbClass s = HbClass::from("1", "0");
        HbClass minusE = HbClass::from("1", "(n-16)/2");      // -E|_E = s + kappa l
        HbClass stilde = HbClass::from("1", "(n+8)/2");       // quartic surface restriction
        HbClass gamma_tilde = HbClass::from("1", "(n+4)/2");  // its section part
        HbClass mk = HbClass::from("1", "(n+20)/2");          // -K restricted
        bool rel = (stilde.b - minusE.b) == parse_poly("12", hb_vars()) &&
                   (mk.b - minusE.b) == parse_poly("18", hb_vars());
        out.push_back(expect("lemma-4.3-restrictions", rel,
                             "2H|_E and 3H|_E fiber counts are 12l and 18l"));
        out.push_back(expect("lemma-4.3-e-cube-check",
                             hb_intersect(minusE, minusE) == parse_poly("-16", hb_vars()),
                             "(s+kappa l)^2 = " + print_poly(hb_intersect(minusE, minusE))));
        MPoly gs = hb_intersect(gamma_tilde, s);
        out.push_back(expect("lemma-4.3-gamma-dot-s", gs == parse_poly("(4-n)/2", hb_vars()),
                             "got " + print_poly(gs),
                             "nonnegativity forces n <= 4"));
        MPoly deg12 = hb_intersect(mk, gamma_tilde);
        out.push_back(expect("lemma-4.3-degree-12", deg12 == parse_poly("12", hb_vars()),
                             "got " + print_poly(deg12)));
    }

    // Hirzebruch ledger of the exceptional surface over the quartic curve
    {
        MPoly kappa = hb_solve_kappa(-2);
        out.push_back(expect("lemma-6.4-kappa", kappa == parse_poly("(n-2)/2", hb_vars()),
                             "kappa = " + print_poly(kappa)));
        HbClass s = HbClass::from("1", "0");
        HbClass chat = HbClass::from("2", "n+2");  // 2-section before the fiber correction
        MPoly cs = hb_intersect(chat, s);
        out.push_back(expect("lemma-6.4-n-bound", cs == parse_poly("2-n", hb_vars()),
                             "got " + print_poly(cs),
                             "with kappa' >= 0 fibers removed, 2-n-2kappa' >= 0 gives n <= 2"));
        HbClass mk = HbClass::from("1", "(n+6)/2");
        MPoly self = hb_intersect(mk, mk);
        out.push_back(expect("lemma-6.4-ample-class", self == parse_poly("6", hb_vars()),
                             "(-K|_E)^2 = " + print_poly(self)));
    }

    // log-pullback section bounds on the conic blowup
    {
        // exceptional surface P1xP1: kappa <= 1, degree (s+2l).(s+kappa l) = 2+kappa <= 3
        HbClass mkE = HbClass::from("1", "2");
        bool ok = true;
        std::string got;
        for (long k : {0L, 1L}) {
            HbClass sec = HbClass::from("1", std::to_string(k));
            MPoly d = hb_intersect(mkE, sec);
            MPoly dn = substitute(d, {{"n", MPoly::constant(Vars{}, Scalar(0))}});
            got += print_poly(dn) + " ";
            ok = ok && dn.is_constant() &&
                 dn.constant_term().as_ratfunc().constant() == Rat(2 + k) && 2 + k <= 3;
        }
        // Hirzebruch F2: kappa <= 3, degree (s+3l).(s+kappa l) at n=2 is 1+kappa <= 4
        HbClass mkE2 = HbClass::from("1", "3");
        for (long k : {0L, 1L, 2L, 3L}) {
            HbClass sec = HbClass::from("1", std::to_string(k));
            MPoly d = hb_intersect(mkE2, sec);
            MPoly dn = substitute(d, {{"n", MPoly::constant(Vars{}, Scalar(2))}});
            got += print_poly(dn) + " ";
            ok = ok && dn.is_constant() &&
                 dn.constant_term().as_ratfunc().constant() == Rat(1 + k) && 1 + k <= 4;
        }
        out.push_back(expect("lemma-7.1-section-degrees", ok, "degrees: " + got,
                             "degree bounds 2+kappa <= 3 and 1+kappa <= 4"));
    }

    return out;
}

}  // namespace v22
