#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "checkresult.hpp"
#include "torus.hpp"

namespace v22 {

inline const Vars& ambient_vars() {
    static const Vars v = {"x", "y", "z", "t", "w"};
    return v;
}
inline const Vars& binary_vars() {
    static const Vars v = {"a", "b"};
    return v;
}
inline const WeightVector& ambient_weights() {
    static const WeightVector w = {0, 1, 3, 5, 6};
    return w;
}

struct Slot {
    std::string label;
    long weight;
    MPoly poly;
};

struct NamedCurve {
    std::string name;
    Vars param_vars;            // empty when only a generator is known
    std::vector<MPoly> param;   // 5 coordinates over param_vars
    WeightedPoint generator;    // in the ambient space, weights (0,1,3,5,6)
    bool iota_fixed_generator = false;
};

// Canonical source text for every catalog polynomial. The products g_{i+6} =
// f*h_i are spelled out as products so the stored text matches how each
// quintic is defined.
struct CatalogEntry {
    const char* name;
    const char* vars;  // "P4" or "AB"
    const char* text;
};

inline const std::vector<CatalogEntry>& catalog_text() {
    static const std::vector<CatalogEntry> rows = {
        // schema 1
        {"Qu", "P4", "u*(x*w-z^2)+z^2-y*t"},
        {"f", "P4", "x*w-y*t"},
        {"S1", "P4", "x*w-z^2"},
        {"S2", "P4", "z^2-y*t"},
        {"h3", "P4", "y^3-x^2*z"},
        {"h5", "P4", "x^2*t-y^2*z"},
        {"h6", "P4", "x*(x*w-y*t)"},
        {"h7", "P4", "y*(x*w-y*t)"},
        {"h8", "P4", "y^2*w-x*z*t"},
        {"h9", "P4", "z*(x*w-y*t)"},
        {"h10", "P4", "x*t^2-y*z*w"},
        {"h11", "P4", "t*(x*w-y*t)"},
        {"h12", "P4", "w*(x*w-y*t)"},
        {"h13", "P4", "y*w^2-z*t^2"},
        {"h15", "P4", "t^3-z*w^2"},
        {"g9", "P4", "(x*w-y*t)*(y^3-x^2*z)"},
        {"g10", "P4", "(u-1)*x^2*y*z*w-3*x*y^2*z*t+(2-u)*x*y*z^3+y^4*w+x^3*t^2"},
        {"g11", "P4", "(x*w-y*t)*(x^2*t-y^2*z)"},
        {"g12", "P4", "x*(x*w-y*t)^2"},
        {"g13", "P4", "y*(x*w-y*t)^2"},
        {"g14", "P4", "(x*w-y*t)*(y^2*w-x*z*t)"},
        {"g15", "P4", "z*(x*w-y*t)^2"},
        {"g15p", "P4",
         "(u-1)*x^2*t^3+(u-1)*y^3*w^2-(u+4)*y^2*z*t^2+(3*u+2)*x*y*z*t*w+(4-4*u)*y*z^3*t"},
        {"g15pp", "P4",
         "(u-1)*x^2*t^3+(u-1)*y^3*w^2-4*y^2*z*t^2+(u+2)*x*y*z*t*w-4*(u-1)*y*z^3*t+u*x^2*z*w^2"},
        {"g16", "P4", "(x*w-y*t)*(x*t^2-y*z*w)"},
        {"g17", "P4", "t*(x*w-y*t)^2"},
        {"g18", "P4", "w*(x*w-y*t)^2"},
        {"g19", "P4", "(x*w-y*t)*(y*w^2-z*t^2)"},
        {"g20", "P4", "(u-1)*x*z*t*w^2-3*y*z*t^2*w+(2-u)*z^3*t*w+x*t^4+y^2*w^3"},
        {"g21", "P4", "(x*w-y*t)*(t^3-z*w^2)"},
        {"q0", "AB",
         "(u-1)^2*a^4-2*(u-1)^2*a^3*b+2*(u-1)*(u-2)*a^2*b^2-6*u*(u-1)*a*b^3+u*(3*u-2)*b^4"},
        {"q1", "AB", "(u-1)*a^2-u*b^2"},
        {"q2", "AB", "(u-1)*a^2-(2*u-2)*a*b+u*b^2"},
        {"q3", "AB", "(u-1)*a^2+2*a*b-(u+2)*b^2"},
        {"q4", "AB", "(u-1)*a^2-(2*u-2)*a*b+(u-2)*b^2"},
        {"q5", "AB", "(u-1)*a^2-2*u*a*b+u*b^2"},
        {"q6", "AB", "(u-1)*a^2-(2*u-4)*a*b+(u-4)*b^2"},
        {"conic_x", "AB", "b^2-(1-u)*(a-b)^2"},
        {"conic_y", "AB", "u*(a^2-b^2)-a^2"},
        {"conic_z", "AB", "a^2-u*(a-b)^2"},
        {"Hx", "P4", "x"},
        {"Hy", "P4", "y"},
        {"Hz", "P4", "z"},
        {"Ht", "P4", "t"},
        {"Hw", "P4", "w"},
    };
    return rows;
}

// The fixed catalog of every named polynomial, point and parameterized curve,
// with the involution slot pairing and both linear systems.
class Catalog {
public:
    Catalog() {
        for (const auto& row : catalog_text()) {
            Vars vs = std::string(row.vars) == "P4" ? ambient_vars() : binary_vars();
            polys_.emplace(row.name, parse_poly(row.text, vs));
        }
        aliases_ = {{"N3", "h3"},  {"N5", "h5"},   {"N8", "h8"},
                    {"N10", "h10"}, {"N13", "h13"}, {"N15", "h15"}};

        const long hw[] = {3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15};
        for (long w : hw) gamma_.push_back({"h" + std::to_string(w), w, poly("h" + std::to_string(w))});

        const char* zl[] = {"g9",  "g10", "g11", "g12", "g13", "g14", "g15",
                            "g15p", "g16", "g17", "g18", "g19", "g20", "g21"};
        const long zw[] = {9, 10, 11, 12, 13, 14, 15, 15, 16, 17, 18, 19, 20, 21};
        for (size_t i = 0; i < 14; ++i) zeta_.push_back({zl[i], zw[i], poly(zl[i])});

        build_curves();
    }

    const MPoly& poly(const std::string& name) const {
        auto a = aliases_.find(name);
        const std::string& key = a == aliases_.end() ? name : a->second;
        auto it = polys_.find(key);
        if (it == polys_.end()) throw DomainError("unknown catalog polynomial: " + name);
        return it->second;
    }
    const NamedCurve& curve(const std::string& name) const {
        auto it = curves_.find(name);
        if (it == curves_.end()) throw DomainError("unknown catalog curve: " + name);
        return it->second;
    }
    bool has(const std::string& name) const {
        return polys_.count(name) || aliases_.count(name) || curves_.count(name);
    }

    const std::vector<Slot>& zeta() const { return zeta_; }
    const std::vector<Slot>& gamma() const { return gamma_; }
    WeightVector zeta_weights() const {
        WeightVector w;
        for (const auto& s : zeta_) w.push_back(s.weight);
        return w;
    }
    WeightVector gamma_weights() const {
        WeightVector w;
        for (const auto& s : gamma_) w.push_back(s.weight);
        return w;
    }

    // Slot pairing induced by the involution on weights, i <-> 30-i; the two
    // weight-15 slots are each fixed.
    std::vector<size_t> zeta_involution_slots() const { return {13, 12, 11, 10, 9, 8, 6, 7, 5, 4, 3, 2, 1, 0}; }

    // The torus-fixed limit points of the two lines through the blown-down
    // conic, in the zeta coordinate space.
    const WeightedPoint& ell1() const { return ell1_; }
    const WeightedPoint& ell2() const { return ell2_; }

    // Family P_lambda sweeping a curve through the line x=y=z=0, used to pin
    // down the second line's limit point.
    const std::vector<MPoly>& lambda_family() const { return lambda_family_; }

    // Point of the pointwise iota-fixed conic at rational (a:b).
    WeightedPoint theta_point(const Scalar& a, const Scalar& b) const {
        std::vector<Scalar> pt(2);
        pt[0] = a;
        pt[1] = b;
        std::vector<Scalar> coords;
        const NamedCurve& th = curve("Theta");
        for (const auto& c : th.param) coords.push_back(c.eval(pt));
        return WeightedPoint(std::move(coords), ambient_weights());
    }

    // Generator of Psi (branch +1) or Psi' (branch -1). Generic mode works
    // over Q(u)(theta) with theta^2 = (3u+1)(1-u). At a rational parameter
    // value, theta becomes the nonnegative rational root when the radicand is
    // a perfect square (the convention theta = 1 at u = 2/3, theta = 0 at
    // u = -1/3), and a formal constant radical otherwise.
    WeightedPoint psi_generator(int branch, std::optional<Rat> u0 = std::nullopt) const {
        if (branch != 1 && branch != -1) throw DomainError("psi_generator: branch must be +1 or -1");
        Scalar u, theta;
        if (u0) {
            if (*u0 == Rat(0) || *u0 == Rat(1))
                throw DomainError("psi_generator: u must avoid 0 and 1");
            u = Scalar(*u0);
            Rat d0 = (Rat(3) * *u0 + 1) * (Rat(1) - *u0);
            if (auto root = rat_sqrt(d0))
                theta = Scalar(*root);
            else
                theta = Scalar::sqrt_of(RatFunc(d0));
        } else {
            u = Scalar::u();
            UPoly d = UPoly(std::vector<Rat>{Rat(1), Rat(3)}) * UPoly(std::vector<Rat>{Rat(1), Rat(-1)});
            theta = Scalar::sqrt_of(RatFunc(d));
        }
        Scalar bt = Scalar(branch) * theta;
        Scalar one(1), two(2);
        Scalar t = (u - one) * (bt - u - one) / (two * u * u);
        Scalar w = (u - one) * (two * u * u + bt - u - one) / (two * u * u * u);
        return WeightedPoint({one, one, one, t, w}, ambient_weights());
    }

    std::vector<CheckResult> verify_catalog() const;

private:
    std::map<std::string, MPoly> polys_;
    std::map<std::string, std::string> aliases_;
    std::map<std::string, NamedCurve> curves_;
    std::vector<Slot> zeta_, gamma_;
    WeightedPoint ell1_, ell2_;
    std::vector<MPoly> lambda_family_;

    void build_curves() {
        Vars s01 = {"s0", "s1"};
        NamedCurve gamma_curve;
        gamma_curve.name = "Gamma";
        gamma_curve.param_vars = s01;
        for (const char* txt : {"s0^6", "s0^5*s1", "s0^3*s1^3", "s0*s1^5", "s1^6"})
            gamma_curve.param.push_back(parse_poly(txt, s01));
        gamma_curve.generator =
            WeightedPoint({1, 1, 1, 1, 1}, ambient_weights());
        gamma_curve.iota_fixed_generator = true;
        curves_.emplace("Gamma", gamma_curve);

        NamedCurve theta;
        theta.name = "Theta";
        theta.param_vars = binary_vars();
        theta.param = {poly("conic_x"), poly("conic_y"), poly("conic_z"), poly("conic_y"),
                       poly("conic_x")};
        theta.generator = WeightedPoint({1, 1, -1, 1, 1}, ambient_weights());  // (a:b)=(1:0)
        theta.iota_fixed_generator = true;
        curves_.emplace("Theta", theta);

        NamedCurve theta_pm;
        theta_pm.name = "Theta_pm";
        Scalar su = Scalar::sqrt_of(RatFunc::u());
        theta_pm.generator =
            WeightedPoint({Scalar(1), su, Scalar(0), -su, Scalar(-1)}, ambient_weights());
        theta_pm.iota_fixed_generator = true;
        curves_.emplace("Theta_pm", theta_pm);

        NamedCurve delta;
        delta.name = "Delta";
        delta.param_vars = s01;
        for (const char* txt : {"u*s0^2", "0", "u*s0*s1", "0", "(u-1)*s1^2"})
            delta.param.push_back(parse_poly(txt, s01));
        delta.generator = WeightedPoint(
            {Scalar::u(), Scalar(0), Scalar::u(), Scalar(0), Scalar::u() - Scalar(1)},
            ambient_weights());
        curves_.emplace("Delta", delta);

        NamedCurve upsilon;
        upsilon.name = "Upsilon";
        upsilon.param_vars = s01;
        for (const char* txt : {"0", "(1-u)*s0^2", "s0*s1", "s1^2", "0"})
            upsilon.param.push_back(parse_poly(txt, s01));
        upsilon.generator = WeightedPoint(
            {Scalar(0), Scalar(1) - Scalar::u(), Scalar(1), Scalar(1), Scalar(0)},
            ambient_weights());
        curves_.emplace("Upsilon", upsilon);

        // Limit point of the P_lambda family in the zeta slots: supported on
        // the weight 20 and 21 slots with values (1 : 1-u). The first line is
        // its involution image under the slot relabeling i <-> 30-i.
        std::vector<Scalar> l2(14, Scalar(0)), l1(14, Scalar(0));
        l2[12] = Scalar(1);
        l2[13] = Scalar(1) - Scalar::u();
        l1[0] = Scalar(1) - Scalar::u();
        l1[1] = Scalar(1);
        ell2_ = WeightedPoint(std::move(l2), zeta_weights());
        ell1_ = WeightedPoint(std::move(l1), zeta_weights());

        Vars lv = {"lambda"};
        for (const char* txt :
             {"(u*lambda^2-lambda^2+lambda)/u", "lambda", "lambda", "1", "1"})
            lambda_family_.push_back(parse_poly(txt, lv));
    }
};

inline std::vector<CheckResult> Catalog::verify_catalog() const {
    std::vector<CheckResult> out;
    const WeightVector& act = ambient_weights();

    // (a) declared weights
    {
        bool ok = true;
        std::string bad;
        auto check_weight = [&](const Slot& s) {
            auto wi = weight_of(s.poly, act);
            if (!wi.ok() || *wi.weight != s.weight) {
                ok = false;
                bad += s.label + " ";
            }
        };
        for (const auto& s : gamma_) check_weight(s);
        for (const auto& s : zeta_) check_weight(s);
        auto wpp = weight_of(poly("g15pp"), act);
        if (!wpp.ok() || *wpp.weight != 15) ok = false, bad += "g15pp";
        out.push_back(expect("catalog-weights", ok, "wrong weights: " + bad));
    }

    // (b) involution pairing
    {
        bool ok = true;
        std::string bad;
        auto pair_check = [&](const std::string& a, const std::string& b) {
            if (apply_involution(poly(a)) != poly(b)) {
                ok = false;
                bad += a + "<->" + b + " ";
            }
        };
        for (long i : {3, 5, 6, 7, 8}) pair_check("h" + std::to_string(i), "h" + std::to_string(18 - i));
        pair_check("h9", "h9");
        for (long i : {9, 10, 11, 12, 13, 14})
            pair_check("g" + std::to_string(i), "g" + std::to_string(30 - i));
        pair_check("g15", "g15");
        pair_check("g15p", "g15p");
        pair_check("Qu", "Qu");
        pair_check("f", "f");
        // iota preserves the pair of equations cutting out the quartic surface
        MPoly i1 = apply_involution(poly("S1")), i2 = apply_involution(poly("S2"));
        bool set_fixed = (i1 == poly("S1") && i2 == poly("S2")) ||
                         (i1 == poly("S2") && i2 == poly("S1"));
        if (!set_fixed) ok = false, bad += "S-pair";
        out.push_back(expect("catalog-involution", ok, "pairing failed: " + bad));
    }

    // (c) Gamma inside the quadric and the quartic surface
    {
        const NamedCurve& g = curve("Gamma");
        std::map<std::string, MPoly> bind;
        for (size_t i = 0; i < 5; ++i) bind[ambient_vars()[i]] = g.param[i];
        bool ok = substitute(poly("Qu"), bind).is_zero() && substitute(poly("S1"), bind).is_zero() &&
                  substitute(poly("S2"), bind).is_zero();
        out.push_back(expect("catalog-gamma-incidence", ok, "Gamma not inside Q_u or S"));
    }

    // (d) generators on the quadric
    {
        bool ok = true;
        std::string bad;
        auto on_quadric = [&](const std::string& name, const WeightedPoint& pt) {
            if (!poly("Qu").eval(pt.coords).is_zero()) {
                ok = false;
                bad += name + " ";
            }
        };
        for (const char* name : {"Gamma", "Theta", "Theta_pm", "Delta", "Upsilon"})
            on_quadric(name, curve(name).generator);
        on_quadric("Psi", psi_generator(+1));
        on_quadric("Psi'", psi_generator(-1));
        // whole parameterized families, not just generators
        for (const char* name : {"Gamma", "Theta", "Delta", "Upsilon"}) {
            const NamedCurve& c = curve(name);
            std::map<std::string, MPoly> bind;
            for (size_t i = 0; i < 5; ++i) bind[ambient_vars()[i]] = c.param[i];
            if (!substitute(poly("Qu"), bind).is_zero()) ok = false, bad += std::string(name) + "(family) ";
        }
        // iota-fixedness of the marked generators
        for (const char* name : {"Gamma", "Theta", "Theta_pm"}) {
            const NamedCurve& c = curve(name);
            std::vector<Scalar> rev(c.generator.coords.rbegin(), c.generator.coords.rend());
            if (!projectively_equal(rev, c.generator.coords)) ok = false, bad += std::string(name) + "(iota) ";
        }
        out.push_back(expect("catalog-generators-on-quadric", ok, "failed: " + bad));
    }

    // (e) quintic decompositions
    {
        bool ok = true;
        std::string bad;
        const MPoly& f0 = poly("f");
        auto eq = [&](const std::string& g, const MPoly& rhs) {
            if (poly(g) != rhs) {
                ok = false;
                bad += g + " ";
            }
        };
        eq("g9", f0 * poly("h3"));
        eq("g11", f0 * poly("h5"));
        eq("g14", f0 * poly("h8"));
        eq("g16", f0 * poly("h10"));
        eq("g19", f0 * poly("h13"));
        eq("g21", f0 * poly("h15"));
        MPoly f2 = f0 * f0;
        eq("g12", poly("Hx") * f2);
        eq("g13", poly("Hy") * f2);
        eq("g15", poly("Hz") * f2);
        eq("g17", poly("Ht") * f2);
        eq("g18", poly("Hw") * f2);
        eq("g15pp", poly("g15") * Scalar::u() + poly("g15p"));
        out.push_back(expect("catalog-decompositions", ok, "mismatch: " + bad));
    }

    // (f) separating value at (0:1:0:0:1)
    {
        std::vector<Scalar> pt = {0, 1, 0, 0, 1};
        Scalar vq = poly("Qu").eval(pt);
        Scalar v15 = poly("g15").eval(pt);
        Scalar v15p = poly("g15p").eval(pt);
        bool ok = vq.is_zero() && v15.is_zero() && !v15p.is_zero() &&
                  v15p == Scalar::u() - Scalar(1);
        out.push_back(expect(
            "catalog-g15-prime-value", ok,
            "got g15'=" + to_str(v15p) + ", g15=" + to_str(v15),
            "computed g15'(0,1,0,0,1) = u-1, nonzero as required; the source text "
            "states the value 1, a suspected typo (nonzeroness is what the argument uses)"));
    }

    return out;
}

}  // namespace v22
