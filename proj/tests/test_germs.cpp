#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace v22;

namespace {
const std::map<std::string, Scalar>& base_center() {
    static const std::map<std::string, Scalar> c{
        {"y", Scalar(1)}, {"z", Scalar(1)}, {"t", Scalar(1)}};
    return c;
}
Scalar u_sq() { return Scalar::u() * Scalar::u(); }
}  // namespace

TEST_CASE("chart equations reproduce the displayed normal forms") {
    Catalog cat;
    Vars yzt = {"y", "z", "t"};

    ChartEq n15 = chart_eq(cat, cat.poly("h15"), "x", "w", u_sq());
    REQUIRE(n15.local == parse_poly("u^2*t^3-t^2*y^2*z+2*(1-u)*t*y*z^3-(u-1)^2*z^5", yzt));
    REQUIRE(chart_roundtrip_ok(cat, cat.poly("h15"), n15));

    // the quartic surface restricts to t*y - z^2 with the right multiplier
    Scalar ms = Scalar::u() / (Scalar(1) - Scalar::u());
    ChartEq s_eq = chart_eq(cat, cat.poly("f"), "x", "w", ms);
    REQUIRE(s_eq.local == parse_poly("t*y-z^2", yzt));
    REQUIRE(chart_roundtrip_ok(cat, cat.poly("f"), s_eq));

    // quintic through the quartic curve, chart w=1
    Scalar m51(RatFunc(UPoly(std::vector<Rat>{Rat(0), Rat(0), Rat(1)}),
                       UPoly(std::vector<Rat>{Rat(-1), Rat(1)})));
    ChartEq c4 = chart_eq(cat, cat.poly("g15p"), "w", "x", m51);
    MPoly want = parse_poly(
        "-u*(u-2)*t*y*z^3+u^2*y^3+(u-1)^2*t^3*z^4-u*(u+2)*t^2*y^2*z+2*(u-1)*t^4*y*z^2+t^5*y^2",
        yzt);
    REQUIRE(c4.local == want);
    REQUIRE(chart_roundtrip_ok(cat, cat.poly("g15p"), c4));

    // a multiplier that fails to clear the denominators is rejected
    REQUIRE_THROWS_AS(chart_eq(cat, cat.poly("h15"), "x", "w", Scalar(1)), DomainError);
    // the automatic clearing variant agrees up to the monic lcm
    ChartEq n15b = chart_eq_cleared(cat, cat.poly("h15"), "x", "w");
    REQUIRE(n15b.local == n15.local);
}

TEST_CASE("taylor expansion at a point") {
    Catalog cat;
    ChartEq n15 = chart_eq(cat, cat.poly("h15"), "x", "w", u_sq());
    Germ g = expand_at(n15.local, base_center());
    Vars yzt = {"y", "z", "t"};
    MPoly lin = parse_poly("2*y+(5*u-4)*z+(2-3*u)*t", yzt) * (-Scalar::u());
    REQUIRE(g.jet(1) == lin);
    // jets sum back to the shifted polynomial
    MPoly sum(g.vars);
    for (unsigned long k = 0; k <= 5; ++k) sum = sum + g.jet(k);
    REQUIRE(sum == g.shifted);

    ChartEq n3 = chart_eq(cat, cat.poly("h3"), "x", "w", Scalar(1));
    Germ g3 = expand_at(n3.local, base_center());
    REQUIRE(projectively_equal(linear_jet_coeffs(g3), {Scalar(3), Scalar(-1), Scalar(0)}));

    Scalar ms = Scalar::u() / (Scalar(1) - Scalar::u());
    ChartEq s_eq = chart_eq(cat, cat.poly("f"), "x", "w", ms);
    Germ gs = expand_at(s_eq.local, base_center());
    REQUIRE(projectively_equal(linear_jet_coeffs(gs), {Scalar(1), Scalar(-2), Scalar(1)}));

    std::map<std::string, Scalar> off{{"y", Scalar(2)}, {"z", Scalar(1)}, {"t", Scalar(1)}};
    REQUIRE_THROWS_AS(expand_at(n15.local, off), DomainError);
}

TEST_CASE("proportional linear parts") {
    Catalog cat;
    ChartEq n3 = chart_eq(cat, cat.poly("h3"), "x", "w", Scalar(1));
    ChartEq n15 = chart_eq(cat, cat.poly("h15"), "x", "w", u_sq());
    Germ g3 = expand_at(n3.local, base_center());
    Germ g15 = expand_at(n15.local, base_center());
    auto p = linear_parts_proportional(g3, g15);
    REQUIRE(p.kind == PropKind::OnLocus);
    REQUIRE(admissible_locus(p.locus) == UPoly(std::vector<Rat>{ratq(-2, 3), Rat(1)}));

    ChartEq n5 = chart_eq(cat, cat.poly("h5"), "x", "w", Scalar(1));
    ChartEq n13 = chart_eq(cat, cat.poly("h13"), "x", "w", u_sq());
    auto p2 = linear_parts_proportional(expand_at(n5.local, base_center()),
                                        expand_at(n13.local, base_center()));
    REQUIRE(p2.kind == PropKind::OnLocus);
    REQUIRE(admissible_locus(p2.locus) == UPoly(std::vector<Rat>{Rat(-2), Rat(1)}));

    ChartEq n8 = chart_eq(cat, cat.poly("h8"), "x", "w", Scalar::u());
    ChartEq n10 = chart_eq(cat, cat.poly("h10"), "x", "w", Scalar::u());
    auto p3 = linear_parts_proportional(expand_at(n8.local, base_center()),
                                        expand_at(n10.local, base_center()));
    bool never = p3.kind == PropKind::Never ||
                 (p3.kind == PropKind::OnLocus && admissible_locus(p3.locus).degree() == 0);
    REQUIRE(never);

    Scalar ms = Scalar::u() / (Scalar(1) - Scalar::u());
    ChartEq s_eq = chart_eq(cat, cat.poly("f"), "x", "w", ms);
    auto p4 = linear_parts_proportional(expand_at(n3.local, base_center()),
                                        expand_at(s_eq.local, base_center()));
    REQUIRE(p4.kind == PropKind::Never);
}

TEST_CASE("jacobian dependence along the base curve") {
    Catalog cat;
    const auto& gamma = cat.curve("Gamma").param;
    REQUIRE(gradient_dependent_on_curve(cat, cat.poly("g10"), gamma));
    REQUIRE(gradient_dependent_on_curve(cat, cat.poly("g15p"), gamma));
    REQUIRE_FALSE(gradient_dependent_on_curve(cat, cat.poly("f"), gamma));
    REQUIRE_THROWS_AS(gradient_dependent_on_curve(cat, cat.poly("Hx"), gamma), DomainError);
}

TEST_CASE("multiplicity certificates along the base curve") {
    Catalog cat;
    const auto& gamma = cat.curve("Gamma").param;
    auto c9 = mult_along_curve(cat, cat.poly("g9"), gamma);
    REQUIRE(c9.exactly_two());
    auto cf = mult_along_curve(cat, cat.poly("f"), gamma);
    REQUIRE_FALSE(cf.at_least_two);

    // the special pencil member keeps multiplicity exactly 2
    UPoly num(std::vector<Rat>{Rat(16), Rat(-16), Rat(-3)});
    UPoly den(std::vector<Rat>{Rat(4), Rat(-8), Rat(4)});
    Scalar mu_star{RatFunc(num, den)};
    MPoly special = cat.poly("g15p") + cat.poly("g15") * mu_star;
    auto cm = mult_along_curve(cat, special, gamma);
    REQUIRE(cm.exactly_two());
}

TEST_CASE("quadratic form analysis") {
    Vars yzt = {"y", "z", "t"};

    MPoly full = parse_poly("y^2+z^2+t^2", yzt);
    REQUIRE(quad_form_analyze(full, {"y", "z", "t"}).rank == 3);

    MPoly rank1 = parse_poly("(2*y-3*z+t)^2", yzt) * Scalar(ratq(5, 4));
    auto i1 = quad_form_analyze(rank1, {"y", "z", "t"});
    REQUIRE(i1.rank == 1);
    REQUIRE(i1.square.has_value());
    auto [c, L] = *i1.square;
    REQUIRE(L * L * c == rank1);

    MPoly rank2 = parse_poly("(t-5*y)*(y+3*z-2*t)", yzt);
    auto i2 = quad_form_analyze(rank2, {"y", "z", "t"});
    REQUIRE(i2.rank == 2);
    REQUIRE(i2.two_forms.has_value());
    REQUIRE(i2.two_forms->first * i2.two_forms->second == rank2);

    // a rank-2 form needing a radical: y^2 - u z^2
    MPoly rad = parse_poly("y^2-u*z^2", yzt);
    auto i3 = quad_form_analyze(rad, {"y", "z", "t"});
    REQUIRE(i3.rank == 2);
    REQUIRE(i3.two_forms->first * i3.two_forms->second == rad);

    REQUIRE(quad_form_analyze(MPoly(yzt), {"y", "z", "t"}).rank == 0);
}

TEST_CASE("plane germ classification") {
    Vars ty = {"t", "y"};
    auto germ_of = [&](const std::string& text) {
        MPoly p = parse_poly(text, ty);
        return expand_at(p, {{"t", Scalar(0)}, {"y", Scalar(0)}});
    };

    REQUIRE(classify_plane_germ(germ_of("t + y^2")).type == SingType::Smooth);
    REQUIRE(classify_plane_germ(germ_of("t*y + y^3")).type == SingType::A1);
    REQUIRE(classify_plane_germ(germ_of("t^2 + y^3")).type == SingType::A2);
    REQUIRE(classify_plane_germ(germ_of("t^2 - y^4 + t*y^3")).type == SingType::A3);
    REQUIRE(classify_plane_germ(germ_of("t^2 + 2*t*y + y^2 + y^3")).type == SingType::A2);
    REQUIRE(classify_plane_germ(germ_of("t^3 + 4*y^3")).type == SingType::D4);
    REQUIRE(classify_plane_germ(germ_of("t^3 + t^2*y")).type == SingType::Unclassified);
    REQUIRE(classify_plane_germ(germ_of("t^2 + 2*t*y + y^2 + y^4")).type == SingType::A3);
    REQUIRE(classify_plane_germ(germ_of("t^2 + 2*t*y + y^2 + y^5")).type == SingType::Unclassified);
    REQUIRE(classify_plane_germ(germ_of("t^2*y^2")).type == SingType::Unclassified);
    REQUIRE_THROWS_AS(classify_plane_germ(germ_of("0")), DomainError);

    // the tacnode normal form with a cross term: beta adjusts by e^2/4
    auto cross = classify_plane_germ(germ_of("t^2 + 2*t*y^2 + y^4 + y^5"));
    REQUIRE(cross.type == SingType::Unclassified);  // (t+y^2)^2 + y^5 has order-5 data
    auto cross2 = classify_plane_germ(germ_of("t^2 + 2*t*y^2 + 2*y^4"));
    REQUIRE(cross2.type == SingType::A3);
    REQUIRE(cross2.order4 == Scalar(1));
}

TEST_CASE("classification is invariant under unimodular coordinate changes") {
    Catalog cat;
    vt::Gen g(43);
    Vars ty = {"t", "y"};

    // witnesses: the three paper germs at specialized parameters
    std::vector<std::pair<MPoly, SingType>> witnesses;
    {
        Scalar m51(RatFunc(UPoly(std::vector<Rat>{Rat(0), Rat(0), Rat(1)}),
                           UPoly(std::vector<Rat>{Rat(-1), Rat(1)})));
        ChartEq c4 = chart_eq(cat, cat.poly("g15p"), "w", "x", m51);
        MPoly slice = substitute(c4.local, {{"z", MPoly::constant(Vars{}, Scalar(1))}});
        witnesses.push_back({slice.specialize_u(Rat(5)), SingType::A1});
        witnesses.push_back({slice.specialize_u(Rat(2)), SingType::D4});

        Scalar m52(RatFunc(UPoly::one(), UPoly(std::vector<Rat>{Rat(-1), Rat(1)})));
        ChartEq c6 = chart_eq(cat, cat.poly("g15pp"), "t", "y", m52);
        MPoly slice2 = substitute(c6.local, {{"z", MPoly::constant(Vars{}, Scalar(1))}});
        witnesses.push_back({slice2.specialize_u(ratq(3, 4)), SingType::A3});
    }

    int cases = 0;
    for (const auto& [poly, want] : witnesses) {
        Vars vs = poly.vars;
        REQUIRE(vs.size() == 2);
        std::map<std::string, Scalar> origin{{vs[0], Scalar(0)}, {vs[1], Scalar(0)}};
        REQUIRE(classify_plane_germ(expand_at(poly, origin)).type == want);
        for (int i = 0; i < 40; ++i) {
            // random unimodular matrix from elementary shears and swaps
            long a = 1, b = 0, c = 0, d = 1;
            for (int k = 0; k < 4; ++k) {
                long s = g.intval(-3, 3);
                if (g.intval(0, 1)) {
                    a += s * c;
                    b += s * d;
                } else {
                    c += s * a;
                    d += s * b;
                }
                if (g.intval(0, 3) == 0) {
                    std::swap(a, c);
                    std::swap(b, d);
                }
            }
            MPoly nx = MPoly::variable(vs, vs[0]) * Scalar(Rat(a)) +
                       MPoly::variable(vs, vs[1]) * Scalar(Rat(b));
            MPoly ny = MPoly::variable(vs, vs[0]) * Scalar(Rat(c)) +
                       MPoly::variable(vs, vs[1]) * Scalar(Rat(d));
            MPoly moved = substitute(poly, {{vs[0], nx}, {vs[1], ny}});
            if (moved.vars != vs) continue;  // degenerate shear combination
            Germ gm = expand_at(moved, origin);
            REQUIRE(classify_plane_germ(gm).type == want);
            ++cases;
        }
    }
    REQUIRE(cases >= 100);
}
