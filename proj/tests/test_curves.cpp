#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace v22;

namespace {
std::vector<MPoly> theta_param(const Catalog& cat) { return cat.curve("Theta").param; }
}  // namespace

TEST_CASE("restriction of the linear systems") {
    Catalog cat;

    SECTION("zeta restricted to the fixed conic gives fourteen binary forms") {
        RestrictedSystem rs = restrict_system(cat, System::Zeta, theta_param(cat));
        REQUIRE(rs.images.size() == 14);
        for (const auto& p : rs.images) {
            REQUIRE_FALSE(p.is_zero());
            REQUIRE(p.is_homogeneous());
            REQUIRE(p.total_degree() == 10);
        }
        // involution symmetry p_i = p_{30-i}
        auto perm = cat.zeta_involution_slots();
        for (size_t i = 0; i < 14; ++i) REQUIRE(rs.images[i] == rs.images[perm[i]]);
        // spot identity from the table
        REQUIRE((rs.images[3] - rs.images[10]).is_zero());  // p12 = p18
    }

    SECTION("gamma restricted to the orbit of (1:1:-1:1:1)") {
        WeightedPoint img = system_image(cat, System::Gamma, cat.curve("Theta").generator);
        std::vector<Scalar> want = {1, 1, 0, 0, 1, 0, 1, 0, 0, 1, 1};
        REQUIRE(projectively_equal(img.coords, want));
        REQUIRE(orbit_info(img).degree == 12);
    }

    SECTION("zeta restricted to the base sextic vanishes") {
        RestrictedSystem rs = restrict_system(cat, System::Zeta, cat.curve("Gamma").param);
        REQUIRE(rs.zero_slots().size() == 14);
        REQUIRE_THROWS_AS(system_image(cat, System::Zeta, cat.curve("Gamma").generator),
                          AllCoordinatesZero);
    }

    SECTION("zeta restricted to the quartic-curve conic") {
        RestrictedSystem rs = restrict_system(cat, System::Zeta, cat.curve("Delta").param);
        REQUIRE(rs.zero_slots() == std::vector<size_t>{1, 2, 4, 5, 7, 8, 9, 11, 12});
    }
}

TEST_CASE("factor table") {
    Catalog cat;
    for (const auto& r : verify_factor_table(cat)) {
        INFO(r.id << ": " << r.witness);
        REQUIRE(r.status == Status::PASS);
    }
    // and at a benign rational parameter
    for (const auto& r : verify_factor_table(cat, Rat(5))) {
        INFO(r.id << " at u=5: " << r.witness);
        REQUIRE(r.status == Status::PASS);
    }
    // the exceptional specialization u=2 flips exactly the q1/q6 pair
    for (const auto& r : verify_factor_table(cat, Rat(2))) {
        INFO(r.id << " at u=2: " << r.witness);
        REQUIRE(r.status == Status::PASS);
    }
}

TEST_CASE("image degrees of the named curves") {
    Catalog cat;
    REQUIRE(image_degree(cat, System::Zeta, cat.curve("Theta_pm").generator).degree == 12);
    auto ups = image_degree(cat, System::Zeta, cat.curve("Upsilon").generator);
    REQUIRE(ups.degree == 6);
    REQUIRE(ups.is_rational_normal);
    auto del = image_degree(cat, System::Zeta, cat.curve("Delta").generator);
    REQUIRE(del.degree == 4);
    REQUIRE(del.is_rational_normal);
    REQUIRE(image_degree(cat, System::Zeta, cat.psi_generator(+1)).degree == 10);
    REQUIRE(image_degree(cat, System::Zeta, cat.psi_generator(-1)).degree == 10);

    // generic members of the conic family map to degree-12 curves
    vt::Gen g(41);
    int sampled = 0;
    while (sampled < 25) {
        Rat a = g.rat(6), b = g.rat(6);
        if (is_zero(a) || is_zero(b) || a == b) continue;
        WeightedPoint pt = cat.theta_point(Scalar(a), Scalar(b));
        // skip members inside the quartic surface
        if (cat.poly("f").eval(pt.coords).is_zero()) continue;
        auto oi = image_degree(cat, System::Zeta, pt);
        Scalar q0 = cat.poly("q0").eval({Scalar(a), Scalar(b)});
        if (q0.is_zero())
            REQUIRE(oi.degree == 10);
        else
            REQUIRE(oi.degree == 12);
        ++sampled;
    }
}

TEST_CASE("family limits") {
    Catalog cat;
    WeightedPoint lim = family_limit(cat, cat.lambda_family());
    REQUIRE(projectively_equal(lim.coords, cat.ell2().coords));

    // a family off the quadric is rejected
    std::vector<MPoly> off;
    Vars lv = {"lambda"};
    for (const char* t : {"lambda", "lambda", "1", "1", "1"}) off.push_back(parse_poly(t, lv));
    REQUIRE_THROWS_AS(family_limit(cat, off), DomainError);

    // constant family at the base-curve generator: every slot vanishes
    std::vector<MPoly> base;
    for (const char* t : {"1", "1", "1", "1", "1"}) base.push_back(parse_poly(t, lv));
    REQUIRE_THROWS_AS(family_limit(cat, base), AllCoordinatesZero);

    // the involution-image family limits onto the other line
    std::vector<MPoly> rev(cat.lambda_family().rbegin(), cat.lambda_family().rend());
    WeightedPoint lim1 = family_limit(cat, rev);
    REQUIRE(projectively_equal(lim1.coords, cat.ell1().coords));
}

TEST_CASE("hyperplane membership of the two lines") {
    Catalog cat;
    for (size_t i = 0; i < 14; ++i) {
        bool in2 = hyperplane_membership(cat.ell2(), i);
        REQUIRE(in2 == (i != 12 && i != 13));
        bool in1 = hyperplane_membership(cat.ell1(), i);
        REQUIRE(in1 == (i != 0 && i != 1));
    }
    REQUIRE(hyperplane_membership(cat.curve("Theta_pm").generator, 2) == false);
    WeightedPoint img = system_image(cat, System::Zeta, cat.curve("Theta_pm").generator);
    REQUIRE(hyperplane_membership(img, 6));
    REQUIRE(hyperplane_membership(img, 7));
}

TEST_CASE("image of the quartic surface") {
    Catalog cat;
    for (const auto& r : s_image_conic(cat)) {
        INFO(r.id << ": " << r.witness);
        REQUIRE(r.status == Status::PASS);
    }
    // independent route to the conic relation: Z^2 = (u-1)^2 X Y on the chart
    Vars sv = {"s", "v"};
    std::vector<MPoly> chart;
    for (const char* t : {"s^2*v", "s*v^2", "s*v", "s", "v"}) chart.push_back(parse_poly(t, sv));
    RestrictedSystem rs = restrict_system(cat, System::Zeta, chart);
    const MPoly &X = rs.images[1], &Y = rs.images[12], &Z = rs.images[7];
    Scalar c = (Scalar::u() - Scalar(1)) * (Scalar::u() - Scalar(1));
    REQUIRE((Z * Z - X * Y * c).is_zero());
}
