#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace v22;

TEST_CASE("weights of semi-invariants") {
    Catalog cat;
    const WeightVector& act = ambient_weights();
    auto w7 = weight_of(cat.poly("h7"), act);
    REQUIRE(w7.ok());
    REQUIRE(*w7.weight == 7);
    auto w0 = weight_of(MPoly::constant(ambient_vars(), Scalar(1)), act);
    REQUIRE(*w0.weight == 0);

    MPoly xy = parse_poly("x+y", ambient_vars());
    auto bad = weight_of(xy, act);
    REQUIRE_FALSE(bad.ok());
    REQUIRE(((bad.weight_a == 0 && bad.weight_b == 1) || (bad.weight_a == 1 && bad.weight_b == 0)));
    REQUIRE_THROWS_AS(weight_of(MPoly(ambient_vars()), act), DomainError);

    // multiplicativity on semi-invariant products
    for (const char* a : {"h3", "h5", "g10"})
        for (const char* b : {"h15", "f", "Qu"}) {
            auto wa = weight_of(cat.poly(a), act), wb = weight_of(cat.poly(b), act);
            auto wab = weight_of(cat.poly(a) * cat.poly(b), act);
            REQUIRE(*wab.weight == *wa.weight + *wb.weight);
        }
}

TEST_CASE("involution properties") {
    Catalog cat;
    vt::Gen g(31);
    for (int i = 0; i < 100; ++i) {
        MPoly p = g.mpoly(ambient_vars(), 4, 3, true);
        REQUIRE(apply_involution(apply_involution(p)) == p);
    }
    REQUIRE_THROWS_AS(apply_involution(parse_poly("a", binary_vars())), VarMismatchError);

    // weight complement: 18 on the cubic list, 30 on the quintic list
    const WeightVector& act = ambient_weights();
    for (const auto& s : cat.gamma()) {
        auto w = weight_of(apply_involution(s.poly), act);
        REQUIRE(*w.weight == 18 - s.weight);
    }
    for (const auto& s : cat.zeta()) {
        auto w = weight_of(apply_involution(s.poly), act);
        REQUIRE(*w.weight == 30 - s.weight);
    }
}

TEST_CASE("orbit info") {
    Catalog cat;
    auto oi = orbit_info(cat.curve("Gamma").generator);
    REQUIRE(oi.degree == 6);
    REQUIRE_FALSE(oi.is_rational_normal);
    REQUIRE_FALSE(oi.is_fixed_point);
    REQUIRE(oi.gcd_d == 1);

    // support on weights {9,12,15,18,21}: gcd 3, degree 4, rational normal
    std::vector<Scalar> c(14, Scalar(0));
    c[0] = Scalar(1);   // weight 9
    c[3] = Scalar(2);   // weight 12
    c[6] = Scalar(3);   // weight 15
    c[10] = Scalar(5);  // weight 18
    c[13] = Scalar(7);  // weight 21
    auto oi2 = orbit_info(WeightedPoint(c, cat.zeta_weights()));
    REQUIRE(oi2.gcd_d == 3);
    REQUIRE(oi2.degree == 4);
    REQUIRE(oi2.is_rational_normal);

    WeightedPoint single({Scalar(0), Scalar(1), Scalar(0), Scalar(0), Scalar(0)},
                         ambient_weights());
    auto oi3 = orbit_info(single);
    REQUIRE(oi3.is_fixed_point);
    REQUIRE(oi3.degree == 0);

    // two equal-weight slots only: a fixed point
    std::vector<Scalar> c15(14, Scalar(0));
    c15[6] = Scalar(1);
    c15[7] = Scalar(4);
    REQUIRE(orbit_info(WeightedPoint(c15, cat.zeta_weights())).is_fixed_point);

    // invariance under permutation, shift and scaling of the weights
    vt::Gen g(37);
    for (int i = 0; i < 100; ++i) {
        std::vector<Scalar> coords;
        WeightVector w;
        size_t n = static_cast<size_t>(g.intval(2, 6));
        bool nonzero = false;
        for (size_t k = 0; k < n; ++k) {
            Rat r = g.rat(3);
            nonzero = nonzero || !is_zero(r);
            coords.push_back(Scalar(r));
            w.push_back(g.intval(-5, 9));
        }
        if (!nonzero) continue;
        auto base = orbit_info(WeightedPoint(coords, w));
        WeightVector shifted = w, scaled = w;
        for (auto& x : shifted) x += 7;
        for (auto& x : scaled) x *= 3;
        REQUIRE(orbit_info(WeightedPoint(coords, shifted)).degree == base.degree);
        REQUIRE(orbit_info(WeightedPoint(coords, scaled)).degree == base.degree);
        std::vector<Scalar> pc = coords;
        WeightVector pw = w;
        std::swap(pc[0], pc[n - 1]);
        std::swap(pw[0], pw[n - 1]);
        REQUIRE(orbit_info(WeightedPoint(pc, pw)).degree == base.degree);
        REQUIRE(orbit_info(WeightedPoint(pc, pw)).is_rational_normal == base.is_rational_normal);
    }
}

TEST_CASE("orbit limits") {
    Catalog cat;
    auto [at0, atinf] = orbit_limits(cat.curve("Gamma").generator);
    REQUIRE(projectively_equal(at0.coords, {Scalar(1), 0, 0, 0, 0}));
    REQUIRE(projectively_equal(atinf.coords, {Scalar(0), 0, 0, 0, Scalar(1)}));

    WeightedPoint fixed({Scalar(0), Scalar(3), Scalar(0), Scalar(0), Scalar(0)},
                        ambient_weights());
    auto [f0, finf] = orbit_limits(fixed);
    REQUIRE(projectively_equal(f0.coords, fixed.coords));
    REQUIRE(projectively_equal(finf.coords, fixed.coords));

    auto [l0, linf] = orbit_limits(cat.ell2());
    std::vector<Scalar> e20(14, Scalar(0)), e21(14, Scalar(0));
    e20[12] = Scalar(1);
    e21[13] = Scalar(1);
    REQUIRE(projectively_equal(l0.coords, e20));
    REQUIRE(projectively_equal(linf.coords, e21));
}

TEST_CASE("torus-fixed coordinate points on hypersurfaces") {
    Catalog cat;
    REQUIRE(fixed_points_on(cat.poly("Qu"), ambient_weights()) ==
            std::vector<size_t>{0, 1, 3, 4});
    REQUIRE(fixed_points_on(cat.poly("Hx"), ambient_weights()) ==
            std::vector<size_t>{1, 2, 3, 4});
    WeightVector repeated = {0, 1, 1, 5, 6};
    REQUIRE_THROWS_AS(fixed_points_on(cat.poly("Qu"), repeated), DomainError);
}
