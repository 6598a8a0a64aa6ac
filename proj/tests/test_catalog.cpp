#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace v22;

TEST_CASE("catalog self-checks pass") {
    Catalog cat;
    for (const auto& r : cat.verify_catalog()) {
        INFO(r.id << ": " << r.witness);
        REQUIRE(r.status == Status::PASS);
    }
}

TEST_CASE("catalog lookup") {
    Catalog cat;
    REQUIRE(cat.poly("h3") == parse_poly("y^3-x^2*z", ambient_vars()));
    REQUIRE(cat.poly("q6") == parse_poly("(u-1)*a^2-(2*u-4)*a*b+(u-4)*b^2", binary_vars()));
    REQUIRE(cat.poly("N15") == cat.poly("h15"));
    REQUIRE_THROWS_AS(cat.poly("nonsense"), DomainError);
    REQUIRE_THROWS_AS(cat.curve("nonsense"), DomainError);

    const NamedCurve& gamma = cat.curve("Gamma");
    REQUIRE(gamma.param[0] == parse_poly("s0^6", gamma.param_vars));
    REQUIRE(gamma.param[4] == parse_poly("s1^6", gamma.param_vars));
}

TEST_CASE("zeta weights match the declared action") {
    Catalog cat;
    WeightVector zw = cat.zeta_weights();
    REQUIRE(zw == WeightVector{9, 10, 11, 12, 13, 14, 15, 15, 16, 17, 18, 19, 20, 21});
    for (const auto& s : cat.zeta()) {
        auto w = weight_of(s.poly, ambient_weights());
        REQUIRE(w.ok());
        REQUIRE(*w.weight == s.weight);
    }
    REQUIRE(cat.gamma_weights() == WeightVector{3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15});
}

TEST_CASE("product quintics") {
    Catalog cat;
    const MPoly& f = cat.poly("f");
    for (long i : {3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15})
        REQUIRE(cat.poly("g" + std::to_string(i + 6)) == f * cat.poly("h" + std::to_string(i)));
}

TEST_CASE("degree-10 curve generators") {
    Catalog cat;

    SECTION("coincidence point at u = -1/3") {
        auto p = cat.psi_generator(+1, Rat(-1, 3));
        auto q = cat.psi_generator(-1, Rat(-1, 3));
        std::vector<Scalar> want = {1, 1, 1, 4, -8};
        REQUIRE(projectively_equal(p.coords, want));
        REQUIRE(projectively_equal(q.coords, want));
    }

    SECTION("generic coordinates") {
        auto p = cat.psi_generator(+1);
        // t-coordinate is (u-1)(theta-u-1)/(2u^2)
        Scalar theta = Scalar::sqrt_of(RatFunc(
            UPoly(std::vector<Rat>{Rat(1), Rat(3)}) * UPoly(std::vector<Rat>{Rat(1), Rat(-1)})));
        Scalar u = Scalar::u();
        Scalar want_t = (u - Scalar(1)) * (theta - u - Scalar(1)) / (Scalar(2) * u * u);
        REQUIRE(p.coords[3] == want_t);
        REQUIRE(cat.poly("Qu").eval(p.coords).is_zero());
    }

    SECTION("branch convention at u = 2/3") {
        auto q = cat.psi_generator(-1, Rat(2, 3));
        // x*w = y*t there: the point lies on the quartic surface
        REQUIRE((q.coords[0] * q.coords[4] - q.coords[1] * q.coords[3]).is_zero());
        auto p = cat.psi_generator(+1, Rat(2, 3));
        REQUIRE_FALSE((p.coords[0] * p.coords[4] - p.coords[1] * p.coords[3]).is_zero());
    }

    SECTION("excluded parameters") {
        REQUIRE_THROWS_AS(cat.psi_generator(+1, Rat(0)), DomainError);
        REQUIRE_THROWS_AS(cat.psi_generator(-1, Rat(1)), DomainError);
        REQUIRE_THROWS_AS(cat.psi_generator(2, std::nullopt), DomainError);
    }
}

TEST_CASE("line generators in the image coordinates") {
    Catalog cat;
    const auto& l2 = cat.ell2();
    REQUIRE(l2.support() == std::vector<size_t>{12, 13});
    REQUIRE(l2.coords[13] == Scalar(1) - Scalar::u());
    const auto& l1 = cat.ell1();
    REQUIRE(l1.support() == std::vector<size_t>{0, 1});
    auto perm = cat.zeta_involution_slots();
    for (size_t i = 0; i < 14; ++i) REQUIRE(l1.coords[perm[i]] == l2.coords[i]);
}
