#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace v22;

TEST_CASE("rational helpers") {
    REQUIRE(ratq(6, -4) == ratq(-3, 2));
    REQUIRE(rat_pow(ratq(-2, 3), 3) == ratq(-8, 27));
    REQUIRE(rat_sqrt(ratq(9, 4)).value() == ratq(3, 2));
    REQUIRE_FALSE(rat_sqrt(ratq(-9, 4)).has_value());
    REQUIRE_FALSE(rat_sqrt(ratq(2)).has_value());
    REQUIRE(rat_from_string("-7/21") == ratq(-1, 3));
}

TEST_CASE("univariate arithmetic") {
    UPoly a(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});  // u^2-1
    UPoly b(std::vector<Rat>{Rat(1), Rat(1)});           // u+1
    auto [q, r] = divmod(a, b);
    REQUIRE(r.is_zero());
    REQUIRE(q == UPoly(std::vector<Rat>{Rat(-1), Rat(1)}));
    REQUIRE(gcd(a, b) == monic(b));

    REQUIRE(upoly_sqrt(a * a).value() == a);
    REQUIRE_FALSE(upoly_sqrt(a * b).has_value());

    UPoly c(std::vector<Rat>{ratq(1, 2), Rat(0), ratq(3, 4)});
    REQUIRE(primitive(c) == UPoly(std::vector<Rat>{Rat(2), Rat(0), Rat(3)}));
}

TEST_CASE("rational functions reduce to canonical form") {
    // -(3u^2+16u-16)/(4(u-1)^2), built two different ways
    UPoly num(std::vector<Rat>{Rat(16), Rat(-16), Rat(-3)});
    UPoly den(std::vector<Rat>{Rat(4), Rat(-8), Rat(4)});
    RatFunc mu(num, den);
    RatFunc mu2(num * UPoly(std::vector<Rat>{Rat(5)}), den * UPoly(std::vector<Rat>{Rat(5)}));
    REQUIRE(mu == mu2);
    REQUIRE(mu.den.lead() == Rat(1));
    REQUIRE(gcd(mu.num, mu.den).degree() == 0);
    REQUIRE(mu.eval(Rat(-2)) == Rat(1));  // value used at u = -2

    vt::Gen g(7);
    for (int i = 0; i < 200; ++i) {
        RatFunc x = g.ratfunc(), y = g.ratfunc();
        if (y.is_zero()) continue;
        REQUIRE((x / y) * y == x);
        REQUIRE(x - x == RatFunc());
    }
}

TEST_CASE("quadratic extension arithmetic") {
    vt::Gen g(11);
    for (int i = 0; i < 100; ++i) {
        RatFunc p = g.ratfunc(1), q = g.ratfunc(1), d = g.ratfunc(1);
        QuadExt x(p, q, d), conj(p, -q, d);
        QuadExt prod = x * conj;
        REQUIRE(prod.b.is_zero());
        REQUIRE(prod.a == p * p - q * q * d);
    }
    QuadExt tu = QuadExt::root_of(RatFunc::u());
    QuadExt other = QuadExt::root_of(RatFunc(Rat(5)));
    REQUIRE_THROWS_AS(tu + other, DomainError);
    // sqrt(0) collapses
    QuadExt z(RatFunc(Rat(3)), RatFunc(Rat(7)), RatFunc());
    REQUIRE(z.is_base());
    // division by a nonzero element
    QuadExt inv = QuadExt(RatFunc(Rat(1)), RatFunc(), RatFunc::u()) / tu;
    REQUIRE(inv * tu == QuadExt(RatFunc(Rat(1)), RatFunc(), RatFunc::u()));
}

TEST_CASE("scalar tower promotion and specialization") {
    Scalar s = Scalar::u() + Scalar(1) - Scalar::u();
    REQUIRE(s.is_rat());
    REQUIRE(s == Scalar(1));
    Scalar q = Scalar::sqrt_of(RatFunc::u()) * Scalar::sqrt_of(RatFunc::u());
    REQUIRE(q == Scalar::u());

    Scalar f = Scalar(1) / (Scalar::u() - Scalar(1));
    REQUIRE_THROWS_AS(f.specialize_u(Rat(1)), SpecializeError);
    REQUIRE(f.specialize_u(Rat(3)) == Scalar(ratq(1, 2)));
}

TEST_CASE("ring axioms and substitution homomorphism") {
    vt::Gen g(13);
    Vars vars = {"x", "y", "z"};
    Vars tv = {"s", "r"};
    int cases = 0;
    for (int i = 0; i < 600; ++i) {
        MPoly p = g.mpoly(vars, 3, 2, true), q = g.mpoly(vars, 3, 2, true),
              r = g.mpoly(vars, 3, 2, true);
        REQUIRE((p + q) * r == p * r + q * r);
        REQUIRE(p * q == q * p);
        REQUIRE((p - p).is_zero());
        ++cases;
    }
    for (int i = 0; i < 600; ++i) {
        MPoly p = g.mpoly(vars, 3, 2), q = g.mpoly(vars, 3, 2);
        std::map<std::string, MPoly> bind{{"x", g.mpoly(tv, 2, 2)},
                                          {"y", g.mpoly(tv, 2, 2)},
                                          {"z", g.mpoly(tv, 2, 2)}};
        REQUIRE(substitute(p * q, bind) == substitute(p, bind) * substitute(q, bind));
        REQUIRE(substitute(p + q, bind) == substitute(p, bind) + substitute(q, bind));
        ++cases;
    }
    REQUIRE(cases >= 1000);
}

TEST_CASE("parse and print") {
    Vars p4 = ambient_vars();
    MPoly f = parse_poly("x*w - y*t", p4);
    REQUIRE(f.terms.size() == 2);
    REQUIRE(parse_poly("0", p4).is_zero());
    MPoly q1 = parse_poly("(u-1)*a^2 - u*b^2", binary_vars());
    REQUIRE(q1.terms.size() == 2);

    REQUIRE_THROWS_AS(parse_poly("x + ", p4), ParseError);
    REQUIRE_THROWS_AS(parse_poly("x * foo", p4), ParseError);
    REQUIRE_THROWS_AS(parse_poly("x^y", p4), ParseError);
    REQUIRE_THROWS_AS(parse_poly("x/y", p4), ParseError);
    REQUIRE_THROWS_AS(parse_poly("u", Vars{"u"}), ParseError);
    try {
        parse_poly("x*w - y*%", p4);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.pos == 9);
    }

    vt::Gen g(17);
    for (int i = 0; i < 200; ++i) {
        MPoly p = g.mpoly(binary_vars(), 4, 4, true);
        REQUIRE(parse_poly(print_poly(p), binary_vars()) == p);
    }
}

TEST_CASE("partial derivatives") {
    Catalog cat;
    const Vars& p4 = ambient_vars();
    REQUIRE(partial(cat.poly("f"), "x") == parse_poly("w", p4));
    REQUIRE(partial(cat.poly("Qu"), "z") == parse_poly("2*(1-u)*z", p4));

    // gradient of the displayed weight-10 quintic at (1,...,1) is proportional
    // to the gradient of the quadric there
    std::vector<Scalar> ones(5, Scalar(1));
    std::vector<Scalar> gq, gg;
    for (const auto& v : p4) {
        gq.push_back(partial(cat.poly("Qu"), v).eval(ones));
        gg.push_back(partial(cat.poly("g10"), v).eval(ones));
    }
    REQUIRE(projectively_equal(gq, gg));
}

TEST_CASE("exact division") {
    Catalog cat;
    const NamedCurve& th = cat.curve("Theta");
    std::map<std::string, MPoly> bind;
    for (size_t i = 0; i < 5; ++i) bind[ambient_vars()[i]] = th.param[i];
    MPoly p9 = substitute(cat.poly("g9"), bind);
    MPoly mono = parse_poly("a^2*b*(a-b)", binary_vars());
    MPoly quotient = divide_exact(p9, mono);
    MPoly want = parse_poly("-8*(u-1)*((u-1)*a-u*b)^2", binary_vars()) * cat.poly("q0");
    REQUIRE(quotient == want);

    MPoly one = MPoly::constant(binary_vars(), Scalar(1));
    REQUIRE(divide_exact(p9, one) == p9);
    REQUIRE_THROWS_AS(divide_exact(cat.poly("q0"), cat.poly("q6")), NotDivisibleError);

    vt::Gen g(19);
    for (int i = 0; i < 200; ++i) {
        MPoly p = g.mpoly(binary_vars(), 3, 3, true);
        MPoly q = g.nonzero_mpoly(binary_vars(), 3, 3, true);
        REQUIRE(divide_exact(p * q, q) == p);
    }
}

TEST_CASE("resultants") {
    Catalog cat;
    std::map<std::string, MPoly> b1{{"b", MPoly::constant(Vars{}, Scalar(1))}};
    auto deh = [&](const std::string& n) { return substitute(cat.poly(n), b1); };

    UPoly r16 = resultant(deh("q1"), deh("q6"), "a");
    REQUIRE(locus_equals(r16, UPoly(std::vector<Rat>{Rat(-2), Rat(1)})));
    UPoly r35 = resultant(deh("q3"), deh("q5"), "a");
    REQUIRE(locus_equals(r35, UPoly(std::vector<Rat>{Rat(1), Rat(1)})));
    UPoly r23 = resultant(deh("q2"), deh("q3"), "a");
    REQUIRE(locus_equals(r23, UPoly(std::vector<Rat>{Rat(-1), Rat(1), Rat(1)})));
    UPoly r06 = resultant(deh("q0"), deh("q6"), "a");
    REQUIRE(locus_equals(r06, UPoly(std::vector<Rat>{Rat(2), Rat(-2), Rat(1)})));

    REQUIRE_THROWS_AS(resultant(MPoly(binary_vars()), deh("q1"), "a"), DomainError);

    // agreement with the brute-force Sylvester determinant on every pair
    for (int i = 0; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            MPoly a = deh("q" + std::to_string(i)), b = deh("q" + std::to_string(j));
            REQUIRE(resultant_in(a, b, "a") == vt::sylvester_brute(a, b, "a"));
        }

    // zero resultant iff nonconstant gcd, on random univariate inputs
    vt::Gen g(23);
    Vars av = {"a"};
    int checked = 0;
    while (checked < 80) {
        MPoly p = g.nonzero_mpoly(av, 3, 4, true), q = g.nonzero_mpoly(av, 3, 4, true);
        if (p.is_constant() && q.is_constant()) continue;
        UniS gg = unis_gcd(unis_from(p, "a"), unis_from(q, "a"));
        MPoly res = resultant_in(p, q, "a");
        bool res_zero = res.is_zero();
        bool gcd_nonconst = unis_degree(gg) > 0;
        REQUIRE(res_zero == gcd_nonconst);
        ++checked;
        // force some common factors through the generator
        if (checked % 3 == 0) {
            MPoly c = g.nonzero_mpoly(av, 2, 2, true);
            if (!c.is_constant()) {
                MPoly pc = p * c, qc = q * c;
                REQUIRE(resultant_in(pc, qc, "a").is_zero());
            }
        }
    }
}

TEST_CASE("square-free factorization in the parameter") {
    UPoly target = UPoly(std::vector<Rat>{Rat(0), Rat(0), Rat(-3), Rat(4)});  // u^2(4u-3)
    auto f = factor_square_free_in_u(target);
    REQUIRE(f.factors.size() == 2);
    REQUIRE(f.factors[0].factor == UPoly(std::vector<Rat>{Rat(0), Rat(1)}));
    REQUIRE(f.factors[0].multiplicity == 2);
    REQUIRE(f.factors[1].factor == UPoly(std::vector<Rat>{Rat(-3), Rat(4)}));
    REQUIRE(f.factors[1].multiplicity == 1);
    REQUIRE(f.remainder == UPoly::one());

    // oracle: the value arises as the discriminant expansion
    UPoly disc = UPoly(std::vector<Rat>{Rat(-2), Rat(3)}).pow(2) +
                 UPoly(std::vector<Rat>{Rat(4)}) * UPoly(std::vector<Rat>{Rat(-1), Rat(1)}).pow(3);
    REQUIRE(disc == target);

    auto f2 = factor_square_free_in_u(UPoly(std::vector<Rat>{Rat(2), Rat(-2), Rat(1)}));
    REQUIRE(f2.factors.size() == 1);
    REQUIRE(f2.factors[0].factor == UPoly(std::vector<Rat>{Rat(2), Rat(-2), Rat(1)}));

    auto f3 = factor_square_free_in_u(UPoly(Rat(5)));
    REQUIRE(f3.factors.empty());
    REQUIRE(f3.remainder == UPoly::one());
    REQUIRE(f3.constant == Rat(5));

    vt::Gen g(29);
    for (int i = 0; i < 50; ++i) {
        UPoly p = g.nonzero_upoly(4, 4);
        auto fac = factor_square_free_in_u(p);
        UPoly prod = fac.remainder * fac.constant;
        for (const auto& [base, mult] : fac.factors)
            for (int k = 0; k < mult; ++k) prod = prod * base;
        REQUIRE(prod == p);
    }
}
