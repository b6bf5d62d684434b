#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qv/series.hpp"

using namespace qv;

TEST_CASE("univariate arithmetic and printing") {
    UPoly a = UPoly(Rat(1)) + UPoly::monomial(2, Rat(2)) + UPoly::monomial(4, Rat(-1));
    CHECK(a.str() == "1 + 2*t^2 - t^4");
    CHECK(a.coeff(2) == Rat(2));
    CHECK(a.coeff(3) == Rat(0));
    CHECK(a.degree() == 4);
    CHECK((a - a).is_zero());
    CHECK(a.eval(Rat(1)) == Rat(2));

    UPoly b = UPoly::monomial(1) + UPoly(Rat(1));
    CHECK((b * b).str() == "1 + 2*t + t^2");
    CHECK(b.truncate(0) == UPoly(Rat(1)));
}

TEST_CASE("rational functions compare by cross-multiplication") {
    RatSeries lhs = parse_series("(1-t^4)/(1-t^2)");
    RatSeries rhs = parse_series("1+t^2");
    CHECK(lhs == rhs);
    CHECK(lhs + rhs == parse_series("2*(1+t^2)"));
    CHECK(parse_series("1/(1-t)") * parse_series("1-t") == parse_series("1"));
    CHECK(parse_series("1/(1-t^2)") != parse_series("1/(1-t)"));
}

TEST_CASE("expansion of a geometric denominator") {
    RatSeries s = parse_series("1/((1-t^2)*(1-t^4))");
    UPoly p = s.expand(8);
    CHECK(p.coeff(0) == Rat(1));
    CHECK(p.coeff(2) == Rat(1));
    CHECK(p.coeff(4) == Rat(2));
    CHECK(p.coeff(6) == Rat(2));
    CHECK(p.coeff(8) == Rat(3));
    CHECK(p.coeff(1) == Rat(0));
}

TEST_CASE("polynomial detection via exact division") {
    UPoly out;
    CHECK(parse_series("(1-t^30)/(1-t^2)").as_polynomial(out));
    CHECK(out.degree() == 28);
    CHECK(out.coeff(28) == Rat(1));
    CHECK(out.coeff(27) == Rat(0));
    CHECK_FALSE(parse_series("1/(1-t^2)").as_polynomial(out));
    // numerator and denominator both divisible by t
    CHECK(parse_series("(t^2+t^4)/t^2").as_polynomial(out));
    CHECK(out == parse_series("1+t^2").num());
}

TEST_CASE("halving even exponents") {
    UPoly p = parse_series("1 + 2*t^2 + 3*t^4").num();
    CHECK(halve_exponents(p) == parse_series("1 + 2*t + 3*t^2").num());
    CHECK_THROWS_AS(halve_exponents(parse_series("1 + t^3").num()), error);
    RatSeries s = parse_series("(1+t^4)/(1-t^2)");
    CHECK(halve_exponents(s) == parse_series("(1+t^2)/(1-t)"));
}

TEST_CASE("symmetric square of a Poincare polynomial") {
    UPoly p = parse_series("1 + t + t^2").num();
    CHECK(sym2_series(p) == parse_series("1 + t + 2*t^2 + t^3 + t^4").num());
    UPoly q = parse_series("1 + t^2 + t^4").num();
    CHECK(sym2_series(q) == parse_series("1 + t^2 + 2*t^4 + t^6 + t^8").num());
}

TEST_CASE("intersection-pairing shift keeps the top half in place") {
    UPoly p = parse_series("1 + t^2 + t^4").num();
    CHECK(ip_prime(p, 2) == parse_series("t^2 + t^4").num());
    UPoly z2 = parse_series("1 + t^2 + 2*t^4 + t^6 + t^8").num();
    CHECK(ip_prime(z2, 4) == parse_series("t^2 + t^4 + t^6 + t^8").num());
}

TEST_CASE("blowup of a point in the plane") {
    RatSeries base = parse_series("1 + t^2 + t^4");
    RatSeries center = parse_series("1");
    RatSeries got = blowup_series(base, center, 2, {});
    CHECK(got == parse_series("1 + 2*t^2 + t^4"));
    // removing a stratum afterwards subtracts its series
    RatSeries with_stratum = blowup_series(base, center, 2, {parse_series("t^2")});
    CHECK(with_stratum == parse_series("1 + t^2 + t^4"));
}

TEST_CASE("power substitution") {
    UPoly p = parse_series("1 + t + t^3").num();
    CHECK(substitute_power(p, 2) == parse_series("1 + t^2 + t^6").num());
}
