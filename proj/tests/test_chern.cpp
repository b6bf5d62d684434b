#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qv/chern.hpp"

#include <random>

using namespace qv;

namespace {

RootContext rank3_context() {
    VarTablePtr base = make_vars("c2:2 c3:3");
    return make_root_context(base, {"b1", "b2", "b3"},
                             {Poly(base), parse_poly(base, "c2"), parse_poly(base, "c3")});
}

} // namespace

TEST_CASE("total Chern class of the tautological bundle") {
    RootContext ctx = rank3_context();
    Roots v = tautological_roots(ctx);
    CHECK(total_chern(ctx, v) == parse_poly(ctx.base, "1 + c2 + c3"));
    // dual flips the sign of odd classes
    CHECK(total_chern(ctx, dual(v)) == parse_poly(ctx.base, "1 + c2 - c3"));
    std::vector<Poly> cs = chern_classes(ctx, dual(v));
    REQUIRE(cs.size() == 4);
    CHECK(cs[0] == Poly(ctx.base, Rat(1)));
    CHECK(cs[1].is_zero());
    CHECK(cs[2] == parse_poly(ctx.base, "c2"));
    CHECK(cs[3] == parse_poly(ctx.base, "-c3"));
}

TEST_CASE("power sums reduce via Newton's identities") {
    RootContext ctx = rank3_context();
    Poly b1 = Poly::var(ctx.ring, "b1");
    Poly b2 = Poly::var(ctx.ring, "b2");
    Poly b3 = Poly::var(ctx.ring, "b3");
    CHECK(reduce_symmetric(ctx, b1 + b2 + b3).is_zero());
    CHECK(reduce_symmetric(ctx, b1 * b1 + b2 * b2 + b3 * b3) == parse_poly(ctx.base, "-2*c2"));
    CHECK(reduce_symmetric(ctx, b1 * b1 * b1 + b2 * b2 * b2 + b3 * b3 * b3) ==
          parse_poly(ctx.base, "3*c3"));
    CHECK_THROWS_AS(reduce_symmetric(ctx, b1), error);
}

TEST_CASE("random polynomials in elementary symmetric functions round-trip") {
    RootContext ctx = rank3_context();
    Poly b1 = Poly::var(ctx.ring, "b1");
    Poly b2 = Poly::var(ctx.ring, "b2");
    Poly b3 = Poly::var(ctx.ring, "b3");
    Poly e1 = b1 + b2 + b3;
    Poly e2 = b1 * b2 + b1 * b3 + b2 * b3;
    Poly e3 = b1 * b2 * b3;
    Poly v1 = embed(ctx, ctx.elem[0]);
    Poly v2 = embed(ctx, ctx.elem[1]);
    Poly v3 = embed(ctx, ctx.elem[2]);

    std::mt19937 rng(99);
    std::uniform_int_distribution<int> cd(-5, 5);
    for (int iter = 0; iter < 60; ++iter) {
        Poly sym(ctx.ring);
        Poly expect(ctx.ring);
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                for (int c = 0; c <= 1; ++c) {
                    Rat co(cd(rng));
                    if (co == 0) continue;
                    sym += co * e1.pow(a) * e2.pow(b) * e3.pow(c);
                    expect += co * v1.pow(a) * v2.pow(b) * v3.pow(c);
                }
        CHECK(reduce_symmetric(ctx, sym) == project(ctx, expect));
    }
}

TEST_CASE("Segre classes of dual symmetric powers") {
    RootContext ctx = rank3_context();
    Roots vdual = dual(tautological_roots(ctx));

    Poly s1 = segre_class(ctx, vdual, 5);
    CHECK(s1.select_degree(2) == parse_poly(ctx.base, "-c2"));
    CHECK(s1.select_degree(3) == parse_poly(ctx.base, "c3"));
    CHECK(s1.select_degree(4) == parse_poly(ctx.base, "c2^2"));
    CHECK(s1.select_degree(5) == parse_poly(ctx.base, "-2*c2*c3"));

    Roots sym3 = sym_power(vdual, 3);
    REQUIRE(sym3.size() == 10);
    Poly s3 = segre_class(ctx, sym3, 5);
    CHECK(s3.select_degree(2) == parse_poly(ctx.base, "-15*c2"));
    CHECK(s3.select_degree(3) == parse_poly(ctx.base, "27*c3"));
    CHECK(s3.select_degree(4) == parse_poly(ctx.base, "162*c2^2"));
    CHECK(s3.select_degree(5) == parse_poly(ctx.base, "-648*c2*c3"));

    Roots sym4 = sym_power(vdual, 4);
    REQUIRE(sym4.size() == 15);
    Poly s4 = segre_class(ctx, sym4, 5);
    CHECK(s4.select_degree(2) == parse_poly(ctx.base, "-35*c2"));
    CHECK(s4.select_degree(3) == parse_poly(ctx.base, "77*c3"));
    CHECK(s4.select_degree(4) == parse_poly(ctx.base, "798*c2^2"));
    CHECK(s4.select_degree(5) == parse_poly(ctx.base, "-3828*c2*c3"));
}

TEST_CASE("Chern and Segre classes are mutually inverse") {
    RootContext ctx = rank3_context();
    Roots sym2 = sym_power(dual(tautological_roots(ctx)), 2);
    Poly c = total_chern(ctx, sym2, 8);
    Poly s = segre_class(ctx, sym2, 8);
    CHECK(truncated_mul(c, s, 8) == Poly(ctx.base, Rat(1)));
}

TEST_CASE("twist shifts every root by a line class") {
    VarTablePtr base = make_vars("H:1 c2:2 c3:3");
    RootContext ctx = make_root_context(
        base, {"b1", "b2", "b3"},
        {Poly(base), parse_poly(base, "c2"), parse_poly(base, "c3")});
    Roots tw = twist(tautological_roots(ctx), embed(ctx, parse_poly(base, "H")));
    Poly c = total_chern(ctx, tw);
    CHECK(c.select_degree(1) == parse_poly(base, "3*H"));
    CHECK(c.select_degree(2) == parse_poly(base, "3*H^2 + c2"));
    CHECK(c.select_degree(3) == parse_poly(base, "H^3 + c2*H + c3"));
}

TEST_CASE("weighted Chern polynomial of a scaled action") {
    VarTablePtr base = make_vars("t:1 e:1 c2:2");
    RootContext ctx =
        make_root_context(base, {"m1", "m2"}, {parse_poly(base, "e"), parse_poly(base, "c2")});
    Poly m1 = Poly::var(ctx.ring, "m1");
    Poly m2 = Poly::var(ctx.ring, "m2");
    // summands of weights 2, 3, 4 built from one root pair
    Roots roots;
    std::vector<int> weights;
    for (int j : {2, 3, 4}) {
        roots.push_back(Rat(j) * m1);
        roots.push_back(Rat(j) * m2);
        weights.push_back(j);
        weights.push_back(j);
    }
    Poly p = weighted_chern_poly(ctx, roots, weights, "t");
    CHECK(p == parse_poly(base, "576*(t^2 + t*e + c2)^3"));
}
