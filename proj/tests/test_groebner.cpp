#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qv/groebner.hpp"
#include "qv/hilbert.hpp"

#include <cstdlib>
#include <filesystem>
#include <random>

using namespace qv;

namespace {

struct CacheSandbox {
    std::string old_dir;
    std::filesystem::path tmp;
    CacheSandbox() : old_dir(cache_dir()) {
        tmp = std::filesystem::temp_directory_path() /
              ("qv-test-cache-" + std::to_string(std::random_device{}()));
        set_cache_dir(tmp.string());
    }
    ~CacheSandbox() {
        std::error_code ec;
        std::filesystem::remove_all(tmp, ec);
        set_cache_dir(old_dir);
    }
};

} // namespace

TEST_CASE("division with remainder terminates and reduces fully") {
    VarTablePtr tab = make_vars("x:1 y:1");
    MonomialOrder ord;
    std::vector<Poly> gens = {parse_poly(tab, "x^2 - y"), parse_poly(tab, "x*y - 1")};
    Poly r = normal_form(parse_poly(tab, "x^3"), gens, ord);
    // x^3 = x*(x^2 - y) + (x*y - 1) + ... leaves a generator-free remainder
    CHECK(r == parse_poly(tab, "1"));
    CHECK(normal_form(parse_poly(tab, "x^2 - y"), gens, ord).is_zero());
}

TEST_CASE("reduced basis of the twisted cubic cone") {
    CacheSandbox sandbox;
    VarTablePtr tab = make_vars("x:1 y:1 z:1");
    MonomialOrder ord;
    std::vector<Poly> gens = {parse_poly(tab, "x^2 - y"), parse_poly(tab, "x^3 - z")};
    std::vector<Poly> gb = groebner_basis(gens, ord);
    REQUIRE(gb.size() == 3);
    // ascending leading terms: y^2 < x*y < x^2 in graded reverse-lex
    CHECK(gb[0] == parse_poly(tab, "y^2 - x*z"));
    CHECK(gb[1] == parse_poly(tab, "x*y - z"));
    CHECK(gb[2] == parse_poly(tab, "x^2 - y"));
}

TEST_CASE("linear substitution collapses to a reduced pair") {
    CacheSandbox sandbox;
    VarTablePtr tab = make_vars("x:1 y:1");
    std::vector<Poly> gens = {parse_poly(tab, "x - y"), parse_poly(tab, "x^2 + y^2 - 1")};
    std::vector<Poly> gb = groebner_basis(gens, {});
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == parse_poly(tab, "x - y"));
    CHECK(gb[1] == parse_poly(tab, "y^2 - 1/2"));
}

TEST_CASE("membership and ideal equality") {
    CacheSandbox sandbox;
    VarTablePtr tab = make_vars("x:1 y:1");
    MonomialOrder ord;
    std::vector<Poly> a = {parse_poly(tab, "x^2"), parse_poly(tab, "x*y"), parse_poly(tab, "y^2")};
    std::vector<Poly> b = {parse_poly(tab, "x^2"), parse_poly(tab, "y^2"),
                           parse_poly(tab, "x*y + 3*x^2")};
    CHECK(ideal_equal(a, b, ord));
    std::vector<Poly> c = {parse_poly(tab, "x^2"), parse_poly(tab, "y^2")};
    CHECK_FALSE(ideal_equal(a, c, ord));

    std::vector<Poly> gb = groebner_basis(a, ord);
    CHECK(ideal_member(parse_poly(tab, "x^3 + 7*x*y^2"), gb, ord));
    CHECK_FALSE(ideal_member(parse_poly(tab, "x + y"), gb, ord));
}

TEST_CASE("elimination recovers the implicit curve") {
    CacheSandbox sandbox;
    VarTablePtr tab = make_vars("t:1 x:1 y:1");
    std::vector<Poly> gens = {parse_poly(tab, "x - t^2"), parse_poly(tab, "y - t^3")};
    std::vector<Poly> elim = eliminate(gens, {"t"});
    REQUIRE(elim.size() == 1);
    CHECK(elim[0] == parse_poly(tab, "x^3 - y^2"));
}

TEST_CASE("pair budget guards runaway computations") {
    CacheSandbox sandbox;
    VarTablePtr tab = make_vars("x:1 y:1 z:1");
    std::vector<Poly> gens = {parse_poly(tab, "x^2 - y*z"), parse_poly(tab, "y^2 - x*z"),
                              parse_poly(tab, "z^2 - x*y")};
    GroebnerOptions opt;
    opt.pair_budget = 1;
    opt.use_cache = false;
    CHECK_THROWS_AS(groebner_basis(gens, {}, opt), error);
}

TEST_CASE("disk cache round-trips the reduced basis") {
    CacheSandbox sandbox;
    VarTablePtr tab = make_vars("x:1 y:1 z:1");
    std::vector<Poly> gens = {parse_poly(tab, "x^2 - y"), parse_poly(tab, "x^3 - z")};
    CHECK(cache_count() == 0);
    std::vector<Poly> first = groebner_basis(gens, {});
    CHECK(cache_count() == 1);
    std::vector<Poly> second = groebner_basis(gens, {});
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);
    // scaled generators in another order produce the same key
    std::vector<Poly> scaled = {parse_poly(tab, "5*x^3 - 5*z"), parse_poly(tab, "-2*x^2 + 2*y")};
    groebner_basis(scaled, {});
    CHECK(cache_count() == 1);
    CHECK(cache_clear() == 1);
    CHECK(cache_count() == 0);
}

TEST_CASE("hilbert series of frozen examples") {
    CacheSandbox sandbox;
    VarTablePtr tab = make_vars("x:1 y:1");
    std::vector<Poly> sq = {parse_poly(tab, "x^2"), parse_poly(tab, "x*y"), parse_poly(tab, "y^2")};
    CHECK(hilbert_series(tab, sq) == parse_series("1 + 2*t"));

    // weighted ring: x has degree 1, y degree 2
    VarTablePtr w = make_vars("x:1 y:2");
    std::vector<Poly> gens = {parse_poly(w, "x^4"), parse_poly(w, "x^2*y")};
    CHECK(hilbert_series(w, gens) == parse_series("1/(1-t) + t^2 + t^3"));

    // complete intersection: numerator is the product of (1 - t^deg)
    VarTablePtr u = make_vars("x:1 y:1 z:1");
    std::vector<Poly> ci = {parse_poly(u, "x^2 + y^2 + z^2"), parse_poly(u, "x^3 + y^3")};
    CHECK(hilbert_series(u, ci) ==
          parse_series("(1-t^2)*(1-t^3)/((1-t)^3)"));
}

TEST_CASE("hilbert series agrees with exact rank per degree") {
    CacheSandbox sandbox;
    std::mt19937 rng(4242);
    VarTablePtr tab = make_vars("x:1 y:1 z:2");
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int iter = 0; iter < 6; ++iter) {
        // random homogeneous generators of degrees 2 and 3
        std::vector<Poly> gens;
        for (int deg : {2, 3}) {
            Poly g(tab);
            for (const Expo& e : monomials_of_degree(*tab, deg)) g.add_term(e, Rat(coeff(rng)));
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        RatSeries hs = hilbert_series(tab, gens, {200000, false});
        UPoly expanded = hs.expand(8);
        for (int d = 0; d <= 8; ++d)
            CHECK(expanded.coeff(d) == Rat(graded_piece_dim(tab, gens, d)));
    }
}

TEST_CASE("block order eliminates and stays deterministic") {
    CacheSandbox sandbox;
    VarTablePtr tab = make_vars("u:1 x:1 y:1");
    // u is eliminated although its plain degree is low
    std::vector<Poly> gens = {parse_poly(tab, "u - x - y"), parse_poly(tab, "u^2 - x*y")};
    std::vector<Poly> elim = eliminate(gens, {"u"});
    REQUIRE(elim.size() == 1);
    CHECK(elim[0] == parse_poly(tab, "x^2 + x*y + y^2"));
}
