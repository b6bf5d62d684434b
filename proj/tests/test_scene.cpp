#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qv/scene.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <unistd.h>

using namespace qv;

namespace {

struct TempScene {
    std::string path;
    explicit TempScene(const std::string& body) {
        std::mt19937_64 rng{std::random_device{}()};
        path = "/tmp/qv-scene-" + std::to_string(rng()) + ".scene";
        std::ofstream out(path);
        out << body;
    }
    ~TempScene() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("a scene parses into keys, ideals and expectations") {
    TempScene f("# demo scene\n"
                "target demo\n"
                "vars H:1 c2:2 c3:3\n"
                "let cube := H^3\n"
                "input rel := 60*H^4 - 120*c2*H^2 - 276*c3*H cite \"demo relation\"\n"
                "ideal gens := cube rel\n"
                "expect element-equal cube := H^3 cite \"cube of the hyperplane class\"\n"
                "expect hilbert-equal gens := 1 + t cite \"demo series\"\n");
    Scene sc = load_scene(f.path);
    CHECK(sc.target == "demo");
    CHECK(sc.vars->size() == 3);
    CHECK(sc.poly("cube") == parse_poly(sc.vars, "H^3"));
    CHECK(sc.def_kind.at("cube") == "let");
    CHECK(sc.def_kind.at("rel") == "input");
    REQUIRE(sc.ideals.count("gens") == 1);
    CHECK(sc.ideal("gens").size() == 2);
    REQUIRE(sc.expects.size() == 2);
    const Expectation& e = sc.expectation("element-equal", "cube");
    CHECK(e.payload == "H^3");
    CHECK(e.citation == "cube of the hyperplane class");
    CHECK(sc.of_kind("hilbert-equal").size() == 1);
    CHECK(sc.resolve("cube") == parse_poly(sc.vars, "H^3"));
    CHECK(sc.resolve("2*H") == parse_poly(sc.vars, "2*H"));
    CHECK(sc.has("rel"));
    CHECK(!sc.has("absent"));
}

TEST_CASE("comments may contain quoted hashes and blank lines are skipped") {
    TempScene f("target demo\n"
                "\n"
                "vars x:1\n"
                "input a := x cite \"uses # inside a note\" # trailing comment\n");
    Scene sc = load_scene(f.path);
    CHECK(sc.poly("a") == parse_poly(sc.vars, "x"));
    CHECK(sc.expects.empty());
}

TEST_CASE("malformed scenes are rejected") {
    auto fails = [](const std::string& body) {
        TempScene f(body);
        CHECK_THROWS_AS(load_scene(f.path), error);
    };
    // input without citation
    fails("target t\nvars x:1\ninput a := x\n");
    // expect without citation
    fails("target t\nvars x:1\nexpect element-equal a := x\n");
    // unknown expectation kind
    fails("target t\nvars x:1\nlet a := x\nexpect magic a := x cite \"n\"\n");
    // duplicate key
    fails("target t\nvars x:1\nlet a := x\nlet a := x^2\n");
    // definition before vars
    fails("target t\nlet a := x\n");
    // unknown statement
    fails("target t\nvars x:1\nfrobnicate a\n");
    // ideal referencing an unknown key
    fails("target t\nvars x:1\nideal I := nope\n");
    // missing file
    CHECK_THROWS_AS(load_scene("/tmp/qv-no-such-scene-file.scene"), error);
}

TEST_CASE("scene directory fallback and named loading") {
    TempScene f("target named\nvars x:1\nlet a := x\n");
    // place a copy under a directory and load by name
    std::string dir = "/tmp/qv-scene-dir-" + std::to_string(::getpid());
    std::string cmd = "mkdir -p " + dir;
    REQUIRE(std::system(cmd.c_str()) == 0);
    {
        std::ifstream in(f.path);
        std::ofstream out(dir + "/named.scene");
        out << in.rdbuf();
    }
    std::string old = scene_dir();
    set_scene_dir(dir);
    Scene sc = load_scene_by_name("named");
    CHECK(sc.target == "named");
    set_scene_dir(old);
    std::string cleanup = "rm -rf " + dir;
    CHECK(std::system(cleanup.c_str()) == 0);
}
