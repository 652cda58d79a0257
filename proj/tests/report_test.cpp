#include <doctest.h>

#include <sstream>

#include "pdd/eqfree.hpp"
#include "pdd/gridset.hpp"
#include "pdd/report.hpp"

using namespace pdd;

TEST_CASE("digests ignore timing fields") {
    std::string a = R"({"claim_id":"x","status":"verified","timing":1.5,"inner":{"seconds":2.0,"v":3}})";
    std::string b = R"({"claim_id":"x","status":"verified","timing":9.9,"inner":{"seconds":0.1,"v":3}})";
    std::string c = R"({"claim_id":"y","status":"verified","timing":1.5,"inner":{"seconds":2.0,"v":3}})";
    CHECK(json_digest(a) == json_digest(b));
    CHECK(json_digest(a) != json_digest(c));
}

TEST_CASE("set files round-trip exactly") {
    GridSet g(2, 9);
    g.insert(1, 1);
    g.insert(3, 7);
    g.insert(9, 9);
    std::ostringstream os;
    save_grid_set(os, g);
    std::istringstream is(os.str());
    auto loaded = load_set(is);
    auto* gl = std::get_if<GridSet>(&loaded);
    REQUIRE(gl != nullptr);
    CHECK(gl->members() == g.members());
    CHECK(gl->N() == 9);
    CHECK(gl->r() == 2);

    FreeSet f;
    f.L = 100;
    f.elements = {0, 1, 5, 99};
    std::ostringstream os2;
    save_free_set(os2, f);
    CHECK(os2.str().substr(0, 11) == "pdd-set v1\n");
    std::istringstream is2(os2.str());
    auto loaded2 = load_set(is2);
    auto* fl = std::get_if<FreeSet>(&loaded2);
    REQUIRE(fl != nullptr);
    CHECK(fl->elements == f.elements);
    CHECK(fl->L == 100);
}

TEST_CASE("manifest serialization carries the reproducibility fields") {
    RunManifest m;
    m.command = "census";
    m.parameters["bound"] = "40";
    m.seed = 7;
    m.tool_version = "0.1.0";
    m.timings["census"] = 1.25;
    m.outputs.push_back({"census.json", "00ff00ff00ff00ff"});
    auto j = m.to_json();
    CHECK(j.find("\"command\": \"census\"") != std::string::npos);
    CHECK(j.find("census.json") != std::string::npos);
    CHECK(j.find("digest_policy") != std::string::npos);
}

TEST_CASE("csv profiles are line-per-difference") {
    DifferenceProfile p;
    p.N = 5;
    p.per_d = {{-1, 2.0}, {1, 3.0}};
    p.max_d = 1;
    p.max_value = 3.0;
    auto csv = profile_csv(p);
    CHECK(csv == "d,value\n-1,2\n1,3\n");
}
