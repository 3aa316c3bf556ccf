#include "doctest.h"

#include "krc/json_io.hpp"
#include "krc/report.hpp"

#include <stdexcept>

using namespace krc;
using nlohmann::ordered_json;

TEST_SUITE("json") {

TEST_CASE("tableau round trip and layout") {
    const RectTableau t = rect_from_text(6, "1,1,3/2,2,4/3,4,5/5,5,6");
    const ordered_json j = tableau_to_json(t);
    CHECK(j["n"] == 6);
    CHECK(j["rows"][0] == ordered_json::array({1, 1, 3}));
    CHECK(tableau_from_json(j) == t);
    CHECK(j.dump() == R"({"n":6,"rows":[[1,1,3],[2,2,4],[3,4,5],[5,5,6]]})");

    ordered_json bad = j;
    bad["rows"][2][0] = 9;
    CHECK_THROWS_AS(tableau_from_json(bad), std::invalid_argument);
    CHECK_THROWS_AS(tableau_from_json(ordered_json{{"n", 3}}), std::invalid_argument);
}

TEST_CASE("tensor round trip") {
    const TensorElem x{{rect_from_text(6, "1,3,4/2,6,6"), rect_from_text(6, "1,1,3/2,2,4/3,4,5/5,5,6")}};
    const ordered_json j = tensor_to_json(x);
    CHECK(j["factors"].size() == 2);
    CHECK(tensor_from_json(j) == x);
}

TEST_CASE("one-row points carry rationals as strings and tropicals as integers") {
    const VecPoint<PosRational> v{2, {PosRational(3, 2), PosRational(7)}};
    const ordered_json jv = vec_to_json(v);
    CHECK(jv.dump() == R"({"n":2,"x":["3/2","7"]})");
    CHECK(vec_rational_from_json(jv) == v);

    const VecPoint<TropInt> w{3, {TropInt(1), TropInt(-4), TropInt(0)}};
    const ordered_json jw = vec_to_json(w);
    CHECK(jw.dump() == R"({"n":3,"x":[1,-4,0]})");
    CHECK(vec_tropical_from_json(jw) == w);

    CHECK_THROWS_AS(vec_rational_from_json(ordered_json::parse(R"({"n":3,"x":["1","2"]})")), std::invalid_argument);
    CHECK_THROWS_AS(vec_rational_from_json(ordered_json::parse(R"({"n":1,"x":["0"]})")), std::invalid_argument);
}

TEST_CASE("keyed points round trip in both semirings") {
    GeomPoint<PosRational> p;
    p.n = 5;
    p.k = 2;
    for (int i = 1; i <= 2; ++i)
        for (int j = i; j <= i + 2; ++j) p.x[{i, j}] = PosRational(i + j, 3);
    p.s = PosRational(3, 2);
    const ordered_json jp = geom_to_json(p);
    CHECK(jp["s"] == "3/2");
    CHECK(jp["x"]["1,1"] == "2/3");
    CHECK(geom_rational_from_json(jp) == p);

    GeomPoint<TropInt> q;
    q.n = 5;
    q.k = 2;
    for (int i = 1; i <= 2; ++i)
        for (int j = i; j <= i + 2; ++j) q.x[{i, j}] = TropInt(i - j);
    q.s = TropInt(4);
    const ordered_json jq = geom_to_json(q);
    CHECK(jq["x"]["2,4"] == -2);
    CHECK(geom_tropical_from_json(jq) == q);

    ordered_json wrong = jq;
    wrong["x"].erase("1,2");
    CHECK_THROWS_AS(geom_tropical_from_json(wrong), std::invalid_argument);
    ordered_json extra = jq;
    extra["x"]["1,5"] = 0;
    CHECK_THROWS_AS(geom_tropical_from_json(extra), std::invalid_argument);
    ordered_json badkey = jq;
    badkey["x"].erase("1,1");
    badkey["x"]["1;1"] = 0;
    CHECK_THROWS_AS(geom_tropical_from_json(badkey), std::invalid_argument);
}

TEST_CASE("report serialization has the fixed field order") {
    VerifierReport r;
    r.label = "sample";
    r.checked = 2;
    CHECK(report_to_json(r).dump() == R"({"case":"sample","checked":2,"failures":[],"pass":true})");
    r.failures.push_back("boom");
    CHECK(report_to_json(r).dump() == R"({"case":"sample","checked":2,"failures":["boom"],"pass":false})");
}

} /* TEST_SUITE json */
