#include "doctest.h"

#include "krc/cli.hpp"
#include "krc/json_io.hpp"
#include "krc/rmatrix.hpp"
#include "krc/tableau.hpp"

#include <sstream>
#include <string>
#include <vector>

using namespace krc;

namespace {

struct CliResult {
    int rc;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int rc = cli::run(args, out, err);
    return {rc, out.str(), err.str()};
}

} /* namespace */

TEST_SUITE("cli") {

TEST_CASE("kmatrix evaluates the four-row element") {
    const auto r = run_cli({"kmatrix", "--n", "6", "--shape", "4x3", "--elem", "1,1,3/2,2,4/3,4,5/5,5,6"});
    CHECK(r.rc == 0);
    CHECK(r.out == "1,1,3/4,4,5\n");
}

TEST_CASE("verify reflection sweeps the 150-element product") {
    const auto r = run_cli({"verify", "reflection", "--n", "5", "--shapes", "1x2,2x1"});
    CHECK(r.rc == 0);
    CHECK(r.out == "PASS reflection n=5 B^{1,2} (x) B^{2,1} checked=150\n");
}

TEST_CASE("apply reports none when the operator vanishes") {
    const auto r = run_cli({"apply", "--op", "f", "--i", "3", "--n", "6", "--shape", "4x1", "--elem", "1/3/4/6"});
    CHECK(r.rc == 0);
    CHECK(r.out == "none\n");
}

TEST_CASE("usage problems exit with 2") {
    CHECK(run_cli({"kmatrix", "--n", "6"}).rc == 2);
    CHECK(run_cli({"frobnicate"}).rc == 2);
    CHECK(run_cli({"verify", "no-such-identity", "--n", "3"}).rc == 2);
    CHECK(run_cli({"verify"}).rc == 2);
    CHECK(run_cli({"verify", "reflection", "--n", "5", "--shapes", "1x2,2x1", "--suite", "desk"}).rc == 2);
    CHECK(run_cli({"apply", "--op", "f", "--i", "9", "--n", "4", "--elem", "1,2"}).rc == 2);
    CHECK(run_cli({"apply", "--op", "f", "--i", "1", "--n", "4", "--shape", "2x1", "--elem", "1,2"}).rc == 2);
    CHECK(run_cli({"verify", "promotion", "--n", "2", "--shape", "1x600", "--bound", "500"}).rc == 2);
    const auto r = run_cli({"rmatrix", "--n", "6", "--elem", "1,3,4/2,6,6"});
    CHECK(r.rc == 2);
    CHECK(r.err.find("two factors") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli({"--help"}).rc == 0);
}

TEST_CASE("rmatrix text and json agree with the library") {
    const TensorElem x{{rect_from_text(6, "1,3,4/2,6,6"), rect_from_text(6, "1,1,3/2,2,4/3,4,5/5,5,6")}};
    const TensorElem image = combinatorial_r(x);

    const auto text = run_cli({"rmatrix", "--n", "6", "--elem", "1,3,4/2,6,6|1,1,3/2,2,4/3,4,5/5,5,6"});
    CHECK(text.rc == 0);
    CHECK(text.out == to_text(image) + "\n");

    const auto json = run_cli({"rmatrix", "--n", "6", "--elem", "1,3,4/2,6,6|1,1,3/2,2,4/3,4,5/5,5,6", "--format", "json"});
    CHECK(json.rc == 0);
    CHECK(tensor_from_json(nlohmann::ordered_json::parse(json.out)) == image);
}

TEST_CASE("energy prints the integer") {
    CHECK(run_cli({"energy", "--n", "2", "--elem", "2|1"}).out == "1\n");
    CHECK(run_cli({"energy", "--n", "2", "--elem", "1|1", "--format", "json"}).out == "{\"energy\":0}\n");
}

TEST_CASE("enumerate output reparses in both formats") {
    const auto text = run_cli({"enumerate", "--n", "3", "--shape", "2x1"});
    CHECK(text.rc == 0);
    std::istringstream lines(text.out);
    std::string line;
    int64_t count = 0;
    while (std::getline(lines, line)) {
        CHECK(to_text(rect_from_text(3, line)) == line);
        ++count;
    }
    CHECK(count == crystal_size(3, 2, 1));

    const auto json = run_cli({"enumerate", "--n", "3", "--shape", "2x1", "--format", "json"});
    const auto arr = nlohmann::ordered_json::parse(json.out);
    CHECK(arr.size() == 3);
    for (const auto& j : arr) CHECK(tableau_from_json(j).n == 3);

    CHECK(run_cli({"enumerate", "--n", "5", "--shape", "2x9"}).rc == 2); /* above the default bound */
}

TEST_CASE("graph emits DOT") {
    const auto r = run_cli({"graph", "--n", "2", "--shapes", "1x1"});
    CHECK(r.rc == 0);
    CHECK(r.out.rfind("digraph", 0) == 0);
    CHECK(r.out.find("label=\"0\"") != std::string::npos);
}

TEST_CASE("geom evaluates all three maps") {
    const auto rtop = run_cli({"geom", "--map", "r-top", "--x", R"({"n":2,"x":["1","2"]})", "--y", R"({"n":2,"x":["3","1"]})"});
    CHECK(rtop.rc == 0);
    CHECK(rtop.out == R"({"first":{"n":2,"x":["9/4","4/3"]},"second":{"n":2,"x":["3/4","8/3"]}})" "\n");

    const auto k1 = run_cli({"geom", "--map", "k1", "--semiring", "tropical", "--x", R"({"n":3,"x":[1,2,3]})"});
    CHECK(k1.out == R"({"n":3,"x":[2,3,1]})" "\n");

    const auto k2 = run_cli({"geom", "--map", "k2n5", "--semiring", "tropical", "--point",
                             R"({"n":5,"k":2,"s":1,"x":{"1,1":1,"1,2":0,"1,3":0,"2,2":0,"2,3":0,"2,4":0}})"});
    CHECK(k2.rc == 0);
    CHECK(k2.out == R"({"n":5,"k":2,"s":1,"x":{"1,1":0,"1,2":0,"1,3":1,"2,2":0,"2,3":0,"2,4":1}})" "\n");

    CHECK(run_cli({"geom", "--map", "r-top", "--x", R"({"n":2,"x":["1","2"]})"}).rc == 2);
    CHECK(run_cli({"geom", "--map", "k2n5", "--point", "not json"}).rc == 2);
}

TEST_CASE("figure1 target runs the n=5 case") {
    const auto r = run_cli({"verify", "figure1", "--n", "5", "--b", "1,3", "--c", "1/2"});
    CHECK(r.rc == 0);
    CHECK(r.out.rfind("PASS", 0) == 0);
}

TEST_CASE("sampled verifier output is byte-identical under one seed") {
    const std::vector<std::string> args{"verify", "geom-reflection-n2", "--samples", "25",
                                        "--seed", "7",    "--grid-radius", "1"};
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("checked=106") != std::string::npos); /* 25 + 81 grid points */
}

TEST_CASE("verify emits ordered json") {
    const auto r = run_cli({"verify", "tropical-k", "--l", "1", "--format", "json"});
    CHECK(r.rc == 0);
    const auto arr = nlohmann::ordered_json::parse(r.out);
    CHECK(arr.is_array());
    CHECK(arr[0]["case"] == "tropical-k n=5 B^{2,1}");
    CHECK(arr[0]["checked"] == 10);
    CHECK(arr[0]["pass"] == true);
    CHECK(arr[0].dump().rfind(R"({"case":)", 0) == 0);
}

TEST_CASE("positivity target covers the three maps by default") {
    const auto r = run_cli({"verify", "positivity", "--samples", "5", "--seed", "3"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("positivity r-top") != std::string::npos);
    CHECK(r.out.find("positivity k1") != std::string::npos);
    CHECK(r.out.find("positivity k2n5") != std::string::npos);
}

} /* TEST_SUITE cli */
