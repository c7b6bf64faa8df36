#include "kingdon/cli.hpp"
#include "kingdon/json_io.hpp"
#include "kingdon/kingdon.hpp"

#include <doctest.h>

#include <sstream>

using namespace kingdon;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify output") {
    RunResult r = run({"classify", "--form", "diag:-2,-2,-2"});
    CHECK(r.code == 0);
    CHECK(r.out == "(0,0,3) OCT\n");

    RunResult s = run({"classify", "--form", "oct"});
    CHECK(s.out == r.out);

    RunResult z = run({"classify", "--form", "zero3"});
    CHECK(z.out == "(3,0,0) ALT_EXT\n");

    RunResult so = run({"classify", "--form", "split-oct"});
    CHECK(so.out == "(0,1,2) SPLIT_OCT\n");

    RunResult js = run({"classify", "--form", "[[0,1,0],[1,0,0],[0,0,\"-2\"]]"});
    CHECK(js.code == 0);
    CHECK(js.out == "(0,1,2) SPLIT_OCT\n");
}

TEST_CASE("verify suites exit codes and determinism") {
    RunResult a = run({"verify", "--form", "diag:0,0,0", "--suite", "alternativity"});
    CHECK(a.code == 0);

    for (const char* suite : {"moufang", "palindromic", "quadratic", "grading"}) {
        RunResult r = run({"verify", "--form", "oct", "--suite", suite, "--seed", "42"});
        CHECK(r.code == 0);
        RunResult again = run({"verify", "--form", "oct", "--suite", suite, "--seed", "42"});
        CHECK(again.out == r.out);
    }

    RunResult fano = run({"verify", "--form", "oct", "--suite", "fano"});
    CHECK(fano.code == 0);

    // fano needs the octonions
    RunResult bad = run({"verify", "--form", "zero3", "--suite", "fano"});
    CHECK(bad.code == 2);
}

TEST_CASE("table output matches the zero-form table") {
    RunResult md = run({"table", "--form", "zero3", "--format", "md"});
    CHECK(md.code == 0);
    const std::string expected =
        "| 1 | i | j | k | ij | jk | ki | ω |\n"
        "|---|---|---|---|---|---|---|---|\n"
        "| i | 0 | ij | -ki | 0 | -ω | 0 | 0 |\n"
        "| j | -ij | 0 | jk | 0 | 0 | -ω | 0 |\n"
        "| k | ki | -jk | 0 | -ω | 0 | 0 | 0 |\n"
        "| ij | 0 | 0 | ω | 0 | 0 | 0 | 0 |\n"
        "| jk | ω | 0 | 0 | 0 | 0 | 0 | 0 |\n"
        "| ki | 0 | ω | 0 | 0 | 0 | 0 | 0 |\n"
        "| ω | 0 | 0 | 0 | 0 | 0 | 0 | 0 |\n";
    CHECK(md.out == expected);

    RunResult csv = run({"table", "--form", "oct", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("1,i,j,k,ij,jk,ki,ω\n", 0) == 0);
    CHECK(csv.out.find("i,-1,ij,-ki,-j,-ω,k,jk") != std::string::npos);
}

TEST_CASE("build and cd emit round-trippable json") {
    for (auto args : {std::vector<std::string>{"build", "--form", "diag:0,4,-6"},
                      std::vector<std::string>{"cd", "--gammas", "-1,-1,-1"}}) {
        RunResult r = run(args);
        REQUIRE(r.code == 0);
        nlohmann::json doc = nlohmann::json::parse(r.out);
        AlgebraPtr a = algebra_from_json(doc);
        CHECK(algebra_to_json(*a).dump(2) + "\n" == r.out);
    }

    RunResult base = run({"cd", "--gammas", ""});
    CHECK(base.code == 0);
    CHECK(nlohmann::json::parse(base.out)["basis"].size() == 1);
}

TEST_CASE("isomorphic answers") {
    RunResult yes = run({"isomorphic", "--a", "1,1,1", "--b", "1,2,0"});
    CHECK(yes.code == 0);
    CHECK(yes.out.rfind("yes", 0) == 0);
    CHECK(yes.out.find("64") != std::string::npos);

    RunResult no = run({"isomorphic", "--a", "2,1,0", "--b", "2,0,1"});
    CHECK(no.code == 0);
    CHECK(no.out.rfind("no", 0) == 0);

    RunResult same = run({"isomorphic", "--a", "0,3,0", "--b", "0,1,2"});
    CHECK(same.code == 0);
    CHECK(same.out.rfind("yes", 0) == 0);

    RunResult bad = run({"isomorphic", "--a", "1,1", "--b", "0,0,3"});
    CHECK(bad.code == 2);
}

TEST_CASE("fano subcommand") {
    RunResult r = run({"fano"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("(i, j, ij)") != std::string::npos);
}

TEST_CASE("structure json") {
    RunResult r = run({"structure", "--form", "zero3"});
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["iso_class"] == "ALT_EXT");
    CHECK(j["simple"] == false);
    CHECK(j["division"] == false);
    CHECK(j["nucleus_basis"].size() == 5);
    CHECK(!j["zero_divisor_witness"].is_null());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"classify"}).code == 2);
    CHECK(run({"classify", "--form", "diag:1,2"}).code == 2);    // dim 2 cannot be classified
    CHECK(run({"classify", "--form", "[[1,2],[3,4]]"}).code == 2);  // not symmetric
    CHECK(run({"table", "--form", "zero3", "--format", "xml"}).code == 2);
    CHECK(run({"cd", "--gammas", "1,1,1,1,1"}).code == 2);
    CHECK(run({"build", "--form", "diag:1,1,1,1"}).code == 2);
}
