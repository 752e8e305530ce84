#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fixtures.hpp"
#include "treecolor/cli.hpp"

using namespace treecolor;
using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;

    json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace

TEST_CASE("parse and profile")
{
    const Run p = run({"parse", "--tree", " ( ( ) ( ) ) "});
    REQUIRE(p.code == kExitOk);
    CHECK(p.doc()["n"] == 3);
    CHECK(p.doc()["tree"] == "(()())");
    CHECK(p.doc()["full_binary"] == true);

    const Run prof = run({"profile", "--tree", fixtures::kDepthExample});
    REQUIRE(prof.code == kExitOk);
    CHECK(prof.out.find("[4,2,1,1]") != std::string::npos);
    CHECK(prof.out.find("[1,3,3,1]") != std::string::npos);
}

TEST_CASE("malformed input is a usage error with an offset")
{
    const Run r = run({"parse", "--tree", "(("});
    CHECK(r.code == kExitUsage);
    CHECK(r.out.empty());
    CHECK(r.err.find("byte 2") != std::string::npos);

    CHECK(run({"parse", "--tree", "()", "--bogus"}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"parse"}).code == kExitUsage);
    CHECK(run({"check", "--tree", "()", "--partition", "1,x"}).code == kExitUsage);
    CHECK(run({"parse", "--file", "/nonexistent/tree.txt"}).code == kExitUsage);
}

TEST_CASE("color and verify")
{
    const Run c = run({"color", "--tree", fixtures::kPerfect2, "--canonical", "height"});
    REQUIRE(c.code == kExitOk);
    CHECK(c.doc()["partition"] == json::array({4, 2, 1}));

    const Run dot = run({"color", "--tree", fixtures::kPerfect2, "--canonical", "depth", "--dot"});
    REQUIRE(dot.code == kExitOk);
    CHECK(dot.doc()["partition"] == json::array({4, 2, 1}));
    CHECK(dot.doc()["dot"].get<std::string>().starts_with("digraph"));

    const Run good = run({"verify", "--tree", "(()())", "--coloring", "[1,2,2]"});
    CHECK(good.code == kExitOk);
    CHECK(good.doc()["valid"] == true);
    const Run bad = run({"verify", "--tree", "(()())", "--coloring", "1,2,1"});
    CHECK(bad.code == kExitNegative);
    CHECK(bad.doc()["violation"] == json::array({0, 2}));
}

TEST_CASE("check and solve verdicts")
{
    const Run ok = run({"check", "--tree", fixtures::kTR, "--partition", "2,2,1"});
    CHECK(ok.code == kExitOk);
    CHECK(ok.doc()["passed"] == true);
    const Run refined = run({"check", "--tree", fixtures::kTR, "--partition", "2,2,1", "--refined"});
    CHECK(refined.code == kExitNegative);
    CHECK(refined.doc()["passed"] == false);

    const Run no = run({"solve", "--tree", fixtures::kTR, "--partition", "2,2,1"});
    CHECK(no.code == kExitNegative);
    CHECK(no.doc()["status"] == "not_colorable");
    CHECK_FALSE(no.doc().contains("witness"));

    const Run yes = run({"solve", "--tree", fixtures::kPerfect2, "--partition", "3,3,1"});
    CHECK(yes.code == kExitOk);
    CHECK(yes.doc()["status"] == "colorable");
    CHECK(yes.doc()["witness"].size() == 7);

    const Run budget = run({"solve", "--tree", fixtures::kTF, "--partition", "3,3,3,3,1", "--budget", "2"});
    CHECK(budget.code == kExitBudget);
    CHECK(budget.doc()["status"] == "budget_exceeded");
}

TEST_CASE("partitions and optimize")
{
    const Run parts = run({"partitions", "--tree", fixtures::kPerfect2, "--colors", "chi"});
    REQUIRE(parts.code == kExitOk);
    CHECK(parts.doc()["partitions"] == json::parse("[[4,2,1],[3,3,1]]"));

    const Run opt = run({"optimize", "--tree", fixtures::kPerfect2, "--objective", "max"});
    REQUIRE(opt.code == kExitOk);
    CHECK(opt.doc()["partition"] == json::array({3, 3, 1}));
    CHECK(opt.doc()["value"] == 3.0);

    const Run greedy = run({"optimize", "--tree", fixtures::kTR, "--greedy", "--colors", "3"});
    REQUIRE(greedy.code == kExitOk);
    CHECK(greedy.doc()["partition"] == json::array({3, 1, 1}));

    const std::string path = "test_cli_costs.json";
    std::ofstream(path) << "[0, 0, 50, 1, 1, 1, 1]";
    const Run cost = run({"optimize", "--tree", fixtures::kPerfect2, "--objective", "cost:" + path});
    std::remove(path.c_str());
    REQUIRE(cost.code == kExitOk);
    CHECK(cost.doc()["partition"] == json::array({4, 2, 1}));

    CHECK(run({"optimize", "--tree", fixtures::kPerfect2, "--objective", "moment:-2"}).code == kExitUsage);
    CHECK(run({"optimize", "--tree", fixtures::kPerfect2, "--colors", "2"}).code == kExitUsage);
}

TEST_CASE("experiment commands")
{
    const Run t = run({"tnsc", "--class", "rooted", "--nmax", "5"});
    REQUIRE(t.code == kExitOk);
    std::istringstream lines(t.out);
    std::string line;
    int records = 0;
    int summaries = 0;
    while (std::getline(lines, line)) {
        const json j = json::parse(line);
        if (j["record"] == "tnsc") {
            ++records;
            CHECK(j["tree"] == "((()()()))");
            CHECK(j["failing_partitions"] == json::parse("[[2,2,1]]"));
        }
        else {
            ++summaries;
        }
    }
    CHECK(records == 1);
    CHECK(summaries == 5);

    const Run c = run({"conjecture", "--hmax", "2"});
    REQUIRE(c.code == kExitOk);
    CHECK(c.out.find("\"counterexamples\":[]") != std::string::npos);

    const Run cat = run({"catalan", "--nmax", "8"});
    REQUIRE(cat.code == kExitOk);
    CHECK(cat.doc()["all_match"] == true);
    CHECK(cat.doc()["rows"][7]["catalan"] == 1430);
    CHECK(run({"catalan", "--nmax", "11"}).code == kExitUsage);
}
