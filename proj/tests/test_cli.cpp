#include <doctest.h>

#include "permgrid/cli.hpp"
#include "permgrid/verify.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

using namespace permgrid;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("decode subcommand") {
    auto r = run({"decode", "--grid", "g1", "--word", "bacddb"});
    CHECK(r.code == 0);
    CHECK(r.out == "234165\n");
}

TEST_CASE("gf subcommand") {
    auto r = run({"gf", "--name", "f", "--terms", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 2 6 22 88 363\n");

    auto json_run = run({"gf", "--name", "f", "--terms", "4", "--format", "json"});
    CHECK(json_run.code == 0);
    auto parsed = nlohmann::ordered_json::parse(json_run.out);
    CHECK(parsed["coefficients"]["4"] == "22");
    // Emitted json round-trips byte for byte.
    CHECK(parsed.dump(2) + "\n" == json_run.out);
}

TEST_CASE("enumerate subcommand") {
    auto r = run({"enumerate", "--basis", "3124,4312", "--max-len", "5", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,count\n1,1\n2,2\n3,6\n4,22\n5,88\n");

    auto listed = run({"enumerate", "--basis", "21", "--max-len", "3", "--list"});
    CHECK(listed.code == 0);
    CHECK(listed.out.find("123") != std::string::npos);
}

TEST_CASE("simples subcommand") {
    auto r = run({"simples", "--basis", "3124,4312", "--max-len", "4", "--list"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2413") != std::string::npos);
    CHECK(r.out.find("3142") != std::string::npos);
}

TEST_CASE("language subcommand") {
    auto r = run({"language", "--name", "S1", "--count-to", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 0 0 2 4 8\n");

    auto listed = run({"language", "--name", "L1", "--list-to", "2"});
    CHECK(listed.code == 0);
    CHECK(listed.out == "a\naa\nab\n");

    auto table = run({"language", "--name", "L1", "--table"});
    CHECK(table.code == 0);
    CHECK(table.out.find("state") != std::string::npos);
}

TEST_CASE("solve and inflate subcommands") {
    auto solved = run({"solve", "--terms", "6"});
    CHECK(solved.code == 0);
    CHECK(solved.out == "1 2 6 22 88 363\n");

    auto inflated = run({"inflate", "--grid", "g1", "--terms", "5"});
    CHECK(inflated.code == 0);
    CHECK(inflated.out.substr(0, 8) == "0 0 0 2 ");
}

TEST_CASE("deterministic output for fixed flags") {
    auto a = run({"language", "--name", "S3", "--list-to", "6", "--format", "json"});
    auto b = run({"language", "--name", "S3", "--list-to", "6", "--format", "json"});
    CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit with 1") {
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"decode", "--grid", "g9", "--word", "a"}).code == 1);
    CHECK(run({"gf", "--name", "nope"}).code == 1);
    CHECK(run({"decode", "--word", "axe"}).code == 1);
    CHECK(run({}).code == 1);
}

TEST_CASE("help exits cleanly") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("enumerate") != std::string::npos);
}

TEST_CASE("verification report json round-trips") {
    VerificationReport report;
    report.level = "quick";
    report.checks.push_back({7, "decode(G1, bacddb)", "234165", "234165",
                             "published worked example", true, 0.000125});
    report.checks.push_back({1, "class counts", "1,2,6", "1,2,7", "independent brute force",
                             false, 1.5});
    CHECK_FALSE(report.overall());

    auto text = report_to_json(report);
    auto back = report_from_json(text);
    CHECK(report_to_json(back) == text);
    CHECK(back.checks.size() == 2);
    CHECK(back.checks[0].pass);
    CHECK_FALSE(back.checks[1].pass);

    auto rendered = report_to_text(report);
    CHECK(rendered.find("FAIL") != std::string::npos);
    CHECK(rendered.find("expected: 1,2,6") != std::string::npos);
}
