#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "capelli/suite.hpp"

using namespace capelli;

namespace {

Json stable(Json j) {
    j.erase("startedAt");
    for (auto& r : j["reports"]) r.erase("wallMillis");
    return j;
}

int cli(const std::string& args) {
    std::string cmd = std::string(NC_CAPELLI_BIN) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string cli_output(const std::string& args) {
    std::string cmd = std::string(NC_CAPELLI_BIN) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[256];
    while (fgets(buf, sizeof buf, pipe)) out += buf;
    pclose(pipe);
    return out;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("plan_suite") {
    SuiteConfig c;
    c.selection = {"capelli.plain"};
    auto jobs = plan_suite(c);
    REQUIRE(jobs.size() == 2);
    CHECK(jobs[0].params["n"] == 1);
    CHECK(jobs[1].params["n"] == 2);

    c.selection = {"foo"};
    CHECK_THROWS_AS(plan_suite(c), ConfigError);
    c.selection = {"capelli.plain"};
    c.max_n = 4;
    CHECK_THROWS_AS(plan_suite(c), ConfigError);

    c.max_n = 0;
    c.selection = {"decomplex.square.plain"};
    c.signs = SignSelection::plus;
    CHECK(plan_suite(c).size() == 2);
    c.signs = SignSelection::both;
    CHECK(plan_suite(c).size() == 4);
}

TEST_CASE("every registered id plans at least one job") {
    for (auto& id : verifier_ids()) {
        SuiteConfig c;
        c.selection = {id};
        CHECK_MESSAGE(!plan_suite(c).empty(), id);
    }
}

TEST_CASE("report json round-trips") {
    SuiteConfig c;
    c.selection = {"local.coronfact", "cayley.radial"};
    auto result = run_suite(c);
    REQUIRE(!result.reports.empty());
    for (auto& r : result.reports) {
        auto back = report_from_json(Json::parse(to_json(r).dump()));
        CHECK(back == r);
    }
    auto doc = suite_json(c, result, utc_timestamp());
    CHECK(doc["version"] == "1");
    CHECK(doc["reports"].size() == result.reports.size());
}

TEST_CASE("output does not depend on the worker count") {
    SuiteConfig c;
    c.selection = {"capelli.plain", "local.holfactpsi", "css.implications", "cayley.classical"};
    c.workers = 1;
    auto one = suite_json(c, run_suite(c), "t");
    c.workers = 3;
    auto three = suite_json(c, run_suite(c), "t");
    CHECK(stable(one).dump() == stable(three).dump());
}

TEST_CASE("workers fall back to the environment") {
    SuiteConfig c;
    setenv("NC_CAPELLI_WORKERS", "4", 1);
    CHECK(resolve_workers(c) == 4);
    c.workers = 2;
    CHECK(resolve_workers(c) == 2);
    unsetenv("NC_CAPELLI_WORKERS");
}

TEST_CASE("conditional reports only fail in strict mode") {
    VerificationReport r;
    r.conditional = true;
    r.fail("x");
    CHECK_FALSE(report_counts_as_failure(r, false));
    CHECK(report_counts_as_failure(r, true));
}

TEST_CASE("exit codes") {
    CHECK(cli("run --suite capelli.plain") == 0);
    CHECK(cli("run --suite foo") == 2);
    CHECK(cli("run --max-n 7") == 2);
    CHECK(cli("expand --ring weyl \"dx11 *\"") == 2);
    CHECK(cli("list") == 0);
}

TEST_CASE("run writes the json report") {
    std::string path = "cli_test_report.json";
    REQUIRE(cli("run --suite capelli.plain,capelli.turnbull --json " + path) == 0);
    std::ifstream in(path);
    auto doc = Json::parse(in);
    CHECK(doc["reports"].size() == 4);
    CHECK(doc["reports"][0]["id"] == "capelli.plain");
    std::remove(path.c_str());
}

TEST_CASE("expand") {
    CHECK(cli_output("expand --ring weyl \"dx11 * x11\"") == "x11*dx11 + 1\n");
    CHECK(cli_output("expand --ring gl2 \"E12*E21\"") == "E21*E12 + E11 - E22\n");
    CHECK(cli_output("expand --ring swap:bar \"psi_bar * psi\"") == "-psi*psi_bar\n");
}

}
