#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const char* bin = std::getenv("NHAIRY_CLI");
    REQUIRE(bin != nullptr);
    std::string cmd = env + " " + std::string(bin) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json strip_walltime(const std::string& s) {
    json j = json::parse(s);
    j.erase("walltime_ms");
    return j;
}

} // namespace

TEST_CASE("zeros --real reports the documented zeros with full schema") {
    RunResult r = run_cli("zeros --a -1 --b -1 --c -0.1 --real 0.01:6 "
                          "--precision 40 --digits 20");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("command") == "zeros");
    CHECK(j.at("params").at("a") == "-1");
    CHECK(j.at("params").at("c") == "-0.1");
    CHECK(j.at("params").at("deriv") == "1");
    CHECK(j.at("settings").at("digits") == 40);
    CHECK(j.contains("diagnostics"));
    CHECK(j.contains("walltime_ms"));
    REQUIRE(j.at("results").size() == 3);
    const json& first = j["results"][0];
    CHECK(first.at("location").at("re").get<std::string>().substr(0, 9) ==
          "2.0977152");
    CHECK(first.at("location").at("im").get<std::string>().substr(0, 1) == "0");
    CHECK(first.at("multiplicity") == 1);
    CHECK(first.contains("residual"));
    CHECK(first.contains("method"));
}

TEST_CASE("identical flags give identical reports modulo walltime") {
    std::string flags = "zeros --a 1 --rays --max-k 2 --precision 40";
    RunResult r1 = run_cli(flags);
    RunResult r2 = run_cli(flags);
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r2.exit_code == 0);
    CHECK(strip_walltime(r1.out) == strip_walltime(r2.out));
}

TEST_CASE("laurent-walk marches and reports its diagnostic") {
    RunResult r = run_cli("laurent-walk --a -1 --b -1 --c -0.1 --steps 2 "
                          "--terms 80 --precision 40");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j.at("results").size() == 3); // origin + two steps
    CHECK(j["results"][1].at("re").get<std::string>().substr(0, 9) ==
          "2.0977152");
    CHECK(j["results"][2].at("re").get<std::string>().substr(0, 9) ==
          "3.7233151");
    CHECK(j.at("diagnostics")[0] == "converged");
}

TEST_CASE("table-za csv output is flat RFC 4180") {
    RunResult r = run_cli("table-za --max-k 3 --format csv --precision 40");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("\r\n") != std::string::npos);
    // alphabetical key order from the object serialization
    CHECK(r.out.rfind("asymptotic,exact,k,rel_error\r\n", 0) == 0);
    // four lines: header + three rows
    int lines = 0;
    for (size_t pos = 0; (pos = r.out.find("\r\n", pos)) != std::string::npos;
         pos += 2)
        ++lines;
    CHECK(lines == 4);
}

TEST_CASE("verify --check scorer passes and reports the residual row") {
    RunResult r = run_cli("verify --check scorer --precision 40");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j.at("results").size() == 1);
    CHECK(j["results"][0].at("check") == "scorer");
    CHECK(j["results"][0].at("pass") == true);
}

TEST_CASE("point evaluations") {
    RunResult h = run_cli("hyp1f2 --x 0 --precision 40 --digits 10");
    REQUIRE(h.exit_code == 0);
    json jh = json::parse(h.out);
    CHECK(jh.at("results")[0].at("re").get<std::string>().substr(0, 1) == "1");
    RunResult s = run_cli("scorer --kind Gi --z 0 --precision 40 --digits 20");
    REQUIRE(s.exit_code == 0);
    json js = json::parse(s.out);
    CHECK(js.at("results")[0].at("re").get<std::string>().substr(0, 9) ==
          "0.2049755");
}

TEST_CASE("invalid flags exit with code 2") {
    CHECK(run_cli("zeros --a 1 --precision 40").exit_code == 2); // no range/rays
    CHECK(run_cli("zeros --real nonsense --precision 40").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("zeros --real 0:1 --format yaml").exit_code == 2);
    CHECK(run_cli("verify --check no-such-check --precision 40").exit_code == 2);
}

TEST_CASE("NHAIRY_DIGITS overrides the working precision") {
    RunResult r = run_cli("hyp1f2 --x 0.5", "NHAIRY_DIGITS=55");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("settings").at("digits") == 55);
}
