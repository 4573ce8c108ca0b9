#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

using json = nlohmann::json;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CUBES_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("count: plain output and exit codes") {
    RunResult r = run("count --n 3 --t 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4\n");

    CHECK(run("count --n 13 --t 3").out == "0\n");
    CHECK(run("count --n 8 --t 2").exit_code == 2);  // infinite family
    CHECK(run("count --n 3").exit_code == 1);        // missing --t
    CHECK(run("count --n abc --t 3").exit_code == 1);
    CHECK(run("nonsense").exit_code == 1);
}

TEST_CASE("count: json envelope and byte round-trip") {
    RunResult r = run("count --n 3 --t 3 --json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["cmd"] == "count");
    CHECK(j["input"]["n"] == "3");
    CHECK(j["input"]["t"] == "3");
    CHECK(j["result"]["kind"] == "finite");
    CHECK(j["result"]["count"] == "4");

    std::string rebuilt = std::string("count --n ") + j["input"]["n"].get<std::string>() +
                          " --t " + j["input"]["t"].get<std::string>() + " --json";
    RunResult again = run(rebuilt);
    CHECK(again.out == r.out);
}

TEST_CASE("count: empty reasons surface in json") {
    json j = json::parse(run("count --n 13 --t 1 --json").out);
    CHECK(j["result"]["kind"] == "empty");
    CHECK(j["result"]["count"] == "0");
    CHECK(j["result"]["reason"] == "mod9_obstruction");
}

TEST_CASE("enumerate: plain and json") {
    RunResult r = run("enumerate --n 3 --t 3");
    CHECK(r.out == "-5 4 4\n1 1 1\n4 -5 4\n4 4 -5\n");

    json j = json::parse(run("enumerate --n 3 --t 3 --json").out);
    CHECK(j["result"]["count"] == "4");
    REQUIRE(j["result"]["triples"].size() == 4);
    CHECK(j["result"]["triples"][1] == json::array({"1", "1", "1"}));
    CHECK(run("enumerate --n 8 --t 2").exit_code == 2);
}

TEST_CASE("band: json carries the infinite heights") {
    json j = json::parse(run("band --n 8 --j 2 --json").out);
    CHECK(j["result"]["count"] == "0");
    CHECK(j["result"]["infinite_heights"] == json::array({"2"}));

    RunResult plain = run("band --n 2 --j 2");
    CHECK(plain.out == "3\n");
}

TEST_CASE("zero and reduced") {
    CHECK(run("zero --n 90").out == "12\n");
    CHECK(run("zero --n 720").out == "18\n");
    CHECK(run("zero --n 0").exit_code == 2);
    CHECK(run("reduced --n 36").out == "6\n");
    CHECK(run("reduced --n 1").out == "0\n");
}

TEST_CASE("records: csv rows and json lines") {
    RunResult csv = run("records --limit 100 --csv");
    CHECK(csv.out.find("n,count,is_new_max\n") == 0);
    CHECK(csv.out.find("90,12,true\n") != std::string::npos);
    CHECK(csv.out.find("18,6,true\n") != std::string::npos);

    // default output is the same csv
    CHECK(run("records --limit 100").out == csv.out);

    RunResult jl = run("records --limit 200 --json");
    bool saw_90 = false;
    std::size_t start = 0;
    while (start < jl.out.size()) {
        std::size_t end = jl.out.find('\n', start);
        if (end == std::string::npos) break;
        json row = json::parse(jl.out.substr(start, end - start));
        if (row["n"] == "90") {
            saw_90 = true;
            CHECK(row["count"] == "12");
            CHECK(row["is_new_max"] == true);
        }
        start = end + 1;
    }
    CHECK(saw_90);
    CHECK(run("records --limit 100 --csv --json").exit_code == 1);  // mutually exclusive
}

TEST_CASE("records: deterministic under --threads") {
    RunResult a = run("records --limit 20000 --csv --threads 1");
    RunResult b = run("records --limit 20000 --csv --threads 3");
    CHECK(a.out == b.out);
}

TEST_CASE("family csv") {
    RunResult r = run("family --nu 3");
    CHECK(r.out.find("nu,p,p1,n,A,B,C\n") == 0);
    CHECK(r.out.find("1,2,3,36,2,3,-6\n") != std::string::npos);
    CHECK(r.out.find("3,5,7,455,5,7,-13\n") != std::string::npos);
}

TEST_CASE("abc json lines carry the spec fields in order") {
    RunResult r = run("abc --xmax 100 --top 5 --json");
    REQUIRE(r.exit_code == 0);
    std::size_t end = r.out.find('\n');
    REQUIRE(end != std::string::npos);
    std::string first = r.out.substr(0, end);
    json j = json::parse(first);
    CHECK(j.contains("x"));
    CHECK(j.contains("rad"));
    CHECK(j.contains("q"));
    CHECK(j.contains("implied_C"));
    // fixed key order in the emitted bytes
    CHECK(first.find("\"x\"") < first.find("\"y\""));
    CHECK(first.find("\"y\"") < first.find("\"z\""));
    CHECK(first.find("\"z\"") < first.find("\"n\""));
    CHECK(first.find("\"n\"") < first.find("\"rad\""));
    CHECK(first.find("\"rad\"") < first.find("\"q\""));
    CHECK(first.find("\"q\"") < first.find("\"implied_C\""));

    // deterministic output
    CHECK(run("abc --xmax 100 --top 5 --json").out == r.out);
}

TEST_CASE("sigma-ratio and robin") {
    RunResult sr = run("sigma-ratio --n 5041");
    CHECK(sr.out.find("sigma1=5113") != std::string::npos);
    CHECK(sr.out.find("2.6573342284") != std::string::npos);
    CHECK(sr.out.find("in_S=false") != std::string::npos);
    CHECK(run("sigma-ratio --n 5040").exit_code == 2);

    RunResult rb = run("robin --from 5000 --to 5100");
    CHECK(rb.exit_code == 0);
    CHECK(rb.out.find("n=5040") != std::string::npos);
    CHECK(rb.out.find("claim-range violations: 0") != std::string::npos);
}

TEST_CASE("verify suites run through the cli") {
    CHECK(run("verify --suite theorem5").exit_code == 0);
    CHECK(run("verify --suite lemma1 --fast").exit_code == 0);
    CHECK(run("verify --suite nosuch").exit_code == 1);
}
