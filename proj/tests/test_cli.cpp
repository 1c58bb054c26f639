#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(FLAGCOH_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const char* kExample = "--lambda 4,3,3,2 --mu 1,4,1,3,1,2 --tableau '2,1,2,2;3,2,4;4,4,6;6,5'";

}  // namespace

TEST_CASE("present") {
    const Run r = run("present --lambda 2,0 --mu 1,1 --family H --format json");
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["hilbert"] == json::parse("[1,1]"));
    CHECK(j["certified"] == true);
    CHECK(j["basis"].size() == 2);
    json e = json::parse(run("present --lambda 2,0 --mu 1,1 --family E").out);
    CHECK(e["family"] == "E");
    e["family"] = "H";
    CHECK(e == j);
}

TEST_CASE("degree of the worked example") {
    Run r = run(std::string("degree ") + kExample);
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["degree"] == 2);
    r = run(std::string("degree ") + kExample + " --format table");
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
    CHECK(run("degree --lambda 4,3,3,1 --mu 1,4,1,3,1,2 --tableau '2,1,2,2;3,2,4;4,4,6;6,5'").code == 2);
}

TEST_CASE("enumerate") {
    Run r = run("enumerate --lambda 1,1 --mu 2,0");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == json::array());
    r = run("enumerate --lambda 2,1 --mu 1,1,1 --semistandard");
    CHECK(json::parse(r.out).size() == 2);
    r = run("enumerate --lambda 2 --mu 1,1 --format dot");
    CHECK(r.code == 0);
    CHECK(r.out.find("n1 -> n0;") != std::string::npos);
}

TEST_CASE("hilbert, components, transfer, basis") {
    Run r = run("hilbert --lambda 2,1 --mu 1,1,1 --format table");
    CHECK(r.code == 0);
    CHECK(r.out.find("1 + 2q^2") != std::string::npos);
    r = run("components --lambda 2,1 --mu 1,1,1");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).size() == 2);
    r = run("transfer --lambda 2 --mu 2");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["shift"] == 2);
    r = run("basis --lambda 2 --mu 1,1 --poly x1 --products");
    CHECK(r.code == 0);
    const json b = json::parse(r.out);
    CHECK(b["normal_form"] == json::parse(R"(["0/1","-1/1"])"));
    CHECK(b["structure_constants"]["integral"] == true);
}

TEST_CASE("verify and sweep") {
    Run r = run("verify --lambda 3,2,1 --mu 1,2,2,1");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["passed"] == true);
    r = run("sweep --d-max 3 --transfer");
    CHECK(r.code == 0);
    int lines = 0;
    std::size_t pos = 0, next;
    while ((next = r.out.find('\n', pos)) != std::string::npos) {
        const json j = json::parse(r.out.substr(pos, next - pos));
        CHECK(j["passed"] == true);
        pos = next + 1;
        ++lines;
    }
    // pairs with d <= 3: 1 + 1 + 7 + 39
    CHECK(lines == 48);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").code == 2);
    CHECK(run("bogus").code == 2);
    CHECK(run("present --lambda 2,x --mu 1,1").code == 2);
    CHECK(run("present --lambda 3 --mu 1,1").code == 2);
    CHECK(run("present --lambda 1,2 --mu 1,2").code == 2);
    CHECK(run("present --lambda 2 --mu 1,1 --family Q").code == 2);
    CHECK(run("basis --lambda 2 --mu 2 --poly x1").code == 2);
    const Run r = run("present --lambda 3 --mu 1,1", true);
    CHECK(r.out.find("different sizes") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
    for (const char* args : {"present --lambda 3,2,1 --mu 2,1,2,1", "components --lambda 3,1,1 --mu 1,2,1,1",
                             "enumerate --lambda 3,2 --mu 2,1,2 --format dot", "sweep --d-max 3"}) {
        const Run a = run(args);
        const Run b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}
