#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& stdin_text = "") {
    std::string cmd;
    if (!stdin_text.empty()) cmd = "printf '" + stdin_text + "' | ";
    cmd += std::string(DOMEX_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("analyze reports values and excellence") {
    const Run r = run("analyze FhCKG");
    CHECK(r.code == 0);
    const auto j = json_of(r);
    CHECK(j.contains("tool_version"));
    CHECK(j["input"] == "FhCKG");
    REQUIRE(j["results"].size() == 1);
    const auto& g = j["results"][0];
    CHECK(g["order"] == 7);
    CHECK(g["params"][0]["param"] == "gamma");
    CHECK(g["params"][0]["value"] == 3);
    CHECK(g["params"][0]["excellent"] == true);

    const auto p3 = json_of(run("analyze Bg --param gamma_t"));
    CHECK(p3["results"][0]["params"][0]["value"] == 2);

    const auto k1 = json_of(run("analyze @ --param gamma_t"));
    CHECK(k1["results"][0]["params"][0]["error"] == "parameter undefined");

    const Run multi = run("analyze - --param gamma --param beta0", "Bw\\nBg\\n");
    CHECK(multi.code == 0);
    CHECK(json_of(multi)["results"].size() == 2);
    CHECK(json_of(multi)["results"][1]["params"][1]["value"] == 2);
}

TEST_CASE("bad input exits with 2") {
    CHECK(run("analyze B!").code == 2);
    CHECK(run("analyze Bw --param nonsense").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("gen regular 9 3").code == 2);
    CHECK(run("analyze - ", "Bw\\nB!\\n").code == 2);
    CHECK(run("family @ --param gamma_t").code == 2);
    CHECK(run("convert Bw --to dot").code == 2);
}

TEST_CASE("family") {
    const Run r = run("family FhCKG");
    CHECK(r.code == 0);
    const auto j = json_of(r);
    CHECK(j["results"][0]["members"].size() == 4);
    for (const auto& m : j["results"][0]["members"]) CHECK(m["witnesses"].size() == 7);

    const auto p3 = json_of(run("family Bg"));
    CHECK(p3["results"][0]["excellent"] == false);
    CHECK(p3["results"][0]["members"].empty());
}

TEST_CASE("gen") {
    CHECK(lines(run("gen trees 4").out) == 2);
    CHECK(lines(run("gen regular 9 4").out) == 16);
    CHECK(lines(run("gen all 3").out) == 4);
    CHECK(lines(run("gen all 3 --connected").out) == 2);
    const auto j = json_of(run("--output json gen all 3"));
    CHECK(j["results"].size() == 4);
    CHECK(j["results"][0].contains("canonical"));
}

TEST_CASE("search") {
    const Run none = run("search regular:10:5 --where gamma=3");
    CHECK(none.code == 0);
    CHECK(json_of(none)["results"].empty());

    const Run some = run("search all-connected:4 --where gamma=1");
    CHECK(some.code == 0);
    CHECK(json_of(some)["results"].size() == 4);

    const Run piped = run("search - --where gamma=1", "Bw\\nBg\\nBW\\n");
    CHECK(piped.code == 0);
    CHECK(json_of(piped)["results"].size() == 2);
}

TEST_CASE("convert") {
    CHECK(run("convert Bg --to adjlist").out == "Graph, order 3.\n0 : 1;\n1 : 0 2;\n2 : 1;\n\n");
    CHECK(run("convert Bg --to edges").out == "3: 0-1 1-2\n");
    CHECK(run("convert - --from adjlist --base 1", "1 : 2;\\n2 : 1 3;\\n3 : 2;\\n").out == "Bg\n");
}

TEST_CASE("verify") {
    const Run r = run("verify --suite quick");
    CHECK(r.code == 0);
    const auto j = json_of(r);
    CHECK(j["input"] == "suite:quick");
    for (const auto& c : j["results"]) {
        CHECK(c.contains("claim_id"));
        CHECK(c["status"] == "pass");
        CHECK_FALSE(c.contains("runtime_ms"));
    }
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
    CHECK(run("family FhCKG").out == run("family FhCKG").out);
    CHECK(run("--jobs 1 search regular:9:4 --excellent-for Bw").out ==
          run("--jobs 4 search regular:9:4 --excellent-for Bw").out);
    CHECK(run("--jobs 1 verify --suite quick").out == run("--jobs 3 verify --suite quick").out);
}
