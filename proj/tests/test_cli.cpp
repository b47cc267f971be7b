#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "mayachain/serialize.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(MAYACHAIN_CLI_PATH) + " " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("enumerate") {
    const RunResult r = run("enumerate --p 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("k = 1: (5)") != std::string::npos);
    CHECK(r.output.find("k = 3: (3,1,1) (1,3,1) (1,1,3)") != std::string::npos);
    CHECK(r.output.find("k = 5: (1,1,1,1,1)") != std::string::npos);

    const RunResult r3 = run("enumerate --p 3");
    CHECK(r3.exit_code == 0);
    CHECK(r3.output.find("k = 1: (3)") != std::string::npos);
    CHECK(r3.output.find("k = 3: (1,1,1)") != std::string::npos);

    CHECK(run("enumerate --p 4").exit_code == 2);
    CHECK(run("enumerate").exit_code == 2);
    CHECK(run("enumerate --p 5 --k 2").exit_code == 2);

    const RunResult rk = run("enumerate --p 5 --k 3");
    CHECK(rk.exit_code == 0);
    CHECK(rk.output.find("k = 3:") != std::string::npos);
    CHECK(rk.output.find("k = 1:") == std::string::npos);

    const RunResult rc = run("enumerate --p 3 --max-entry 4");
    CHECK(rc.exit_code == 0);
    CHECK(rc.output.find("(3)[6]") != std::string::npos);  // C(4,2) = 6
}

TEST_CASE("solve handles period 3") {
    const RunResult r = run("solve --sig 1,1,1 --n 2,1 --perm 1,2,0 --verify");
    REQUIRE(r.exit_code == 0);
    const mayachain::Json j = mayachain::Json::parse(r.output);
    CHECK(j.at("painleve").at("n") == 1);
    CHECK(j.at("cycle").at("k") == 3);
    CHECK(j.at("verification").at("painleve").at("all_pass") == true);
}

TEST_CASE("solve reproduces the worked example and verifies") {
    const RunResult r = run("solve --sig 5 --n 2,3,1,1 --perm 3,4,2,1,0 --verify");
    REQUIRE(r.exit_code == 0);
    const mayachain::Json j = mayachain::Json::parse(r.output);
    CHECK(j.at("painleve").at("alpha") ==
          mayachain::Json::array({"1", "-2", "-3", "-2", "7"}));
    CHECK(j.at("painleve").at("c_squared") == "-1/2");
    CHECK(j.at("cycle").at("flip_sites") == mayachain::Json::array({6, 7, 5, 2, 0}));
    CHECK(j.at("verification").at("chain").at("all_pass") == true);
    CHECK(j.at("verification").at("painleve").at("all_pass") == true);
}

TEST_CASE("solve rejects bad input with usage exit code") {
    CHECK(run("solve --sig 4 --n 1,1,1 --perm 2,1,0").exit_code == 2);
    CHECK(run("solve --sig 5 --n 2,3,1,1 --perm 1,2,3,4,0 --badflag").exit_code == 2);
    // permutation not ending in 0 requires the escape flag
    CHECK(run("solve --sig 5 --n 2,3,1,1 --perm 0,4,2,1,3").exit_code == 2);
    CHECK(run("solve --sig 5 --n 2,3,1,1 --perm 0,4,2,1,3 --allow-any-perm --verify").exit_code ==
          0);
}

TEST_CASE("degenerate solve closes and verifies") {
    const RunResult r = run("solve --sig 5 --n 1,1,2,0 --perm 4,2,1,3,0 --verify");
    CHECK(r.exit_code == 0);
}

TEST_CASE("solve output is deterministic") {
    const RunResult a = run("solve --sig 1,1,3 --n 3,1,1,2 --perm 4,1,2,3,0");
    const RunResult b = run("solve --sig 1,1,3 --n 3,1,1,2 --perm 4,1,2,3,0");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());
}

TEST_CASE("render flag draws the diagram cycle") {
    const RunResult r =
        run("solve --sig 5 --n 2,3,1,1 --perm 3,4,2,1,0 --render --out /dev/null", true);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("M_0  #|..###.#..   flip 6") != std::string::npos);
    CHECK(r.output.find("M_5  #|#..###.#.") != std::string::npos);

    const RunResult w = run("wronskian --blocks 0,2,5,6,7 --render", true);
    CHECK(w.exit_code == 0);
    CHECK(w.output.find("#|..###.#.") != std::string::npos);
}

TEST_CASE("wronskian command") {
    const RunResult r = run("wronskian --blocks 0,2,5,6,7");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("Wr(H_2,H_3,H_4,H_6)") != std::string::npos);

    const RunResult rs = run("wronskian --sig 1,1,3 --n 3,1,1,2");
    CHECK(rs.exit_code == 0);
    CHECK(rs.output.find("Wr(H_1,H_2,H_4,H_7,H_8,H_11)") != std::string::npos);

    const RunResult rk = run("wronskian --blocks '0|3|1,2,4'");
    CHECK(rk.exit_code == 0);
    CHECK(rk.output.find("Wr(H_1,H_2,H_4,H_7,H_8,H_11)") != std::string::npos);

    CHECK(run("wronskian").exit_code == 2);
}

TEST_CASE("roots command") {
    // Wr[H_1] = 2z: a single root at the origin
    const RunResult r = run("roots --sig 5 --n 1,1,0,0 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("re,im\n", 0) == 0);
    CHECK(r.output.find("0.0") != std::string::npos);

    const RunResult a = run("roots --sig 1,1,3 --n 3,1,1,2 --format csv");
    const RunResult b = run("roots --sig 1,1,3 --n 3,1,1,2 --format csv");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    const RunResult svg = run("roots --sig 5 --n 2,2,1,1 --format svg");
    CHECK(svg.exit_code == 0);
    CHECK(svg.output.find("<svg") == 0);

    CHECK(run("roots --sig 5 --n 0,0,0,0").exit_code == 2);  // constant polynomial
    CHECK(run("roots --sig 5 --n 1,1,0,0 --format tsv").exit_code == 2);
}

TEST_CASE("verify command round trip") {
    const std::string path = "/tmp/mayachain_cli_test_solution.json";
    const RunResult solve =
        run("solve --sig 1,1,1,1,1 --n 2,3,0,1 --perm 3,2,4,1,0 --out " + path);
    REQUIRE(solve.exit_code == 0);

    const RunResult ok = run("verify --in " + path);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("\"all_pass\": true") != std::string::npos);

    // tamper with one alpha and expect exit 1
    std::ifstream in(path);
    mayachain::Json j = mayachain::Json::parse(in);
    in.close();
    j["painleve"]["alpha"][0] = "3";
    std::ofstream out(path);
    out << j.dump(2);
    out.close();
    const RunResult bad = run("verify --in " + path);
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("\"all_pass\": false") != std::string::npos);

    CHECK(run("verify --in /nonexistent.json").exit_code == 2);
    std::remove(path.c_str());
}
