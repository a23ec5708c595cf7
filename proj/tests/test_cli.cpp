#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(TWOMIS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) result.out.append(buf.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("analyze a C_4 given inline") {
    RunResult r = run("analyze Cr --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"alpha\": 2") != std::string::npos);
    CHECK(r.out.find("\"konig_egervary\": true") != std::string::npos);
    CHECK(r.out.find("\"verdict\": \"yes\"") != std::string::npos);
}

TEST_CASE("analyze edge-list input from a file") {
    std::string path = "cli_test_edges.txt";
    std::ofstream(path) << "n 4\n0 1\n1 2\n2 3\n3 0\n";
    RunResult r = run("analyze " + path + " --format edges");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("alpha=2") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("parse failures exit with 2") {
    CHECK(run("analyze '{{{'").exit_code == 2);
    CHECK(run("decide '~??@'").exit_code == 2);
}

TEST_CASE("caps exceed exits with 3 for analyze") {
    // C_5 with max-n 3: enumeration-backed fields are skipped
    RunResult r = run("analyze Dhc --max-n 3 --json");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("\"skipped\"") != std::string::npos);
    CHECK(r.out.find("\"alpha\": null") != std::string::npos);

    // an already-expired time budget skips enumeration stages the same way
    RunResult t = run("analyze Dhc --timeout-seconds 0.000001 --json");
    CHECK(t.exit_code == 3);
    CHECK(t.out.find("\"skipped\"") != std::string::npos);

    // decide never returns a partial verdict: K_4 over the cap is a hard error
    CHECK(run("decide C~ --max-n 3").exit_code == 3);
}

TEST_CASE("decide emits validated certificates and respects strategy") {
    RunResult yes = run("decide Cr");
    CHECK(yes.exit_code == 0);
    CHECK(yes.out.find("\"verdict\": \"yes\"") != std::string::npos);
    CHECK(yes.out.find("\"certificate_valid\": true") != std::string::npos);

    RunResult forced = run("decide Dhc --strategy unicyclic");
    CHECK(forced.exit_code == 0);
    CHECK(forced.out.find("\"strategy\": \"unicyclic\"") != std::string::npos);

    // K_4 is not unicyclic: strategy mismatch
    CHECK(run("decide C~ --strategy unicyclic").exit_code == 4);
}

TEST_CASE("generate families") {
    CHECK(run("generate cycle 5").out == "Dhc\n");
    RunResult corona = run("generate corona-k1 cycle 5");
    CHECK(corona.exit_code == 0);
    CHECK(corona.out == "IheA@?OA?\n");
    RunResult f3 = run("generate friendship 3");
    CHECK(f3.exit_code == 0);
    CHECK(run("generate bogus 3").exit_code == 2);
}

TEST_CASE("verify runs a small suite") {
    std::string catalog = std::string(TWOMIS_DATA_DIR) + "/graphs_upto8.g6";
    RunResult r = run("verify corona --nmax 3 --catalog " + catalog + " --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"pass\": true") != std::string::npos);
    CHECK(run("verify bogus --catalog " + catalog).exit_code == 2);
}

TEST_CASE("search honors config files and exit codes") {
    std::string cfg_path = "cli_test_search.cfg";
    std::ofstream(cfg_path) << "family odd-cycles\nnmax 9\nbudget 10\n";
    RunResult r = run("search " + cfg_path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"counterexamples\": []") != std::string::npos);
    std::remove(cfg_path.c_str());

    std::ofstream(cfg_path) << "family gnp\nnmax 7\nbudget 0\nseed 9\n";
    RunResult empty = run("search " + cfg_path);
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.find("\"examined\": 0") != std::string::npos);
    std::remove(cfg_path.c_str());

    CHECK(run("search /missing.cfg").exit_code == 2);
}

TEST_CASE("dot output") {
    RunResult r = run("analyze Cr --dot");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("graph G {") != std::string::npos);
    CHECK(r.out.find("--") != std::string::npos);
}
