#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

// End-to-end runs of the command-line tool. The binary location comes from
// the build via ALTEMBED_CLI; skip quietly when absent.

namespace {

std::string cli_path() {
    const char* p = std::getenv("ALTEMBED_CLI");
    return p ? p : "";
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null > /tmp/altembed_cli_out.json";
    int rc = std::system(cmd.c_str());
    std::ifstream in("/tmp/altembed_cli_out.json");
    std::ostringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

}  // namespace

TEST_CASE("cli: planar, membership, verify, surgery round trip") {
    if (cli_path().empty()) return;
    write_file("/tmp/alt_k5.tg", "5 0 1\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    RunResult planar = run("planar /tmp/alt_k5.tg");
    CHECK(planar.exit_code == 0);
    CHECK(planar.out.find("\"planar\": false") != std::string::npos);
    CHECK(planar.out.find("k5_subdivision") != std::string::npos);

    RunResult mem = run("membership /tmp/alt_k5.tg --decider=all --check-witness");
    CHECK(mem.exit_code == 0);
    CHECK(mem.out.find("\"member\": true") != std::string::npos);

    RunResult ver = run("verify /tmp/alt_k5.tg");
    CHECK(ver.exit_code == 0);
    CHECK(ver.out.find("\"is_obstruction\": false") != std::string::npos);

    RunResult sur = run("surgery /tmp/alt_k5.tg --check-witness");
    CHECK(sur.exit_code == 0);
    CHECK(sur.out.find("\"euler_genus\": 0") != std::string::npos);

    // reports are byte-stable across runs
    RunResult mem2 = run("membership /tmp/alt_k5.tg --decider=all --check-witness");
    CHECK(mem.out == mem2.out);
}

TEST_CASE("cli: graph6 ingestion and budget exit code") {
    if (cli_path().empty()) return;
    write_file("/tmp/alt_k5.g6", "D~{\nterminals: 0 1\n");
    RunResult g = run("genus /tmp/alt_k5.g6");
    CHECK(g.exit_code == 0);
    CHECK(g.out.find("\"genus\": 1") != std::string::npos);

    RunResult tiny = run("genus /tmp/alt_k5.g6 --budget 2");
    CHECK(tiny.exit_code == 2);

    write_file("/tmp/alt_bad.tg", "this is not a graph\n");
    RunResult bad = run("planar /tmp/alt_bad.tg");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("cli: catalog lists the builtin obstructions") {
    if (cli_path().empty()) return;
    RunResult cat = run("catalog");
    CHECK(cat.exit_code == 0);
    CHECK(cat.out.find("Pentagon") != std::string::npos);
    CHECK(cat.out.find("sum_K33non_K33non") != std::string::npos);
}
