// Integration tests against the built command-line binary. The path comes
// from the LGENUS_CLI environment variable (set by the ctest registration);
// without it the suite is skipped.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

const char* cli_path() { return std::getenv("LGENUS_CLI"); }

CmdResult run_cli(const std::string& args) {
    CmdResult res;
    std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("lgenus_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

#define REQUIRE_CLI()                          \
    if (!cli_path()) {                         \
        SKIP("LGENUS_CLI not set; skipping");  \
    }

TEST_CASE("failing scan exits 1 and names the witness", "[cli]") {
    REQUIRE_CLI();
    CmdResult r = run_cli("scan --mode conjecture211 --m 1 --d 1");
    CHECK(r.exit_code == 1);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "fail");
    REQUIRE(j["failures"].size() == 1);
    CHECK(j["failures"][0]["j"] == 1);
    CHECK(j["failures"][0]["coefficient"] == "1");
    CHECK(j["failures"][0]["cell"] == "m=1,d=1");
    CHECK(j["failures"][0]["side_condition_holds"] == false);
}

TEST_CASE("usage errors exit 2", "[cli]") {
    REQUIRE_CLI();
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("lpn --no-such-flag 3").exit_code == 2);
    CHECK(run_cli("scan --mode nonsense --m 1").exit_code == 2);
    CHECK(run_cli("spectrum --a 2,1,2").exit_code == 2);     // exponent < 2
    CHECK(run_cli("t3 --n 3 --d 4 --sing 2,2,2").exit_code == 2); // germ dim mismatch
}

TEST_CASE("corrupt checkpoint exits 2", "[cli]") {
    REQUIRE_CLI();
    TempDir tmp;
    std::string ckpt = (tmp.path / "bad.ckpt").string();
    std::ofstream(ckpt) << "garbage line\n";
    CmdResult r = run_cli("scan --mode conjecture27 --m 1:3 --checkpoint " + ckpt);
    CHECK(r.exit_code == 2);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "error");
}

TEST_CASE("identical invocations produce byte-identical reports", "[cli]") {
    REQUIRE_CLI();
    CmdResult a = run_cli("lci --m 2 --d 3,4");
    CmdResult b = run_cli("lci --m 2 --d 3,4");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("csv output is a header plus one row per coefficient", "[cli]") {
    REQUIRE_CLI();
    CmdResult r = run_cli("lpn --n 4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "j,coefficient\n0,1\n1,5/3\n2,1\n");
}

TEST_CASE("spectral pairs written by spectrum feed back into t3", "[cli]") {
    REQUIRE_CLI();
    TempDir tmp;
    std::string pairs = (tmp.path / "node.json").string();
    CmdResult w = run_cli("spectrum --a 2,2,2 --pairs-out " + pairs);
    CHECK(w.exit_code == 0);

    CmdResult direct = run_cli("t3 --n 2 --d 4 --sing 2,2,2");
    CmdResult via_file = run_cli("t3 --n 2 --d 4 --sing-file " + pairs);
    CHECK(direct.exit_code == 0);
    CHECK(via_file.exit_code == 0);
    auto dj = nlohmann::json::parse(direct.out);
    auto fj = nlohmann::json::parse(via_file.out);
    CHECK(dj["results"] == fj["results"]);
}

TEST_CASE("join command matches the composite germ", "[cli]") {
    REQUIRE_CLI();
    CmdResult joined = run_cli("join --a 2,2 --b 2,2");
    CmdResult whole = run_cli("spectrum --a 2,2,2,2");
    CHECK(joined.exit_code == 0);
    auto jj = nlohmann::json::parse(joined.out);
    auto wj = nlohmann::json::parse(whole.out);
    CHECK(jj["results"] == wj["results"]);
}

TEST_CASE("sigmatilde over the basic germs", "[cli]") {
    REQUIRE_CLI();
    auto value = [](const std::string& args) {
        CmdResult r = run_cli(args);
        REQUIRE(r.exit_code == 0);
        return nlohmann::json::parse(r.out)["results"][0]["sigma_tilde"].get<long long>();
    };
    CHECK(value("sigmatilde --a 2,2,2") == 0);
    CHECK(value("sigmatilde --a 2,2,2,2") == -1);
    CHECK(value("sigmatilde --a 3,3,3") == 0);
}

TEST_CASE("out flag writes the report to a file", "[cli]") {
    REQUIRE_CLI();
    TempDir tmp;
    std::string out = (tmp.path / "report.json").string();
    CmdResult r = run_cli("genfun --m 1 --d 4 --out " + out);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(out);
    auto j = nlohmann::json::parse(in);
    CHECK(j["results"][0]["signature"] == "-16");
}
