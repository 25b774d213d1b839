// End-to-end checks of the command-line tool: documented verdicts, exit
// codes, and byte-stable reports.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "locaut_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run(const std::string& args) {
    fs::path out = scratch_dir() / "stdout.txt";
    std::string cmd = std::string(LOCAUT_CLI_PATH) + " " + args + " > " +
                      out.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, read_file(out)};
}

const char* kDelta2Mu2 =
    R"({"n":2,"M":[["0","1/2","0"],["2","0","0"],["0","0","1"]]})";

} // namespace

TEST_CASE("classify-sl2 on the anti-automorphism normal form") {
    fs::path map = scratch_dir() / "delta2.json";
    write_file(map, kDelta2Mu2);
    auto result = run("classify-sl2 --map " + map.string());
    CHECK(result.exit_code == 0);
    CHECK(result.stdout_text.find("\"anti-automorphism\"") != std::string::npos);
    CHECK(result.stdout_text.find("\"recognized\"") != std::string::npos);
}

TEST_CASE("classify-sl2 rejects malformed input") {
    fs::path map = scratch_dir() / "bad.json";
    write_file(map, R"({"n":2,"M":[["1","0"],["0","1"]]})");
    CHECK(run("classify-sl2 --map " + map.string()).exit_code == 1);
    write_file(map, R"({"n":2,"M":[["1/0","0","0"],["0","1","0"],["0","0","1"]]})");
    CHECK(run("classify-sl2 --map " + map.string()).exit_code == 1);
    CHECK(run("classify-sl2 --map " + (scratch_dir() / "missing.json").string())
              .exit_code == 1);
}

TEST_CASE("counterexample demo") {
    auto result = run("counterexample --n 3 --alpha 1");
    CHECK(result.exit_code == 0);
    CHECK(result.stdout_text.find("\"identities_verified\": true") != std::string::npos);
    CHECK(result.stdout_text.find("\"basis_certified\": true") != std::string::npos);
    CHECK(result.stdout_text.find("\"rank_of_delta_squared_image\": 2") !=
          std::string::npos);
    CHECK(result.stdout_text.find("\"not a local automorphism\"") != std::string::npos);
}

TEST_CASE("refute on a member is inconclusive with exit code 2") {
    // Conjugation by [[1,0],[1,1]] in the (e, f, h) basis.
    fs::path map = scratch_dir() / "inner.json";
    write_file(map,
               R"({"n":2,"M":[["1","0","0"],["-1","0","2"],["1","0","1"],)"
               R"(["0","0","0"]]})");
    // Dimension check should reject the malformed map above.
    CHECK(run("refute --map " + map.string()).exit_code == 1);

    write_file(map, R"({"n":2,"M":[["1","0","0"],["-1","1","-2"],["1","0","1"]]})");
    auto result = run("refute --map " + map.string() + " --budget 10");
    CHECK(result.exit_code == 2);
    CHECK(result.stdout_text.find("\"inconclusive\"") != std::string::npos);
}

TEST_CASE("certify emits verifiable reports and is byte-stable") {
    fs::path map = scratch_dir() / "delta2b.json";
    write_file(map, kDelta2Mu2);
    auto first = run("certify --map " + map.string() + " --seed 0");
    auto second = run("certify --map " + map.string() + " --seed 0");
    CHECK(first.exit_code == 0);
    CHECK(first.stdout_text == second.stdout_text);
    CHECK(first.stdout_text.find("\"certified-on-set\"") != std::string::npos);
}

TEST_CASE("witness subcommand") {
    fs::path x = scratch_dir() / "x.json", y = scratch_dir() / "y.json";
    write_file(x, R"([["0","1"],["0","0"]])");
    write_file(y, R"([["0","0"],["1","0"]])");
    auto similar = run("witness --x " + x.string() + " --y " + y.string());
    CHECK(similar.exit_code == 0);
    CHECK(similar.stdout_text.find("\"similar\"") != std::string::npos);

    write_file(y, R"([["1","0"],["0","-1"]])");
    auto dissimilar = run("witness --x " + x.string() + " --y " + y.string());
    CHECK(dissimilar.exit_code == 0);
    CHECK(dissimilar.stdout_text.find("\"not similar\"") != std::string::npos);
}
