#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(MILLS_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("mills-cli-test-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("no subcommand is a usage error") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("gaps maximal").exit_code == 2);  // missing --limit
}

TEST_CASE("chain extend, show, verify round trip") {
    TempDir dir;
    const std::string file = (dir.path / "chain.txt").string();

    RunResult r = run_cli("chain extend --steps 4 --chain-file " + file);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "offsets: 3 30 6 80"));
    CHECK(fs::exists(file));

    r = run_cli("chain show --chain-file " + file);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "2521008887"));

    r = run_cli("chain verify --chain-file " + file);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "verify: ok"));

    // Appending more steps picks up where the file left off.
    r = run_cli("chain extend --steps 1 --chain-file " + file);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "offsets: 3 30 6 80 12"));
}

TEST_CASE("corrupted chain files exit with a usage error") {
    TempDir dir;
    const std::string file = (dir.path / "bad.txt").string();
    std::ofstream(file) << "millschain 1\nc 3\nseed 2\nterm 1 bogus - 0\n";
    CHECK(run_cli("chain show --chain-file " + file).exit_code == 2);
    CHECK(run_cli("chain extend --steps 1 --chain-file " + file).exit_code == 2);
}

TEST_CASE("verify catches a tampered chain") {
    TempDir dir;
    const std::string file = (dir.path / "tampered.txt").string();
    std::ofstream(file) << "millschain 1\nc 3\nseed 2\n"
                        << "term 1 provable-prime trial-division 0\n"
                        << "step 1 3 provable-prime trial-division 0\n"
                        << "step 2 32 provable-prime trial-division 0\n";  // 1363 = 29*47
    RunResult r = run_cli("chain verify --chain-file " + file);
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "term-not-prime"));
}

TEST_CASE("digits with and without check") {
    TempDir dir;
    const std::string file = (dir.path / "chain.txt").string();
    REQUIRE(run_cli("chain extend --steps 4 --chain-file " + file).exit_code == 0);

    RunResult r = run_cli("digits 10 --chain-file " + file);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "1.306377883"));

    r = run_cli("digits --check 10 --chain-file " + file);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "check: ok"));

    // Depth-4 chain cannot guarantee 600 digits: shortfall fails the check.
    r = run_cli("digits --check 600 --chain-file " + file);
    CHECK(r.exit_code == 1);

    const std::string out_file = (dir.path / "digits.txt").string();
    r = run_cli("digits 20 --grouped --out " + out_file + " --chain-file " + file);
    CHECK(r.exit_code == 0);
    std::ifstream in(out_file);
    std::string header;
    std::getline(in, header);
    CHECK(contains(header, "# mills-digits v1"));
    std::string digits_line;
    std::getline(in, digits_line);
    CHECK(contains(digits_line, "1.3063778838"));
}

TEST_CASE("gap records, table diffing and structured output") {
    TempDir dir;
    RunResult r = run_cli("gaps maximal --limit 1400");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "1327 34"));

    const std::string table = (dir.path / "table.txt").string();
    REQUIRE(run_cli("gaps maximal --limit 1400 --out " + table).exit_code == 0);
    CHECK(run_cli("gaps maximal --limit 1400 --table " + table).exit_code == 0);

    // Tamper with the table: the diff must fail loudly.
    {
        std::ofstream out(table, std::ios::app);
        out << "9551 36 0.1\n";
    }
    CHECK(run_cli("gaps maximal --limit 1400 --table " + table).exit_code == 1);

    r = run_cli("--format structured gaps maximal --limit 100");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema"] == "mills-report/1");
    CHECK(doc["command"] == "gaps.maximal");
    CHECK(doc["result"]["records"].size() == 5);
    CHECK(doc["config"]["prp_rounds"] == 5);
}

TEST_CASE("structured output is byte-identical across runs") {
    const std::string cmd = "--format structured --threads 2 honaker search --hi 1000";
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());

    const std::string cmd2 = "--format structured gaps ratio-sup --lo 11 --hi 100000";
    CHECK(run_cli(cmd2).out == run_cli(cmd2).out);
}

TEST_CASE("remaining subcommands run and exit cleanly") {
    CHECK(run_cli("cubes check --max-x 50").exit_code == 0);
    CHECK(run_cli("honaker threshold --m 0.92064").exit_code == 0);
    CHECK(run_cli("lemma xc --x 2 --c 3").exit_code == 0);
    CHECK(run_cli("lemma xc --x 0.5 --c 3").exit_code == 2);  // domain error
    CHECK(run_cli("gaps schoenfeld --x 2657 --x 10000").exit_code == 0);
    CHECK(run_cli("gaps schoenfeld --x 2656").exit_code == 1);  // precondition
    CHECK(run_cli("gaps ratio-sup --lo 10 --hi 100").exit_code == 2);  // lo < 11

    RunResult r = run_cli("honaker search --hi 100000");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "2 3 5"));
    CHECK(contains(r.out, "3 5 7"));
    CHECK(contains(r.out, "61 67 71"));
    CHECK(contains(r.out, "trios: 3"));

    r = run_cli("honaker search --hi 1000 --minus");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "tuples:"));
}

TEST_CASE("bundled reference chain passes digit checks") {
    const fs::path bundled = fs::path(MILLS_DATA_DIR) / "mills_chain_a8.chain";
    REQUIRE(fs::exists(bundled));
    RunResult r = run_cli("digits --check 600 --chain-file " + bundled.string());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "check: ok (600 digits)"));

    r = run_cli("chain verify --no-minimality --chain-file " + bundled.string());
    CHECK(r.exit_code == 0);
}

TEST_SUITE_END();
