// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "twinfock/emit.hpp"

using namespace twinfock;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(TWINFOCK_CLI_PATH) + " " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf;
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden(const std::string& name) {
    return read_file(std::filesystem::path(TWINFOCK_GOLDEN_DIR) / name);
}

} // namespace

TEST_CASE("number formatting is fixed at nine significant digits") {
    CHECK(format_number(0.2267290236666344) == "0.226729024");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(0.05) == "0.05");
    CHECK(format_number(1.5625e-8) == "1.5625e-08");
    CHECK(format_number(-0.735091875) == "-0.735091875");
    CHECK(format_number(kDivergenceSentinel) == "inf");
}

TEST_CASE("frozen column headers") {
    CHECK(std::string(kSweepCsvHeader) == "m,mprime,loss_a,loss_b,phi,value");
    CHECK(std::string(kTable1CsvHeader) == "m,mprime,delta_phi,snl");
}

TEST_CASE("expect matches its golden file") {
    const auto result = run_cli("expect --m 6 --mprime 0 --loss-a 0.05 --loss-b 0.05 --phi 0");
    CHECK(result.exit_code == 0);
    CHECK(result.output == golden("expect_6_0.json"));
}

TEST_CASE("table1 matches its golden file") {
    const auto result = run_cli("table1");
    CHECK(result.exit_code == 0);
    CHECK(result.output == golden("table1_default.csv"));
}

TEST_CASE("lossless table1 sits on the Heisenberg limit throughout") {
    const auto result = run_cli("table1 --loss 0 --max-total 14");
    CHECK(result.exit_code == 0);
    std::istringstream in(result.output);
    std::string line;
    std::getline(in, line);
    int rows = 0;
    while (std::getline(in, line)) {
        CHECK(line.find(",0.166666667,") != std::string::npos);
        ++rows;
    }
    CHECK(rows == 5);
}

TEST_CASE("eleven-point visibility sweep matches its golden file") {
    const auto result =
        run_cli("visibility --m 1 --mprime 0 --loss-start 0 --loss-stop 1 --loss-steps 11");
    CHECK(result.exit_code == 0);
    CHECK(result.output == golden("visibility_sweep_1_0.csv"));
}

TEST_CASE("identical flags produce byte-identical output") {
    const std::string args =
        "sweep --quantity sensitivity --m 8 --mprime 2 --loss-start 0 --loss-stop 0.6 "
        "--loss-steps 7 --phi 0.3";
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(first.output.substr(0, first.output.find('\n')) == kSweepCsvHeader);
}

TEST_CASE("balanced loss reports one-half visibility through the CLI") {
    const auto result = run_cli("visibility --m 4 --mprime 1 --loss-a 0.5 --loss-b 0.5");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("\"visibility\": 0.5}") != std::string::npos);
}

TEST_CASE("sensitivity at a fringe extremum serialises the sentinel") {
    const auto result = run_cli(
        "sensitivity --m 6 --mprime 0 --loss-a 0.1 --loss-b 0.1 --phi 0.5235987755982988");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("\"delta_phi\": \"inf\"") != std::string::npos);
}

TEST_CASE("recommendation JSON leads with the rank-1 state") {
    const auto result = run_cli(
        "recommend --loss-a 0.05 --loss-b 0.05 --objective optimal_sensitivity "
        "--delta-m 6 --max-total 22");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("{\"rank\": 1, \"m\": 6, \"mprime\": 0,") != std::string::npos);
}

TEST_CASE("degenerate state is rejected with a message naming the flag") {
    const auto result = run_cli("expect --m 2 --mprime 2 --loss-a 0 --loss-b 0 --phi 0", true);
    CHECK(result.exit_code != 0);
    CHECK(result.output.find("m must exceed mprime") != std::string::npos);
}

TEST_CASE("domain violations name the offending flag") {
    const auto result =
        run_cli("expect --m 2 --mprime 0 --loss-a 1.5 --loss-b 0 --phi 0", true);
    CHECK(result.exit_code != 0);
    CHECK(result.output.find("--loss-a") != std::string::npos);
}

TEST_CASE("unknown flags are rejected") {
    CHECK(run_cli("expect --m 2 --mprime 0 --loss-a 0 --loss-b 0 --phi 0 --bogus 3", true)
              .exit_code != 0);
}

TEST_CASE("zero-step grids are a usage error") {
    const auto result = run_cli(
        "sweep --quantity visibility --m 1 --mprime 0 --loss-start 0 --loss-stop 1 "
        "--loss-steps 0",
        true);
    CHECK(result.exit_code != 0);
}

TEST_CASE("invalid sweep quantity is a usage error") {
    CHECK(run_cli("sweep --quantity entropy --m 1 --mprime 0 --loss-start 0 --loss-stop 1 "
                  "--loss-steps 3",
                  true)
              .exit_code != 0);
}

TEST_CASE("--output writes the same bytes to a file") {
    const auto path = std::filesystem::temp_directory_path() / "twinfock_cli_out.csv";
    std::filesystem::remove(path);
    const std::string args = "table1 --loss 0.1 --max-total 10";
    const auto direct = run_cli(args);
    const auto filed = run_cli(args + " --output " + path.string());
    CHECK(filed.exit_code == 0);
    CHECK(filed.output.empty());
    CHECK(read_file(path) == direct.output);
    std::filesystem::remove(path);
}

TEST_CASE("config file mirrors flags and flags win on conflict") {
    const auto path = std::filesystem::temp_directory_path() / "twinfock_cli.cfg";
    {
        std::ofstream cfg(path);
        cfg << "[expect]\n"
            << "m=6\n"
            << "mprime=0\n"
            << "loss-a=0.05\n"
            << "loss-b=0.05\n"
            << "phi=1.0\n";
    }
    const auto from_config = run_cli("expect --config " + path.string() + " --phi 0");
    CHECK(from_config.exit_code == 0);
    CHECK(from_config.output == golden("expect_6_0.json"));

    const auto config_only = run_cli("expect --config " + path.string());
    CHECK(config_only.exit_code == 0);
    CHECK(config_only.output.find("\"phi\": 1,") != std::string::npos);
    std::filesystem::remove(path);
}
