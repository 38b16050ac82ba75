// End-to-end checks of the CLI binary: subcommands, exit codes, file outputs.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "aecc/code.hpp"
#include "aecc/sphere.hpp"
#include "fixtures.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = AECC_CLI_PATH;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const fs::path out_file = fs::temp_directory_path() / "aecc_cli_out.txt";
    const std::string cmd = kCli + " " + args + " > " + out_file.string() + " 2>&1";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    fs::remove(out_file);
    return {WEXITSTATUS(rc), ss.str()};
}

fs::path temp_file(const char* name) { return fs::temp_directory_path() / name; }

} // namespace

TEST_CASE("construct writes a loadable code and prints its parameters") {
    const fs::path out = temp_file("aecc_cli_t4.json");
    fs::remove(out);
    const auto res = run("construct --t 4 --out " + out.string());
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("n: 33  k: 30  r: 3") != std::string::npos);
    const aecc::AnalogCode code = aecc::load_code(out);
    CHECK(code.length() == 33);
    CHECK(code.dimension() == 30);

    // --n 33 produces the identical matrix
    const fs::path out2 = temp_file("aecc_cli_n33.json");
    fs::remove(out2);
    CHECK(run("construct --n 33 --out " + out2.string()).exit_code == 0);
    CHECK(aecc::load_code(out2).parity_check() == code.parity_check());
    fs::remove(out2);
    fs::remove(out);
}

TEST_CASE("construct exit codes") {
    CHECK(run("construct --n 5 --out /tmp/aecc_never.json").exit_code == 1);
    CHECK(run("construct --out /tmp/aecc_never.json").exit_code == 2);
    CHECK(run("construct --t 4 --n 33 --out /tmp/aecc_never.json").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("construct --t 4 --bogus-flag 1 --out /tmp/aecc_never.json").exit_code == 2);
}

TEST_CASE("eval: exact repetition-code height is Gamma_2 = 4") {
    const fs::path code_path = temp_file("aecc_cli_rep.json");
    aecc::save_code(aecc::testing::mercedes_repetition_code(), code_path);
    const auto res = run("eval --code " + code_path.string() + " --m 2 --mode exact");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"gamma\":4.0") != std::string::npos);
    CHECK(res.output.find("coherence bound") != std::string::npos);

    CHECK(run("eval --code " + code_path.string() + " --m 0 --mode exact").exit_code == 2);
    CHECK(run("eval --code " + code_path.string() + " --m 2 --mode exact --budget 3").exit_code ==
          1);
    fs::remove(code_path);
}

TEST_CASE("simulate appends CSV and reports zero violations") {
    const fs::path code_path = temp_file("aecc_cli_sim.json");
    const fs::path csv = temp_file("aecc_cli_sim.csv");
    fs::remove(csv);
    aecc::save_code(aecc::construct_code(4), code_path);

    const std::string base = "simulate --code " + code_path.string() +
                             " --trials 2000 --seed 5 --magnitude 2xDelta --out " + csv.string();
    const auto res = run(base);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("exact: 2000") != std::string::npos);

    CHECK(run(base + " --adversarial").exit_code == 0);

    std::ifstream in(csv);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 3); // header + two campaign rows

    CHECK(run("simulate --code " + code_path.string() + " --trials 0").exit_code == 2);
    CHECK(run("simulate --code " + code_path.string() + " --trials 10 --magnitude bogus")
              .exit_code == 2);
    CHECK(run("simulate --code /tmp/aecc_missing.json --trials 10").exit_code == 1);
    fs::remove(code_path);
    fs::remove(csv);
}

TEST_CASE("construct -> eval -> simulate round-trip for t in {4,5,6}") {
    for (int t : {4, 5, 6}) {
        const fs::path code_path = temp_file("aecc_cli_rt.json");
        const fs::path csv = temp_file("aecc_cli_rt.csv");
        fs::remove(code_path);
        fs::remove(csv);

        CHECK(run("construct --t " + std::to_string(t) + " --out " + code_path.string())
                  .exit_code == 0);
        const auto eval_res =
            run("eval --code " + code_path.string() + " --m 2 --mode exact");
        CHECK(eval_res.exit_code == 0);
        CHECK(eval_res.output.find("\"method\":\"ExactLP\"") != std::string::npos);
        const auto sim_res = run("simulate --code " + code_path.string() +
                                 " --trials 5000 --seed 9 --magnitude 2xDelta --out " +
                                 csv.string());
        CHECK(sim_res.exit_code == 0);
        CHECK(sim_res.output.find("violation_d1: 0") != std::string::npos);
        CHECK(fs::exists(csv));
        fs::remove(code_path);
        fs::remove(csv);
    }
}

TEST_CASE("bound prints thresholds") {
    const auto res = run("bound --n 33 --rho 0.9238795325112867");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("theta: 165.902") != std::string::npos);
    CHECK(res.output.find("Delta: 198.902") != std::string::npos);
    CHECK(run("bound").exit_code == 2);
}

TEST_CASE("table lists bounds with the asymptotic ratio") {
    const auto res = run("table --n-list 33,1000000");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("172.466") != std::string::npos);
    CHECK(res.output.find("O(n^2)") != std::string::npos);

    const auto header_only = run("table");
    CHECK(header_only.exit_code == 0);
    CHECK(header_only.output.find("gamma2_bound") != std::string::npos);
    CHECK(header_only.output.find("33,") == std::string::npos);

    CHECK(run("table --n-list 5").exit_code == 1); // below the construction's domain
}
