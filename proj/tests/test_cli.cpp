// End-to-end checks of the CLI surface: output schemas, exit codes,
// determinism. Runs the built binary through popen.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(COINWORDS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    while (fgets(buffer, sizeof buffer, pipe) != nullptr) output += buffer;
    const int status = pclose(pipe);
    const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {exit_code, output};
}

nlohmann::json run_json(const std::string& args, int expected_exit = 0) {
    const auto result = run_cli(args + " --json");
    CHECK(result.exit_code == expected_exit);
    return nlohmann::json::parse(result.output);
}

}  // namespace

TEST_CASE("factorize reports factors, tuple, index and parity") {
    const auto report = run_json("factorize 2113");
    CHECK(report["command"] == "factorize");
    CHECK(report["result"]["factors"] == nlohmann::json({"2", "113"}));
    CHECK(report["result"]["tuple"] == "(113,2)");
    CHECK(report["result"]["lyndon_index"] == 2);
    CHECK(report["result"]["parity"] == "even");
    CHECK(report["status"] == "ok");

    const auto odd = run_json("factorize 2131");
    CHECK(odd["result"]["factors"] == nlohmann::json({"2", "13", "1"}));
    CHECK(odd["result"]["lyndon_index"] == 1);
    CHECK(odd["result"]["parity"] == "odd");

    const auto none = run_json("factorize 211");
    CHECK(none["result"]["factors"] == nlohmann::json({"2", "1", "1"}));
    CHECK(none["result"]["tuple"].is_null());
    CHECK(none["result"]["non_distinct_factors"] == true);
}

TEST_CASE("involute toggles with the case taken") {
    const auto split = run_json("involute 112");
    CHECK(split["result"]["image"] == "121");
    CHECK(split["result"]["case"] == "split");
    CHECK(split["result"]["round_trip_ok"] == true);
    CHECK(split["status"] == "ok");

    const auto merge = run_json("involute 121");
    CHECK(merge["result"]["image"] == "112");
    CHECK(merge["result"]["case"] == "merge");

    const auto pair = run_json("involute 12");
    CHECK(pair["result"]["image"] == "21");
}

TEST_CASE("verify coin") {
    const auto report = run_json("verify coin --multiset 1:2,2:1");
    CHECK(report["result"]["N"] == 3);
    CHECK(report["result"]["even"] == "1");
    CHECK(report["result"]["odd"] == "1");
    CHECK(report["result"]["excluded"] == "1");
    CHECK(report["result"]["by_k"]["1"] == "1");
    CHECK(report["result"]["by_k"]["2"] == "1");
    CHECK(report["result"]["alternating_sum"] == "0");
    CHECK(report["result"]["b_oracle"]["agrees"] == true);
    CHECK(report["status"] == "ok");

    const auto bigger = run_json("verify coin --multiset 1:2,2:1,3:1 --threads 2");
    CHECK(bigger["result"]["even"] == bigger["result"]["odd"]);
    CHECK(bigger["status"] == "ok");
}

TEST_CASE("verify involution") {
    const auto report = run_json("verify involution --multiset 1:2,2:1,3:1");
    CHECK(report["result"]["failures"].empty());
    CHECK(report["status"] == "ok");
}

TEST_CASE("verify witt") {
    const auto report = run_json("verify witt --vars 2 --degree 3");
    CHECK(report["result"]["k"] == 2);
    CHECK(report["result"]["D"] == 3);
    CHECK(report["result"]["equal"] == true);
    CHECK(report["result"]["rhs_terms"].size() == 3);
    CHECK(report["status"] == "ok");
}

TEST_CASE("verify cauchy and stirling") {
    const auto cauchy = run_json("verify cauchy --n 5");
    CHECK(cauchy["result"]["permutations"] == "120");
    CHECK(cauchy["result"]["parity_mismatches"].empty());
    CHECK(cauchy["result"]["even"] == "60");
    CHECK(cauchy["result"]["odd"] == "60");
    CHECK(cauchy["status"] == "ok");

    const auto stirling = run_json("verify stirling --n 5");
    CHECK(stirling["result"]["row_sum"] == "120");
    CHECK(stirling["result"]["row_sum_equals_factorial"] == true);
    CHECK(stirling["status"] == "ok");
    for (const auto& row : stirling["result"]["rows"]) CHECK(row["equal"] == true);
}

TEST_CASE("usage and parse errors exit with code 2") {
    CHECK(run_cli("factorize 12x").exit_code == 2);
    CHECK(run_cli("factorize 102 --json").exit_code == 2);
    CHECK(run_cli("involute 1").exit_code == 2);
    CHECK(run_cli("involute 211").exit_code == 2);
    CHECK(run_cli("verify nonsense --n 3").exit_code == 2);
    CHECK(run_cli("verify coin").exit_code == 2);
    CHECK(run_cli("verify coin --multiset 1:1").exit_code == 2);
    CHECK(run_cli("verify cauchy").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("reports are byte-identical across invocations and shard counts") {
    const auto first = run_cli("verify coin --multiset 1:2,2:2 --json");
    const auto second = run_cli("verify coin --multiset 1:2,2:2 --json");
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);

    const auto serial = run_cli("verify involution --multiset 1:2,2:2,3:1 --json");
    const auto sharded = run_cli("verify involution --multiset 1:2,2:2,3:1 --threads 3 --json");
    CHECK(serial.output.substr(serial.output.find("\"result\"")) ==
          sharded.output.substr(sharded.output.find("\"result\"")));
}

TEST_CASE("out flag writes the JSON report to a file") {
    const std::string path = "/tmp/coinwords_cli_test_report.json";
    std::remove(path.c_str());
    const auto result = run_cli("factorize 2113 --out " + path);
    CHECK(result.exit_code == 0);
    FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string contents;
    char buffer[4096];
    while (fgets(buffer, sizeof buffer, f) != nullptr) contents += buffer;
    std::fclose(f);
    const auto parsed = nlohmann::json::parse(contents);
    CHECK(parsed["result"]["tuple"] == "(113,2)");
    std::remove(path.c_str());
}
