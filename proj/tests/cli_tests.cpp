#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// Exercises the installed command-line binary end to end. The binary and
// the bundled scenario directory arrive via MULTIVEND_CLI and
// MULTIVEND_SCENARIOS (set by the test harness).

namespace fs = std::filesystem;

namespace {

std::string cli() {
    const char* path = std::getenv("MULTIVEND_CLI");
    REQUIRE_MESSAGE(path != nullptr, "MULTIVEND_CLI must point at the binary");
    return path;
}

fs::path scenario_dir() {
    const char* path = std::getenv("MULTIVEND_SCENARIOS");
    REQUIRE_MESSAGE(path != nullptr,
                    "MULTIVEND_SCENARIOS must point at the bundled corpus");
    return path;
}

fs::path work_dir() {
    const fs::path dir = fs::temp_directory_path() / "multivend_cli_tests";
    fs::create_directories(dir);
    return dir;
}

int run(const std::string& args, const fs::path& stdout_path,
        const fs::path& stderr_path) {
    const std::string command = cli() + " " + args + " > " +
                                stdout_path.string() + " 2> " +
                                stderr_path.string();
    const int status = std::system(command.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
    std::ifstream stream(path, std::ios::binary);
    REQUIRE(stream.good());
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return buffer.str();
}

void spit(const fs::path& path, const std::string& text) {
    std::ofstream stream(path, std::ios::binary);
    stream << text;
    REQUIRE(stream.good());
}

}  // namespace

TEST_SUITE("command line") {
    TEST_CASE("validate accepts the bundled corpus") {
        const fs::path dir = work_dir();
        for (const char* name :
             {"two-by-two.json", "single-vendor.json", "dual-spine.json"}) {
            const int code =
                run("validate --input " + (scenario_dir() / name).string(),
                    dir / "out", dir / "err");
            CAPTURE(name);
            CHECK(code == 0);
            CHECK(slurp(dir / "out") == "ok\n");
        }
    }

    TEST_CASE("validate names the violated invariant and exits 1") {
        const fs::path dir = work_dir();
        const fs::path bad = dir / "negative-cost.json";
        spit(bad, R"({
          "suppliers": [{"name": "s0", "capacity": 5}],
          "items": ["k0"],
          "demands": [{"name": "d0", "item": "k0", "quantity": 5}],
          "costs": [{"supplier": "s0", "item": "k0", "demand": "d0", "cost": -2}]
        })");
        const int code = run("validate --input " + bad.string(), dir / "out",
                             dir / "err");
        CHECK(code == 1);
        CHECK(slurp(dir / "err").find("nonnegativity") != std::string::npos);
    }

    TEST_CASE("solve reports z 15 on the bundled 2x2 instance") {
        const fs::path dir = work_dir();
        const fs::path report = dir / "plan.json";
        const int code =
            run("solve --input " + (scenario_dir() / "two-by-two.json").string() +
                    " --output " + report.string(),
                dir / "out", dir / "err");
        CHECK(code == 0);
        const std::string text = slurp(report);
        CHECK(text.find("\"z\": 15.0") != std::string::npos);
        CHECK(text.find("\"status\": \"OPTIMAL\"") != std::string::npos);
    }

    TEST_CASE("an unsatisfiable instance exits 2 with an infeasible report") {
        const fs::path dir = work_dir();
        const fs::path bad = dir / "short-supply.json";
        spit(bad, R"({
          "suppliers": [{"name": "s0", "capacity": 3}],
          "items": ["k0"],
          "demands": [{"name": "d0", "item": "k0", "quantity": 5}],
          "costs": [{"supplier": "s0", "item": "k0", "demand": "d0", "cost": 1}]
        })");
        const fs::path report = dir / "short.json";
        const int code = run("solve --input " + bad.string() + " --output " +
                                 report.string(),
                             dir / "out", dir / "err");
        CHECK(code == 2);
        CHECK(slurp(report).find("INFEASIBLE") != std::string::npos);
    }

    TEST_CASE("sweep emits the pinned table for the 2x2 instance") {
        const fs::path dir = work_dir();
        const fs::path report = dir / "sweep.csv";
        const int code =
            run("sweep --input " + (scenario_dir() / "two-by-two.json").string() +
                    " --output " + report.string(),
                dir / "out", dir / "err");
        CHECK(code == 0);
        CHECK(slurp(report) ==
              "subset,size,status,z\n"
              "vendor-a,1,OPTIMAL,15\n"
              "vendor-b,1,OPTIMAL,35\n"
              "\"vendor-a,vendor-b\",2,OPTIMAL,15\n");
    }

    TEST_CASE("simulate writes a summary and a cost column") {
        const fs::path dir = work_dir();
        const fs::path report = dir / "risk.json";
        const int code =
            run("simulate --input " +
                    (scenario_dir() / "single-vendor.json").string() +
                    " --output " + report.string() + " --trials 500 --seed 3",
                dir / "out", dir / "err");
        CHECK(code == 0);
        CHECK(slurp(report).find("\"mean\"") != std::string::npos);
        const std::string costs = slurp(dir / "risk.costs.csv");
        CHECK(costs.rfind("cost\n", 0) == 0);
        CHECK(std::count(costs.begin(), costs.end(), '\n') == 501);
    }

    TEST_CASE("simulate insists on an output path") {
        const fs::path dir = work_dir();
        const int code =
            run("simulate --input " +
                    (scenario_dir() / "single-vendor.json").string(),
                dir / "out", dir / "err");
        CHECK(code == 1);
        CHECK(slurp(dir / "err").find("--output") != std::string::npos);
    }

    TEST_CASE("the bundled payoff story runs") {
        const fs::path dir = work_dir();
        const fs::path report = dir / "race.json";
        const int code =
            run("payoff --input " +
                    (scenario_dir() / "hft-latency-race.json").string() +
                    " --output " + report.string() + " --trials 2000",
                dir / "out", dir / "err");
        CHECK(code == 0);
        CHECK(slurp(report).find("\"capture_probability\"") !=
              std::string::npos);
    }

    TEST_CASE("inline payoff flags replace a study file") {
        const fs::path dir = work_dir();
        const int code = run(
            "payoff --analysis jensen --payoff quadratic --base uniform "
            "--lo 0 --hi 1",
            dir / "out", dir / "err");
        CHECK(code == 0);
        CHECK(slurp(dir / "out").find("\"gap\"") != std::string::npos);
    }

    TEST_CASE("a missing input file exits 1") {
        const fs::path dir = work_dir();
        const int code = run("solve --input /no/such/file.json", dir / "out",
                             dir / "err");
        CHECK(code == 1);
    }

    TEST_CASE("an unknown flag exits 1") {
        const fs::path dir = work_dir();
        const int code = run("solve --frobnicate", dir / "out", dir / "err");
        CHECK(code == 1);
    }

    TEST_CASE("a format a command cannot render exits 1") {
        const fs::path dir = work_dir();
        const int code =
            run("solve --input " + (scenario_dir() / "two-by-two.json").string() +
                    " --format csv",
                dir / "out", dir / "err");
        CHECK(code == 1);
        CHECK(slurp(dir / "err").find("format") != std::string::npos);
    }

    TEST_CASE("repeated runs are byte-identical") {
        const fs::path dir = work_dir();
        const std::string base =
            "sweep --input " + (scenario_dir() / "two-by-two.json").string();
        const fs::path a = dir / "sweep-a.csv";
        const fs::path b = dir / "sweep-b.csv";
        CHECK(run(base + " --output " + a.string(), dir / "out", dir / "err") ==
              0);
        CHECK(run(base + " --output " + b.string(), dir / "out", dir / "err") ==
              0);
        CHECK(slurp(a) == slurp(b));
    }
}
