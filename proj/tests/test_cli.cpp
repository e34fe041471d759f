#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const fs::path scratch = fs::temp_directory_path() / "cusp_theta_cli_test";

int run(const std::string& args, const std::string& stdout_file = "", const std::string& stderr_file = "") {
    std::string cmd = std::string("\"") + CUSP_THETA_CLI + "\" " + args;
    cmd += " >\"" + (stdout_file.empty() ? std::string("/dev/null") : (scratch / stdout_file).string()) + "\"";
    cmd += " 2>\"" + (stderr_file.empty() ? std::string("/dev/null") : (scratch / stderr_file).string()) + "\"";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("eval grid") {
        fs::create_directories(scratch);
        const auto out = scratch / "grid.csv";
        REQUIRE(run("eval --surface modular --zeros 50 --eigenvalues 10 --geodesics 10 --function Theta "
                    "--grid -3:3:5,-3:3:5 --sheet 0 --out " + out.string()) == 0);
        std::ifstream f(out);
        std::string line;
        int rows = 0;
        bool header = false;
        while (std::getline(f, line)) {
            if (line.rfind("# schema=cusp-theta/grid/v1", 0) == 0) continue;
            if (line == "re_t,im_t,sheet,re_value,im_value,tail_bound") {
                header = true;
                continue;
            }
            ++rows;
        }
        CHECK(header);
        CHECK(rows == 25);
    }

    TEST_CASE("catalog JSON") {
        fs::create_directories(scratch);
        const auto out = scratch / "cat.json";
        REQUIRE(run("catalog --surface modular --zeros 50 --eigenvalues 10 --region -3,3,-10,5 --out " +
                    out.string()) == 0);
        const auto j = nlohmann::json::parse(slurp(out));
        CHECK(j["schema"] == "cusp-theta/catalog/v1");
        CHECK(!j["entries"].empty());
    }

    TEST_CASE("synthetic surface round-trips through the CLI") {
        fs::create_directories(scratch);
        REQUIRE(run("gen-synthetic --seed 3 --profile tiny --out " + (scratch / "syn.json").string()) == 0);
        REQUIRE(run("eval --surface " + (scratch / "syn.json").string() +
                    " --function theta --grid -1:1:2,1:2:2", "syn.csv") == 0);
        CHECK(slurp(scratch / "syn.csv").find("tail_bound") != std::string::npos);
    }

    TEST_CASE("errors are JSON with exit codes") {
        fs::create_directories(scratch);
        std::ofstream(scratch / "bad.json")
            << R"({"num_cusps": 1, "volume": 1, "dirichlet": {"terms": [[0.5, 1]], "a_min": 1}})";
        CHECK(run("eval --surface " + (scratch / "bad.json").string() + " --function theta --grid 0:1:2,1:2:2", "",
                  "err.txt") == 1);
        const auto j = nlohmann::json::parse(slurp(scratch / "err.txt"));
        CHECK(j["schema"] == "cusp-theta/error/v1");
        CHECK(j["kind"] == "validation");
        CHECK(j["message"].get<std::string>().find("q must exceed 1") != std::string::npos);
        CHECK(run("eval --surface modular --grid bad") == 1);
        CHECK(run("no-such-command") == 1);
    }
}
