// Copyright 2026 Google LLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

using namespace star;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> result;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        result.push_back(line);
    }
    return result;
}

}  // namespace

TEST(cli, memory_csv_shape) {
    CliRun r = run({"memory", "--d", "3,5", "--p", "1e-3,2e-3", "--shots", "2000", "--seed", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto l = lines(r.out);
    ASSERT_EQ(l.size(), 6u);
    EXPECT_EQ(l[0].rfind("# star ", 0), 0u);
    EXPECT_NE(l[0].find("seed=4"), std::string::npos);
    EXPECT_EQ(l[1], "d,p,shots,failures_Z,failures_X,P_LZ,sigma_Z,P_LX,sigma_X");
    EXPECT_EQ(l[2].rfind("3,0.001,2000,", 0), 0u);
}

TEST(cli, memory_json) {
    CliRun r = run({"memory", "--shots", "1000", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto body = r.out.substr(r.out.find('\n') + 1);
    auto j = nlohmann::json::parse(body);
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["d"], 3);
    EXPECT_EQ(j[0]["shots"], 1000);
}

TEST(cli, inject_oracle) {
    CliRun r = run({"inject", "--oracle"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto l = lines(r.out);
    ASSERT_EQ(l.size(), 3u);
    EXPECT_EQ(l[2].rfind("direct,3,2/15,0,", 0), 0u);
    r = run({"inject", "--oracle", "--variant", "indirect_two_cnot"});
    EXPECT_NE(r.out.find(",3/5,0,"), std::string::npos);
    r = run({"inject", "--oracle", "--variant", "indirect_ancilla"});
    EXPECT_NE(r.out.find(",7/15,0,"), std::string::npos);
}

TEST(cli, estimate_values) {
    CliRun r = run({"estimate", "--d", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("n_logical,64\n"), std::string::npos);
    EXPECT_NE(r.out.find("n_rotation,37500\n"), std::string::npos);
    EXPECT_NE(r.out.find("qv_nisq,37\n"), std::string::npos);
    EXPECT_NE(r.out.find("qv_star,64\n"), std::string::npos);
}

TEST(cli, compare_and_apps) {
    CliRun r = run({"compare"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("STAR Compact,64,18\n"), std::string::npos);
    EXPECT_NE(r.out.find("FTQC Compact,51,414\n"), std::string::npos);
    r = run({"apps", "--d", "9"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("hubbard,18,88,426\n"), std::string::npos);
    EXPECT_NE(r.out.find("qaoa,37,703,53\n"), std::string::npos);
}

TEST(cli, layout_json) {
    CliRun r = run({"layout", "--d", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out.substr(r.out.find('\n') + 1));
    EXPECT_EQ(j["d"], 5);
    EXPECT_EQ(j["plaquettes"].size(), 24u);
}

TEST(cli, fit_round_trip) {
    auto dir = std::filesystem::temp_directory_path() / "star_cli_test";
    std::filesystem::create_directories(dir);
    std::string csv = (dir / "memory.csv").string();
    std::string fit = (dir / "fit.json").string();
    CliRun r = run({"memory", "--d", "3,5", "--p", "2e-3,4e-3", "--shots", "20000", "--out", csv});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    r = run({"fit", "--in", csv, "--out", fit});
    ASSERT_EQ(r.code, 0) << r.err;
    r = run({"estimate", "--fit", fit});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("p_round,"), std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST(cli, rus_statistics) {
    CliRun r = run({"rus", "--samples", "20000", "--p-z1", "0.01"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("mean_steps_series,2\n"), std::string::npos);
}

TEST(cli, configuration_errors) {
    EXPECT_EQ(run({}).code, EXIT_CONFIG_ERROR);
    EXPECT_EQ(run({"memory", "--d", "4"}).code, EXIT_CONFIG_ERROR);
    EXPECT_EQ(run({"memory", "--p", "0.5"}).code, EXIT_CONFIG_ERROR);
    EXPECT_EQ(run({"memory", "--format", "xml"}).code, EXIT_CONFIG_ERROR);
    EXPECT_EQ(run({"inject", "--variant", "magic", "--oracle"}).code, EXIT_CONFIG_ERROR);
    EXPECT_EQ(run({"estimate", "--scheme", "5n"}).code, EXIT_CONFIG_ERROR);
    EXPECT_EQ(run({"fit", "--in", "/nonexistent/file.csv"}).code, EXIT_CONFIG_ERROR);
    CliRun r = run({"memory", "--d", "4"});
    EXPECT_NE(r.err.find("odd"), std::string::npos);
}

TEST(cli, thread_count_does_not_change_output) {
    std::vector<std::vector<std::string>> commands{
        {"memory", "--d", "3,5", "--p", "2e-3", "--shots", "5000", "--seed", "8"},
        {"inject", "--d", "3", "--p", "1e-3", "--shots", "20000", "--seed", "8"},
        {"rus", "--samples", "5000", "--p-z1", "0.02", "--seed", "8"},
    };
    for (auto cmd : commands) {
        auto one = cmd;
        one.insert(one.end(), {"--threads", "1"});
        auto four = cmd;
        four.insert(four.end(), {"--threads", "4"});
        CliRun a = run(one);
        CliRun b = run(four);
        ASSERT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out) << cmd[0];
    }
}
