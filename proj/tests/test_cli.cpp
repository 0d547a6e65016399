#include "json.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

std::filesystem::path dir() {
    auto d = std::filesystem::temp_directory_path() / "platlab_cli";
    std::filesystem::create_directories(d);
    return d;
}

std::vector<std::string> missing_required(const std::string& name, const json& report) {
    std::ifstream in(std::string(PLATLAB_SOURCE_DIR) + "/schemas/" + name + ".schema.json");
    json schema = json::parse(in);
    std::vector<std::string> out;
    for (const auto& k : schema["required"])
        if (!report.contains(k)) out.push_back(k);
    return out;
}

Run run(const std::string& args, const std::string& config_text, const std::string& name) {
    auto cfg = dir() / (name + ".json");
    std::ofstream(cfg) << config_text;
    auto out = dir() / (name + ".out");
    std::string cmd = std::string(PLATLAB_BINARY) + " " + args + " --config " + cfg.string() + " --out " +
                      (dir() / name).string() + " > " + out.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::stringstream ss;
    ss << std::ifstream(out).rdbuf();
    r.out = ss.str();
    return r;
}

}  // namespace

TEST(Cli, AnalyzeReportsWeights) {
    auto r = run("analyze", R"({"spec": {"uniform": 2}})", "analyze");
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["summary"]["N"], json({8, 4, 20, 5}));
    EXPECT_EQ(j["flags"]["family"], true);
    EXPECT_TRUE(std::filesystem::exists(dir() / "analyze" / "analyze.json"));
}

TEST(Cli, MalformedGridIsInputError) {
    auto r = run("analyze", R"({"spec": {"rows": {"2": [2,2,2,2], "3": [-2,-2,-2,-2], "4": [2,2,2]}}})", "shape");
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(json::parse(r.out)["error"], "ShapeError");
    EXPECT_TRUE(missing_required("error", json::parse(r.out)).empty());
}

TEST(Cli, VerifyPasses) {
    auto r = run("verify", R"({"spec": {"uniform": 2}})", "verify");
    EXPECT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["pass"], true);
    EXPECT_EQ(j["checks"].size(), 11u);
    EXPECT_TRUE(missing_required("verify", j).empty());
}

TEST(Cli, FaultInjectionFails) {
    auto r = run("verify", R"({"spec": {"uniform": 2}, "fault": "corrupt_n2"})", "fault");
    EXPECT_EQ(r.code, 1);
    auto j = json::parse(r.out);
    bool oracle_failed = false;
    for (const auto& c : j["checks"]) {
        if (c["name"] == "oracle_counts") oracle_failed = c["pass"] == false;
    }
    EXPECT_TRUE(oracle_failed);
}

TEST(Cli, BudgetIsItsOwnExitCode) {
    auto r = run("verify", R"({"spec": {"uniform": 8}})", "budget");
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(json::parse(r.out)["budget_exceeded"], true);
}

TEST(Cli, EmptySweepPasses) {
    auto r = run("sweep",
                 R"({"sweep": {"exhaustive": [], "sampled": [], "oracle": [], "labyrinth": []}})", "empty");
    EXPECT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    for (const auto& s : j["sections"]) EXPECT_EQ(s["specs"], 0);
    EXPECT_TRUE(missing_required("sweep", j).empty());
}

TEST(Cli, RenderIsDeterministic) {
    auto a = run("render", R"({"spec": {"uniform": 2}})", "render_a");
    auto b = run("render", R"({"spec": {"uniform": 2}})", "render_b");
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0);
    for (const char* f : {"diagram.svg", "curve.svg", "labyrinth.svg", "labyrinth.json"}) {
        std::stringstream x, y;
        x << std::ifstream(dir() / "render_a" / f).rdbuf();
        y << std::ifstream(dir() / "render_b" / f).rdbuf();
        EXPECT_FALSE(x.str().empty()) << f;
        EXPECT_EQ(x.str(), y.str()) << f;
    }
}

TEST(Cli, MissingConfigIsInputError) {
    std::string cmd = std::string(PLATLAB_BINARY) + " verify > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    EXPECT_EQ(WEXITSTATUS(status), 2);
    cmd = std::string(PLATLAB_BINARY) + " verify --config /nonexistent/x.json > /dev/null 2>&1";
    status = std::system(cmd.c_str());
    EXPECT_EQ(WEXITSTATUS(status), 2);
}
