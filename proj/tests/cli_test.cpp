#include "ysup/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = ysup::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::path(YSUP_TEST_TMPDIR) / "cli_test";
        fs::create_directories(dir_);
    }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path(name)) << text;
        return path(name);
    }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, build_transpile_cost_gives_five_n) {
    ASSERT_EQ(cli({"build", "--qubits", "4", "--marked", "1111", "--iterations", "1", "--axis", "y", "-o",
                   path("y.txt")})
                  .code,
              0);
    ASSERT_EQ(cli({"transpile", path("y.txt"), "--passes", "expand-x,cancel", "-o", path("y_t.txt")}).code, 0);
    const Result r = cli({"cost", path("y_t.txt"), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_TRUE(r.out.ends_with("}\n"));
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["wrapper_native_total"], 20);
    EXPECT_EQ(j["n"], 4);
    std::size_t sum = 0;
    for (const auto& [k, v] : j["per_kind"].items()) sum += v.get<std::size_t>();
    EXPECT_EQ(sum, j["total"].get<std::size_t>());
    for (const char* key : {"depth", "native_total", "non_native_total"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
}

TEST_F(CliTest, compare_axis_pair) {
    cli({"build", "--qubits", "4", "--marked", "1111", "--axis", "x", "-o", path("x.txt")});
    cli({"build", "--qubits", "4", "--marked", "1111", "--axis", "y", "-o", path("y.txt")});
    cli({"transpile", path("x.txt"), "--passes", "decompose-h-safe", "-o", path("x_t.txt")});
    cli({"transpile", path("y.txt"), "--passes", "expand-x,cancel", "-o", path("y_t.txt")});

    const Result ab = cli({"compare", path("x_t.txt"), path("y_t.txt"), "--json"});
    const Result ba = cli({"compare", path("y_t.txt"), path("x_t.txt"), "--json"});
    ASSERT_EQ(ab.code, 0) << ab.err;
    ASSERT_EQ(ba.code, 0) << ba.err;
    const auto jab = nlohmann::json::parse(ab.out);
    const auto jba = nlohmann::json::parse(ba.out);
    EXPECT_LE(jab["tvd"].get<double>(), 1e-9);
    EXPECT_EQ(jab["tvd"], jba["tvd"]);
    EXPECT_EQ(jab["baseline_wrapper_native_total"], 44);
    EXPECT_EQ(jab["candidate_wrapper_native_total"], 20);
    EXPECT_NEAR(jab["wrapper_reduction_percent"].get<double>(), 600.0 / 11.0, 1e-9);

    const Result text = cli({"compare", path("x_t.txt"), path("y_t.txt")});
    EXPECT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("equivalent"), std::string::npos);
}

TEST_F(CliTest, compare_different_circuits_fails) {
    write("a.txt", "qubits 1\nx q0\n");
    write("b.txt", "qubits 1\nh q0\n");
    const Result r = cli({"compare", path("a.txt"), path("b.txt")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(cli({"compare", path("a.txt"), path("b.txt"), "--tolerance", "0.6"}).code, 0);
    write("c.txt", "qubits 2\nx q0\n");
    EXPECT_EQ(cli({"compare", path("a.txt"), path("c.txt")}).code, 1);
}

TEST_F(CliTest, simulate_is_deterministic) {
    cli({"build", "--qubits", "4", "--marked", "1111", "--axis", "y", "-o", path("y.txt")});
    const Result a = cli({"simulate", path("y.txt"), "--shots", "1024", "--seed", "7"});
    const Result b = cli({"simulate", path("y.txt"), "--shots", "1024", "--seed", "7"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("1111 0.47265625"), std::string::npos);

    const Result j = cli({"simulate", path("y.txt"), "--seed", "7", "--json"});
    const auto parsed = nlohmann::json::parse(j.out);
    EXPECT_EQ(parsed["shots"], 1024);
    std::uint64_t total = 0;
    for (const auto& [k, v] : parsed["counts"].items()) total += v.get<std::uint64_t>();
    EXPECT_EQ(total, 1024u);
    EXPECT_NEAR(parsed["probabilities"]["1111"].get<double>(), 0.47265625, 1e-12);

    const Result exact_only = cli({"simulate", path("y.txt"), "--json"});
    EXPECT_FALSE(nlohmann::json::parse(exact_only.out).contains("counts"));
}

TEST_F(CliTest, cost_realize_mcz) {
    write("m.txt", "qubits 3\nmcz q0 q1 q2 @difcore\n");
    const auto j = nlohmann::json::parse(cli({"cost", path("m.txt"), "--json", "--realize-mcz"}).out);
    EXPECT_EQ(j["per_kind"]["h"], 2);
    EXPECT_EQ(j["per_kind"]["mcx"], 1);
    EXPECT_EQ(j["total"], 3);
}

TEST_F(CliTest, transpile_log_and_paper_mode) {
    cli({"build", "--qubits", "3", "--marked", "101", "-o", path("x.txt")});
    const Result r = cli({"transpile", path("x.txt"), "--passes", "decompose-h-paper", "--log"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("decompose-h-paper: 19 -> 37"), std::string::npos) << r.err;
    write("p.txt", r.out);
    EXPECT_EQ(cli({"compare", path("x.txt"), path("p.txt")}).code, 0);
}

TEST_F(CliTest, usage_errors_exit_two) {
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(cli({"build", "--qubits", "4", "--marked", "1111", "--axis", "z"}).code, 2);
    EXPECT_EQ(cli({"build", "--marked", "1111"}).code, 2);
    write("x.txt", "qubits 1\nh q0 @superposition\n");
    const Result r = cli({"transpile", path("x.txt"), "--passes", "cancel,nope"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("nope"), std::string::npos);
    EXPECT_EQ(cli({"simulate", path("x.txt"), "--shots", "0"}).code, 2);
}

TEST_F(CliTest, domain_errors_exit_one) {
    EXPECT_EQ(cli({"cost", path("missing.txt")}).code, 1);
    EXPECT_EQ(cli({"build", "--qubits", "4", "--marked", "111"}).code, 1);
    EXPECT_EQ(cli({"build", "--qubits", "1", "--marked", "1"}).code, 1);
    write("bad.txt", "qubits 2\nfoo q0\n");
    const Result r = cli({"simulate", path("bad.txt")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
    write("untagged.txt", "qubits 1\nh q0\n");
    EXPECT_EQ(cli({"transpile", path("untagged.txt"), "--passes", "substitute-axis"}).code, 1);
}

TEST_F(CliTest, help_exits_zero) {
    const Result r = cli({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("build"), std::string::npos);
}
