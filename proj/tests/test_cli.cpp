#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "gfc/report.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(GFC_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST(Cli, DecomposeJson) {
    const auto r = run("decompose --p 2 --n 4 --lambda 2 --lambda 7 --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = gfc::Json::parse(r.out);
    EXPECT_EQ(j["factors"].size(), 5u);
    EXPECT_EQ(j["j_classes"]["classes"].size(), 5u);
}

TEST(Cli, DecomposeTextSymbolic) {
    const auto r = run("decompose --p 2 --n 4 --lambda sym:a --lambda sym:b");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("C5"), std::string::npos);
}

TEST(Cli, JsonIsDeterministic) {
    const std::string args = "decompose --p 3 --n 4 --lambda 5/2 --lambda -3 --format json";
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, Identities) {
    const auto r = run("identities --q 3 --n-max 8 --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = gfc::Json::parse(r.out);
    for (const auto& row : j["genus_sum"]) EXPECT_EQ(row["status"], "OK");
}

TEST(Cli, Genus4) {
    const auto r = run("genus4 --l11 \"4+sqrt(11)\" --l12 \"-3-sqrt(11)\" --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = gfc::Json::parse(r.out);
    EXPECT_EQ(j["lambda21"], gfc::Scalar::quadratic(mpq_class(3, 2), mpq_class(-1, 2), 11).to_string());
}

TEST(Cli, VerifyFamilies) {
    EXPECT_EQ(run("verify --k 4 --family F4").code, 0);
    EXPECT_EQ(run("verify --k 6 --family F6").code, 3);
    EXPECT_EQ(run("verify --k 2 --n 4").code, 0);
    EXPECT_EQ(run("verify --k 6 --subgroup a1*a2^-1 --subgroup a1*a3^-1").code, 3);
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(run("decompose --p 2 --n 4 --lambda 2").code, 2);
    EXPECT_EQ(run("decompose --p 4 --n 3 --lambda 2").code, 2);
    EXPECT_EQ(run("decompose --p 2 --n 4 --lambda 0 --lambda 7").code, 2);
    EXPECT_EQ(run("decompose --n 4").code, 2);
    EXPECT_EQ(run("nonsense").code, 2);
}

TEST(Cli, OutputFile) {
    const std::string path = ::testing::TempDir() + "gfc_cli_out.json";
    ASSERT_EQ(run("enumerate --p 3 --n 3 --format json --output " + path).code, 0);
    FILE* f = fopen(path.c_str(), "r");
    ASSERT_NE(f, nullptr);
    fclose(f);
    std::remove(path.c_str());
}

TEST(Cli, Conjecture) {
    const auto r = run("conjecture --k 4 --n 2 --format json");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(gfc::Json::parse(r.out)["mode"], "CONJECTURAL");
}
