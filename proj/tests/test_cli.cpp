#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "warpmat/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "warpmat");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = warpmat::run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

constexpr const char* kTrefoilMatrix =
    "0 1 2 3 2 1\n"
    "1 0 1 2 3 2\n"
    "1 2 1 2 1 2\n"
    "1 2 3 2 1 0\n"
    "2 1 0 1 2 3\n"
    "2 1 2 1 2 1\n"
    "2 3 2 1 0 1\n"
    "3 2 1 0 1 2\n";

}  // namespace

TEST(Cli, MatrixOfCurl) {
    const auto r = cli({"matrix", "O1+U1+"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0 1\n1 0\n");
}

TEST(Cli, MatrixFromStdinAndJson) {
    const auto inline_code = cli({"matrix", "O1+U2+O3+U1+O2+U3+"}).out;
    EXPECT_EQ(cli({"matrix", "-"}, "O1+U2+O3+U1+O2+U3+\n").out, inline_code);
    EXPECT_EQ(cli({"matrix"}, "O1+U2+O3+U1+O2+U3+").out, inline_code);
    // rows come in assignment order; canon sorts them
    EXPECT_EQ(cli({"canon", "--no-reflect"}, inline_code).out, cli({"canon", "--no-reflect"}, kTrefoilMatrix).out);
    const auto j = nlohmann::json::parse(cli({"matrix", "O1+U1+", "--format", "json"}).out);
    EXPECT_EQ(j["c"], 1);
    EXPECT_EQ(j["kind"], "projection");
}

TEST(Cli, SignedAndDiagramMatrices) {
    EXPECT_EQ(cli({"signed-matrix", "O1-U1-"}).out, "0 1-\n1 0\n");
    EXPECT_EQ(cli({"diagram-matrix", "O1+U2+O3+U1+O2+U3+"}).out.find("1 2 1 2 1 2"), std::string::npos);
}

TEST(Cli, PipelineMatrixVerifyReconstruct) {
    const auto m = cli({"matrix", "O1+U2+O3+U1+O2+U3+"}).out;
    const auto v = cli({"verify"}, m);
    EXPECT_EQ(v.code, 0) << v.out;
    EXPECT_EQ(cli({"reconstruct"}, m).out, "1 2 3 1 2 3\n");
    const auto d = cli({"diagram-matrix", "U1-U2+O3+O1-O2+U3+"}).out;
    EXPECT_EQ(cli({"reconstruct"}, d).out, "U1-U2+O3+O1-O2+U3+\n");
}

TEST(Cli, DiagramPipeIsAFixedPointUpToCanon) {
    for (auto code : {"O1+U2-O3+U1+O2-U3+", "U1-O2+U3-O1-U4+O3-U2+O4+"}) {
        const auto md = cli({"diagram-matrix", code}).out;
        const auto back = cli({"reconstruct"}, md);
        ASSERT_EQ(back.code, 0) << back.err;
        const auto again = cli({"diagram-matrix", "-"}, back.out).out;
        EXPECT_EQ(cli({"canon"}, again).out, cli({"canon"}, md).out) << code;
    }
}

TEST(Cli, ReconstructCurlWarns) {
    const auto r = cli({"reconstruct"}, "0 1\n");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, VerifyFailureExitsOne) {
    const auto r = cli({"verify"}, "0 1\n1 1\n");
    EXPECT_EQ(r.code, 1);
}

TEST(Cli, Canon) {
    const auto r = cli({"canon"}, "1 0\n0 1\n");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0 1\n1 0\n");
}

TEST(Cli, EnumerateThree) {
    const auto r = cli({"enumerate", "--c", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("3 equivalence classes"), std::string::npos);
    EXPECT_EQ(nlohmann::json::parse(cli({"enumerate", "--c", "2", "--format", "json"}).out)["count"], 1);
}

TEST(Cli, PuzzleNewSolveCheck) {
    const auto grid = cli({"puzzle", "new", "--knot", "trefoil"});
    ASSERT_EQ(grid.code, 0);
    const auto solved = cli({"puzzle", "solve", "--limit", "2"}, grid.out);
    EXPECT_EQ(solved.code, 0);
    EXPECT_NE(solved.out.find("\n1 solution\n"), std::string::npos) << solved.out;

    const auto check = cli({"puzzle", "check"}, grid.out);
    EXPECT_EQ(check.code, 0);
    EXPECT_EQ(check.out, "no violations\n");
    const auto bad = cli({"puzzle", "check"}, "0 2 . .\n. . . .\n. . . .\n. . . .\n");
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("rule (i)"), std::string::npos);

    const auto seeded = cli({"puzzle", "new", "--knot", "O1+U1+O2+U2+", "--seed", "3", "--format", "json"});
    EXPECT_EQ(seeded.code, 0);
    EXPECT_EQ(nlohmann::json::parse(seeded.out)["c"], 2);
}

TEST(Cli, SolveWithoutSolutionExitsOne) {
    EXPECT_EQ(cli({"puzzle", "solve"}, "0 .\n0 .\n").code, 1);
}

TEST(Cli, FileArguments) {
    const auto path = std::filesystem::temp_directory_path() / "warpmat_cli_test.txt";
    std::ofstream(path) << kTrefoilMatrix;
    EXPECT_EQ(cli({"verify", path.string()}).code, 0);
    std::filesystem::remove(path);
    EXPECT_EQ(cli({"verify", path.string()}).code, 1);
}

TEST(Cli, ErrorsAndUsage) {
    EXPECT_EQ(cli({"matrix", "O1+U2+"}).code, 1);
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(cli({"enumerate", "--c", "9"}).code, 2);
    EXPECT_EQ(cli({"matrix", "O1+U1+", "--format", "xml"}).code, 2);
    EXPECT_EQ(cli({"--help"}).code, 0);
}
