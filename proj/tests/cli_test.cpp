#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tiresense/cli/app.hpp"
#include "tiresense/cli/report.hpp"
#include "tiresense/io/files.hpp"

using namespace tiresense;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "tiresense");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / (std::string("tiresense_cli_") + info->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        std::ofstream(path("scenario.json")) << R"({"noise_std": 25.0})";
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, HelpAndVersionExitZero) {
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"simulate", "--help"}).code, 0);
    EXPECT_EQ(run({"--version"}).out, "0.1.0\n");
}

TEST_F(Cli, ParseErrorsExitOneWithSingleLine) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {}, {"fly"}, {"simulate"}, {"simulate", "--scenario", "s.json", "--out", "t.csv", "--wings", "2"}}) {
        const auto r = run(args);
        EXPECT_EQ(r.code, 1);
        ASSERT_FALSE(r.err.empty());
        EXPECT_EQ(r.err.find('\n'), r.err.size() - 1) << r.err;
    }
}

TEST_F(Cli, MissingInputFileExitsTwo) {
    const auto r = run({"simulate", "--scenario", path("nope.json"), "--out", path("t.csv")});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(fs::exists(path("t.csv")));
}

TEST_F(Cli, SchemaMismatchExitsOne) {
    std::ofstream(path("bad.json")) << R"({"tyre_load": 1})";
    EXPECT_EQ(run({"simulate", "--scenario", path("bad.json"), "--out", path("t.csv")}).code, 1);
}

TEST_F(Cli, SimulateWithSameSeedIsByteIdentical) {
    ASSERT_EQ(run({"simulate", "--scenario", path("scenario.json"), "--turns", "4", "--seed", "7", "--out", path("a.csv")}).code, 0);
    ASSERT_EQ(run({"simulate", "--scenario", path("scenario.json"), "--turns", "4", "--seed", "7", "--out", path("b.csv")}).code, 0);
    EXPECT_EQ(io::read_text(path("a.csv")), io::read_text(path("b.csv")));
    EXPECT_EQ(io::read_text(path("a.json")), io::read_text(path("b.json")));
    ASSERT_EQ(run({"simulate", "--scenario", path("scenario.json"), "--turns", "4", "--seed", "8", "--out", path("c.csv")}).code, 0);
    EXPECT_NE(io::read_text(path("a.csv")), io::read_text(path("c.csv")));
}

TEST_F(Cli, CalibrateEstimateEvaluate) {
    fs::create_directories(dir_ / "cal");
    int seed = 100;
    for (const char* load : {"800", "1150", "1500"}) {
        for (const char* p : {"29", "32", "35"}) {
            const std::string out = (dir_ / "cal" / (std::string("l") + load + "_p" + p + ".csv")).string();
            ASSERT_EQ(run({"simulate", "--scenario", path("scenario.json"), "--turns", "12", "--load", load, "--pressure", p,
                           "--seed", std::to_string(seed++), "--out", out})
                          .code,
                      0);
        }
    }
    fs::create_directories(dir_ / "slip");
    for (const char* a : {"0", "2", "4", "6"}) {
        const std::string out = (dir_ / "slip" / (std::string("s") + a + ".csv")).string();
        ASSERT_EQ(run({"simulate", "--scenario", path("scenario.json"), "--turns", "12", "--slip", a, "--seed",
                       std::to_string(seed++), "--out", out})
                      .code,
                  0);
    }
    ASSERT_EQ(run({"calibrate-load", "--traces", path("cal"), "--out", path("load.json")}).code, 0);
    ASSERT_EQ(run({"calibrate-slip", "--traces", path("slip"), "--out", path("slip.json")}).code, 0);

    ASSERT_EQ(run({"simulate", "--scenario", path("scenario.json"), "--turns", "25", "--load", "1000", "--slip", "3",
                   "--seed", "7", "--out", path("t.csv")})
                  .code,
              0);
    const auto est = run({"estimate", "--trace", path("t.csv"), "--load-model", path("load.json"), "--slip-model",
                          path("slip.json"), "--lambda", "0.98", "--out", path("est.csv"), "--features", path("f.csv"),
                          "--plot-data", path("profile.csv")});
    ASSERT_EQ(est.code, 0) << est.err;
    const auto ev = run({"evaluate", "--estimates", path("est.csv"), "--truth", path("t.json"), "--report",
                         path("report.json"), "--plot-data", path("fig11.csv")});
    ASSERT_EQ(ev.code, 0) << ev.err;

    const std::string report = io::read_text(path("report.json"));
    EXPECT_NE(report.find("\"schema_version\": \"tiresense.report.v1\""), std::string::npos);
    EXPECT_NE(report.find("\"convergence_turn\""), std::string::npos);
    EXPECT_NE(io::read_text(path("fig11.csv")).find("load_estimate_lbf,1,"), std::string::npos);
    EXPECT_NE(io::read_text(path("profile.csv")).find("radial_displacement_unfiltered_mm"), std::string::npos);
    EXPECT_EQ(io::read_text(path("f.csv")).rfind("# tiresense.features.v1\nturn,patch_length_m,", 0), 0u);
}

TEST_F(Cli, EvaluateLengthMismatchWritesNothing) {
    ASSERT_EQ(run({"simulate", "--scenario", path("scenario.json"), "--turns", "5", "--out", path("t.csv")}).code, 0);
    io::write_text(path("est.csv"), "# tiresense.estimates.v1\nturn,load_lbf,slip_deg,valid\n1,1000,,1\n2,1001,,1\n");
    const auto r = run({"evaluate", "--estimates", path("est.csv"), "--truth", path("t.json"), "--report", path("r.json"),
                        "--plot-data", path("p.csv")});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(fs::exists(path("r.json")));
    EXPECT_FALSE(fs::exists(path("p.csv")));
}

TEST_F(Cli, SweepWritesSharesThatSumToHundred) {
    std::ofstream(path("ranges.json")) << R"({"load": [800, 1500], "pressure": [29, 35], "tread": [2, 8], "points": 3, "turns": 4})";
    const auto r = run({"sweep", "--ranges", path("ranges.json"), "--out", path("table3.json"), "--plot-data", path("sweep.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(io::read_text(path("table3.json")).find("\"share_percent\""), std::string::npos);
    std::ofstream(path("bad.json")) << R"({"load": [800, 1500], "speed": [10, 20]})";
    EXPECT_EQ(run({"sweep", "--ranges", path("bad.json"), "--out", path("x.json")}).code, 1);
}

TEST(Report, ErrorStatsAreMeanRmsMax) {
    const auto s = cli::error_stats({0.01, -0.03, 0.02});
    EXPECT_EQ(s.count, 3u);
    EXPECT_NEAR(s.mean, 0.02, 1e-15);
    EXPECT_NEAR(s.rms, std::sqrt((1e-4 + 9e-4 + 4e-4) / 3.0), 1e-15);
    EXPECT_NEAR(s.max, 0.03, 1e-15);
}

TEST(Report, EvaluateUsesSidecarTruth) {
    io::TraceSidecar truth;
    truth.scenario.vertical_load = 1000.0;
    truth.scenario.slip_angle = 2.0;
    truth.truth.turns.resize(3);
    const std::vector<io::EstimateRow> rows{{1, 900.0, 2.5, true}, {2, 1010.0, std::nullopt, false}, {3, 1020.0, 1.5, true}};
    const auto r = cli::evaluate(rows, truth);
    EXPECT_EQ(r.skipped_turns, 1u);
    EXPECT_NEAR(*r.final_relative_error, 0.02, 1e-12);
    EXPECT_EQ(r.convergence_turn, 2u);
    EXPECT_EQ(r.load_relative_error.count, 2u);
    EXPECT_NEAR(r.slip_error.max, 0.5, 1e-12);
    EXPECT_EQ(r.slip_error.count, 2u);
}
