#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "support.hpp"
#include "tiresense/error.hpp"
#include "tiresense/io/csv.hpp"
#include "tiresense/io/files.hpp"
#include "tiresense/io/model_io.hpp"
#include "tiresense/io/schema.hpp"
#include "tiresense/io/tables.hpp"
#include "tiresense/io/trace_io.hpp"

using namespace tiresense;
namespace fs = std::filesystem;

namespace {

class TempDir : public ::testing::Test {
protected:
    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / (std::string("tiresense_io_") + info->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    fs::path dir_;
};

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Csv, NumbersRoundTripExactly) {
    for (double x : {0.1, -1234.5678, 1e-300, 6.02214076e23, 1.0 / 3.0}) {
        EXPECT_EQ(io::parse_number(io::format_number(x)), x);
    }
    EXPECT_EQ(io::format_number(-0.0), "0");
    EXPECT_EQ(io::format_number(2.5), "2.5");
    EXPECT_THROW(io::format_number(std::nan("")), ValidationError);
    EXPECT_THROW(io::parse_number("1.5x"), SchemaError);
    EXPECT_THROW(io::parse_number(""), SchemaError);
    EXPECT_FALSE(io::parse_optional("").has_value());
}

TEST(Csv, SplitKeepsEmptyCells) {
    const auto cells = io::split_row("1,,3,");
    ASSERT_EQ(cells.size(), 4u);
    EXPECT_EQ(cells[1], "");
    EXPECT_EQ(cells[3], "");
}

TEST(Digest, MatchesPublishedFnvVectors) {
    EXPECT_EQ(io::fnv1a_hex(""), "cbf29ce484222325");
    EXPECT_EQ(io::fnv1a_hex("a"), "af63dc4c8601ec8c");
    EXPECT_EQ(io::fnv1a_hex("foobar"), "85944171f73967e8");
}

TEST(PlotData, EmptyIsHeaderOnly) {
    EXPECT_EQ(io::render_plot_data({}), std::string("# ") + io::kPlotSchema + "\nseries,x,y\n");
    EXPECT_THROW(io::render_plot_data({{"a,b", 0.0, 0.0}}), ValidationError);
}

TEST_F(TempDir, TraceAndSidecarRoundTrip) {
    sim::TireScenario s;
    s.slip_angle = 1.25;
    s.release_angle = 0.3;
    sim::SensorSpec sensor;
    sensor.seed = 77;
    const auto run = sim::simulate(s, sensor, 3);
    const fs::path csv = dir_ / "trace.csv";
    io::write_trace(csv, run, s, sensor, 3);
    ASSERT_TRUE(fs::exists(dir_ / "trace.json"));

    const auto trace = io::read_trace_csv(csv);
    EXPECT_EQ(trace.sample_rate, 10000.0);
    EXPECT_EQ(trace.radial, run.trace.radial);
    EXPECT_EQ(trace.lateral, run.trace.lateral);
    EXPECT_EQ(trace.tangential, run.trace.tangential);

    const auto side = io::read_sidecar(dir_ / "trace.json");
    EXPECT_EQ(side.scenario.slip_angle, 1.25);
    EXPECT_EQ(side.scenario.release_angle, 0.3);
    EXPECT_EQ(side.sensor.seed, 77u);
    EXPECT_EQ(side.n_turns, 3);
    EXPECT_EQ(side.samples, run.trace.size());
    ASSERT_EQ(side.truth.turns.size(), 3u);
    EXPECT_EQ(side.truth.turns[2].patch_chord, run.truth.turns[2].patch_chord);
    EXPECT_EQ(side.truth.effective_radius, run.truth.effective_radius);

    const auto loaded = io::read_trace_directory(dir_);
    ASSERT_EQ(loaded.size(), 1u);
    EXPECT_EQ(loaded[0].trace.size(), run.trace.size());
}

TEST_F(TempDir, TraceHeaderAndSchemaAreChecked) {
    write(dir_ / "a.csv", "t,a_tangential,a_lateral,a_radial\n0,1,2,3\n");
    EXPECT_THROW(io::read_trace_csv(dir_ / "a.csv"), SchemaError);
    write(dir_ / "b.csv", "# tiresense.trace.v9\nt,a_tangential,a_lateral,a_radial\n0,1,2,3\n0.1,1,2,3\n");
    EXPECT_THROW(io::read_trace_csv(dir_ / "b.csv"), SchemaError);
    write(dir_ / "c.csv", "# tiresense.trace.v1\nt,ax,ay,az\n0,1,2,3\n0.1,1,2,3\n");
    EXPECT_THROW(io::read_trace_csv(dir_ / "c.csv"), SchemaError);
    write(dir_ / "d.csv", "# tiresense.trace.v1\nt,a_tangential,a_lateral,a_radial\n0,1,2,3\n0.1,1,2,3\n0.3,1,2,3\n");
    EXPECT_THROW(io::read_trace_csv(dir_ / "d.csv"), SchemaError);
    EXPECT_THROW(io::read_trace_csv(dir_ / "missing.csv"), IoError);
}

TEST(Scenario, MissingFieldsKeepDefaultsAndUnknownFieldsFail) {
    const auto f = io::parse_scenario(R"({"vertical_load": 900, "noise_std": 0, "dc_bias": [1, 2, 3], "seed": 5})");
    EXPECT_EQ(f.scenario.vertical_load, 900.0);
    EXPECT_EQ(f.scenario.inflation_pressure, sim::TireScenario{}.inflation_pressure);
    EXPECT_EQ(f.sensor.noise_std, 0.0);
    EXPECT_EQ(f.sensor.dc_bias[2], 3.0);
    EXPECT_EQ(f.sensor.seed, 5u);
    EXPECT_FALSE(f.scenario.release_angle.has_value());

    EXPECT_THROW(io::parse_scenario(R"({"vertical_lod": 900})"), SchemaError);
    EXPECT_THROW(io::parse_scenario(R"({"vertical_load": "heavy"})"), SchemaError);
    EXPECT_THROW(io::parse_scenario(R"({"dc_bias": [1, 2]})"), SchemaError);
    EXPECT_THROW(io::parse_scenario(R"({"seed": -1})"), SchemaError);
    EXPECT_THROW(io::parse_scenario(R"({"schema_version": "other"})"), SchemaError);
    EXPECT_THROW(io::parse_scenario("{"), SchemaError);
    EXPECT_THROW(io::parse_scenario(R"({"slip_angle": 45})"), ValidationError);
}

TEST(Models, LoadModelRoundTrip) {
    io::LoadModelFile m;
    m.surface = {1.5, 0.04, -0.9, -0.0004, 0.014, 0.08, {800, 1500}, {29, 35}};
    m.patch = estimation::PatchLoadModel{-1000.0, 9000.0, 32.0, 8.0, 11.0, {0.2, 0.29}, {800, 1500}};
    m.calibration_traces = 40;
    const auto back = io::parse_load_model(io::render_load_model(m));
    EXPECT_EQ(back.surface.p11, m.surface.p11);
    EXPECT_EQ(back.surface.pressure_range.lo, 29.0);
    ASSERT_TRUE(back.patch);
    EXPECT_EQ(back.patch->q1, 9000.0);
    EXPECT_EQ(back.patch->patch_range.hi, 0.29);
    EXPECT_EQ(back.calibration_traces, 40u);

    m.patch.reset();
    EXPECT_FALSE(io::parse_load_model(io::render_load_model(m)).patch.has_value());
}

TEST(Models, WrongVersionOrShapeIsRejected) {
    io::SlipModelFile s;
    s.model = {0.01, 0.3, 12.0, 0.02, {0.0, 6.0}};
    std::string text = io::render_slip_model(s);
    EXPECT_EQ(io::parse_slip_model(text).model.beta2, 12.0);
    EXPECT_THROW(io::parse_load_model(text), SchemaError);
    const auto pos = text.find("slip_model.v1");
    text.replace(pos, 13, "slip_model.v2");
    EXPECT_THROW(io::parse_slip_model(text), SchemaError);
}

TEST_F(TempDir, EstimatesRoundTrip) {
    const std::vector<io::EstimateRow> rows{{1, std::nullopt, std::nullopt, false}, {2, 1149.5, 0.25, true}, {3, 1150.25, std::nullopt, true}};
    io::write_text(dir_ / "e.csv", io::render_estimates(rows));
    const auto back = io::read_estimates(dir_ / "e.csv");
    ASSERT_EQ(back.size(), 3u);
    EXPECT_FALSE(back[0].load.has_value());
    EXPECT_FALSE(back[0].valid);
    EXPECT_EQ(back[1].load, 1149.5);
    EXPECT_EQ(back[1].slip, 0.25);
    EXPECT_FALSE(back[2].slip.has_value());

    write(dir_ / "bad.csv", std::string("# ") + io::kEstimatesSchema + "\nturn,load_lbf,slip_deg,valid\n1,2,3,yes\n");
    EXPECT_THROW(io::read_estimates(dir_ / "bad.csv"), SchemaError);
}

TEST_F(TempDir, WriteTextLeavesNoPartialFile) {
    io::write_text(dir_ / "x.txt", "hello");
    EXPECT_EQ(io::read_text(dir_ / "x.txt"), "hello");
    EXPECT_FALSE(fs::exists(dir_ / "x.txt.partial"));
    io::write_text(dir_ / "new_dir" / "y.txt", "z");
    EXPECT_EQ(io::read_text(dir_ / "new_dir" / "y.txt"), "z");
    EXPECT_THROW(io::write_text(dir_ / "x.txt" / "y.txt", "z"), IoError);
}
