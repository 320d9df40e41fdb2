#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "support.hpp"
#include "tiresense/error.hpp"
#include "tiresense/sim/simulator.hpp"

using namespace tiresense;

namespace {

// Independent chord geometry: half chord from Pythagoras on the flattened circle.
double chord_oracle(double r, double d) { return 2.0 * std::sqrt(2.0 * r * d - d * d); }
double half_angle_oracle(double r, double d) { return std::atan2(std::sqrt(2.0 * r * d - d * d), r - d); }

}  // namespace

TEST(FlatSpotGeometry, MatchesClosedFormAtReferencePoint) {
    const auto g = sim::flat_spot_geometry(0.3, 0.02);
    EXPECT_NEAR(g.contact_half_angle, half_angle_oracle(0.3, 0.02), 1e-12);
    EXPECT_NEAR(g.patch_chord(), chord_oracle(0.3, 0.02), 1e-12);
    EXPECT_NEAR(g.patch_arc(), 2.0 * 0.3 * half_angle_oracle(0.3, 0.02), 1e-12);
    // published to five decimals, one unit in the last place
    EXPECT_NEAR(g.contact_half_angle, 0.36721, 1e-5);
    EXPECT_NEAR(g.patch_chord(), 0.21540, 1e-5);
    EXPECT_NEAR(g.patch_arc(), 0.22033, 1e-5);
}

TEST(FlatSpotGeometry, ZeroDeflectionHasNoPatch) {
    const auto g = sim::flat_spot_geometry(0.3, 0.0);
    EXPECT_EQ(g.contact_half_angle, 0.0);
    EXPECT_EQ(g.patch_chord(), 0.0);
    EXPECT_EQ(g.patch_arc(), 0.0);
}

TEST(FlatSpotGeometry, DeflectionReachingRadiusIsRejected) {
    EXPECT_THROW(sim::flat_spot_geometry(0.3, 0.3), GeometryError);
    EXPECT_THROW(sim::flat_spot_geometry(0.3, 0.31), GeometryError);
    EXPECT_THROW(sim::flat_spot_geometry(0.0, 0.01), GeometryError);
}

TEST(DeriveGeometry, FollowsStiffnessAndWearModel) {
    sim::TireScenario s;
    s.vertical_load = 1000.0;
    s.inflation_pressure = 30.0;
    s.tread_depth = 5.0;
    const auto g = sim::derive_geometry(s);
    const double k = s.stiffness_c0 + s.stiffness_c1 * 30.0;  // N/mm
    EXPECT_NEAR(g.deflection_mm(), 1000.0 * 4.4482216 / k, 1e-9);
    EXPECT_NEAR(g.effective_radius, 0.3 - s.wear_radius_gain * 3.0 * 1e-3, 1e-15);
}

TEST(DeriveGeometry, TreadLossKeepsDeflectionAndShortensChord) {
    sim::TireScenario fresh;
    fresh.tread_depth = 8.0;
    sim::TireScenario worn = fresh;
    worn.tread_depth = 2.0;
    const auto a = sim::derive_geometry(fresh);
    const auto b = sim::derive_geometry(worn);
    EXPECT_DOUBLE_EQ(a.deflection, b.deflection);
    EXPECT_LT(b.patch_chord(), a.patch_chord());
    EXPECT_NEAR(b.patch_chord(), chord_oracle(b.effective_radius, b.deflection), 1e-12);
}

TEST(DeriveGeometry, ChordMonotoneOverTestGrid) {
    for (double p : {29.0, 32.0, 35.0}) {
        double prev = 0.0;
        for (double load = 800.0; load <= 1500.0; load += 50.0) {
            sim::TireScenario s;
            s.vertical_load = load;
            s.inflation_pressure = p;
            const double c = sim::derive_geometry(s).patch_chord();
            EXPECT_GT(c, prev) << "load " << load << " pressure " << p;
            prev = c;
        }
    }
    for (double load : {800.0, 1150.0, 1500.0}) {
        double prev = 1.0;
        for (double p = 29.0; p <= 35.0; p += 0.5) {
            sim::TireScenario s;
            s.vertical_load = load;
            s.inflation_pressure = p;
            const double c = sim::derive_geometry(s).patch_chord();
            EXPECT_LT(c, prev) << "load " << load << " pressure " << p;
            prev = c;
        }
    }
}

TEST(TireScenario, RejectsOutOfDomainFields) {
    auto with = [](auto mutate) {
        sim::TireScenario s;
        mutate(s);
        return s;
    };
    EXPECT_THROW(with([](auto& s) { s.unloaded_radius = 0.0; }).validate(), ValidationError);
    EXPECT_THROW(with([](auto& s) { s.vehicle_speed = -1.0; }).validate(), ValidationError);
    EXPECT_THROW(with([](auto& s) { s.vertical_load = 0.0; }).validate(), ValidationError);
    EXPECT_THROW(with([](auto& s) { s.inflation_pressure = 0.0; }).validate(), ValidationError);
    EXPECT_THROW(with([](auto& s) { s.slip_angle = 10.5; }).validate(), ValidationError);
    EXPECT_THROW(with([](auto& s) { s.slip_angle = -11.0; }).validate(), ValidationError);
    EXPECT_NO_THROW(with([](auto& s) { s.slip_angle = -10.0; }).validate());
}

TEST(Simulate, HugeLoadIsGeometryError) {
    sim::TireScenario s;
    s.vertical_load = 20000.0;  // ~445 mm deflection on a 300 mm wheel
    EXPECT_THROW(sim::simulate(s, test::clean_sensor(), 1), GeometryError);
}

TEST(Simulate, LowSampleRateIsResolutionError) {
    sim::TireScenario s;
    auto sensor = test::clean_sensor();
    const double f_rot = 1.0 / sim::wheel_period(s);
    sensor.sample_rate = 19.0 * f_rot;
    EXPECT_THROW(sim::simulate(s, sensor, 3), ResolutionError);
    sensor.sample_rate = 21.0 * f_rot;
    EXPECT_NO_THROW(sim::simulate(s, sensor, 3));
}

TEST(Simulate, SampleCountIsRoundedDurationTimesRate) {
    sim::TireScenario s;
    const auto run = sim::simulate(s, test::clean_sensor(), 7);
    const double period = 2.0 * std::numbers::pi * 0.3 / 20.0;
    EXPECT_EQ(run.trace.size(), static_cast<std::size_t>(std::llround(7 * period * 10000.0)));
    EXPECT_EQ(run.truth.turns.size(), 7u);
    EXPECT_NEAR(run.truth.turns[3].turn_start_time, 3 * period, 1e-12);
}

TEST(Simulate, ZeroSlipGivesZeroLateralChannel) {
    sim::TireScenario s;
    const auto run = sim::simulate(s, test::clean_sensor(), 4);
    EXPECT_TRUE(std::all_of(run.trace.lateral.begin(), run.trace.lateral.end(), [](double v) { return v == 0.0; }));
}

TEST(Simulate, RadialAccelerationIsCentripetalOffPatchAndZeroAtCentre) {
    sim::TireScenario s;
    const auto run = sim::simulate(s, test::clean_sensor(), 5);
    const auto& turn = run.truth.turns[2];
    const double r = run.truth.effective_radius;
    const double omega = s.vehicle_speed / r;
    const double fs = run.trace.sample_rate;

    double sum = 0.0;
    int count = 0;
    for (std::size_t i = 0; i < run.trace.size(); ++i) {
        const double t = run.trace.time_at(i);
        const double phase = std::fmod(omega * t, 2.0 * std::numbers::pi) - std::numbers::pi;
        if (std::abs(phase) > turn.contact_half_angle + 5.0 * omega / fs) {
            sum += run.trace.radial[i];
            ++count;
        }
    }
    EXPECT_NEAR(sum / count, omega * omega * r, 0.02 * omega * omega * r);

    const auto centre = static_cast<std::size_t>(std::llround(turn.patch_center_time() * fs));
    EXPECT_LT(std::abs(run.trace.radial[centre]), 1e-6 * omega * omega * r);
}

TEST(Simulate, TangentialExtremaSitAtPatchEdges) {
    sim::TireScenario s;
    s.vertical_load = 1300.0;
    const auto run = sim::simulate(s, test::clean_sensor(), 4);
    const double fs = run.trace.sample_rate;
    const auto& tan = run.trace.tangential;
    for (const auto& turn : run.truth.turns) {
        const auto lo = static_cast<std::size_t>(std::ceil(turn.turn_start_time * fs));
        const auto hi = std::min(tan.size(), static_cast<std::size_t>(std::floor((turn.turn_start_time + turn.wheel_period) * fs)));
        const auto first = tan.begin() + static_cast<std::ptrdiff_t>(lo);
        const auto last = tan.begin() + static_cast<std::ptrdiff_t>(hi);
        const double imax = static_cast<double>(std::max_element(first, last) - tan.begin());
        const double imin = static_cast<double>(std::min_element(first, last) - tan.begin());
        EXPECT_NEAR(imax, turn.patch_entry_time * fs, 2.0);
        EXPECT_NEAR(imin, turn.patch_exit_time * fs, 2.0);
        EXPECT_GT(*std::max_element(first, last), 0.0);
        EXPECT_LT(*std::min_element(first, last), 0.0);
    }
}

TEST(Simulate, TruthCarriesBrushModelPeak) {
    sim::TireScenario s;
    s.slip_angle = 3.0;
    const auto run = sim::simulate(s, test::clean_sensor(), 2);
    const auto& t = run.truth.turns[0];
    EXPECT_NEAR(t.lateral_slope, std::tan(3.0 * std::numbers::pi / 180.0), 1e-15);
    EXPECT_NEAR(t.peak_lateral_mm, t.lateral_slope * t.patch_chord * 1000.0, 1e-12);
}

TEST(Simulate, SameSeedIsBitIdentical) {
    sim::TireScenario s;
    s.slip_angle = 1.5;
    sim::SensorSpec sensor;
    sensor.seed = 42;
    const auto a = sim::simulate(s, sensor, 3);
    const auto b = sim::simulate(s, sensor, 3);
    EXPECT_EQ(a.trace.tangential, b.trace.tangential);
    EXPECT_EQ(a.trace.lateral, b.trace.lateral);
    EXPECT_EQ(a.trace.radial, b.trace.radial);
}

TEST(Simulate, NoiseFreeTraceIgnoresSeed) {
    sim::TireScenario s;
    auto sensor = test::clean_sensor();
    const auto a = sim::simulate(s, sensor, 3);
    sensor.seed = 987654321;
    const auto b = sim::simulate(s, sensor, 3);
    EXPECT_EQ(a.trace.radial, b.trace.radial);
    EXPECT_EQ(a.truth.turns.size(), b.truth.turns.size());
    EXPECT_EQ(a.truth.turns[1].patch_chord, b.truth.turns[1].patch_chord);
}

TEST(Simulate, BiasShiftsEveryChannel) {
    sim::TireScenario s;
    auto sensor = test::clean_sensor();
    const auto a = sim::simulate(s, sensor, 2);
    sensor.dc_bias = {1.0, -2.0, 3.0};
    const auto b = sim::simulate(s, sensor, 2);
    for (std::size_t i = 0; i < a.trace.size(); i += 97) {
        EXPECT_DOUBLE_EQ(b.trace.tangential[i] - a.trace.tangential[i], 1.0);
        EXPECT_DOUBLE_EQ(b.trace.lateral[i] - a.trace.lateral[i], -2.0);
        EXPECT_NEAR(b.trace.radial[i] - a.trace.radial[i], 3.0, 1e-9);
    }
}

TEST(Simulate, NoiseHasRequestedSpread) {
    sim::TireScenario s;
    auto sensor = test::clean_sensor();
    const auto clean = sim::simulate(s, sensor, 5);
    sensor.noise_std = 25.0;
    const auto noisy = sim::simulate(s, sensor, 5);
    double sq = 0.0;
    for (std::size_t i = 0; i < clean.trace.size(); ++i) {
        const double e = noisy.trace.lateral[i] - clean.trace.lateral[i];
        sq += e * e;
    }
    EXPECT_NEAR(std::sqrt(sq / static_cast<double>(clean.trace.size())), 25.0, 0.5);
}

TEST(Simulate, RejectsReleaseWindowPastRevolution) {
    sim::TireScenario s;
    s.release_angle = 3.0;
    EXPECT_THROW(sim::simulate(s, test::clean_sensor(), 1), ValidationError);
}
