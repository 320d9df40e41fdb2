#include "tiresense/sim/simulator.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "tiresense/error.hpp"
#include "tiresense/units.hpp"

namespace tiresense::sim {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFullTreadMm = 8.0;
constexpr double kMaxSlipDeg = 10.0;
constexpr double kMinSamplesPerTurn = 20.0;

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

struct LinerPosition {
    double x = 0.0;  // forward, relative to wheel centre
    double y = 0.0;  // lateral
    double z = 0.0;  // up, relative to wheel centre
};

// Everything the trajectory needs, precomputed once per simulation.
struct Trajectory {
    double radius;
    double half_angle;
    double chord;
    double lateral_peak;  // m, tan(slip) * chord
    double release;       // rad
    double omega;         // rad/s

    // Turn-local phase in [-pi, pi): 0 at the bottom, -pi at turn start.
    double phase(double t) const {
        const double angle = omega * t;
        const double turns = std::floor(angle / (2.0 * kPi));
        return angle - 2.0 * kPi * turns - kPi;
    }

    LinerPosition at_phase(double psi) const {
        LinerPosition p;
        const bool in_patch = half_angle > 0.0 && std::abs(psi) <= half_angle;
        if (in_patch) {
            // constant-speed traverse of the flat chord
            p.x = -radius * std::sin(half_angle) * psi / half_angle;
            p.z = -radius * std::cos(half_angle);
            p.y = lateral_peak * (psi + half_angle) / (2.0 * half_angle);
        } else {
            p.x = -radius * std::sin(psi);
            p.z = -radius * std::cos(psi);
            if (psi > half_angle && psi < half_angle + release) {
                p.y = lateral_peak * 0.5 * (1.0 + std::cos(kPi * (psi - half_angle) / release));
            }
        }
        return p;
    }
};

}  // namespace

void TireScenario::validate() const {
    if (!finite_positive(unloaded_radius)) throw ValidationError("unloaded_radius must be > 0");
    if (!finite_positive(vehicle_speed)) throw ValidationError("vehicle_speed must be > 0");
    if (!finite_positive(vertical_load)) throw ValidationError("vertical_load must be > 0");
    if (!finite_positive(inflation_pressure)) throw ValidationError("inflation_pressure must be > 0");
    if (!std::isfinite(tread_depth) || tread_depth < 0.0) throw ValidationError("tread_depth must be >= 0");
    if (!std::isfinite(slip_angle) || std::abs(slip_angle) > kMaxSlipDeg) {
        throw ValidationError("slip_angle magnitude must be <= 10 deg (adhesion-only brush model)");
    }
    if (!std::isfinite(stiffness_c0) || !std::isfinite(stiffness_c1) ||
        stiffness_c0 + stiffness_c1 * inflation_pressure <= 0.0) {
        throw ValidationError("vertical stiffness c0 + c1*pressure must be > 0");
    }
    if (!std::isfinite(wear_radius_gain) || wear_radius_gain < 0.0) {
        throw ValidationError("wear_radius_gain must be >= 0");
    }
    if (release_angle && !finite_positive(*release_angle)) throw ValidationError("release_angle must be > 0");
}

void SensorSpec::validate() const {
    if (!finite_positive(sample_rate)) throw ValidationError("sample_rate must be > 0");
    if (!std::isfinite(noise_std) || noise_std < 0.0) throw ValidationError("noise_std must be >= 0");
    for (double b : dc_bias) {
        if (!std::isfinite(b)) throw ValidationError("dc_bias must be finite");
    }
}

void AccelTrace::validate() const {
    if (!finite_positive(sample_rate)) throw ValidationError("trace sample_rate must be > 0");
    if (tangential.size() != radial.size() || lateral.size() != radial.size()) {
        throw ValidationError("trace channels differ in length");
    }
    for (const auto* ch : {&tangential, &lateral, &radial}) {
        for (double v : *ch) {
            if (!std::isfinite(v)) throw ValidationError("trace contains non-finite samples");
        }
    }
}

double TireGeometry::deflection_mm() const { return units::m_to_mm(deflection); }
double TireGeometry::patch_chord() const { return 2.0 * effective_radius * std::sin(contact_half_angle); }
double TireGeometry::patch_arc() const { return 2.0 * effective_radius * contact_half_angle; }

TireGeometry flat_spot_geometry(double effective_radius, double deflection) {
    if (!finite_positive(effective_radius)) throw GeometryError("effective radius must be > 0");
    if (!std::isfinite(deflection) || deflection < 0.0) throw GeometryError("deflection must be >= 0");
    if (deflection >= effective_radius) {
        throw GeometryError("deflection " + std::to_string(deflection) + " m reaches effective radius " +
                            std::to_string(effective_radius) + " m");
    }
    TireGeometry g;
    g.effective_radius = effective_radius;
    g.deflection = deflection;
    g.contact_half_angle = std::acos((effective_radius - deflection) / effective_radius);
    return g;
}

TireGeometry derive_geometry(const TireScenario& scenario) {
    scenario.validate();
    const double radius =
        scenario.unloaded_radius - units::mm_to_m(scenario.wear_radius_gain * (kFullTreadMm - scenario.tread_depth));
    if (!(radius > 0.0)) throw GeometryError("tread wear leaves a non-positive effective radius");
    const double stiffness_n_per_mm = scenario.stiffness_c0 + scenario.stiffness_c1 * scenario.inflation_pressure;
    const double deflection_mm = units::lbf_to_newtons(scenario.vertical_load) / stiffness_n_per_mm;
    return flat_spot_geometry(radius, units::mm_to_m(deflection_mm));
}

double wheel_period(const TireScenario& scenario) {
    const TireGeometry g = derive_geometry(scenario);
    return 2.0 * kPi * g.effective_radius / scenario.vehicle_speed;
}

Simulation simulate(const TireScenario& scenario, const SensorSpec& sensor, int n_turns) {
    if (n_turns < 1) throw ValidationError("n_turns must be >= 1");
    sensor.validate();
    const TireGeometry geom = derive_geometry(scenario);

    const double omega = scenario.vehicle_speed / geom.effective_radius;
    const double period = 2.0 * kPi / omega;
    const double fs = sensor.sample_rate;
    if (fs < kMinSamplesPerTurn / period) {
        throw ResolutionError("sample_rate " + std::to_string(fs) + " Hz is below 20x the wheel rotation frequency");
    }

    const double half_angle = geom.contact_half_angle;
    const double release = scenario.release_angle.value_or(half_angle);
    if (half_angle + release > kPi) throw ValidationError("release_angle extends past the end of the revolution");

    const double tan_slip = std::tan(units::deg_to_rad(scenario.slip_angle));
    const Trajectory traj{geom.effective_radius, half_angle,  geom.patch_chord(),
                          tan_slip * geom.patch_chord(), release, omega};

    const auto n = static_cast<std::size_t>(std::llround(n_turns * period * fs));
    Simulation out;
    AccelTrace& trace = out.trace;
    trace.sample_rate = fs;
    trace.tangential.resize(n);
    trace.lateral.resize(n);
    trace.radial.resize(n);

    // The wheel centre moves at constant velocity, so its second difference is
    // zero and only the position relative to the centre is differenced.
    auto position = [&](std::ptrdiff_t i) { return traj.at_phase(traj.phase(static_cast<double>(i) / fs)); };
    LinerPosition prev = position(-1);
    LinerPosition cur = position(0);
    const double fs2 = fs * fs;
    for (std::size_t i = 0; i < n; ++i) {
        const LinerPosition next = position(static_cast<std::ptrdiff_t>(i) + 1);
        const double ax = (next.x - 2.0 * cur.x + prev.x) * fs2;
        const double ay = (next.y - 2.0 * cur.y + prev.y) * fs2;
        const double az = (next.z - 2.0 * cur.z + prev.z) * fs2;
        const double psi = traj.phase(static_cast<double>(i) / fs);
        const double s = std::sin(psi);
        const double c = std::cos(psi);
        trace.tangential[i] = ax * c - az * s;
        trace.lateral[i] = ay;
        trace.radial[i] = ax * s + az * c;
        prev = cur;
        cur = next;
    }

    if (sensor.noise_std > 0.0) {
        std::mt19937_64 rng(sensor.seed);
        std::normal_distribution<double> noise(0.0, sensor.noise_std);
        for (std::size_t i = 0; i < n; ++i) {
            trace.tangential[i] += noise(rng);
            trace.lateral[i] += noise(rng);
            trace.radial[i] += noise(rng);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        trace.tangential[i] += sensor.dc_bias[0];
        trace.lateral[i] += sensor.dc_bias[1];
        trace.radial[i] += sensor.dc_bias[2];
    }

    out.truth.effective_radius = geom.effective_radius;
    out.truth.turns.reserve(static_cast<std::size_t>(n_turns));
    for (int k = 0; k < n_turns; ++k) {
        TurnTruth t;
        t.deflection_mm = geom.deflection_mm();
        t.patch_chord = geom.patch_chord();
        t.patch_arc = geom.patch_arc();
        t.contact_half_angle = half_angle;
        t.peak_lateral_mm = units::m_to_mm(traj.lateral_peak);
        t.lateral_slope = tan_slip;
        t.turn_start_time = k * period;
        t.wheel_period = period;
        t.patch_entry_time = t.turn_start_time + (kPi - half_angle) / omega;
        t.patch_exit_time = t.turn_start_time + (kPi + half_angle) / omega;
        out.truth.turns.push_back(t);
    }
    return out;
}

}  // namespace tiresense::sim
