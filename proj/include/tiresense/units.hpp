#pragma once

#include <numbers>

// Scenario and model files use lbf / psi / mm; the physics runs in SI.
namespace tiresense::units {

inline constexpr double kNewtonsPerPoundForce = 4.4482216;
inline constexpr double kPascalsPerPsi = 6894.757;
inline constexpr double kMetersPerMillimeter = 1e-3;
inline constexpr double kMillimetersPerMeter = 1e3;

constexpr double lbf_to_newtons(double lbf) { return lbf * kNewtonsPerPoundForce; }
constexpr double newtons_to_lbf(double n) { return n / kNewtonsPerPoundForce; }
constexpr double psi_to_pascals(double psi) { return psi * kPascalsPerPsi; }
constexpr double mm_to_m(double mm) { return mm * kMetersPerMillimeter; }
constexpr double m_to_mm(double m) { return m * kMillimetersPerMeter; }
constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace tiresense::units
