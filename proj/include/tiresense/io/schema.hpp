#pragma once

namespace tiresense::io {

inline constexpr const char* kTraceSchema = "tiresense.trace.v1";
inline constexpr const char* kSidecarSchema = "tiresense.sidecar.v1";
inline constexpr const char* kScenarioSchema = "tiresense.scenario.v1";
inline constexpr const char* kLoadModelSchema = "tiresense.load_model.v1";
inline constexpr const char* kSlipModelSchema = "tiresense.slip_model.v1";
inline constexpr const char* kFeaturesSchema = "tiresense.features.v1";
inline constexpr const char* kEstimatesSchema = "tiresense.estimates.v1";
inline constexpr const char* kReportSchema = "tiresense.report.v1";
inline constexpr const char* kSweepRangesSchema = "tiresense.sweep_ranges.v1";
inline constexpr const char* kSensitivitySchema = "tiresense.sensitivity.v1";
inline constexpr const char* kPlotSchema = "tiresense.plot.v1";

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace tiresense::io
