#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tiresense/estimation/rls.hpp"
#include "tiresense/features/pipeline.hpp"
#include "tiresense/io/model_io.hpp"
#include "tiresense/io/tables.hpp"
#include "tiresense/io/trace_io.hpp"

namespace tiresense::cli {

/// Speed and radius hint the on-board unit would use for a recorded trace.
features::TraceContext context_for(const sim::TireScenario& scenario);

struct CalibrationOptions {
    double reference_pressure = 32.0;  ///< psi, patch baseline
    double reference_tread = 8.0;      ///< mm, patch baseline
};

/// Surface fit on the per-trace mean peak radial displacement of every trace,
/// plus the patch-length baseline on the traces at the reference pressure and
/// tread (omitted when fewer than two loads are available there).
io::LoadModelFile calibrate_load(std::span<const io::LoadedTrace> traces, const CalibrationOptions& options = {});

/// Slip regression on per-trace mean lateral features.
io::SlipModelFile calibrate_slip(std::span<const io::LoadedTrace> traces);

struct EstimateOptions {
    double forgetting_factor = estimation::kDefaultForgettingFactor;
    double initial_covariance = estimation::kDefaultInitialCovariance;
};

struct EstimateRun {
    features::TraceAnalysis analysis;
    estimation::LoadStreamResult load;
    std::vector<io::EstimateRow> rows;
};

/// Per-turn features, RLS load stream at a constant `pressure`, and per-turn
/// slip predictions when a slip model is given.
EstimateRun estimate_trace(const sim::AccelTrace& trace, const features::TraceContext& context, double pressure,
                           const estimation::LoadSurfaceModel& load_model,
                           const std::optional<estimation::SlipModel>& slip_model, const EstimateOptions& options = {});

/// The same RLS reduction applied to patch-length baseline loads.
estimation::LoadStreamResult estimate_patch_stream(const features::TraceAnalysis& analysis,
                                                   const estimation::PatchLoadModel& model,
                                                   const EstimateOptions& options = {});

/// Radial and lateral displacement of the first valid turn, plus the
/// unfiltered double integral of the same radial slice.
std::vector<io::PlotPoint> displacement_plot(const sim::AccelTrace& trace, const features::TraceAnalysis& analysis);

}  // namespace tiresense::cli
