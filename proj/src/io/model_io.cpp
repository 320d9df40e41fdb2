#include "tiresense/io/model_io.hpp"

#include "json_util.hpp"
#include "tiresense/io/files.hpp"
#include "tiresense/io/schema.hpp"

namespace tiresense::io {
namespace {

using detail::Json;

Json interval_json(const estimation::Interval& r) { return Json::array({r.lo, r.hi}); }

estimation::Interval interval_from(const Json& j, std::string_view key, std::string_view what) {
    const Json& v = detail::field(j, key, what);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw SchemaError(std::string(what) + ": '" + std::string(key) + "' must be [lo, hi]");
    }
    const estimation::Interval r{v[0].get<double>(), v[1].get<double>()};
    if (r.lo > r.hi) throw SchemaError(std::string(what) + ": '" + std::string(key) + "' has lo > hi");
    return r;
}

std::size_t count_from(const Json& j, std::string_view key, std::string_view what) {
    if (!j.contains(key)) return 0;
    const Json& v = j.at(std::string(key));
    if (!v.is_number_unsigned()) throw SchemaError(std::string(what) + ": '" + std::string(key) + "' must be a count");
    return v.get<std::size_t>();
}

}  // namespace

std::string render_load_model(const LoadModelFile& model) {
    const auto& s = model.surface;
    Json j;
    j["schema_version"] = kLoadModelSchema;
    j["calibration_traces"] = model.calibration_traces;
    Json surface;
    surface["p00"] = s.p00;
    surface["p10"] = s.p10;
    surface["p01"] = s.p01;
    surface["p11"] = s.p11;
    surface["p02"] = s.p02;
    surface["fit_residual_rms_mm"] = s.fit_residual_rms;
    surface["load_range_lbf"] = interval_json(s.load_range);
    surface["pressure_range_psi"] = interval_json(s.pressure_range);
    j["surface"] = std::move(surface);
    if (model.patch) {
        const auto& p = *model.patch;
        Json patch;
        patch["q0"] = p.q0;
        patch["q1"] = p.q1;
        patch["reference_pressure_psi"] = p.reference_pressure;
        patch["reference_tread_mm"] = p.reference_tread;
        patch["fit_residual_rms_lbf"] = p.fit_residual_rms;
        patch["patch_range_m"] = interval_json(p.patch_range);
        patch["load_range_lbf"] = interval_json(p.load_range);
        j["patch_baseline"] = std::move(patch);
    } else {
        j["patch_baseline"] = nullptr;
    }
    return j.dump(2) + "\n";
}

LoadModelFile parse_load_model(const std::string& json_text) {
    constexpr std::string_view what = "load model";
    const Json j = detail::parse_json(json_text, what);
    detail::require_object(j, what);
    detail::check_version(j, kLoadModelSchema, what);
    detail::reject_unknown_keys(j, {"schema_version", "calibration_traces", "surface", "patch_baseline"}, what);

    LoadModelFile out;
    out.calibration_traces = count_from(j, "calibration_traces", what);
    const Json& s = detail::field(j, "surface", what);
    detail::require_object(s, what);
    out.surface.p00 = detail::number(s, "p00", what);
    out.surface.p10 = detail::number(s, "p10", what);
    out.surface.p01 = detail::number(s, "p01", what);
    out.surface.p11 = detail::number(s, "p11", what);
    out.surface.p02 = detail::number(s, "p02", what);
    out.surface.fit_residual_rms = detail::number(s, "fit_residual_rms_mm", what);
    out.surface.load_range = interval_from(s, "load_range_lbf", what);
    out.surface.pressure_range = interval_from(s, "pressure_range_psi", what);

    if (j.contains("patch_baseline") && !j["patch_baseline"].is_null()) {
        const Json& p = j["patch_baseline"];
        detail::require_object(p, what);
        estimation::PatchLoadModel m;
        m.q0 = detail::number(p, "q0", what);
        m.q1 = detail::number(p, "q1", what);
        m.reference_pressure = detail::number(p, "reference_pressure_psi", what);
        m.reference_tread = detail::number(p, "reference_tread_mm", what);
        m.fit_residual_rms = detail::number(p, "fit_residual_rms_lbf", what);
        m.patch_range = interval_from(p, "patch_range_m", what);
        m.load_range = interval_from(p, "load_range_lbf", what);
        out.patch = m;
    }
    return out;
}

LoadModelFile read_load_model(const std::filesystem::path& path) { return parse_load_model(read_text(path)); }

std::string render_slip_model(const SlipModelFile& model) {
    const auto& m = model.model;
    Json j;
    j["schema_version"] = kSlipModelSchema;
    j["calibration_traces"] = model.calibration_traces;
    j["beta0"] = m.beta0;
    j["beta1"] = m.beta1;
    j["beta2"] = m.beta2;
    j["fit_residual_rms_deg"] = m.fit_residual_rms;
    j["slip_range_deg"] = interval_json(m.slip_range);
    return j.dump(2) + "\n";
}

SlipModelFile parse_slip_model(const std::string& json_text) {
    constexpr std::string_view what = "slip model";
    const Json j = detail::parse_json(json_text, what);
    detail::require_object(j, what);
    detail::check_version(j, kSlipModelSchema, what);
    detail::reject_unknown_keys(
        j, {"schema_version", "calibration_traces", "beta0", "beta1", "beta2", "fit_residual_rms_deg", "slip_range_deg"},
        what);

    SlipModelFile out;
    out.calibration_traces = count_from(j, "calibration_traces", what);
    out.model.beta0 = detail::number(j, "beta0", what);
    out.model.beta1 = detail::number(j, "beta1", what);
    out.model.beta2 = detail::number(j, "beta2", what);
    out.model.fit_residual_rms = detail::number(j, "fit_residual_rms_deg", what);
    out.model.slip_range = interval_from(j, "slip_range_deg", what);
    return out;
}

SlipModelFile read_slip_model(const std::filesystem::path& path) { return parse_slip_model(read_text(path)); }

}  // namespace tiresense::io
