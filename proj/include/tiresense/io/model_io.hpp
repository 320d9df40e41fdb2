#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "tiresense/estimation/load_model.hpp"
#include "tiresense/estimation/patch_model.hpp"
#include "tiresense/estimation/slip_model.hpp"

namespace tiresense::io {

struct LoadModelFile {
    estimation::LoadSurfaceModel surface;
    std::optional<estimation::PatchLoadModel> patch;
    std::size_t calibration_traces = 0;
};

std::string render_load_model(const LoadModelFile& model);
LoadModelFile parse_load_model(const std::string& json_text);
LoadModelFile read_load_model(const std::filesystem::path& path);

struct SlipModelFile {
    estimation::SlipModel model;
    std::size_t calibration_traces = 0;
};

std::string render_slip_model(const SlipModelFile& model);
SlipModelFile parse_slip_model(const std::string& json_text);
SlipModelFile read_slip_model(const std::filesystem::path& path);

}  // namespace tiresense::io
