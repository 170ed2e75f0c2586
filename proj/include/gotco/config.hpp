#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "gotco/model.hpp"
#include "gotco/sim.hpp"

namespace gotco {

struct ModelConfig {
    RawModel raw;
    InitialCondition initial;
    std::string description;
};

/// Reads the JSON model schema (see configs/model.schema.json). Type and
/// structure problems raise ConfigError; shape and stochasticity are left to
/// validate_model().
ModelConfig parse_model_config(const nlohmann::json& doc);
ModelConfig load_model_config(const std::filesystem::path& path);

}  // namespace gotco
