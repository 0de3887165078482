#pragma once

#include <stdexcept>
#include <string>

#include "cgmy/model.hpp"

namespace cgmy {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ModelConfig {
    CgmyParams params;
    MoneynessSchedule schedule;
};

// {"C","G","M","Y","sigma"} required, "e1","e2" default to 0.
// Parse/shape problems throw ConfigError, parameter range problems InvalidParams.
ModelConfig parse_model_config(const std::string& text);
ModelConfig load_model_config(const std::string& path);

std::string model_config_json(const ModelConfig& cfg);

} // namespace cgmy
