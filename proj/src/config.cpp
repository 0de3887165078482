#include "cgmy/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cgmy {

using nlohmann::json;

ModelConfig parse_model_config(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");

    static const char* known[] = {"C", "G", "M", "Y", "sigma", "e1", "e2"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (auto k : known) ok = ok || it.key() == k;
        if (!ok) throw ConfigError("unknown config field \"" + it.key() + "\"");
    }

    auto num = [&](const char* key, bool required) -> double {
        if (!j.contains(key)) {
            if (required) throw ConfigError(std::string("missing config field \"") + key + "\"");
            return 0.0;
        }
        if (!j[key].is_number())
            throw ConfigError(std::string("config field \"") + key + "\" must be a number");
        return j[key].get<double>();
    };

    auto p = CgmyParams::validate(num("C", true), num("G", true), num("M", true),
                                  num("Y", true), num("sigma", true));
    double e1 = num("e1", false), e2 = num("e2", false);
    return ModelConfig{p, schedule_for(p, e1, e2)};
}

ModelConfig load_model_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_model_config(ss.str());
}

std::string model_config_json(const ModelConfig& cfg)
{
    const auto& p = cfg.params;
    json j = {{"C", p.C()},         {"G", p.G()},         {"M", p.M()},  {"Y", p.Y()},
              {"sigma", p.sigma()}, {"e1", cfg.schedule.e1}, {"e2", cfg.schedule.e2}};
    return j.dump();
}

} // namespace cgmy
