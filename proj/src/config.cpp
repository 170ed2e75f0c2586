#include "gotco/config.hpp"

#include <fstream>

#include "gotco/errors.hpp"

namespace gotco {

namespace {

using nlohmann::json;

const json& require(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw ConfigError(std::string("missing key '") + key + "'");
    return *it;
}

template <class T>
T get_as(const json& value, const char* key) {
    try {
        return value.get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("key '") + key + "': " + e.what());
    }
}

// Either an explicit vector or {"linear_gain": g}, which expands to g·a.
std::vector<double> actuation_costs(const json& value, const char* key, std::size_t num_actuations) {
    if (value.is_object()) {
        const double gain = get_as<double>(require(value, "linear_gain"), key);
        std::vector<double> out(num_actuations);
        for (std::size_t a = 0; a < num_actuations; ++a) out[a] = gain * static_cast<double>(a);
        return out;
    }
    return get_as<std::vector<double>>(value, key);
}

std::optional<std::size_t> optional_index(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    return get_as<std::size_t>(*it, key);
}

}  // namespace

ModelConfig parse_model_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("model config must be a JSON object");
    ModelConfig cfg;
    RawModel& raw = cfg.raw;
    raw.num_semantics = get_as<std::size_t>(require(doc, "num_semantics"), "num_semantics");
    raw.num_contexts = get_as<std::size_t>(require(doc, "num_contexts"), "num_contexts");
    raw.num_actuations = get_as<std::size_t>(require(doc, "num_actuations"), "num_actuations");
    raw.source_dynamics = get_as<decltype(raw.source_dynamics)>(require(doc, "source_dynamics"), "source_dynamics");
    raw.context_dynamics =
        get_as<decltype(raw.context_dynamics)>(require(doc, "context_dynamics"), "context_dynamics");
    raw.channel_success = get_as<double>(require(doc, "channel_success"), "channel_success");
    raw.costs.status_inherent = get_as<std::vector<std::vector<double>>>(require(doc, "C1"), "C1");
    raw.costs.actuation_gain = actuation_costs(require(doc, "C2"), "C2", raw.num_actuations);
    raw.costs.actuation_inherent = actuation_costs(require(doc, "C3"), "C3", raw.num_actuations);
    raw.sampling_cost = get_as<double>(require(doc, "sampling_cost"), "sampling_cost");

    if (auto it = doc.find("initial"); it != doc.end() && !it->is_null()) {
        if (!it->is_object()) throw ConfigError("key 'initial' must be an object");
        cfg.initial.x = optional_index(*it, "x");
        cfg.initial.x_hat = optional_index(*it, "x_hat");
        cfg.initial.phi = optional_index(*it, "phi");
    }
    if (auto it = doc.find("description"); it != doc.end()) cfg.description = get_as<std::string>(*it, "description");
    return cfg;
}

ModelConfig load_model_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open model file '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ConfigError("cannot parse '" + path.string() + "': " + e.what());
    }
    return parse_model_config(doc);
}

}  // namespace gotco
