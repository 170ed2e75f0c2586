#include <gtest/gtest.h>

#include "gotco/config.hpp"
#include "gotco/errors.hpp"
#include "testing/fixtures.hpp"

using namespace gotco;
using nlohmann::json;

namespace {

json tiny_doc() {
    return json::parse(R"({
      "num_semantics": 2, "num_contexts": 1, "num_actuations": 3,
      "source_dynamics": [[[[0.9, 0.1], [0.2, 0.8]], [[1, 0], [0, 1]], [[0.5, 0.5], [0.5, 0.5]]]],
      "context_dynamics": [[1.0]],
      "channel_success": 0.7,
      "C1": [[0, 5]],
      "C2": {"linear_gain": 2},
      "C3": [0, 0.5, 1.5],
      "sampling_cost": 0.25
    })");
}

}  // namespace

TEST(Config, LinearGainExpandsOverActuationIndices) {
    const ModelConfig cfg = parse_model_config(tiny_doc());
    EXPECT_EQ(cfg.raw.costs.actuation_gain, (std::vector<double>{0, 2, 4}));
    EXPECT_EQ(cfg.raw.costs.actuation_inherent, (std::vector<double>{0, 0.5, 1.5}));
    EXPECT_FALSE(cfg.initial.x.has_value());
    EXPECT_NO_THROW(validate_model(cfg.raw));
}

TEST(Config, InitialOverrides) {
    json doc = tiny_doc();
    doc["initial"] = {{"x", 1}, {"x_hat", 0}, {"phi", nullptr}};
    const ModelConfig cfg = parse_model_config(doc);
    EXPECT_EQ(cfg.initial.x, 1u);
    EXPECT_EQ(cfg.initial.x_hat, 0u);
    EXPECT_FALSE(cfg.initial.phi.has_value());
}

TEST(Config, MissingKeyIsConfigError) {
    json doc = tiny_doc();
    doc.erase("channel_success");
    EXPECT_THROW(parse_model_config(doc), ConfigError);
}

TEST(Config, WrongTypeIsConfigError) {
    json doc = tiny_doc();
    doc["C1"] = "not a matrix";
    EXPECT_THROW(parse_model_config(doc), ConfigError);
}

TEST(Config, RaggedTensorParsesThenFailsValidation) {
    json doc = tiny_doc();
    doc["source_dynamics"][0][1][0] = {1.0};
    const ModelConfig cfg = parse_model_config(doc);
    try {
        validate_model(cfg.raw);
        FAIL() << "expected DimensionMismatch";
    } catch (const ModelError& e) {
        EXPECT_EQ(e.kind(), ModelErrorKind::DimensionMismatch);
    }
}

TEST(Config, MissingFileIsConfigError) {
    EXPECT_THROW(load_model_config("/nonexistent/model.json"), ConfigError);
}

TEST(Config, ReferenceFileLoads) {
    const ModelConfig cfg = gotco::testing::reference_config();
    EXPECT_EQ(cfg.raw.num_semantics, 3u);
    EXPECT_EQ(cfg.raw.num_contexts, 2u);
    EXPECT_EQ(cfg.raw.num_actuations, 11u);
    EXPECT_EQ(cfg.raw.costs.actuation_gain[10], 80.0);
    EXPECT_EQ(cfg.raw.costs.actuation_inherent[10], 10.0);
    EXPECT_EQ(cfg.raw.sampling_cost, 1.0);
    EXPECT_NE(cfg.description.find("ASSUMED DEFAULTS"), std::string::npos);
}
