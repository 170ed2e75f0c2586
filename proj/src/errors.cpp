#include "gotco/errors.hpp"

namespace gotco {

const char* to_string(ModelErrorKind kind) {
    switch (kind) {
        case ModelErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ModelErrorKind::NotStochastic: return "NotStochastic";
        case ModelErrorKind::NegativeEntry: return "NegativeEntry";
        case ModelErrorKind::NonFinite: return "NonFinite";
        case ModelErrorKind::ChannelOutOfRange: return "ChannelOutOfRange";
    }
    return "Unknown";
}

ModelError::ModelError(ModelErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace gotco
