#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace gotco {

enum class ModelErrorKind {
    DimensionMismatch,
    NotStochastic,
    NegativeEntry,
    NonFinite,
    ChannelOutOfRange,
};

const char* to_string(ModelErrorKind kind);

/// Raised when a system description violates its structural or stochastic invariants.
class ModelError : public std::runtime_error {
public:
    ModelError(ModelErrorKind kind, const std::string& what);
    ModelErrorKind kind() const noexcept { return kind_; }

private:
    ModelErrorKind kind_;
};

/// A chain with more than one closed communicating class.
class NotUnichainError : public std::runtime_error {
public:
    explicit NotUnichainError(const std::string& what) : std::runtime_error(what) {}
};

/// Relative value iteration hit its iteration cap.
class NoConvergenceError : public std::runtime_error {
public:
    NoConvergenceError(const std::string& what, std::size_t iterations,
                       std::optional<std::size_t> candidate = std::nullopt)
        : std::runtime_error(what), iterations_(iterations), candidate_(candidate) {}

    std::size_t iterations() const noexcept { return iterations_; }
    /// Index of the decision-policy candidate being solved, when raised from a co-design search.
    std::optional<std::size_t> candidate() const noexcept { return candidate_; }

private:
    std::size_t iterations_;
    std::optional<std::size_t> candidate_;
};

class EnumerationTooLargeError : public std::runtime_error {
public:
    explicit EnumerationTooLargeError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or unreadable configuration input.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gotco
