#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gotco/errors.hpp"

namespace gotco {

/// Row-sum and entry tolerance used when validating stochastic tensors.
inline constexpr double kStochasticTolerance = 1e-9;

/// Costs of the goal-oriented tensor.
///
/// `status_inherent` is indexed [context][semantic]; the two actuation
/// vectors are indexed by actuation index.
struct CostModel {
    std::vector<std::vector<double>> status_inherent;
    std::vector<double> actuation_gain;
    std::vector<double> actuation_inherent;
};

/// Unvalidated system description, as read from a config file or built in code.
struct RawModel {
    std::size_t num_semantics = 0;
    std::size_t num_contexts = 0;
    std::size_t num_actuations = 0;
    /// [context][actuation][from][to]
    std::vector<std::vector<std::vector<std::vector<double>>>> source_dynamics;
    /// [from][to]
    std::vector<std::vector<double>> context_dynamics;
    double channel_success = 0.0;
    CostModel costs;
    double sampling_cost = 0.0;
};

/// Global state (X, X̂, Φ), zero-based.
struct GlobalState {
    std::size_t x = 0;
    std::size_t x_hat = 0;
    std::size_t phi = 0;

    friend bool operator==(const GlobalState&, const GlobalState&) = default;
};

/// Dense indexing of S × S × V.
class StateSpace {
public:
    StateSpace(std::size_t num_semantics, std::size_t num_contexts)
        : semantics_(num_semantics), contexts_(num_contexts) {}

    std::size_t size() const noexcept { return semantics_ * semantics_ * contexts_; }
    std::size_t num_semantics() const noexcept { return semantics_; }
    std::size_t num_contexts() const noexcept { return contexts_; }

    std::size_t flat(const GlobalState& w) const noexcept {
        return (w.x * semantics_ + w.x_hat) * contexts_ + w.phi;
    }

    GlobalState unflat(std::size_t index) const noexcept {
        GlobalState w;
        w.phi = index % contexts_;
        index /= contexts_;
        w.x_hat = index % semantics_;
        w.x = index / semantics_;
        return w;
    }

private:
    std::size_t semantics_;
    std::size_t contexts_;
};

/// Validated, immutable system description. Construct through validate_model().
class SystemModel {
public:
    std::size_t num_semantics() const noexcept { return num_semantics_; }
    std::size_t num_contexts() const noexcept { return num_contexts_; }
    std::size_t num_actuations() const noexcept { return num_actuations_; }
    StateSpace state_space() const noexcept { return {num_semantics_, num_contexts_}; }

    /// Pr(X_{t+1} = to | X_t = from, a_A = actuation, Φ_t = context).
    double source(std::size_t context, std::size_t actuation, std::size_t from,
                  std::size_t to) const noexcept {
        return source_[source_offset(context, actuation, from) + to];
    }
    std::span<const double> source_row(std::size_t context, std::size_t actuation,
                                       std::size_t from) const noexcept {
        return {source_.data() + source_offset(context, actuation, from), num_semantics_};
    }

    /// Pr(Φ_{t+1} = to | Φ_t = from).
    double context(std::size_t from, std::size_t to) const noexcept {
        return context_[from * num_contexts_ + to];
    }
    std::span<const double> context_row(std::size_t from) const noexcept {
        return {context_.data() + from * num_contexts_, num_contexts_};
    }

    double channel_success() const noexcept { return channel_success_; }
    double sampling_cost() const noexcept { return sampling_cost_; }
    const CostModel& costs() const noexcept { return costs_; }

    /// Context transition matrix as nested rows.
    std::vector<std::vector<double>> context_matrix() const;

    friend SystemModel validate_model(const RawModel& raw);

private:
    SystemModel() = default;

    std::size_t source_offset(std::size_t context, std::size_t actuation,
                              std::size_t from) const noexcept {
        return ((context * num_actuations_ + actuation) * num_semantics_ + from) * num_semantics_;
    }

    std::size_t num_semantics_ = 0;
    std::size_t num_contexts_ = 0;
    std::size_t num_actuations_ = 0;
    std::vector<double> source_;
    std::vector<double> context_;
    double channel_success_ = 0.0;
    double sampling_cost_ = 0.0;
    CostModel costs_;
};

/// Checks every shape, stochasticity and sign constraint; throws ModelError on the first violation.
/// Rows are never renormalized.
SystemModel validate_model(const RawModel& raw);

/// Unique stationary law μ of the context chain (μ·P = μ, Σμ = 1).
/// Throws NotUnichainError when the chain has several recurrent classes.
std::vector<double> stationary_context_distribution(const std::vector<std::vector<double>>& context_dynamics);

}  // namespace gotco
