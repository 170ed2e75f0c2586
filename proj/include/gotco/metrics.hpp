#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gotco/model.hpp"

namespace gotco {

/// Deterministic decision map π_A: estimate index → actuation index.
struct DecisionPolicy {
    std::vector<std::size_t> actions;

    std::size_t operator()(std::size_t x_hat) const { return actions.at(x_hat); }
    friend bool operator==(const DecisionPolicy&, const DecisionPolicy&) = default;
};

/// Throws ModelError(DimensionMismatch) if the table does not fit the model.
void check_decision_policy(const DecisionPolicy& policy, std::size_t num_semantics,
                           std::size_t num_actuations);

struct GotParams {
    const CostModel* costs = nullptr;
    DecisionPolicy decision;
};

/// Instantaneous goal-oriented cost [C1(x, φ) − C2(π_A(x̂))]⁺ + C3(π_A(x̂)).
double got_value(std::size_t x, std::size_t phi, std::size_t x_hat, const GotParams& params);

/// Age trackers carried along a trace.
struct AgeTrackers {
    std::size_t aoi = 1;
    std::size_t aoci = 1;
    std::size_t aoii = 0;
    std::optional<std::size_t> last_delivered;

    friend bool operator==(const AgeTrackers&, const AgeTrackers&) = default;
};

/// Trackers at t = 0 for a receiver that already holds the estimate `x_hat0`.
AgeTrackers initial_age_trackers(std::size_t x0, std::size_t x_hat0);

/// Advances the trackers by one slot.
///
/// `delivered_value` must be set exactly when `delivered` is true. A delivered
/// update that is already stale at the next slot restarts the mismatch count
/// at 1, so AoII never exceeds AoI.
AgeTrackers step_age_trackers(const AgeTrackers& prev, bool delivered,
                              std::optional<std::size_t> delivered_value, std::size_t next_x,
                              std::size_t next_x_hat);

}  // namespace gotco
