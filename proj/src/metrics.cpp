#include "gotco/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gotco {

void check_decision_policy(const DecisionPolicy& policy, std::size_t num_semantics,
                           std::size_t num_actuations) {
    if (policy.actions.size() != num_semantics)
        throw ModelError(ModelErrorKind::DimensionMismatch,
                         "decision policy has " + std::to_string(policy.actions.size()) +
                             " entries, expected " + std::to_string(num_semantics));
    for (std::size_t a : policy.actions)
        if (a >= num_actuations)
            throw ModelError(ModelErrorKind::DimensionMismatch,
                             "decision policy actuation " + std::to_string(a) + " out of range");
}

double got_value(std::size_t x, std::size_t phi, std::size_t x_hat, const GotParams& params) {
    const CostModel& c = *params.costs;
    const std::size_t a = params.decision(x_hat);
    return std::max(c.status_inherent.at(phi).at(x) - c.actuation_gain.at(a), 0.0) +
           c.actuation_inherent.at(a);
}

AgeTrackers initial_age_trackers(std::size_t x0, std::size_t x_hat0) {
    AgeTrackers t;
    t.aoi = 1;
    t.aoci = 1;
    t.aoii = x0 == x_hat0 ? 0 : 1;
    t.last_delivered = x_hat0;
    return t;
}

AgeTrackers step_age_trackers(const AgeTrackers& prev, bool delivered,
                              std::optional<std::size_t> delivered_value, std::size_t next_x,
                              std::size_t next_x_hat) {
    if (delivered != delivered_value.has_value())
        throw std::invalid_argument("delivered_value must be present iff delivered");

    AgeTrackers next = prev;
    next.aoi = delivered ? 1 : prev.aoi + 1;
    if (next_x == next_x_hat)
        next.aoii = 0;
    else
        next.aoii = delivered ? 1 : prev.aoii + 1;

    if (delivered && delivered_value != prev.last_delivered)
        next.aoci = 1;
    else
        next.aoci = prev.aoci + 1;
    if (delivered) next.last_delivered = delivered_value;
    return next;
}

}  // namespace gotco
