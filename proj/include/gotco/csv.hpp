#pragma once

#include <ostream>
#include <span>
#include <string>

#include "gotco/codesign.hpp"
#include "gotco/mdp.hpp"
#include "gotco/model.hpp"
#include "gotco/sim.hpp"

namespace gotco {

/// Decision table as "a0;a1;...".
std::string format_policy(const DecisionPolicy& policy);

void write_trace_csv(std::ostream& out, std::span<const TraceRow> trace);
void write_frontier_csv(std::ostream& out, std::span<const FrontierRow> rows);
void write_audit_csv(std::ostream& out, std::span<const CandidateResult> candidates);
/// Relative values and the greedy sampler per state, keyed by (x, x_hat, phi).
void write_values_csv(std::ostream& out, const StateSpace& space, const RviSolution& solution);

}  // namespace gotco
