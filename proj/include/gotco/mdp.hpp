#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gotco/chain.hpp"
#include "gotco/metrics.hpp"
#include "gotco/model.hpp"

namespace gotco {

/// Deterministic sampling map π_S over flat global-state indices; entries are 0 or 1.
struct SamplingPolicy {
    std::vector<std::uint8_t> actions;

    bool operator()(std::size_t flat_state) const { return actions.at(flat_state) != 0; }
    friend bool operator==(const SamplingPolicy&, const SamplingPolicy&) = default;
};

/// Joint transition row p(· | w, (a_S, a_A)) over flat global states.
std::vector<double> dec_pomdp_transition(const GlobalState& w, bool sample, std::size_t actuation,
                                         const SystemModel& model);

struct Observations {
    GlobalState sampler;
    std::size_t actuator;
};

/// The sampler sees the full state, the decision maker only the estimate.
inline Observations observation_maps(const GlobalState& w) { return {w, w.x_hat}; }

/// −GoT(w) − C_s·a_S.
double reward(const GlobalState& w, bool sample, const GotParams& params, double sampling_cost);

/// Fully observed sampling MDP obtained by fixing the decision policy.
class InducedMdp {
public:
    static constexpr std::size_t kActions = 2;

    InducedMdp(std::size_t num_states, std::vector<double> transition, std::vector<double> reward);

    std::size_t num_states() const noexcept { return states_; }

    std::span<const double> transition_row(std::size_t state, std::size_t action) const noexcept {
        return {transition_.data() + (state * kActions + action) * states_, states_};
    }
    double transition(std::size_t state, std::size_t action, std::size_t next) const noexcept {
        return transition_[(state * kActions + action) * states_ + next];
    }
    double reward(std::size_t state, std::size_t action) const noexcept {
        return reward_[state * kActions + action];
    }

    /// Closed-loop chain for a fixed sampler.
    Eigen::MatrixXd policy_chain(const SamplingPolicy& sampler) const;

private:
    std::size_t states_;
    std::vector<double> transition_;  // [state][action][next]
    std::vector<double> reward_;      // [state][action]
};

InducedMdp induce_mdp(const SystemModel& model, const DecisionPolicy& decision);

struct RviOptions {
    double epsilon = 1e-8;
    std::size_t max_iterations = 1'000'000;
    std::size_t ref_state = 0;
    /// Iterations without span progress before the aperiodicity transform is
    /// switched on.
    std::size_t stall_window = 1000;
    double damping = 0.99;
};

struct RviSolution {
    SamplingPolicy sampler;
    double theta_star = 0.0;  ///< optimal long-run average reward; average cost is −theta_star
    std::vector<double> values;
    std::size_t iterations = 0;
    bool damped = false;
};

/// Average-reward relative value iteration with the reference state pinned at zero.
/// Ties in the maximization prefer not sampling. Throws NoConvergenceError at the cap.
RviSolution rvi_solve(const InducedMdp& mdp, const RviOptions& options = {});

}  // namespace gotco
