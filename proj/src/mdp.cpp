#include "gotco/mdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gotco {

std::vector<double> dec_pomdp_transition(const GlobalState& w, bool sample, std::size_t actuation,
                                         const SystemModel& model) {
    const StateSpace space = model.state_space();
    const std::size_t S = space.num_semantics();
    const std::size_t V = space.num_contexts();
    if (w.x >= S || w.x_hat >= S || w.phi >= V || actuation >= model.num_actuations())
        throw std::out_of_range("dec_pomdp_transition: index out of bounds");

    // Estimate kernel: the receiver copies X_t on a successful transmission
    // and otherwise keeps its estimate.
    std::vector<double> estimate(S, 0.0);
    if (sample) {
        estimate[w.x] += model.channel_success();
        estimate[w.x_hat] += 1.0 - model.channel_success();
    } else {
        estimate[w.x_hat] = 1.0;
    }

    const auto src = model.source_row(w.phi, actuation, w.x);
    const auto ctx = model.context_row(w.phi);
    std::vector<double> row(space.size(), 0.0);
    for (std::size_t u = 0; u < S; ++u) {
        if (src[u] == 0.0) continue;
        for (std::size_t x = 0; x < S; ++x) {
            if (estimate[x] == 0.0) continue;
            const double p = src[u] * estimate[x];
            for (std::size_t r = 0; r < V; ++r) row[space.flat({u, x, r})] = p * ctx[r];
        }
    }
    return row;
}

double reward(const GlobalState& w, bool sample, const GotParams& params, double sampling_cost) {
    return -got_value(w.x, w.phi, w.x_hat, params) - (sample ? sampling_cost : 0.0);
}

InducedMdp::InducedMdp(std::size_t num_states, std::vector<double> transition, std::vector<double> reward)
    : states_(num_states), transition_(std::move(transition)), reward_(std::move(reward)) {
    if (states_ == 0) throw std::invalid_argument("InducedMdp needs at least one state");
    if (transition_.size() != states_ * kActions * states_ || reward_.size() != states_ * kActions)
        throw std::invalid_argument("InducedMdp tensor sizes do not match the state count");
    for (std::size_t w = 0; w < states_; ++w)
        for (std::size_t a = 0; a < kActions; ++a) {
            double sum = 0.0;
            for (double p : transition_row(w, a)) {
                if (p < 0.0) throw std::invalid_argument("InducedMdp transition has a negative entry");
                sum += p;
            }
            if (std::abs(sum - 1.0) > kStochasticTolerance)
                throw std::invalid_argument("InducedMdp transition row is not stochastic");
        }
}

Eigen::MatrixXd InducedMdp::policy_chain(const SamplingPolicy& sampler) const {
    if (sampler.actions.size() != states_)
        throw std::invalid_argument("sampling policy length does not match the state count");
    Eigen::MatrixXd p(states_, states_);
    for (std::size_t w = 0; w < states_; ++w) {
        const auto row = transition_row(w, sampler(w) ? 1 : 0);
        for (std::size_t v = 0; v < states_; ++v)
            p(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(v)) = row[v];
    }
    return p;
}

InducedMdp induce_mdp(const SystemModel& model, const DecisionPolicy& decision) {
    check_decision_policy(decision, model.num_semantics(), model.num_actuations());
    const StateSpace space = model.state_space();
    const std::size_t n = space.size();
    const GotParams params{&model.costs(), decision};

    std::vector<double> transition;
    transition.reserve(n * InducedMdp::kActions * n);
    std::vector<double> rewards;
    rewards.reserve(n * InducedMdp::kActions);
    for (std::size_t i = 0; i < n; ++i) {
        const GlobalState w = space.unflat(i);
        // The actuator observation is a point mass at x_hat, so the sum over
        // observations collapses to a single term.
        const std::size_t actuation = decision(observation_maps(w).actuator);
        for (std::size_t a = 0; a < InducedMdp::kActions; ++a) {
            const auto row = dec_pomdp_transition(w, a == 1, actuation, model);
            transition.insert(transition.end(), row.begin(), row.end());
            rewards.push_back(reward(w, a == 1, params, model.sampling_cost()));
        }
    }
    return {n, std::move(transition), std::move(rewards)};
}

namespace {

struct Backup {
    double value;
    bool sample;
};

// One-step optimal backup at `state`; a_S = 1 only wins when strictly better.
Backup backup(const InducedMdp& mdp, std::size_t state, const std::vector<double>& v, double tau) {
    double q[InducedMdp::kActions];
    for (std::size_t a = 0; a < InducedMdp::kActions; ++a) {
        const auto row = mdp.transition_row(state, a);
        double expect = 0.0;
        for (std::size_t next = 0; next < row.size(); ++next) expect += row[next] * v[next];
        q[a] = mdp.reward(state, a) + tau * expect + (1.0 - tau) * v[state];
    }
    const double tie = 1e-12 * std::max(1.0, std::abs(q[0]));
    if (q[1] > q[0] + tie) return {q[1], true};
    return {q[0], false};
}

}  // namespace

RviSolution rvi_solve(const InducedMdp& mdp, const RviOptions& options) {
    const std::size_t n = mdp.num_states();
    if (options.ref_state >= n) throw std::out_of_range("rvi_solve: ref_state out of range");
    if (!(options.epsilon > 0.0)) throw std::invalid_argument("rvi_solve: epsilon must be positive");
    if (!(options.damping > 0.0 && options.damping <= 1.0))
        throw std::invalid_argument("rvi_solve: damping must lie in (0, 1]");

    std::vector<double> v(n, 0.0), next(n, 0.0);
    double tau = 1.0;
    double best_span = std::numeric_limits<double>::infinity();
    std::size_t since_progress = 0;

    RviSolution sol;
    for (std::size_t k = 1; k <= options.max_iterations; ++k) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (std::size_t w = 0; w < n; ++w) {
            next[w] = backup(mdp, w, v, tau).value;
            const double diff = next[w] - v[w];
            lo = std::min(lo, diff);
            hi = std::max(hi, diff);
        }
        const double g = next[options.ref_state];
        for (std::size_t w = 0; w < n; ++w) v[w] = next[w] - g;

        const double span = hi - lo;
        if (span <= options.epsilon) {
            sol.iterations = k;
            sol.theta_star = g;
            sol.damped = tau < 1.0;
            // Relative values of the damped problem are those of the original scaled by 1/τ.
            for (double& value : v) value *= tau;
            sol.sampler.actions.resize(n);
            for (std::size_t w = 0; w < n; ++w) sol.sampler.actions[w] = backup(mdp, w, v, 1.0).sample ? 1 : 0;
            sol.values = std::move(v);
            return sol;
        }

        if (span < best_span) {
            best_span = span;
            since_progress = 0;
        } else if (++since_progress >= options.stall_window && tau == 1.0) {
            tau = options.damping;
            best_span = std::numeric_limits<double>::infinity();
            since_progress = 0;
        }
    }
    throw NoConvergenceError("relative value iteration did not reach span " +
                                 std::to_string(options.epsilon) + " within " +
                                 std::to_string(options.max_iterations) + " iterations",
                             options.max_iterations);
}

}  // namespace gotco
