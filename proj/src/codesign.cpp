#include "gotco/codesign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

namespace gotco {

DecisionPolicy greedy_decision_policy(const CostModel& costs, const std::vector<double>& context_dist) {
    const std::size_t V = costs.status_inherent.size();
    if (context_dist.size() != V)
        throw ModelError(ModelErrorKind::DimensionMismatch, "context distribution length does not match C1 rows");
    double total = 0.0;
    for (double p : context_dist) {
        if (!(p >= 0.0)) throw ModelError(ModelErrorKind::NegativeEntry, "context distribution entry is negative");
        total += p;
    }
    if (std::abs(total - 1.0) > kStochasticTolerance)
        throw ModelError(ModelErrorKind::NotStochastic, "context distribution does not sum to 1");

    const std::size_t S = V == 0 ? 0 : costs.status_inherent.front().size();
    const std::size_t A = costs.actuation_gain.size();
    DecisionPolicy policy;
    policy.actions.resize(S, 0);
    for (std::size_t x_hat = 0; x_hat < S; ++x_hat) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < A; ++a) {
            double expected = costs.actuation_inherent[a];
            for (std::size_t phi = 0; phi < V; ++phi)
                expected += context_dist[phi] *
                            std::max(costs.status_inherent[phi][x_hat] - costs.actuation_gain[a], 0.0);
            // `<=` with slack so near-equal expectations resolve to the larger action.
            if (expected <= best + 1e-9 * std::max(1.0, std::abs(best))) {
                best = std::min(best, expected);
                policy.actions[x_hat] = a;
            }
        }
    }
    return policy;
}

DecisionPolicySpace::DecisionPolicySpace(std::size_t num_semantics, std::size_t num_actuations, std::size_t cap)
    : semantics_(num_semantics), actuations_(num_actuations), count_(1) {
    if (num_semantics == 0 || num_actuations == 0)
        throw std::invalid_argument("decision policy space needs positive dimensions");
    for (std::size_t i = 0; i < num_semantics; ++i) {
        if (count_ > cap / num_actuations)
            throw EnumerationTooLargeError(std::to_string(num_actuations) + "^" + std::to_string(num_semantics) +
                                           " decision policies exceed the enumeration cap of " +
                                           std::to_string(cap));
        count_ *= num_actuations;
    }
}

DecisionPolicy DecisionPolicySpace::at(std::size_t index) const {
    if (index >= count_) throw std::out_of_range("decision policy index out of range");
    DecisionPolicy policy;
    policy.actions.resize(semantics_);
    for (std::size_t i = semantics_; i-- > 0;) {
        policy.actions[i] = index % actuations_;
        index /= actuations_;
    }
    return policy;
}

DecisionPolicySpace enumerate_decision_policies(std::size_t num_semantics, std::size_t num_actuations,
                                                std::size_t cap) {
    return {num_semantics, num_actuations, cap};
}

CodesignResult brute_force_codesign(const SystemModel& model, const CodesignOptions& options) {
    const DecisionPolicySpace space =
        enumerate_decision_policies(model.num_semantics(), model.num_actuations(), options.enumeration_cap);
    const std::size_t count = space.size();

    std::vector<CandidateResult> results(count);
    std::vector<std::optional<RviSolution>> solutions(count);

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (std::size_t i = next++; i < count && !failed; i = next++) {
            try {
                DecisionPolicy decision = space.at(i);
                RviSolution sol = rvi_solve(induce_mdp(model, decision), options.rvi);
                results[i] = {i, std::move(decision), sol.theta_star, sol.iterations};
                solutions[i] = std::move(sol);
            } catch (const NoConvergenceError& e) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::make_exception_ptr(NoConvergenceError(
                        std::string(e.what()) + " (decision policy candidate " + std::to_string(i) + ")",
                        e.iterations(), i));
                failed = true;
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
        }
    };

    std::size_t threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
    threads = std::clamp<std::size_t>(threads, 1, count);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    // Sequential reduction in index order keeps the earliest of exactly tied candidates.
    std::size_t best = 0;
    for (std::size_t i = 1; i < count; ++i)
        if (results[i].theta > results[best].theta) best = i;

    CodesignResult out;
    out.best_index = best;
    out.best_decision = results[best].decision;
    out.theta_star = results[best].theta;
    out.best_solution = std::move(*solutions[best]);
    out.best_sampler = out.best_solution.sampler;
    out.per_candidate = std::move(results);
    return out;
}

}  // namespace gotco
