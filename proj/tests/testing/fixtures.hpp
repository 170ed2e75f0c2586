#pragma once

// Shared test fixtures: random instances and implementation-independent oracles.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gotco/config.hpp"
#include "gotco/mdp.hpp"
#include "gotco/model.hpp"
#include "gotco/sim.hpp"

namespace gotco::testing {

inline std::string source_path(const std::string& relative) {
    return std::string(GOTCO_SOURCE_DIR) + "/" + relative;
}

inline ModelConfig reference_config() { return load_model_config(source_path("configs/reference.json")); }
inline SystemModel reference_model() { return validate_model(reference_config().raw); }

/// Strictly positive random probability row.
inline std::vector<double> random_row(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::vector<double> row(n);
    double sum = 0.0;
    for (double& p : row) sum += (p = u(rng));
    for (double& p : row) p /= sum;
    // Fold the rounding residue into the last entry.
    double head = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) head += row[i];
    row.back() = 1.0 - head;
    return row;
}

struct RandomModelSpec {
    std::size_t semantics = 2;
    std::size_t contexts = 1;
    std::size_t actuations = 2;
};

/// Random model with strictly positive dynamics, so every MDP it induces is communicating.
inline RawModel random_raw_model(std::mt19937_64& rng, const RandomModelSpec& spec) {
    std::uniform_real_distribution<double> cost(0.0, 10.0);
    std::uniform_real_distribution<double> channel(0.3, 1.0);
    std::uniform_real_distribution<double> sampling(0.0, 3.0);
    RawModel raw;
    raw.num_semantics = spec.semantics;
    raw.num_contexts = spec.contexts;
    raw.num_actuations = spec.actuations;
    raw.source_dynamics.resize(spec.contexts);
    for (auto& per_action : raw.source_dynamics) {
        per_action.resize(spec.actuations);
        for (auto& rows : per_action) {
            rows.resize(spec.semantics);
            for (auto& row : rows) row = random_row(rng, spec.semantics);
        }
    }
    raw.context_dynamics.resize(spec.contexts);
    for (auto& row : raw.context_dynamics) row = random_row(rng, spec.contexts);
    raw.channel_success = channel(rng);
    raw.costs.status_inherent.assign(spec.contexts, std::vector<double>(spec.semantics));
    for (auto& row : raw.costs.status_inherent)
        for (double& c : row) c = cost(rng);
    raw.costs.actuation_gain.resize(spec.actuations);
    raw.costs.actuation_inherent.resize(spec.actuations);
    for (std::size_t a = 0; a < spec.actuations; ++a) {
        raw.costs.actuation_gain[a] = cost(rng);
        raw.costs.actuation_inherent[a] = cost(rng) / 4.0;
    }
    raw.sampling_cost = sampling(rng);
    return raw;
}

inline SystemModel random_model(std::mt19937_64& rng, const RandomModelSpec& spec) {
    return validate_model(random_raw_model(rng, spec));
}

inline SamplingPolicy sampler_from_bits(std::uint64_t bits, std::size_t n) {
    SamplingPolicy p;
    p.actions.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.actions[i] = (bits >> i) & 1u;
    return p;
}

/// Stationary law by power iteration on the lazy chain (P + I)/2; independent of
/// the direct linear solve used by the library.
inline Eigen::VectorXd power_stationary(const Eigen::MatrixXd& p, std::size_t iterations = 200000,
                                        double tol = 1e-15) {
    const Eigen::Index n = p.rows();
    const Eigen::MatrixXd lazy = 0.5 * (p + Eigen::MatrixXd::Identity(n, n));
    Eigen::RowVectorXd mu = Eigen::RowVectorXd::Constant(n, 1.0 / static_cast<double>(n));
    for (std::size_t k = 0; k < iterations; ++k) {
        Eigen::RowVectorXd next = mu * lazy;
        const double delta = (next - mu).cwiseAbs().maxCoeff();
        mu = next;
        if (delta < tol) break;
    }
    return mu.transpose();
}

/// Cesàro-average cost from an initial law, for chains that may be multichain.
inline double cesaro_average(const Eigen::MatrixXd& p, const Eigen::VectorXd& cost, const Eigen::RowVectorXd& initial,
                             std::size_t steps) {
    Eigen::RowVectorXd mu = initial;
    double total = 0.0;
    for (std::size_t t = 0; t < steps; ++t) {
        total += mu.dot(cost.transpose());
        mu = mu * p;
    }
    return total / static_cast<double>(steps);
}

/// Direct evaluation of the GoT formula for linear actuation costs.
inline long long oracle_got_linear(const std::vector<std::vector<long long>>& c1, const std::vector<long long>& pi_a,
                                   long long gain, long long inherent, std::size_t x, std::size_t phi,
                                   std::size_t x_hat) {
    const long long a = pi_a[x_hat];
    return std::max(c1[phi][x] - gain * a, 0LL) + inherent * a;
}

/// Exact score of every tabular sampler of a generic two-action MDP; multichain
/// samplers are skipped. Returns the best average reward.
inline double best_sampler_gain(const InducedMdp& mdp) {
    const std::size_t n = mdp.num_states();
    double best = -INFINITY;
    for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
        const SamplingPolicy pol = sampler_from_bits(bits, n);
        const Eigen::MatrixXd chain = mdp.policy_chain(pol);
        if (!is_unichain(chain)) continue;
        const Eigen::VectorXd mu = stationary_distribution(chain);
        double gain = 0.0;
        for (std::size_t w = 0; w < n; ++w) gain += mu(static_cast<Eigen::Index>(w)) * mdp.reward(w, pol.actions[w]);
        best = std::max(best, gain);
    }
    return best;
}

}  // namespace gotco::testing
