#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gotco/mdp.hpp"
#include "gotco/metrics.hpp"
#include "gotco/model.hpp"

namespace gotco {

namespace sampler {

/// Samples at t = 0, Δ, 2Δ, ...
struct Uniform {
    std::size_t delta = 1;
};
/// Samples whenever AoI(t) > threshold.
struct AgeAware {
    std::size_t threshold = 1;
};
/// Samples whenever X_t ≠ X_{t−1}.
struct ChangeAware {};
/// Samples whenever X_t ≠ X̂_t.
struct AoiiOptimal {};
/// Samples whenever X_t ≠ X_{t−AoI(t)}; needs only the source history and AoI.
struct AociOptimal {};
struct Tabular {
    SamplingPolicy policy;
};

}  // namespace sampler

using SamplerKind = std::variant<sampler::Uniform, sampler::AgeAware, sampler::ChangeAware,
                                 sampler::AoiiOptimal, sampler::AociOptimal, sampler::Tabular>;

std::string sampler_label(const SamplerKind& kind);

/// What an online sampler may look at in slot t, before it acts.
struct SlotObservation {
    std::size_t t = 0;
    GlobalState w;
    std::size_t flat = 0;
    AgeTrackers ages;
};

/// Online sampling rule built from a SamplerKind. Stateful: feed it every slot in order.
class SamplingRule {
public:
    explicit SamplingRule(SamplerKind kind);

    bool decide(const SlotObservation& obs);
    const SamplerKind& kind() const noexcept { return kind_; }

private:
    SamplerKind kind_;
    std::optional<std::size_t> prev_x_;
    // Source history for the AoCI rule; front() is X at time history_start_.
    std::deque<std::size_t> history_;
    long long history_start_ = 0;
};

/// Throws std::invalid_argument for Δ = 0 or δ = 0.
SamplingRule make_benchmark(const SamplerKind& kind);

/// Optional overrides of the default start X_0 ~ U(S), Φ_0 ~ U(V), X̂_0 = X_0.
struct InitialCondition {
    std::optional<std::size_t> x;
    std::optional<std::size_t> x_hat;
    std::optional<std::size_t> phi;
};

struct TraceRow {
    std::size_t t = 0;
    std::size_t x = 0;
    std::size_t x_hat = 0;
    std::size_t phi = 0;
    bool a_s = false;
    std::size_t a_a = 0;
    bool h = false;
    std::size_t aoi = 0;
    std::size_t aoci = 0;
    std::size_t aoii = 0;
    double got = 0.0;
    double slot_cost = 0.0;

    friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

struct TraceStats {
    std::size_t horizon = 0;
    double avg_cost = 0.0;
    double sampling_rate = 0.0;
    std::uint64_t seed = 0;
    std::size_t transmissions = 0;
    std::size_t deliveries = 0;
    std::vector<TraceRow> trace;

    friend bool operator==(const TraceStats&, const TraceStats&) = default;
};

struct SimulateOptions {
    InitialCondition initial;
    /// Number of leading slots kept in TraceStats::trace.
    std::size_t trace_limit = 0;
};

/// Closed-loop Monte Carlo run. Within a slot: sample, channel draw, estimate
/// update, decide on the current estimate, charge GoT + C_s·a_S, then advance
/// source and context. Deterministic in `seed`.
TraceStats simulate(const SystemModel& model, const SamplerKind& sampler, const DecisionPolicy& decision,
                    std::size_t horizon, std::uint64_t seed, const SimulateOptions& options = {});

struct ExactCost {
    double avg_cost = 0.0;
    double sampling_rate = 0.0;
};

/// Long-run average cost of a stationary pair from the stationary law of the
/// closed-loop chain. Throws NotUnichainError if that chain is not unichain.
ExactCost exact_average_cost(const SystemModel& model, const SamplingPolicy& sampler,
                             const DecisionPolicy& decision);

struct CodesignPoint {
    DecisionPolicy decision;
    SamplingPolicy sampler;
};

struct SweepSpec {
    std::vector<std::size_t> uniform_deltas;
    std::vector<std::size_t> age_thresholds;
    bool change_aware = false;
    bool aoii_optimal = false;
    std::optional<CodesignPoint> codesign;
    std::size_t horizon = 1'000'000;
    std::vector<std::uint64_t> seeds;
    InitialCondition initial;
    /// 0 selects std::thread::hardware_concurrency().
    std::size_t threads = 0;
};

struct FrontierRow {
    std::string label;
    std::string param;
    double sampling_rate = 0.0;
    double avg_cost = 0.0;
    double stderr_cost = 0.0;
    std::size_t horizon = 0;
    std::size_t seeds = 0;

    friend bool operator==(const FrontierRow&, const FrontierRow&) = default;
};

/// Cost-vs-rate points for the benchmark samplers under `decision`, in sweep
/// order, followed by the co-design point when one is given. The co-design
/// point is scored exactly; it falls back to Monte Carlo over the same seeds
/// when its closed-loop chain is not unichain.
std::vector<FrontierRow> frontier_sweep(const SystemModel& model, const DecisionPolicy& decision,
                                        const SweepSpec& spec);

}  // namespace gotco
