#include "gotco/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <type_traits>

#include "gotco/chain.hpp"
#include "gotco/rng.hpp"

namespace gotco {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string sampler_label(const SamplerKind& kind) {
    return std::visit(overloaded{
                          [](const sampler::Uniform&) { return std::string("Uniform"); },
                          [](const sampler::AgeAware&) { return std::string("AgeAware"); },
                          [](const sampler::ChangeAware&) { return std::string("ChangeAware"); },
                          [](const sampler::AoiiOptimal&) { return std::string("AoiiOptimal"); },
                          [](const sampler::AociOptimal&) { return std::string("AociOptimal"); },
                          [](const sampler::Tabular&) { return std::string("Tabular"); },
                      },
                      kind);
}

SamplingRule::SamplingRule(SamplerKind kind) : kind_(std::move(kind)) {}

bool SamplingRule::decide(const SlotObservation& obs) {
    const bool fire = std::visit(
        overloaded{
            [&](const sampler::Uniform& u) { return obs.t % u.delta == 0; },
            [&](const sampler::AgeAware& a) { return obs.ages.aoi > a.threshold; },
            [&](const sampler::ChangeAware&) { return prev_x_.has_value() && *prev_x_ != obs.w.x; },
            [&](const sampler::AoiiOptimal&) { return obs.w.x != obs.w.x_hat; },
            [&](const sampler::AociOptimal&) {
                const auto t = static_cast<long long>(obs.t);
                if (history_.empty()) {
                    // The initial estimate plays the role of the sample taken at t = −1.
                    history_.push_back(obs.w.x_hat);
                    history_start_ = t - 1;
                }
                history_.push_back(obs.w.x);
                const long long generated = t - static_cast<long long>(obs.ages.aoi);
                if (generated < history_start_)
                    throw std::logic_error("AoCI rule: AoI points before the recorded history");
                while (history_start_ < generated) {
                    history_.pop_front();
                    ++history_start_;
                }
                return history_.front() != obs.w.x;
            },
            [&](const sampler::Tabular& tab) { return tab.policy(obs.flat); },
        },
        kind_);
    prev_x_ = obs.w.x;
    return fire;
}

SamplingRule make_benchmark(const SamplerKind& kind) {
    if (const auto* u = std::get_if<sampler::Uniform>(&kind); u && u->delta == 0)
        throw std::invalid_argument("Uniform sampler needs delta >= 1");
    if (const auto* a = std::get_if<sampler::AgeAware>(&kind); a && a->threshold == 0)
        throw std::invalid_argument("AgeAware sampler needs threshold >= 1");
    return SamplingRule(kind);
}

TraceStats simulate(const SystemModel& model, const SamplerKind& sampler, const DecisionPolicy& decision,
                    std::size_t horizon, std::uint64_t seed, const SimulateOptions& options) {
    if (horizon == 0) throw std::invalid_argument("simulate: horizon must be at least 1");
    check_decision_policy(decision, model.num_semantics(), model.num_actuations());
    const StateSpace space = model.state_space();
    if (const auto* tab = std::get_if<sampler::Tabular>(&sampler); tab && tab->policy.actions.size() != space.size())
        throw std::invalid_argument("simulate: tabular sampler length does not match the state space");

    const std::size_t S = model.num_semantics();
    const std::size_t V = model.num_contexts();
    const InitialCondition& init = options.initial;
    if ((init.x && *init.x >= S) || (init.x_hat && *init.x_hat >= S) || (init.phi && *init.phi >= V))
        throw std::out_of_range("simulate: initial condition out of range");

    SplitMix64 rng(seed);
    SamplingRule rule = make_benchmark(sampler);
    const GotParams params{&model.costs(), decision};
    const double p_s = model.channel_success();
    const double c_s = model.sampling_cost();

    // Both start draws are always consumed so overrides do not shift the stream.
    const auto drawn_x = static_cast<std::size_t>(rng.uniform() * static_cast<double>(S));
    const auto drawn_phi = static_cast<std::size_t>(rng.uniform() * static_cast<double>(V));
    GlobalState w;
    w.x = init.x.value_or(drawn_x);
    w.phi = init.phi.value_or(drawn_phi);
    w.x_hat = init.x_hat.value_or(w.x);
    AgeTrackers ages = initial_age_trackers(w.x, w.x_hat);

    TraceStats stats;
    stats.horizon = horizon;
    stats.seed = seed;
    stats.trace.reserve(std::min(options.trace_limit, horizon));

    double total_cost = 0.0;
    for (std::size_t t = 0; t < horizon; ++t) {
        const bool sample = rule.decide({t, w, space.flat(w), ages});
        const bool success = rng.bernoulli(p_s);
        const bool delivered = sample && success;
        const std::size_t next_x_hat = delivered ? w.x : w.x_hat;

        const std::size_t actuation = decision(w.x_hat);
        const double got = got_value(w.x, w.phi, w.x_hat, params);
        const double slot_cost = got + (sample ? c_s : 0.0);
        total_cost += slot_cost;
        stats.transmissions += sample ? 1 : 0;
        stats.deliveries += delivered ? 1 : 0;

        if (t < options.trace_limit)
            stats.trace.push_back({t, w.x, w.x_hat, w.phi, sample, actuation, success, ages.aoi, ages.aoci,
                                   ages.aoii, got, slot_cost});

        const std::size_t next_x = rng.categorical(model.source_row(w.phi, actuation, w.x));
        const std::size_t next_phi = rng.categorical(model.context_row(w.phi));
        ages = step_age_trackers(ages, delivered, delivered ? std::optional<std::size_t>(w.x) : std::nullopt,
                                 next_x, next_x_hat);
        w = {next_x, next_x_hat, next_phi};
    }

    stats.avg_cost = total_cost / static_cast<double>(horizon);
    stats.sampling_rate = static_cast<double>(stats.transmissions) / static_cast<double>(horizon);
    return stats;
}

ExactCost exact_average_cost(const SystemModel& model, const SamplingPolicy& sampler,
                             const DecisionPolicy& decision) {
    const InducedMdp mdp = induce_mdp(model, decision);
    const Eigen::VectorXd mu = stationary_distribution(mdp.policy_chain(sampler));
    ExactCost out;
    double idle_mass = 0.0, sampled_mass = 0.0;
    for (std::size_t w = 0; w < mdp.num_states(); ++w) {
        const double mass = mu(static_cast<Eigen::Index>(w));
        const std::size_t a = sampler(w) ? 1 : 0;
        // −reward is exactly GoT + C_s·a_S.
        out.avg_cost += mass * -mdp.reward(w, a);
        (a == 1 ? sampled_mass : idle_mass) += mass;
    }
    out.sampling_rate = sampled_mass / (sampled_mass + idle_mass);
    return out;
}

namespace {

struct Job {
    std::size_t row;
    SamplerKind kind;
    const DecisionPolicy* decision;
    std::uint64_t seed;
};

void run_parallel(std::size_t count, std::size_t threads, const auto& body) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    threads = std::clamp<std::size_t>(threads == 0 ? std::thread::hardware_concurrency() : threads, 1,
                                      std::max<std::size_t>(count, 1));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<FrontierRow> frontier_sweep(const SystemModel& model, const DecisionPolicy& decision,
                                        const SweepSpec& spec) {
    std::vector<FrontierRow> rows;
    std::vector<SamplerKind> kinds;
    for (std::size_t d : spec.uniform_deltas) {
        rows.push_back({"Uniform", std::to_string(d)});
        kinds.emplace_back(sampler::Uniform{d});
    }
    for (std::size_t d : spec.age_thresholds) {
        rows.push_back({"AgeAware", std::to_string(d)});
        kinds.emplace_back(sampler::AgeAware{d});
    }
    if (spec.change_aware) {
        rows.push_back({"ChangeAware", "-"});
        kinds.emplace_back(sampler::ChangeAware{});
    }
    if (spec.aoii_optimal) {
        rows.push_back({"AoiiOptimal", "-"});
        kinds.emplace_back(sampler::AoiiOptimal{});
    }
    for (const auto& kind : kinds) make_benchmark(kind);

    std::vector<const DecisionPolicy*> row_decision(rows.size(), &decision);
    if (spec.codesign) {
        rows.push_back({"CoDesign", "exact"});
        try {
            const ExactCost exact = exact_average_cost(model, spec.codesign->sampler, spec.codesign->decision);
            rows.back().avg_cost = exact.avg_cost;
            rows.back().sampling_rate = exact.sampling_rate;
        } catch (const NotUnichainError&) {
            rows.back().param = "mc";
            kinds.emplace_back(sampler::Tabular{spec.codesign->sampler});
            row_decision.push_back(&spec.codesign->decision);
        }
    }
    if (rows.empty()) return rows;

    std::vector<Job> jobs;
    for (std::size_t r = 0; r < kinds.size(); ++r)
        for (std::uint64_t seed : spec.seeds) jobs.push_back({r, kinds[r], row_decision[r], seed});

    std::vector<TraceStats> results(jobs.size());
    if (!kinds.empty() && spec.seeds.empty())
        throw std::invalid_argument("frontier_sweep: Monte Carlo rows need at least one seed");
    run_parallel(jobs.size(), spec.threads, [&](std::size_t i) {
        const Job& job = jobs[i];
        results[i] = simulate(model, job.kind, *job.decision, spec.horizon, job.seed, {spec.initial, 0});
    });

    const std::size_t n = spec.seeds.size();
    for (std::size_t r = 0; r < kinds.size(); ++r) {
        double cost_sum = 0.0, rate_sum = 0.0;
        for (std::size_t s = 0; s < n; ++s) {
            cost_sum += results[r * n + s].avg_cost;
            rate_sum += results[r * n + s].sampling_rate;
        }
        const double mean = cost_sum / static_cast<double>(n);
        double sq = 0.0;
        for (std::size_t s = 0; s < n; ++s) {
            const double d = results[r * n + s].avg_cost - mean;
            sq += d * d;
        }
        FrontierRow& row = rows[r];
        row.avg_cost = mean;
        row.sampling_rate = rate_sum / static_cast<double>(n);
        row.stderr_cost = n > 1 ? std::sqrt(sq / static_cast<double>(n - 1) / static_cast<double>(n)) : 0.0;
        row.horizon = spec.horizon;
        row.seeds = n;
    }
    return rows;
}

}  // namespace gotco
