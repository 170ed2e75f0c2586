// gotco: solve, simulate and benchmark sampler/decision-maker co-design.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "gotco/chain.hpp"
#include "gotco/codesign.hpp"
#include "gotco/config.hpp"
#include "gotco/csv.hpp"
#include "gotco/errors.hpp"
#include "gotco/mdp.hpp"
#include "gotco/model.hpp"
#include "gotco/sim.hpp"

namespace fs = std::filesystem;
using namespace gotco;

namespace {

enum ExitCode : int { kOk = 0, kConfigError = 2, kValidationError = 3, kConvergenceError = 4 };

struct Settings {
    std::string model_path;
    std::string out_dir = "out";
    double epsilon = 1e-8;
    std::size_t max_iterations = RviOptions{}.max_iterations;
    std::vector<double> context_dist;
    std::size_t threads = 0;
    std::size_t horizon = 1'000'000;
    std::size_t seeds = 20;
    std::uint64_t seed = 1;
    std::vector<std::size_t> deltas{1, 2, 3, 4, 5, 6, 7, 8};
    std::vector<std::size_t> thresholds{1, 2, 3, 4, 5, 6, 7, 8};
    std::string sampler = "codesign";
    std::string decision = "greedy";
    std::size_t trace_limit = 10'000;
};

std::vector<double> context_law(const SystemModel& model, const Settings& s) {
    if (!s.context_dist.empty()) return s.context_dist;
    return stationary_context_distribution(model.context_matrix());
}

std::string format_list(const std::vector<std::size_t>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + "]";
}

fs::path output_dir(const Settings& s) {
    fs::path dir(s.out_dir);
    fs::create_directories(dir);
    return dir;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    return out;
}

void write_manifest(const Settings& s, const std::string& command) {
    nlohmann::ordered_json m;
    m["command"] = command;
    m["model"] = s.model_path;
    m["out"] = s.out_dir;
    m["epsilon"] = s.epsilon;
    m["context_dist"] = s.context_dist.empty() ? nlohmann::ordered_json("stationary") : nlohmann::ordered_json(s.context_dist);
    m["horizon"] = s.horizon;
    m["seeds"] = s.seeds;
    m["seed_base"] = s.seed;
    m["delta_list"] = s.deltas;
    m["aoi_threshold_list"] = s.thresholds;
    m["sampler"] = s.sampler;
    m["decision"] = s.decision;
    m["trace_limit"] = s.trace_limit;
    m["rvi_max_iterations"] = s.max_iterations;
    m["rvi_ref_state"] = RviOptions{}.ref_state;
    m["initial_condition_default"] = "X0 ~ U(S), Phi0 ~ U(V), Xhat0 = X0 unless the model overrides it";
    open_output(output_dir(s) / ("manifest_" + command + ".json")) << m.dump(2) << '\n';
}

CodesignOptions codesign_options(const Settings& s) {
    CodesignOptions opt;
    opt.rvi.epsilon = s.epsilon;
    opt.rvi.max_iterations = s.max_iterations;
    opt.threads = s.threads;
    return opt;
}

int cmd_validate(const Settings& s) {
    const ModelConfig cfg = load_model_config(s.model_path);
    const SystemModel model = validate_model(cfg.raw);
    write_manifest(s, "validate");
    std::cout << "model: " << s.model_path << " OK\n"
              << "  |S| = " << model.num_semantics() << ", |V| = " << model.num_contexts()
              << ", |A_A| = " << model.num_actuations() << "\n"
              << "  global states = " << model.state_space().size() << "\n"
              << "  channel success p_S = " << model.channel_success() << "\n"
              << "  sampling cost C_s = " << model.sampling_cost() << "\n";
    const auto mu = stationary_context_distribution(model.context_matrix());
    std::cout << "  stationary context law = [";
    for (std::size_t i = 0; i < mu.size(); ++i) std::cout << (i ? ", " : "") << mu[i];
    std::cout << "]\n";
    if (!cfg.description.empty()) std::cout << "  description: " << cfg.description << "\n";
    return kOk;
}

int cmd_solve_greedy(const Settings& s) {
    const SystemModel model = validate_model(load_model_config(s.model_path).raw);
    write_manifest(s, "solve-greedy");
    const DecisionPolicy pi_a = greedy_decision_policy(model.costs(), context_law(model, s));
    std::cout << format_list(pi_a.actions) << '\n';
    return kOk;
}

int cmd_codesign(const Settings& s) {
    const SystemModel model = validate_model(load_model_config(s.model_path).raw);
    write_manifest(s, "codesign");
    const CodesignResult result = brute_force_codesign(model, codesign_options(s));
    const fs::path dir = output_dir(s);
    {
        auto out = open_output(dir / "codesign_audit.csv");
        write_audit_csv(out, result.per_candidate);
    }
    {
        auto out = open_output(dir / "codesign_values.csv");
        write_values_csv(out, model.state_space(), result.best_solution);
    }
    std::cout << "candidates: " << result.per_candidate.size() << '\n'
              << "best decision policy: " << format_list(result.best_decision.actions) << '\n'
              << "best sampler (flat states):";
    for (auto a : result.best_sampler.actions) std::cout << ' ' << int(a);
    std::cout << "\naverage reward theta* = " << result.theta_star << "\naverage cost = " << -result.theta_star << '\n';
    return kOk;
}

DecisionPolicy parse_decision(const std::string& text, const SystemModel& model, const Settings& s,
                              const std::optional<CodesignResult>& codesign) {
    if (text == "greedy") return greedy_decision_policy(model.costs(), context_law(model, s));
    if (text == "codesign") return codesign->best_decision;
    DecisionPolicy p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        try {
            p.actions.push_back(std::stoul(item));
        } catch (const std::exception&) {
            throw ConfigError("bad --decision entry '" + item + "'");
        }
    }
    check_decision_policy(p, model.num_semantics(), model.num_actuations());
    return p;
}

SamplerKind parse_sampler(const std::string& text, const std::optional<CodesignResult>& codesign) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    auto param = [&]() -> std::size_t {
        if (colon == std::string::npos) throw ConfigError("sampler '" + name + "' needs a parameter, e.g. " + name + ":4");
        try {
            const auto v = std::stoul(text.substr(colon + 1));
            if (v == 0) throw ConfigError("sampler parameter must be positive");
            return v;
        } catch (const std::logic_error&) {
            throw ConfigError("bad sampler parameter in '" + text + "'");
        }
    };
    if (name == "uniform") return sampler::Uniform{param()};
    if (name == "age") return sampler::AgeAware{param()};
    if (name == "change") return sampler::ChangeAware{};
    if (name == "aoii") return sampler::AoiiOptimal{};
    if (name == "aoci") return sampler::AociOptimal{};
    if (name == "codesign") return sampler::Tabular{codesign->best_sampler};
    throw ConfigError("unknown sampler '" + text + "' (uniform:D, age:T, change, aoii, aoci, codesign)");
}

int cmd_simulate(const Settings& s) {
    const ModelConfig cfg = load_model_config(s.model_path);
    const SystemModel model = validate_model(cfg.raw);
    write_manifest(s, "simulate");
    std::optional<CodesignResult> codesign;
    if (s.sampler == "codesign" || s.decision == "codesign") codesign = brute_force_codesign(model, codesign_options(s));

    // The co-design sampler is only meaningful with its own decision policy.
    const std::string decision_text = s.sampler == "codesign" ? "codesign" : s.decision;
    const DecisionPolicy pi_a = parse_decision(decision_text, model, s, codesign);
    const SamplerKind kind = parse_sampler(s.sampler, codesign);
    const TraceStats stats = simulate(model, kind, pi_a, s.horizon, s.seed, {cfg.initial, s.trace_limit});

    auto out = open_output(output_dir(s) / "trace.csv");
    write_trace_csv(out, stats.trace);
    std::cout << "sampler: " << s.sampler << ", decision policy: " << format_list(pi_a.actions) << '\n'
              << "horizon: " << stats.horizon << ", seed: " << stats.seed << '\n'
              << "average cost: " << stats.avg_cost << '\n'
              << "sampling rate: " << stats.sampling_rate << '\n';
    return kOk;
}

int cmd_frontier(const Settings& s) {
    const ModelConfig cfg = load_model_config(s.model_path);
    const SystemModel model = validate_model(cfg.raw);
    write_manifest(s, "frontier");
    const CodesignResult codesign = brute_force_codesign(model, codesign_options(s));
    const DecisionPolicy greedy = greedy_decision_policy(model.costs(), context_law(model, s));

    SweepSpec spec;
    spec.uniform_deltas = s.deltas;
    spec.age_thresholds = s.thresholds;
    spec.change_aware = true;
    spec.aoii_optimal = true;
    spec.codesign = CodesignPoint{codesign.best_decision, codesign.best_sampler};
    spec.horizon = s.horizon;
    for (std::size_t i = 0; i < s.seeds; ++i) spec.seeds.push_back(s.seed + i);
    spec.initial = cfg.initial;
    spec.threads = s.threads;

    const auto rows = frontier_sweep(model, greedy, spec);
    auto out = open_output(output_dir(s) / "frontier.csv");
    write_frontier_csv(out, rows);
    write_frontier_csv(std::cout, rows);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Goal-oriented sampler and decision-maker co-design toolkit"};
    app.require_subcommand(1);
    Settings s;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--model", s.model_path, "Model config (JSON)")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", s.out_dir, "Output directory")->capture_default_str();
        sub->add_option("--epsilon", s.epsilon, "RVI span tolerance")->capture_default_str()->check(CLI::PositiveNumber);
        sub->add_option("--max-iterations", s.max_iterations, "RVI iteration cap per candidate")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--context-dist", s.context_dist,
                        "Context law for the greedy policy (default: stationary law of the context chain)")
            ->delimiter(',');
        sub->add_option("--threads", s.threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();
    };
    auto add_mc = [&](CLI::App* sub) {
        sub->add_option("--horizon", s.horizon, "Slots per simulation")->capture_default_str()->check(CLI::PositiveNumber);
        sub->add_option("--seed", s.seed, "Base RNG seed")->capture_default_str();
    };

    auto* validate = app.add_subcommand("validate", "Validate a model and print diagnostics");
    add_common(validate);
    auto* greedy = app.add_subcommand("solve-greedy", "Print the myopic decision policy");
    add_common(greedy);
    auto* codesign = app.add_subcommand("codesign", "Brute-force joint sampler/decision optimization");
    add_common(codesign);
    auto* simulate_cmd = app.add_subcommand("simulate", "Simulate one sampler/decision pair and write a trace");
    add_common(simulate_cmd);
    add_mc(simulate_cmd);
    simulate_cmd->add_option("--sampler", s.sampler, "uniform:D | age:T | change | aoii | aoci | codesign")
        ->capture_default_str();
    simulate_cmd->add_option("--decision", s.decision, "greedy | codesign | a0;a1;...")->capture_default_str();
    simulate_cmd->add_option("--trace-limit", s.trace_limit, "Leading slots written to trace.csv")->capture_default_str();
    auto* frontier = app.add_subcommand("frontier", "Cost-vs-rate frontier of benchmarks and the co-design point");
    add_common(frontier);
    add_mc(frontier);
    frontier->add_option("--seeds", s.seeds, "Seeds per point")->capture_default_str()->check(CLI::PositiveNumber);
    frontier->add_option("--delta-list", s.deltas, "Uniform sampling periods")->delimiter(',')->capture_default_str();
    frontier->add_option("--aoi-threshold-list", s.thresholds, "Age-aware thresholds")->delimiter(',')->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigError;
    }

    try {
        if (*validate) return cmd_validate(s);
        if (*greedy) return cmd_solve_greedy(s);
        if (*codesign) return cmd_codesign(s);
        if (*simulate_cmd) return cmd_simulate(s);
        if (*frontier) return cmd_frontier(s);
    } catch (const ConfigError& e) {
        std::cerr << "error: config: " << e.what() << '\n';
        return kConfigError;
    } catch (const EnumerationTooLargeError& e) {
        std::cerr << "error: config: " << e.what() << '\n';
        return kConfigError;
    } catch (const ModelError& e) {
        std::cerr << "error: validation: " << e.what() << '\n';
        return kValidationError;
    } catch (const NotUnichainError& e) {
        std::cerr << "error: validation: NotUnichain: " << e.what() << '\n';
        return kValidationError;
    } catch (const NoConvergenceError& e) {
        std::cerr << "error: convergence: " << e.what() << '\n';
        return kConvergenceError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: config: " << e.what() << '\n';
        return kConfigError;
    }
    return kConfigError;
}
