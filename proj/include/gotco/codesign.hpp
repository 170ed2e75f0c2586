#pragma once

#include <cstddef>
#include <vector>

#include "gotco/mdp.hpp"
#include "gotco/metrics.hpp"
#include "gotco/model.hpp"

namespace gotco {

/// Myopic decision policy: for each estimate, the actuation minimizing the
/// context-averaged GoT as if the estimate were exact. Ties go to the larger
/// actuation index.
DecisionPolicy greedy_decision_policy(const CostModel& costs, const std::vector<double>& context_dist);

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// All |A_A|^|S| decision tables in lexicographic order (entry 0 most significant).
class DecisionPolicySpace {
public:
    /// Throws EnumerationTooLargeError when the table count exceeds `cap`.
    DecisionPolicySpace(std::size_t num_semantics, std::size_t num_actuations,
                        std::size_t cap = kDefaultEnumerationCap);

    std::size_t size() const noexcept { return count_; }
    DecisionPolicy at(std::size_t index) const;

    class iterator {
    public:
        using value_type = DecisionPolicy;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const DecisionPolicySpace* space, std::size_t index) : space_(space), index_(index) {}
        DecisionPolicy operator*() const { return space_->at(index_); }
        iterator& operator++() {
            ++index_;
            return *this;
        }
        iterator operator++(int) {
            auto copy = *this;
            ++index_;
            return copy;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

    private:
        const DecisionPolicySpace* space_ = nullptr;
        std::size_t index_ = 0;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, count_}; }

private:
    std::size_t semantics_;
    std::size_t actuations_;
    std::size_t count_;
};

DecisionPolicySpace enumerate_decision_policies(std::size_t num_semantics, std::size_t num_actuations,
                                                std::size_t cap = kDefaultEnumerationCap);

struct CandidateResult {
    std::size_t index = 0;
    DecisionPolicy decision;
    double theta = 0.0;
    std::size_t iterations = 0;
};

struct CodesignResult {
    DecisionPolicy best_decision;
    SamplingPolicy best_sampler;
    double theta_star = 0.0;
    std::size_t best_index = 0;
    RviSolution best_solution;
    std::vector<CandidateResult> per_candidate;
};

struct CodesignOptions {
    RviOptions rvi;
    std::size_t enumeration_cap = kDefaultEnumerationCap;
    /// 0 selects std::thread::hardware_concurrency().
    std::size_t threads = 0;
};

/// Exhaustive search over decision policies, each paired with its RVI-optimal
/// sampler. The winner maximizes average reward; exact ties keep the
/// lexicographically smallest decision policy.
CodesignResult brute_force_codesign(const SystemModel& model, const CodesignOptions& options = {});

}  // namespace gotco
