#include "gotco/chain.hpp"

#include <algorithm>
#include <string>

#include "gotco/errors.hpp"

namespace gotco {

namespace {

// Iterative Tarjan; returns the SCC id of every state.
std::vector<std::size_t> strongly_connected(const std::vector<std::vector<std::size_t>>& adj,
                                            std::size_t& count) {
    const std::size_t n = adj.size();
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> call;  // (node, next edge)
    std::size_t next_index = 0;
    count = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, edge] = call.back();
            if (edge == 0 && index[v] == kUnvisited) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            if (edge < adj[v].size()) {
                const std::size_t u = adj[v][edge++];
                if (index[u] == kUnvisited) {
                    call.emplace_back(u, 0);
                } else if (on_stack[u]) {
                    low[v] = std::min(low[v], index[u]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::size_t u;
                do {
                    u = stack.back();
                    stack.pop_back();
                    on_stack[u] = false;
                    comp[u] = count;
                } while (u != v);
                ++count;
            }
            const std::size_t finished = v;
            call.pop_back();
            if (!call.empty()) {
                const std::size_t parent = call.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }
    return comp;
}

}  // namespace

std::vector<std::vector<std::size_t>> recurrent_classes(const Eigen::MatrixXd& transition) {
    const auto n = static_cast<std::size_t>(transition.rows());
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (transition(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) > 0.0)
                adj[i].push_back(j);

    std::size_t count = 0;
    const auto comp = strongly_connected(adj, count);

    std::vector<bool> closed(count, true);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : adj[i])
            if (comp[j] != comp[i]) closed[comp[i]] = false;

    std::vector<std::vector<std::size_t>> members(count);
    for (std::size_t i = 0; i < n; ++i) members[comp[i]].push_back(i);

    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t c = 0; c < count; ++c)
        if (closed[c]) classes.push_back(std::move(members[c]));
    std::sort(classes.begin(), classes.end());
    return classes;
}

bool is_unichain(const Eigen::MatrixXd& transition) {
    return recurrent_classes(transition).size() == 1;
}

Eigen::VectorXd stationary_distribution(const Eigen::MatrixXd& transition) {
    const Eigen::Index n = transition.rows();
    const auto classes = recurrent_classes(transition);
    if (classes.size() != 1)
        throw NotUnichainError("chain has " + std::to_string(classes.size()) +
                               " recurrent classes; stationary distribution is not unique");

    // For a unichain chain (P^T − I) has rank n−1 and its rows sum to zero, so
    // replacing any one equation by the normalization yields a regular system.
    Eigen::MatrixXd system = transition.transpose() - Eigen::MatrixXd::Identity(n, n);
    system.row(n - 1).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs(n - 1) = 1.0;
    Eigen::VectorXd mu = system.fullPivLu().solve(rhs);

    // Transient states carry no mass; clear round-off there and renormalize.
    std::vector<bool> recurrent(static_cast<std::size_t>(n), false);
    for (std::size_t s : classes.front()) recurrent[s] = true;
    for (Eigen::Index i = 0; i < n; ++i)
        if (!recurrent[static_cast<std::size_t>(i)] || mu(i) < 0.0) mu(i) = 0.0;
    mu /= mu.sum();
    return mu;
}

}  // namespace gotco
