#include "gotco/model.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "gotco/chain.hpp"

namespace gotco {

namespace {

void require_size(std::size_t actual, std::size_t expected, const std::string& what) {
    if (actual != expected) {
        std::ostringstream os;
        os << what << " has " << actual << " entries, expected " << expected;
        throw ModelError(ModelErrorKind::DimensionMismatch, os.str());
    }
}

void check_probability_row(const std::vector<double>& row, const std::string& where) {
    double sum = 0.0;
    for (std::size_t u = 0; u < row.size(); ++u) {
        const double p = row[u];
        if (!std::isfinite(p))
            throw ModelError(ModelErrorKind::NonFinite, where + "[" + std::to_string(u) + "] is not finite");
        if (p < 0.0)
            throw ModelError(ModelErrorKind::NegativeEntry, where + "[" + std::to_string(u) + "] is negative");
        if (p > 1.0 + kStochasticTolerance)
            throw ModelError(ModelErrorKind::NotStochastic, where + "[" + std::to_string(u) + "] exceeds 1");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kStochasticTolerance) {
        std::ostringstream os;
        os.precision(17);
        os << where << " sums to " << sum;
        throw ModelError(ModelErrorKind::NotStochastic, os.str());
    }
}

void check_cost(double c, const std::string& where) {
    if (!std::isfinite(c)) throw ModelError(ModelErrorKind::NonFinite, where + " is not finite");
    if (c < 0.0) throw ModelError(ModelErrorKind::NegativeEntry, where + " is negative");
}

}  // namespace

std::vector<std::vector<double>> SystemModel::context_matrix() const {
    std::vector<std::vector<double>> rows(num_contexts_);
    for (std::size_t k = 0; k < num_contexts_; ++k) {
        auto row = context_row(k);
        rows[k].assign(row.begin(), row.end());
    }
    return rows;
}

SystemModel validate_model(const RawModel& raw) {
    const std::size_t S = raw.num_semantics;
    const std::size_t V = raw.num_contexts;
    const std::size_t A = raw.num_actuations;
    if (S == 0 || V == 0 || A == 0)
        throw ModelError(ModelErrorKind::DimensionMismatch,
                         "num_semantics, num_contexts and num_actuations must be positive");

    SystemModel model;
    model.num_semantics_ = S;
    model.num_contexts_ = V;
    model.num_actuations_ = A;

    require_size(raw.source_dynamics.size(), V, "source_dynamics");
    model.source_.reserve(V * A * S * S);
    for (std::size_t k = 0; k < V; ++k) {
        const auto& by_action = raw.source_dynamics[k];
        require_size(by_action.size(), A, "source_dynamics[" + std::to_string(k) + "]");
        for (std::size_t m = 0; m < A; ++m) {
            const auto& rows = by_action[m];
            const std::string base = "source_dynamics[" + std::to_string(k) + "][" + std::to_string(m) + "]";
            require_size(rows.size(), S, base);
            for (std::size_t i = 0; i < S; ++i) {
                const std::string where = base + "[" + std::to_string(i) + "]";
                require_size(rows[i].size(), S, where);
                check_probability_row(rows[i], where);
                model.source_.insert(model.source_.end(), rows[i].begin(), rows[i].end());
            }
        }
    }

    require_size(raw.context_dynamics.size(), V, "context_dynamics");
    model.context_.reserve(V * V);
    for (std::size_t k = 0; k < V; ++k) {
        const std::string where = "context_dynamics[" + std::to_string(k) + "]";
        require_size(raw.context_dynamics[k].size(), V, where);
        check_probability_row(raw.context_dynamics[k], where);
        model.context_.insert(model.context_.end(), raw.context_dynamics[k].begin(),
                              raw.context_dynamics[k].end());
    }

    if (!(raw.channel_success >= 0.0 && raw.channel_success <= 1.0))
        throw ModelError(ModelErrorKind::ChannelOutOfRange, "channel_success must lie in [0, 1]");
    model.channel_success_ = raw.channel_success;

    const CostModel& c = raw.costs;
    require_size(c.status_inherent.size(), V, "C1 rows (contexts)");
    for (std::size_t k = 0; k < V; ++k) {
        require_size(c.status_inherent[k].size(), S, "C1[" + std::to_string(k) + "] columns (semantics)");
        for (std::size_t x = 0; x < S; ++x)
            check_cost(c.status_inherent[k][x], "C1[" + std::to_string(k) + "][" + std::to_string(x) + "]");
    }
    require_size(c.actuation_gain.size(), A, "C2");
    require_size(c.actuation_inherent.size(), A, "C3");
    for (std::size_t a = 0; a < A; ++a) {
        check_cost(c.actuation_gain[a], "C2[" + std::to_string(a) + "]");
        check_cost(c.actuation_inherent[a], "C3[" + std::to_string(a) + "]");
    }
    model.costs_ = c;

    check_cost(raw.sampling_cost, "sampling_cost");
    model.sampling_cost_ = raw.sampling_cost;
    return model;
}

std::vector<double> stationary_context_distribution(const std::vector<std::vector<double>>& context_dynamics) {
    const auto n = static_cast<Eigen::Index>(context_dynamics.size());
    Eigen::MatrixXd p(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& row = context_dynamics[static_cast<std::size_t>(i)];
        require_size(row.size(), static_cast<std::size_t>(n), "context_dynamics row");
        for (Eigen::Index j = 0; j < n; ++j) p(i, j) = row[static_cast<std::size_t>(j)];
    }
    const Eigen::VectorXd mu = stationary_distribution(p);
    return {mu.data(), mu.data() + mu.size()};
}

}  // namespace gotco
