#include <random>

#include <gtest/gtest.h>

#include "gotco/chain.hpp"
#include "gotco/errors.hpp"
#include "testing/fixtures.hpp"

using namespace gotco;

namespace {

Eigen::MatrixXd matrix(std::initializer_list<std::initializer_list<double>> rows) {
    Eigen::MatrixXd m(rows.size(), rows.begin()->size());
    Eigen::Index i = 0;
    for (auto r : rows) {
        Eigen::Index j = 0;
        for (double v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

}  // namespace

TEST(Chain, IdentityIsNotUnichain) {
    EXPECT_FALSE(is_unichain(Eigen::MatrixXd::Identity(2, 2)));
    EXPECT_EQ(recurrent_classes(Eigen::MatrixXd::Identity(2, 2)).size(), 2u);
}

TEST(Chain, PositiveMatrixIsUnichain) {
    EXPECT_TRUE(is_unichain(matrix({{0.2, 0.8}, {0.6, 0.4}})));
}

TEST(Chain, TransientStatesFeedingOneClass) {
    const auto p = matrix({{0.5, 0.5, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.3, 0.7}});
    EXPECT_TRUE(is_unichain(p));
    const auto classes = recurrent_classes(p);
    ASSERT_EQ(classes.size(), 1u);
    EXPECT_EQ(classes.front(), std::vector<std::size_t>{1});

    const Eigen::VectorXd mu = stationary_distribution(p);
    EXPECT_DOUBLE_EQ(mu(0), 0.0);
    EXPECT_DOUBLE_EQ(mu(1), 1.0);
    EXPECT_DOUBLE_EQ(mu(2), 0.0);
}

TEST(Chain, PeriodicChainIsUnichain) {
    EXPECT_TRUE(is_unichain(matrix({{0.0, 1.0}, {1.0, 0.0}})));
    const Eigen::VectorXd mu = stationary_distribution(matrix({{0.0, 1.0}, {1.0, 0.0}}));
    EXPECT_NEAR(mu(0), 0.5, 1e-15);
}

TEST(Chain, StationaryRejectsMultichain) {
    EXPECT_THROW(stationary_distribution(matrix({{1, 0, 0}, {0, 0.5, 0.5}, {0, 0.5, 0.5}})), NotUnichainError);
}

TEST(Chain, StationaryMatchesPowerIterationOnRandomChains) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + trial % 6;
        Eigen::MatrixXd p(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto row = gotco::testing::random_row(rng, n);
            for (std::size_t j = 0; j < n; ++j) p(i, j) = row[j];
        }
        const Eigen::VectorXd direct = stationary_distribution(p);
        const Eigen::VectorXd power = gotco::testing::power_stationary(p);
        EXPECT_LT((direct - power).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((direct.transpose() * p - direct.transpose()).cwiseAbs().maxCoeff(), 1e-12);
    }
}
