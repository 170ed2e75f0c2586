#include <random>

#include <gtest/gtest.h>

#include "gotco/metrics.hpp"
#include "testing/fixtures.hpp"

using namespace gotco;

namespace {

// Small worked instance: C1 = [[0,1,3],[0,2,5]], π_A = [0,1,2], C2 = 2a, C3 = a.
CostModel fig2_costs() {
    CostModel c;
    c.status_inherent = {{0, 1, 3}, {0, 2, 5}};
    c.actuation_gain = {0, 2, 4};
    c.actuation_inherent = {0, 1, 2};
    return c;
}

}  // namespace

TEST(GotValue, WorkedExamples) {
    const CostModel costs = fig2_costs();
    const GotParams params{&costs, DecisionPolicy{{0, 1, 2}}};
    EXPECT_EQ(got_value(0, 0, 0, params), 0.0);
    EXPECT_EQ(got_value(2, 1, 0, params), 5.0);
    // Over-actuation still pays its resource cost.
    EXPECT_EQ(got_value(0, 0, 2, params), 2.0);
    // A matched estimate is not free.
    EXPECT_EQ(got_value(2, 0, 2, params), 2.0);
}

TEST(GotValue, MatchesDirectFormulaOnAllTriples) {
    const CostModel costs = fig2_costs();
    const GotParams params{&costs, DecisionPolicy{{0, 1, 2}}};
    const std::vector<std::vector<long long>> c1{{0, 1, 3}, {0, 2, 5}};
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t phi = 0; phi < 2; ++phi)
            for (std::size_t xh = 0; xh < 3; ++xh)
                EXPECT_EQ(got_value(x, phi, xh, params),
                          static_cast<double>(gotco::testing::oracle_got_linear(c1, {0, 1, 2}, 2, 1, x, phi, xh)));
}

TEST(GotValue, LowerBoundAndMonotonicity) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int trial = 0; trial < 500; ++trial) {
        CostModel c;
        c.status_inherent = {{u(rng), u(rng)}};
        c.actuation_gain = {u(rng), u(rng), u(rng)};
        c.actuation_inherent = {u(rng), u(rng), u(rng)};
        const DecisionPolicy pi{{static_cast<std::size_t>(trial % 3), static_cast<std::size_t>((trial / 3) % 3)}};
        const GotParams params{&c, pi};
        const std::size_t x = trial % 2, xh = (trial / 2) % 2;
        const double base = got_value(x, 0, xh, params);
        EXPECT_GE(base, c.actuation_inherent[pi(xh)]);
        EXPECT_GE(base, 0.0);
        c.status_inherent[0][x] += u(rng);
        EXPECT_GE(got_value(x, 0, xh, params), base);
    }
}

TEST(GotValue, OutOfRangeThrows) {
    const CostModel costs = fig2_costs();
    const GotParams params{&costs, DecisionPolicy{{0, 1, 2}}};
    EXPECT_THROW(got_value(3, 0, 0, params), std::out_of_range);
    EXPECT_THROW(got_value(0, 2, 0, params), std::out_of_range);
}

TEST(DecisionPolicyCheck, RejectsBadTables) {
    EXPECT_THROW(check_decision_policy(DecisionPolicy{{0, 1}}, 3, 2), ModelError);
    EXPECT_THROW(check_decision_policy(DecisionPolicy{{0, 2, 1}}, 3, 2), ModelError);
    EXPECT_NO_THROW(check_decision_policy(DecisionPolicy{{0, 1, 1}}, 3, 2));
}

TEST(AgeTrackers, InitialState) {
    EXPECT_EQ(initial_age_trackers(1, 1), (AgeTrackers{1, 1, 0, 1}));
    EXPECT_EQ(initial_age_trackers(0, 2), (AgeTrackers{1, 1, 1, 2}));
}

TEST(AgeTrackers, DeliveryOfChangedContentResetsAll) {
    const AgeTrackers prev{5, 7, 3, 0};
    const AgeTrackers next = step_age_trackers(prev, true, 2, 2, 2);
    EXPECT_EQ(next.aoi, 1u);
    EXPECT_EQ(next.aoci, 1u);
    EXPECT_EQ(next.aoii, 0u);
    EXPECT_EQ(next.last_delivered, 2u);
}

TEST(AgeTrackers, NoDeliveryIncrements) {
    const AgeTrackers prev{4, 6, 2, 1};
    const AgeTrackers next = step_age_trackers(prev, false, std::nullopt, 0, 1);
    EXPECT_EQ(next.aoii, 3u);
    EXPECT_EQ(next.aoi, 5u);
    EXPECT_EQ(next.aoci, 7u);
    EXPECT_EQ(next.last_delivered, 1u);
}

TEST(AgeTrackers, UnchangedDeliveryKeepsAoci) {
    const AgeTrackers prev{3, 3, 0, 1};
    const AgeTrackers next = step_age_trackers(prev, true, 1, 1, 1);
    EXPECT_EQ(next.aoi, 1u);
    EXPECT_EQ(next.aoci, 4u);
}

TEST(AgeTrackers, StaleDeliveryRestartsMismatchCount) {
    const AgeTrackers prev{6, 6, 6, 0};
    const AgeTrackers next = step_age_trackers(prev, true, 1, 2, 1);
    EXPECT_EQ(next.aoi, 1u);
    EXPECT_EQ(next.aoii, 1u);
}

TEST(AgeTrackers, DeliveredValueMustMatchFlag) {
    EXPECT_THROW(step_age_trackers({}, true, std::nullopt, 0, 0), std::invalid_argument);
    EXPECT_THROW(step_age_trackers({}, false, 1, 0, 0), std::invalid_argument);
}

TEST(AgeTrackers, AoiiNeverExceedsAoiOnRandomTraces) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> state(0, 2);
    std::bernoulli_distribution coin(0.3);
    for (int trace = 0; trace < 50; ++trace) {
        std::size_t x = state(rng), xh = state(rng);
        AgeTrackers ages = initial_age_trackers(x, xh);
        for (int t = 0; t < 500; ++t) {
            ASSERT_LE(ages.aoii, ages.aoi);
            ASSERT_EQ(ages.aoii == 0, x == xh);
            const bool delivered = coin(rng);
            const std::size_t next_xh = delivered ? x : xh;
            const std::size_t next_x = coin(rng) ? state(rng) : x;
            ages = step_age_trackers(ages, delivered, delivered ? std::optional<std::size_t>(x) : std::nullopt,
                                     next_x, next_xh);
            x = next_x;
            xh = next_xh;
        }
    }
}
