#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "necksplit/alternating.hpp"
#include "necksplit/split.hpp"
#include "necksplit/verify.hpp"
#include "oracles.hpp"

using namespace necksplit;
using necksplit::testing::random_configuration;
using necksplit::testing::random_features;

namespace {

constexpr int kTrials = 1000;

double max_balance(const VerificationReport& rep) {
    double worst = 0.0;
    for (const auto& c : rep.checks) {
        if (c.name.rfind("balance", 0) == 0) worst = std::max(worst, c.residual);
    }
    return worst;
}

}  // namespace

TEST(Property, TelescopingIdentity) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < kTrials; ++trial) {
        const int m = 1 + trial % 4, r = 2 + trial % 3;
        const auto features = random_features(rng, m);
        const auto c = random_configuration(rng, (r - 1) * m, r);
        const auto rep = residual(features, c);
        for (int k = 0; k < m; ++k) {
            const auto& f = features[static_cast<std::size_t>(k)];
            EXPECT_NEAR(rep.part_sums.col(k).sum(), f(1.0) - f(0.0), 1e-12);
            EXPECT_NEAR(rep.deviation.col(k).sum(), 0.0, 1e-12);
        }
    }
}

TEST(Property, RelabelingInvariance) {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < kTrials; ++trial) {
        const int m = 1 + trial % 3, r = 2 + trial % 4;
        const auto features = random_features(rng, m);
        const auto c = random_configuration(rng, (r - 1) * m + trial % 2, r);
        std::vector<int> perm(static_cast<std::size_t>(r));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        SplitConfiguration d = c;
        for (auto& label : d.labels) label = perm[static_cast<std::size_t>(label)];
        const auto a = residual(features, c);
        const auto b = residual(features, d);
        EXPECT_DOUBLE_EQ(a.max_abs_deviation, b.max_abs_deviation);
        for (int j = 0; j < r; ++j) {
            EXPECT_EQ(a.part_sums.row(j), b.part_sums.row(perm[static_cast<std::size_t>(j)]));
        }
    }
}

TEST(Property, CanonicalizeAlternatingPreservesBalance) {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < kTrials; ++trial) {
        const auto features = random_features(rng, 4);
        const auto c = random_configuration(rng, 4, 2);
        const auto out = canonicalize_alternating(c);
        EXPECT_EQ(out.labels, (Labeling{0, 1, 0, 1, 0}));
        EXPECT_TRUE(std::is_sorted(out.cuts.begin(), out.cuts.end()));
        const auto before = residual(features, c);
        const auto after = residual(features, out);
        for (int k = 0; k < 4; ++k) {
            const double gap_before = std::abs(before.part_sums(0, k) - before.part_sums(1, k));
            const double gap_after = std::abs(after.part_sums(0, k) - after.part_sums(1, k));
            EXPECT_NEAR(gap_before, gap_after, 1e-12);
        }
        const auto eq = alternating_balance(features, {out.cuts[0], out.cuts[1], out.cuts[2], out.cuts[3]});
        for (int k = 0; k < 4; ++k) {
            EXPECT_NEAR(std::abs(eq[static_cast<std::size_t>(k)]), std::abs(after.part_sums(0, k) - after.part_sums(1, k)),
                        1e-12);
        }
    }
}

TEST(Property, VerifyAgreesWithResidual) {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < kTrials; ++trial) {
        const int m = 1 + trial % 3, r = 2 + trial % 3;
        const auto features = random_features(rng, m);
        const auto c = random_configuration(rng, (r - 1) * m, r);
        const double dev = residual(features, c).max_abs_deviation;
        const auto rep = check_split(features, c, dev);
        EXPECT_NEAR(max_balance(rep), dev, 1e-12);
        EXPECT_TRUE(rep.passed() || max_balance(rep) > dev);
        const auto tight = check_split(features, c, dev + 1e-12);
        EXPECT_TRUE(tight.passed());
    }
}

TEST(Property, SolverOutputsPassIndependentCheck) {
    std::mt19937_64 rng(505);
    for (int trial = 0; trial < 30; ++trial) {
        SplitProblem p;
        p.features = random_features(rng, 1 + trial % 3);
        p.parts = 2 + trial % 2;
        const auto res = solve_split(p);
        EXPECT_TRUE(check_split(p.features, res.config, 2 * p.effective_tolerance()).passed()) << trial;
    }
}
