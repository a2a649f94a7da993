#include <random>

#include <gtest/gtest.h>

#include "necksplit/alternating.hpp"
#include "necksplit/errors.hpp"
#include "oracles.hpp"

using namespace necksplit;

namespace {

// |sum over part 0 - sum over part 1| per feature, by direct summation.
std::vector<double> scalar_balance(const std::vector<FeatureFunction>& features, const SplitConfiguration& c) {
    std::vector<double> out;
    for (const auto& f : features) {
        double diff = 0.0;
        for (std::size_t j = 0; j < c.labels.size(); ++j) {
            const double a = j == 0 ? 0.0 : c.cuts[j - 1];
            const double b = j == c.cuts.size() ? 1.0 : c.cuts[j];
            diff += (c.labels[j] == 0 ? 1.0 : -1.0) * (f(b) - f(a));
        }
        out.push_back(std::abs(diff));
    }
    return out;
}

const std::vector<FeatureFunction>& sample_features() {
    static const std::vector<FeatureFunction> f = {FeatureFunction::identity(), FeatureFunction::polynomial({0, 0, 1}),
                                                   FeatureFunction::window_ramp(0.2, 0.6),
                                                   FeatureFunction::polynomial({1, -3, 0, 2})};
    return f;
}

}  // namespace

TEST(Alternating, SingleSwapStep) {
    const SplitConfiguration in{{0.1, 0.3, 0.55, 0.8}, {0, 1, 0, 0, 1}, 2};
    const auto out = canonicalize_alternating(in);
    EXPECT_EQ(out.labels, (Labeling{0, 1, 0, 1, 0}));
    EXPECT_EQ(out.cuts, (std::vector<double>{0.1, 0.3, 0.8, 1.0}));
    const auto before = scalar_balance(sample_features(), in);
    const auto after = scalar_balance(sample_features(), out);
    for (std::size_t k = 0; k < before.size(); ++k) EXPECT_NEAR(before[k], after[k], 1e-12);
}

TEST(Alternating, FixedPoint) {
    const SplitConfiguration in{{0.1, 0.3, 0.55, 0.8}, {0, 1, 0, 1, 0}, 2};
    const auto out = canonicalize_alternating(in);
    EXPECT_EQ(out.labels, in.labels);
    EXPECT_EQ(out.cuts, in.cuts);
}

TEST(Alternating, AllInOnePart) {
    const SplitConfiguration in{{0.15, 0.4, 0.45, 0.9}, {0, 0, 0, 0, 0}, 2};
    const auto out = canonicalize_alternating(in);
    EXPECT_EQ(out.labels, (Labeling{0, 1, 0, 1, 0}));
    EXPECT_TRUE(std::is_sorted(out.cuts.begin(), out.cuts.end()));
    const auto before = scalar_balance(sample_features(), in);
    const auto after = scalar_balance(sample_features(), out);
    for (std::size_t k = 0; k < before.size(); ++k) EXPECT_NEAR(before[k], after[k], 1e-12);
}

TEST(Alternating, BalanceEquationForm) {
    const std::vector<FeatureFunction> ids(4, FeatureFunction::identity());
    const auto b = alternating_balance(ids, {0.0, 0.25, 0.5, 0.75});
    for (double v : b) EXPECT_NEAR(v, 0.0, 1e-15);
}

TEST(Alternating, SolveIdentityFeatures) {
    const std::vector<FeatureFunction> ids(4, FeatureFunction::identity());
    const auto res = solve_alternating_4(ids, 1e-9);
    EXPECT_EQ(res.config.labels, (Labeling{0, 1, 0, 1, 0}));
    for (double v : alternating_balance(ids, res.cuts)) EXPECT_NEAR(v, 0.0, 1e-9);
}

TEST(Alternating, ConstantFeaturesAcceptAnything) {
    const std::vector<FeatureFunction> c(4, FeatureFunction::constant(3.0));
    const auto res = solve_alternating_4(c, 1e-9);
    EXPECT_TRUE(std::is_sorted(res.cuts.begin(), res.cuts.end()));
    EXPECT_EQ(res.report.max_abs_deviation, 0.0);
}

TEST(Alternating, SolveMixedFeatures) {
    const auto res = solve_alternating_4(sample_features(), 1e-9);
    for (double v : alternating_balance(sample_features(), res.cuts)) EXPECT_NEAR(v, 0.0, 2e-9);
}

TEST(Alternating, Contracts) {
    EXPECT_THROW((void)solve_alternating_4({FeatureFunction::identity()}, 1e-9), ContractError);
    EXPECT_THROW((void)canonicalize_alternating(SplitConfiguration{{0.5}, {0, 1}, 2}), ContractError);
}
