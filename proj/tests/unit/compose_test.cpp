#include <gtest/gtest.h>

#include "necksplit/errors.hpp"
#include "necksplit/split.hpp"
#include "necksplit/verify.hpp"
#include "oracles.hpp"

using namespace necksplit;
using necksplit::testing::square_feature;

namespace {

void expect_equal_parts(const std::vector<FeatureFunction>& features, const SplitResult& res, double tol) {
    const auto rep = residual(features, res.config);
    for (Eigen::Index k = 0; k < rep.part_sums.cols(); ++k) {
        const double share = (features[static_cast<std::size_t>(k)](1.0) - features[static_cast<std::size_t>(k)](0.0)) /
                             res.config.parts;
        for (Eigen::Index j = 0; j < rep.part_sums.rows(); ++j) EXPECT_NEAR(rep.part_sums(j, k), share, tol);
    }
}

}  // namespace

TEST(Compose, UniformQuarters) {
    const std::vector<FeatureFunction> f = {FeatureFunction::identity()};
    const auto res = compose_splittings(f, 2, 2, 1e-9);
    ASSERT_EQ(res.config.cuts.size(), 3u);
    EXPECT_NEAR(res.config.cuts[0], 0.25, 1e-9);
    EXPECT_NEAR(res.config.cuts[1], 0.5, 1e-9);
    EXPECT_NEAR(res.config.cuts[2], 0.75, 1e-9);
    EXPECT_EQ(res.config.parts, 4);
    expect_equal_parts(f, res, 1e-9);
}

TEST(Compose, SquareFeatureQuarters) {
    const std::vector<FeatureFunction> f = {square_feature()};
    const auto res = compose_splittings(f, 2, 2, 1e-9);
    EXPECT_EQ(res.config.cuts.size(), 3u);
    expect_equal_parts(f, res, 1e-9);
}

TEST(Compose, CutCountTwoFeaturesSixParts) {
    const std::vector<FeatureFunction> f = {FeatureFunction::identity(), square_feature()};
    const auto res = compose_splittings(f, 2, 3, 1e-9);
    EXPECT_EQ(res.config.cuts.size(), 10u);
    EXPECT_EQ(res.config.parts, 6);
    expect_equal_parts(f, res, 1e-9);
    EXPECT_TRUE(check_split(f, res.config, 2e-9).passed());
}

TEST(Compose, ThreeByTwo) {
    const std::vector<FeatureFunction> f = {FeatureFunction::window_ramp(0.1, 0.9), square_feature()};
    const auto res = compose_splittings(f, 3, 2, 1e-9);
    EXPECT_EQ(res.config.cuts.size(), 10u);
    expect_equal_parts(f, res, 1e-9);
}

TEST(Compose, FactoredOverPrimes) {
    const std::vector<FeatureFunction> f = {square_feature()};
    const auto res = solve_split_factored(f, 8, 1e-9);
    EXPECT_EQ(res.config.cuts.size(), 7u);
    EXPECT_EQ(res.config.parts, 8);
    expect_equal_parts(f, res, 1e-9);

    const auto prime = solve_split_factored(f, 3, 1e-9);
    EXPECT_EQ(prime.config.cuts.size(), 2u);
}

TEST(Compose, Contracts) {
    EXPECT_THROW((void)compose_splittings({FeatureFunction::identity()}, 1, 2, 1e-9), ContractError);
    EXPECT_THROW((void)compose_splittings({}, 2, 2, 1e-9), ContractError);
}
