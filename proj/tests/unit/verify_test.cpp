#include <cmath>

#include <gtest/gtest.h>

#include "necksplit/errors.hpp"
#include "necksplit/verify.hpp"
#include "oracles.hpp"

using namespace necksplit;
using necksplit::testing::bisect;
using necksplit::testing::builtin;
using necksplit::testing::square_feature;
using necksplit::testing::unit_square;

namespace {

double root_half() {
    return bisect([](double t) { return t * t - 0.5; }, 0.0, 1.0);
}

LoopSplit corner_split() {
    LoopSplit s;
    s.cuts = {0.25, 0.5, 0.75};
    s.groups = {{0, 2}, {1, 3}};
    return s;
}

}  // namespace

TEST(CheckSplit, RootHalfPasses) {
    const SplitConfiguration c{{root_half()}, {0, 1}, 2};
    const auto rep = check_split({square_feature()}, c, 1e-9);
    EXPECT_TRUE(rep.passed());
    ASSERT_NE(rep.find("balance[0]"), nullptr);
    ASSERT_NE(rep.find("telescoping[0]"), nullptr);
}

TEST(CheckSplit, PerturbedCutFailsWithFirstOrderResidual) {
    const double t = root_half();
    const SplitConfiguration c{{t + 1e-3}, {0, 1}, 2};
    const auto rep = check_split({square_feature()}, c, 1e-9);
    EXPECT_FALSE(rep.passed());
    const auto* balance = rep.find("balance[0]");
    ASSERT_NE(balance, nullptr);
    EXPECT_FALSE(balance->pass);
    // First order: d(t^2) = 2 t dt, and the deviation from the mean is that amount.
    EXPECT_NEAR(balance->residual, 2.0 * t * 1e-3, 1e-6);
}

TEST(CheckSplit, ConstantFeaturesAlwaysPass) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto c = necksplit::testing::random_configuration(rng, 4, 3);
        EXPECT_TRUE(check_split({FeatureFunction::constant(2.0), FeatureFunction::constant(-1.0)}, c, 1e-15).passed());
    }
}

TEST(CheckSplit, MalformedShapesAreReported) {
    EXPECT_FALSE(check_split({square_feature()}, SplitConfiguration{{0.5}, {0, 3}, 2}, 1e-9).passed());
    EXPECT_FALSE(check_split({square_feature()}, SplitConfiguration{{0.6, 0.5}, {0, 1, 0}, 2}, 1.0).passed());
    EXPECT_FALSE(check_split({square_feature()}, SplitConfiguration{{0.5}, {0}, 2}, 1e-9).passed());
}

TEST(CheckLoopSplit, SquareOppositeEdgesPass) {
    EXPECT_TRUE(check_loop_split(*unit_square(), corner_split(), 1e-9).passed());
}

TEST(CheckLoopSplit, CutOffCornerFailsDisplacement) {
    auto s = corner_split();
    s.cuts[0] = 0.26;
    const auto rep = check_loop_split(*unit_square(), s, 1e-9);
    EXPECT_FALSE(rep.passed());
    EXPECT_FALSE(rep.find("displacement[0]")->pass);
    // Moving the first cut 0.04 along the right edge shifts both groups by (0, 0.04).
    EXPECT_NEAR(rep.find("displacement[0]")->residual, 0.04, 1e-12);
}

TEST(CheckLoopSplit, UnequalButClosedGroups) {
    const auto rect = std::make_shared<const Curve>(build_curve(
        {Point(Eigen::Vector2d(0, 0)), Point(Eigen::Vector2d(2, 0)), Point(Eigen::Vector2d(2, 1)),
         Point(Eigen::Vector2d(0, 1))},
        true));
    LoopSplit s;
    s.cuts = {2.0 / 6.0, 3.0 / 6.0, 5.0 / 6.0};
    s.groups = {{0, 2}, {1, 3}};
    const auto rep = check_loop_split(*rect, s, 1e-9);
    EXPECT_FALSE(rep.passed());
    EXPECT_FALSE(rep.find("length[0]")->pass);
    EXPECT_TRUE(rep.find("closure[0]")->pass);
    EXPECT_TRUE(rep.find("closure[1]")->pass);
    EXPECT_TRUE(rep.find("total-length")->pass);
}

TEST(CheckLoopSplit, RainbowViolationReported) {
    auto s = corner_split();
    s.colors = ColorConstraint({{0, 2}, {1}, {3}});
    const auto rep = check_loop_split(*unit_square(), s, 1e-9);
    EXPECT_FALSE(rep.find("rainbow")->pass);
}

TEST(CheckLoopSplit, BadGroupsReported) {
    auto s = corner_split();
    s.groups = {{0, 2}, {1}};
    EXPECT_FALSE(check_loop_split(*unit_square(), s, 1e-9).passed());
}

TEST(CheckQuadrilateral, DetectsTamperedVertices) {
    const auto sq = unit_square();
    auto q = describe_quadrilateral(*sq, {0.0, 0.25, 0.5, 0.75}, 1e-9);
    EXPECT_TRUE(check_quadrilateral(*sq, q, 1e-9, true, Window{0.2, 0.3}).passed());
    EXPECT_FALSE(check_quadrilateral(*sq, q, 1e-9, true, Window{0.3, 0.4}).passed());
    q.t[1] = 0.3;
    EXPECT_FALSE(check_quadrilateral(*sq, q, 1e-9, false).passed());
}

TEST(DensityProbe, CircleTenWindowsRectangle) {
    std::vector<Window> windows;
    for (int i = 0; i < 10; ++i) windows.push_back({i / 10.0, (i + 1) / 10.0});
    const auto rep = density_probe(builtin("circle", 1024), windows, Finder::rectangle, 1e-9);
    EXPECT_EQ(rep.checks.size(), 10u);
    EXPECT_TRUE(rep.passed());
}

TEST(DensityProbe, FullAndEmptyWindowLists) {
    EXPECT_TRUE(density_probe(unit_square(), {{0.0, 1.0}}, Finder::parallelogram, 1e-9).passed());
    const auto empty = density_probe(unit_square(), {}, Finder::parallelogram, 1e-9);
    EXPECT_TRUE(empty.checks.empty());
    EXPECT_TRUE(empty.passed());
    EXPECT_THROW((void)density_probe(unit_square(), {{0.0, 0.5}, {0.4, 0.6}}, Finder::parallelogram, 1e-9),
                 ContractError);
}

TEST(Discrete, ClassicSmallCases) {
    const auto aabb = brute_force_discrete_split({0, 0, 1, 1}, 2);
    ASSERT_TRUE(aabb.feasible);
    EXPECT_EQ(aabb.cuts, (std::vector<int>{1, 3}));
    EXPECT_TRUE(is_fair_division({0, 0, 1, 1}, aabb, 2));

    const auto abab = brute_force_discrete_split({0, 1, 0, 1}, 2);
    ASSERT_TRUE(abab.feasible);
    EXPECT_EQ(abab.cuts, (std::vector<int>{2}));

    const auto aaa = brute_force_discrete_split({7, 7, 7}, 3);
    ASSERT_TRUE(aaa.feasible);
    EXPECT_EQ(aaa.cuts.size(), 2u);
    EXPECT_TRUE(is_fair_division({7, 7, 7}, aaa, 3));
}

TEST(Discrete, Preconditions) {
    EXPECT_THROW((void)brute_force_discrete_split({0, 0, 1}, 2), ContractError);
    EXPECT_THROW((void)brute_force_discrete_split(std::vector<int>(26, 0), 2), ResourceError);
}

TEST(Discrete, UnfairDivisionDetected) {
    DiscreteDivision d;
    d.cuts = {1};
    d.owners = {0, 1};
    EXPECT_FALSE(is_fair_division({0, 0, 1, 1}, d, 2));
}

TEST(Discrete, BeadFeaturesAndRounding) {
    const std::vector<int> beads = {0, 1, 1, 0};
    const auto f = bead_features(beads);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_DOUBLE_EQ(f[0](1.0), 2.0);
    EXPECT_DOUBLE_EQ(f[1](0.5), 1.0);
    const SplitConfiguration c{{0.125, 0.374, 0.375, 0.376}, {0, 1, 0, 1, 0}, 2};
    const auto d = round_to_beads(c, 4);
    EXPECT_EQ(d.cuts, (std::vector<int>{0, 1, 1, 2}));
    EXPECT_EQ(d.owners, c.labels);
}
