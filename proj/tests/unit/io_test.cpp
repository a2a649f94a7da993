#include <gtest/gtest.h>

#include "necksplit/io.hpp"
#include "necksplit/svg.hpp"
#include "oracles.hpp"

using namespace necksplit;
using nlohmann::json;

TEST(Io, RealsUseSeventeenDigits) {
    const std::string text = dump_json(json{{"x", 0.1}, {"y", {1.0 / 3.0}}, {"n", 3}});
    EXPECT_NE(text.find("0.10000000000000001"), std::string::npos);
    EXPECT_NE(text.find("0.33333333333333331"), std::string::npos);
    EXPECT_NE(text.find("\"n\": 3"), std::string::npos);
    EXPECT_EQ(json::parse(text)["x"].get<double>(), 0.1);
}

TEST(Io, CurveFromPointsAndBuiltin) {
    const Curve sq = curve_from_json(json::parse(R"({"dimension": 2, "closed": true,
        "points": [[0,0],[1,0],[1,1],[0,1]]})"));
    EXPECT_DOUBLE_EQ(sq.length(), 4.0);
    const Curve c = curve_from_json(json::parse(R"({"builtin": {"name": "circle", "params": {"r": 2}, "samples": 64}})"));
    EXPECT_NEAR(c.evaluate(0.0).norm(), 2.0, 1e-12);
    EXPECT_THROW((void)curve_from_json(json::parse(R"({"dimension": 3, "points": [[0,0],[1,0]]})")), InvalidCurve);
    EXPECT_THROW((void)curve_from_json(json::parse(R"({"closed": true})")), InputError);
}

TEST(Io, CurveRoundTrip) {
    const Curve sq = *necksplit::testing::unit_square();
    const Curve again = curve_from_json(curve_to_json(sq));
    EXPECT_EQ(again.samples().size(), sq.samples().size());
    EXPECT_DOUBLE_EQ(again.length(), sq.length());
}

TEST(Io, ProblemWithOneBasedColors) {
    const auto file = problem_from_json(json::parse(R"({
        "features": [{"kind": "identity"}],
        "r": 3, "colors": [[1, 2], [3]], "tolerance": 1e-8})"));
    EXPECT_EQ(file.problem.parts, 3);
    ASSERT_TRUE(file.problem.colors.has_value());
    EXPECT_EQ(file.problem.colors->blocks(), (std::vector<std::vector<int>>{{0, 1}, {2}}));
    EXPECT_DOUBLE_EQ(file.problem.effective_tolerance(), 1e-8);
    EXPECT_THROW((void)problem_from_json(json::parse(R"({"features": [], "r": 2})")), InputError);
    EXPECT_THROW((void)problem_from_json(json::parse(R"({"features": [{"kind": "identity"}]})")), InputError);
}

TEST(Io, ProblemWithEmbeddedCurve) {
    const auto file = problem_from_json(json::parse(R"({
        "curve": {"builtin": {"name": "square", "samples": 4}},
        "features": [{"kind": "coordinate", "params": {"index": 0}}, {"kind": "identity"}],
        "r": 2})"));
    ASSERT_TRUE(file.curve);
    EXPECT_DOUBLE_EQ(file.problem.features[0](0.25), 1.0);
}

TEST(Io, SplitRoundTrip) {
    const SplitConfiguration c{{0.25, 0.75}, {0, 1, 0}, 2};
    const auto doc = split_to_json(c, residual({FeatureFunction::identity()}, c));
    EXPECT_EQ(doc["parts"], json::parse("[[1, 3], [2]]"));
    const auto back = split_from_json(doc);
    EXPECT_EQ(back.labels, c.labels);
    EXPECT_EQ(back.cuts, c.cuts);
    EXPECT_THROW((void)split_from_json(json::parse(R"({"cuts": [0.5], "parts": [[1], [1]]})")), ContractError);
    EXPECT_THROW((void)split_from_json(json::parse(R"({"cuts": [0.5], "parts": [[1]]})")), ContractError);
}

TEST(Io, LoopSplitAndQuadrilateralRoundTrip) {
    const auto sq = necksplit::testing::unit_square();
    const auto split = split_loop(sq, 2);
    const auto back = loop_split_from_json(loop_split_to_json(split));
    EXPECT_EQ(back.groups, split.groups);
    EXPECT_EQ(back.cuts, split.cuts);

    const auto q = describe_quadrilateral(*sq, {0.0, 0.25, 0.5, 0.75}, 1e-9, Window{0.2, 0.3});
    const auto doc = quadrilateral_to_json(q);
    EXPECT_EQ(doc["window_hit"], 2);
    const auto q2 = quadrilateral_from_json(doc);
    EXPECT_EQ(q2.t, q.t);
    EXPECT_TRUE(q2.rectangle);
}

TEST(Io, ReportFormat) {
    VerificationReport r;
    r.add("balance[0]", 1e-12, 1e-9);
    const auto doc = report_to_json(r);
    ASSERT_TRUE(doc.is_array());
    EXPECT_EQ(doc[0]["check"], "balance[0]");
    EXPECT_EQ(doc[0]["pass"], true);
}

TEST(Svg, DrawsPiecesAndQuadrilateral) {
    const auto sq = necksplit::testing::unit_square();
    const std::string loops = svg_loop_split(*sq, split_loop(sq, 2));
    EXPECT_EQ(loops.rfind("<svg", 0), 0u);
    EXPECT_NE(loops.find("</svg>"), std::string::npos);
    EXPECT_NE(loops.find("#d62728"), std::string::npos);
    const auto trefoil = necksplit::testing::builtin("trefoil3d", 256);
    const std::string quad = svg_quadrilateral(*trefoil, find_parallelogram(trefoil, Window{0.4, 0.5}));
    EXPECT_NE(quad.find("<polyline"), std::string::npos);
}
