#include <algorithm>
#include <cmath>
#include <string>

#include "necksplit/geometry.hpp"

namespace necksplit {

namespace {

LoopSplit split_loop_impl(std::shared_ptr<const Curve> curve, int r, const std::optional<ColorConstraint>& colors,
                          double tol, const SolverOptions& options) {
    if (!curve) {
        throw ContractError("loop split needs a curve");
    }
    if (!curve->closed()) {
        throw ContractError("loop split needs a closed curve");
    }
    if (r < 2) {
        throw ContractError("loop split needs r >= 2, got " + std::to_string(r));
    }
    const int d = curve->dimension();
    const double L = curve->length();

    // Coordinates in units of L.
    SplitProblem problem;
    for (int axis = 0; axis < d; ++axis) {
        problem.features.push_back(FeatureFunction::coordinate(curve, axis).scaled(1.0 / L));
    }
    problem.features.push_back(FeatureFunction::identity());
    problem.parts = r;
    problem.colors = colors;
    problem.tolerance = tol / std::sqrt(static_cast<double>(d + 1));

    const SplitResult solved = colors ? solve_colored(problem, options) : solve_split(problem, options);

    LoopSplit out;
    out.cuts = solved.config.cuts;
    out.groups = solved.config.part_members();
    out.colors = colors;
    out.existence_guaranteed = solved.existence_guaranteed;
    const std::size_t n = out.cuts.size();
    for (const auto& group : out.groups) {
        Point displacement = Point::Zero(d);
        double span = 0.0;
        for (int j : group) {
            const double a = j == 0 ? 0.0 : out.cuts[static_cast<std::size_t>(j) - 1];
            const double b = static_cast<std::size_t>(j) < n ? out.cuts[static_cast<std::size_t>(j)] : 1.0;
            displacement += curve->evaluate(b) - curve->evaluate(a);
            span += b - a;
        }
        out.displacements.push_back(std::move(displacement));
        out.lengths.push_back(span * L);
        out.loops.push_back(reassemble(*curve, out.cuts, group, tol * L));
    }
    return out;
}

}  // namespace

LoopSplit split_loop(std::shared_ptr<const Curve> curve, int r, double tol, const SolverOptions& options) {
    return split_loop_impl(std::move(curve), r, std::nullopt, tol, options);
}

LoopSplit split_loop_colored(std::shared_ptr<const Curve> curve, int r, const ColorConstraint& colors, double tol,
                             const SolverOptions& options) {
    return split_loop_impl(std::move(curve), r, colors, tol, options);
}

Curve reassemble(const Curve& curve, const std::vector<double>& cuts, const std::vector<int>& group,
                 std::optional<double> closure_tol) {
    const std::size_t n = cuts.size();
    const double L = curve.length();
    const auto& cumulative = curve.cumulative();
    const auto& samples = curve.samples();

    std::vector<int> order = group;
    std::sort(order.begin(), order.end());
    std::vector<Point> points;
    for (int j : order) {
        if (j < 0 || static_cast<std::size_t>(j) > n) {
            throw ContractError("interval index " + std::to_string(j) + " outside [0, " + std::to_string(n) + "]");
        }
        const double a = j == 0 ? 0.0 : cuts[static_cast<std::size_t>(j) - 1];
        const double b = static_cast<std::size_t>(j) < n ? cuts[static_cast<std::size_t>(j)] : 1.0;
        if (!(b > a)) continue;

        std::vector<Point> piece{curve.evaluate(a)};
        auto first = std::upper_bound(cumulative.begin(), cumulative.end(), a * L);
        auto last = std::lower_bound(cumulative.begin(), cumulative.end(), b * L);
        for (auto it = first; it < last; ++it) {
            piece.push_back(samples[static_cast<std::size_t>(it - cumulative.begin())]);
        }
        piece.push_back(curve.evaluate(b));

        const Point shift = points.empty() ? Point::Zero(curve.dimension()) : Point(points.back() - piece.front());
        for (std::size_t i = points.empty() ? 0 : 1; i < piece.size(); ++i) {
            points.push_back(piece[i] + shift);
        }
    }
    if (points.size() < 2) {
        throw InvalidCurve("reassembled group has zero length");
    }
    const double tol = closure_tol.value_or(1e-9 * L);
    const bool closed = (points.back() - points.front()).norm() <= tol;
    if (closed) {
        points.back() = points.front();
    }
    return Curve(std::move(points), closed);
}

}  // namespace necksplit
