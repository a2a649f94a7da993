#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "necksplit/curve.hpp"
#include "necksplit/split.hpp"

namespace necksplit {

/// Open parameter window (x, y) with 0 <= x < y <= 1.
struct Window {
    double x = 0.0;
    double y = 1.0;
};

/// Four curve parameters t_1 <= ... <= t_4 and their vertices gamma(t_i).
struct InscribedQuadrilateral {
    std::array<double, 4> t{};
    std::array<Point, 4> vertices;
    double parallelogram_residual = 0.0;  // |A + C - B - D|
    double rectangle_residual = 0.0;      // spread of |V - center|^2 over the vertices
    bool rectangle = false;
    bool collinear = false;
    bool degenerate = false;              // two vertices closer than 1e-6 * curve diameter
    std::optional<int> window_hit;        // first i with t_i inside the requested window
    std::optional<std::array<double, 4>> arcs;  // cyclic arc lengths, balanced finder only
};

/// Pieces of a loop regrouped into r loops of equal length.
struct LoopSplit {
    std::vector<double> cuts;
    std::vector<std::vector<int>> groups;  // 0-based interval indices per group
    std::vector<Point> displacements;
    std::vector<double> lengths;
    std::vector<Curve> loops;
    std::optional<ColorConstraint> colors;
    bool existence_guaranteed = true;
};

/// True when two non-adjacent segments of a planar polyline touch. Always
/// false for other dimensions. Quadratic in the sample count.
[[nodiscard]] bool has_self_intersection(const Curve& curve);

/// Rectangle test for a parallelogram: centers at the common diagonal midpoint and
/// compares the squared distances of the four vertices. Throws ContractError
/// when A + C and B + D differ by more than tol.
[[nodiscard]] bool is_rectangle(const Point& a, const Point& b, const Point& c, const Point& d, double tol);

/// Recomputes vertices, residuals and flags for four parameters on `curve`.
[[nodiscard]] InscribedQuadrilateral describe_quadrilateral(const Curve& curve, const std::array<double, 4>& t,
                                                            double tol, std::optional<Window> window = {});

/// Inscribed parallelogram with a vertex parameter inside `window` (d = 2 or 3).
[[nodiscard]] InscribedQuadrilateral find_parallelogram(std::shared_ptr<const Curve> curve, Window window,
                                                        double tol = kAnalyticTolerance,
                                                        const SolverOptions& options = {});

/// Inscribed rectangle with a vertex parameter inside `window` (planar curves).
[[nodiscard]] InscribedQuadrilateral find_rectangle(std::shared_ptr<const Curve> curve, Window window,
                                                    double tol = kAnalyticTolerance,
                                                    const SolverOptions& options = {});

/// Inscribed rectangle whose opposite arcs have equal total length.
[[nodiscard]] InscribedQuadrilateral find_balanced_rectangle(std::shared_ptr<const Curve> curve,
                                                             double tol = kAnalyticTolerance,
                                                             const SolverOptions& options = {});

/// Cuts a closed curve into (r-1)(d+1)+1 pieces forming r closed loops of length L/r.
[[nodiscard]] LoopSplit split_loop(std::shared_ptr<const Curve> curve, int r, double tol = kAnalyticTolerance,
                                   const SolverOptions& options = {});

/// split_loop where no group takes two pieces of one color block.
[[nodiscard]] LoopSplit split_loop_colored(std::shared_ptr<const Curve> curve, int r, const ColorConstraint& colors,
                                           double tol = kAnalyticTolerance, const SolverOptions& options = {});

/// Concatenates the pieces gamma|[t_{j-1}, t_j], j in `group` ascending, each
/// translated to start where the previous one ends. The result is closed when
/// the end lands within closure_tol of the start.
[[nodiscard]] Curve reassemble(const Curve& curve, const std::vector<double>& cuts, const std::vector<int>& group,
                               std::optional<double> closure_tol = {});

}  // namespace necksplit
