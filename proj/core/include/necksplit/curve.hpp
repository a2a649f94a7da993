#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace necksplit {

using Point = Eigen::VectorXd;

/// Polyline in R^d parametrized by normalized arc length over [0,1].
///
/// Samples are stored as given; a closed curve repeats its first sample at the
/// end. The cumulative table holds the arc length at every sample; evaluation
/// is a binary search followed by linear interpolation. Instances
/// are immutable and safe to share between threads.
class Curve {
public:
    Curve(std::vector<Point> points, bool closed);

    [[nodiscard]] int dimension() const noexcept { return dimension_; }
    [[nodiscard]] bool closed() const noexcept { return closed_; }
    [[nodiscard]] double length() const noexcept { return cumulative_.back(); }
    [[nodiscard]] const std::vector<Point>& samples() const noexcept { return samples_; }
    [[nodiscard]] const std::vector<double>& cumulative() const noexcept { return cumulative_; }

    /// Point at arc length t*L. Throws DomainError outside [0,1].
    [[nodiscard]] Point evaluate(double t) const;

    /// Single coordinate of evaluate(t) without allocating.
    [[nodiscard]] double coordinate(double t, int axis) const;

    /// d/dt of coordinate `axis` (right derivative; left derivative at t = 1).
    [[nodiscard]] double coordinate_slope(double t, int axis) const;

    /// Normalized parameter of sample i, i.e. cumulative()[i] / length().
    [[nodiscard]] double sample_parameter(std::size_t i) const { return cumulative_[i] / length(); }

    /// Returns a copy with every sample mapped through x -> rotation * x + shift.
    [[nodiscard]] Curve transformed(const Eigen::MatrixXd& rotation, const Point& shift) const;

private:
    // Segment index k with cumulative_[k] <= s <= cumulative_[k+1], skipping
    // zero-length segments, plus the interpolation weight on samples_[k+1].
    struct Locator {
        std::size_t segment;
        double weight;
    };
    [[nodiscard]] Locator locate(double t) const;

    std::vector<Point> samples_;
    std::vector<double> cumulative_;
    int dimension_ = 0;
    bool closed_ = false;
};

/// Builds a curve from raw points; a closed curve whose endpoints differ gets
/// the closing segment appended.
[[nodiscard]] Curve build_curve(std::vector<Point> points, bool closed);

/// Named closed test curves: circle, ellipse, square, triangle, trefoil3d.
///
/// Recognized parameters: circle {r}, ellipse {a, b}, square {side},
/// triangle {ax, ay, bx, by, cx, cy}, trefoil3d {scale}; missing ones take
/// their defaults (unit circle, a=2 b=1 ellipse, unit square, equilateral
/// triangle with unit sides, unit trefoil).
[[nodiscard]] Curve builtin_curve(const std::string& name,
                                  const std::map<std::string, double>& params,
                                  int samples);

}  // namespace necksplit
