#include "necksplit/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "necksplit/errors.hpp"

namespace necksplit {

namespace {

double param_or(const std::map<std::string, double>& params, const std::string& key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

Point point2(double x, double y) {
    Point p(2);
    p << x, y;
    return p;
}

// Evenly subdivided polygon through the given corners; every corner is kept.
std::vector<Point> subdivided_polygon(const std::vector<Point>& corners, int samples) {
    const int per_edge = std::max(1, samples / static_cast<int>(corners.size()));
    std::vector<Point> points;
    points.reserve(corners.size() * per_edge);
    for (std::size_t c = 0; c < corners.size(); ++c) {
        const Point& a = corners[c];
        const Point& b = corners[(c + 1) % corners.size()];
        for (int j = 0; j < per_edge; ++j) {
            double w = static_cast<double>(j) / per_edge;
            points.push_back((1.0 - w) * a + w * b);
        }
    }
    return points;
}

}  // namespace

Curve::Curve(std::vector<Point> points, bool closed) : closed_(closed) {
    if (points.size() < 2) {
        throw InvalidCurve("a curve needs at least 2 points");
    }
    dimension_ = static_cast<int>(points.front().size());
    if (dimension_ < 1) {
        throw InvalidCurve("curve dimension must be at least 1");
    }
    for (const auto& p : points) {
        if (p.size() != dimension_) {
            throw InvalidCurve("all curve points must have the same dimension");
        }
        if (!p.allFinite()) {
            throw InvalidCurve("curve points must be finite");
        }
    }
    if (closed && points.front() != points.back()) {
        points.push_back(points.front());
    }
    samples_ = std::move(points);

    cumulative_.resize(samples_.size());
    cumulative_[0] = 0.0;
    for (std::size_t i = 1; i < samples_.size(); ++i) {
        cumulative_[i] = cumulative_[i - 1] + (samples_[i] - samples_[i - 1]).norm();
    }
    if (!(cumulative_.back() > 0.0)) {
        throw InvalidCurve("curve has zero total length");
    }
}

Curve::Locator Curve::locate(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) {
        std::ostringstream msg;
        msg << "curve parameter " << t << " outside [0,1]";
        throw DomainError(msg.str());
    }
    const double s = t * length();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
    std::size_t k;
    if (it == cumulative_.end()) {
        // s == L: last segment of positive length.
        k = cumulative_.size() - 2;
        while (k > 0 && cumulative_[k + 1] == cumulative_[k]) {
            --k;
        }
    } else {
        k = static_cast<std::size_t>(it - cumulative_.begin()) - 1;
    }
    const double span = cumulative_[k + 1] - cumulative_[k];
    const double w = std::clamp((s - cumulative_[k]) / span, 0.0, 1.0);
    return {k, w};
}

Point Curve::evaluate(double t) const {
    const auto [k, w] = locate(t);
    return (1.0 - w) * samples_[k] + w * samples_[k + 1];
}

double Curve::coordinate(double t, int axis) const {
    const auto [k, w] = locate(t);
    return (1.0 - w) * samples_[k][axis] + w * samples_[k + 1][axis];
}

double Curve::coordinate_slope(double t, int axis) const {
    const auto [k, w] = locate(t);
    const double span = cumulative_[k + 1] - cumulative_[k];
    return length() * (samples_[k + 1][axis] - samples_[k][axis]) / span;
}

Curve Curve::transformed(const Eigen::MatrixXd& rotation, const Point& shift) const {
    std::vector<Point> moved;
    moved.reserve(samples_.size());
    for (const auto& p : samples_) {
        moved.push_back(rotation * p + shift);
    }
    if (closed_) {
        // Keep the exact coincidence of the endpoints.
        moved.back() = moved.front();
    }
    return Curve(std::move(moved), closed_);
}

Curve build_curve(std::vector<Point> points, bool closed) {
    return Curve(std::move(points), closed);
}

Curve builtin_curve(const std::string& name, const std::map<std::string, double>& params, int samples) {
    const int min_samples = name == "square" ? 4 : 8;
    if (samples < min_samples) {
        throw DomainError("builtin curve '" + name + "' needs at least " + std::to_string(min_samples) +
                          " samples");
    }
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<Point> points;
    points.reserve(samples);

    if (name == "circle" || name == "ellipse") {
        const double r = param_or(params, "r", 1.0);
        const double a = name == "circle" ? r : param_or(params, "a", 2.0);
        const double b = name == "circle" ? r : param_or(params, "b", 1.0);
        if (!(a > 0.0 && b > 0.0)) {
            throw DomainError("circle/ellipse radii must be positive");
        }
        for (int i = 0; i < samples; ++i) {
            double u = two_pi * i / samples;
            points.push_back(point2(a * std::cos(u), b * std::sin(u)));
        }
    } else if (name == "square") {
        const double side = param_or(params, "side", 1.0);
        if (!(side > 0.0)) {
            throw DomainError("square side must be positive");
        }
        points = subdivided_polygon(
            {point2(0, 0), point2(side, 0), point2(side, side), point2(0, side)}, samples);
    } else if (name == "triangle") {
        const double h = std::sqrt(3.0) / 2.0;
        points = subdivided_polygon(
            {point2(param_or(params, "ax", 0.0), param_or(params, "ay", 0.0)),
             point2(param_or(params, "bx", 1.0), param_or(params, "by", 0.0)),
             point2(param_or(params, "cx", 0.5), param_or(params, "cy", h))},
            samples);
    } else if (name == "trefoil3d") {
        const double scale = param_or(params, "scale", 1.0);
        for (int i = 0; i < samples; ++i) {
            double u = two_pi * i / samples;
            Point p(3);
            p << std::sin(u) + 2.0 * std::sin(2.0 * u), std::cos(u) - 2.0 * std::cos(2.0 * u),
                -std::sin(3.0 * u);
            points.push_back(scale * p);
        }
    } else {
        throw DomainError("unknown builtin curve '" + name + "'");
    }
    return Curve(std::move(points), true);
}

}  // namespace necksplit
