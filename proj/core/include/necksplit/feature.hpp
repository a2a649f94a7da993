#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "necksplit/curve.hpp"

namespace necksplit {

enum class FeatureKind {
    coordinate,
    identity,
    squared_norm,
    window_ramp,
    cumulative_measure,
    tabulated,
    constant,
    polynomial,
    custom,
};

[[nodiscard]] std::string_view to_string(FeatureKind kind);

/// Continuous function [0,1] -> R fed to the splitter.
///
/// Each feature carries its own right derivative. Values are multiplied by
/// scale(), which defaults to 1. Copies share any referenced curve.
class FeatureFunction {
public:
    struct Coordinate {
        std::shared_ptr<const Curve> curve;
        int axis;
    };
    struct Identity {};
    struct SquaredNorm {
        std::shared_ptr<const Curve> curve;
        Point center;  // |gamma(t) - center|^2
    };
    struct WindowRamp {
        double x;
        double y;
    };
    struct Table {
        std::vector<double> knots;
        std::vector<double> values;
    };
    struct Constant {
        double c;
    };
    struct Polynomial {
        std::vector<double> coefficients;  // lowest degree first
    };
    struct Custom {
        std::string name;
        std::function<double(double)> value;
        std::function<double(double)> slope;
    };

    static FeatureFunction coordinate(std::shared_ptr<const Curve> curve, int axis);
    static FeatureFunction identity();
    static FeatureFunction squared_norm(std::shared_ptr<const Curve> curve);
    static FeatureFunction squared_norm(std::shared_ptr<const Curve> curve, Point center);
    static FeatureFunction window_ramp(double x, double y);
    /// Cumulative function of the masses placed uniformly on consecutive
    /// cells [knots[i], knots[i+1]]; with no knots the cells split [0,1] evenly.
    static FeatureFunction cumulative_measure(std::vector<double> masses, std::vector<double> knots = {});
    static FeatureFunction tabulated(std::vector<double> knots, std::vector<double> values);
    static FeatureFunction constant(double c);
    static FeatureFunction polynomial(std::vector<double> coefficients);
    static FeatureFunction custom(std::string name, std::function<double(double)> value,
                                  std::function<double(double)> slope);

    [[nodiscard]] double value(double t) const;
    [[nodiscard]] double slope(double t) const;
    [[nodiscard]] double operator()(double t) const { return value(t); }

    [[nodiscard]] FeatureKind kind() const noexcept { return kind_; }
    [[nodiscard]] double scale() const noexcept { return scale_; }
    [[nodiscard]] FeatureFunction scaled(double factor) const;

    /// True for kinds built from a table of knots (looser default tolerance).
    [[nodiscard]] bool is_tabulated() const noexcept {
        return kind_ == FeatureKind::tabulated || kind_ == FeatureKind::cumulative_measure;
    }

    [[nodiscard]] const auto& data() const noexcept { return data_; }

private:
    using Data = std::variant<Coordinate, Identity, SquaredNorm, WindowRamp, Table, Constant, Polynomial, Custom>;

    FeatureFunction(FeatureKind kind, Data data) : kind_(kind), data_(std::move(data)) {}

    FeatureKind kind_;
    Data data_;
    double scale_ = 1.0;
};

/// String-keyed factory used by the file formats.
///
/// kind is one of coordinate, identity, squared-norm, window-ramp,
/// cumulative-measure, tabulated, constant, polynomial. Curve-backed kinds use
/// `curve`, which must be non-null. Throws DomainError on invalid parameters.
[[nodiscard]] FeatureFunction make_feature(std::string_view kind, const nlohmann::json& params,
                                           std::shared_ptr<const Curve> curve = nullptr);

}  // namespace necksplit
