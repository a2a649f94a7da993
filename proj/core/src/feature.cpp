#include "necksplit/feature.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "necksplit/errors.hpp"

namespace necksplit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_parameter(double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        std::ostringstream msg;
        msg << "feature parameter " << t << " outside [0,1]";
        throw DomainError(msg.str());
    }
}

std::size_t table_segment(const std::vector<double>& knots, double t) {
    auto it = std::upper_bound(knots.begin(), knots.end(), t);
    if (it == knots.end()) {
        return knots.size() - 2;
    }
    return static_cast<std::size_t>(it - knots.begin()) - 1;
}

std::vector<double> uniform_knots(std::size_t cells) {
    std::vector<double> knots(cells + 1);
    for (std::size_t i = 0; i <= cells; ++i) {
        knots[i] = static_cast<double>(i) / static_cast<double>(cells);
    }
    knots.back() = 1.0;
    return knots;
}

void validate_knots(const std::vector<double>& knots) {
    if (knots.size() < 2) {
        throw DomainError("a table needs at least 2 knots");
    }
    if (knots.front() != 0.0 || knots.back() != 1.0) {
        throw DomainError("table knots must start at 0 and end at 1");
    }
    for (std::size_t i = 1; i < knots.size(); ++i) {
        if (!(knots[i] > knots[i - 1])) {
            throw DomainError("table knots must be strictly increasing");
        }
    }
}

std::shared_ptr<const Curve> require_curve(std::shared_ptr<const Curve> curve, std::string_view kind) {
    if (!curve) {
        throw DomainError(std::string(kind) + " feature needs a curve");
    }
    return curve;
}

}  // namespace

std::string_view to_string(FeatureKind kind) {
    switch (kind) {
    case FeatureKind::coordinate: return "coordinate";
    case FeatureKind::identity: return "identity";
    case FeatureKind::squared_norm: return "squared-norm";
    case FeatureKind::window_ramp: return "window-ramp";
    case FeatureKind::cumulative_measure: return "cumulative-measure";
    case FeatureKind::tabulated: return "tabulated";
    case FeatureKind::constant: return "constant";
    case FeatureKind::polynomial: return "polynomial";
    case FeatureKind::custom: return "custom";
    }
    return "unknown";
}

FeatureFunction FeatureFunction::coordinate(std::shared_ptr<const Curve> curve, int axis) {
    curve = require_curve(std::move(curve), "coordinate");
    if (axis < 0 || axis >= curve->dimension()) {
        throw DomainError("coordinate index " + std::to_string(axis) + " outside curve dimension " +
                          std::to_string(curve->dimension()));
    }
    return {FeatureKind::coordinate, Coordinate{std::move(curve), axis}};
}

FeatureFunction FeatureFunction::identity() { return {FeatureKind::identity, Identity{}}; }

FeatureFunction FeatureFunction::squared_norm(std::shared_ptr<const Curve> curve) {
    curve = require_curve(std::move(curve), "squared-norm");
    Point origin = Point::Zero(curve->dimension());
    return squared_norm(std::move(curve), std::move(origin));
}

FeatureFunction FeatureFunction::squared_norm(std::shared_ptr<const Curve> curve, Point center) {
    curve = require_curve(std::move(curve), "squared-norm");
    if (center.size() != curve->dimension()) {
        throw DomainError("squared-norm center has the wrong dimension");
    }
    return {FeatureKind::squared_norm, SquaredNorm{std::move(curve), std::move(center)}};
}

FeatureFunction FeatureFunction::window_ramp(double x, double y) {
    if (!(x >= 0.0 && y <= 1.0 && x < y)) {
        std::ostringstream msg;
        msg << "window-ramp needs 0 <= x < y <= 1, got (" << x << ", " << y << ")";
        throw DomainError(msg.str());
    }
    return {FeatureKind::window_ramp, WindowRamp{x, y}};
}

FeatureFunction FeatureFunction::cumulative_measure(std::vector<double> masses, std::vector<double> knots) {
    if (masses.empty()) {
        throw DomainError("cumulative-measure needs at least one mass");
    }
    if (knots.empty()) {
        knots = uniform_knots(masses.size());
    }
    if (knots.size() != masses.size() + 1) {
        throw DomainError("cumulative-measure needs one more knot than masses");
    }
    validate_knots(knots);
    std::vector<double> values(knots.size(), 0.0);
    for (std::size_t i = 0; i < masses.size(); ++i) {
        values[i + 1] = values[i] + masses[i];
    }
    return {FeatureKind::cumulative_measure, Table{std::move(knots), std::move(values)}};
}

FeatureFunction FeatureFunction::tabulated(std::vector<double> knots, std::vector<double> values) {
    if (knots.empty()) {
        if (values.size() < 2) {
            throw DomainError("tabulated feature needs at least 2 values");
        }
        knots = uniform_knots(values.size() - 1);
    }
    if (knots.size() != values.size()) {
        throw DomainError("tabulated feature needs as many knots as values");
    }
    validate_knots(knots);
    return {FeatureKind::tabulated, Table{std::move(knots), std::move(values)}};
}

FeatureFunction FeatureFunction::constant(double c) { return {FeatureKind::constant, Constant{c}}; }

FeatureFunction FeatureFunction::polynomial(std::vector<double> coefficients) {
    if (coefficients.empty()) {
        coefficients.push_back(0.0);
    }
    return {FeatureKind::polynomial, Polynomial{std::move(coefficients)}};
}

FeatureFunction FeatureFunction::custom(std::string name, std::function<double(double)> value,
                                        std::function<double(double)> slope) {
    if (!value || !slope) {
        throw DomainError("custom feature needs both value and slope");
    }
    return {FeatureKind::custom, Custom{std::move(name), std::move(value), std::move(slope)}};
}

FeatureFunction FeatureFunction::scaled(double factor) const {
    FeatureFunction copy = *this;
    copy.scale_ *= factor;
    return copy;
}

double FeatureFunction::value(double t) const {
    check_parameter(t);
    const double raw = std::visit(
        overloaded{
            [t](const Coordinate& f) { return f.curve->coordinate(t, f.axis); },
            [t](const Identity&) { return t; },
            [t](const SquaredNorm& f) { return (f.curve->evaluate(t) - f.center).squaredNorm(); },
            [t](const WindowRamp& f) {
                if (t <= f.x) return 0.0;
                if (t >= f.y) return 1.0;
                return (t - f.x) / (f.y - f.x);
            },
            [t](const Table& f) {
                const std::size_t k = table_segment(f.knots, t);
                const double w = (t - f.knots[k]) / (f.knots[k + 1] - f.knots[k]);
                return (1.0 - w) * f.values[k] + w * f.values[k + 1];
            },
            [](const Constant& f) { return f.c; },
            [t](const Polynomial& f) {
                double acc = 0.0;
                for (auto it = f.coefficients.rbegin(); it != f.coefficients.rend(); ++it) {
                    acc = acc * t + *it;
                }
                return acc;
            },
            [t](const Custom& f) { return f.value(t); },
        },
        data_);
    return scale_ * raw;
}

double FeatureFunction::slope(double t) const {
    check_parameter(t);
    const double raw = std::visit(
        overloaded{
            [t](const Coordinate& f) { return f.curve->coordinate_slope(t, f.axis); },
            [](const Identity&) { return 1.0; },
            [t](const SquaredNorm& f) {
                double acc = 0.0;
                for (int axis = 0; axis < f.curve->dimension(); ++axis) {
                    acc += 2.0 * (f.curve->coordinate(t, axis) - f.center[axis]) *
                           f.curve->coordinate_slope(t, axis);
                }
                return acc;
            },
            [t](const WindowRamp& f) {
                const bool inside = t < 1.0 ? (t >= f.x && t < f.y) : (f.y == 1.0);
                return inside ? 1.0 / (f.y - f.x) : 0.0;
            },
            [t](const Table& f) {
                const std::size_t k = table_segment(f.knots, t);
                return (f.values[k + 1] - f.values[k]) / (f.knots[k + 1] - f.knots[k]);
            },
            [](const Constant&) { return 0.0; },
            [t](const Polynomial& f) {
                double acc = 0.0;
                for (std::size_t i = f.coefficients.size(); i-- > 1;) {
                    acc = acc * t + static_cast<double>(i) * f.coefficients[i];
                }
                return acc;
            },
            [t](const Custom& f) { return f.slope(t); },
        },
        data_);
    return scale_ * raw;
}

FeatureFunction make_feature(std::string_view kind, const nlohmann::json& raw_params,
                             std::shared_ptr<const Curve> curve) {
    const nlohmann::json params = raw_params.is_null() ? nlohmann::json::object() : raw_params;
    if (!params.is_object()) {
        throw DomainError("feature params must be an object");
    }
    auto number_list = [&](const char* key) {
        std::vector<double> out;
        if (params.contains(key)) {
            out = params.at(key).get<std::vector<double>>();
        }
        return out;
    };

    FeatureFunction f = [&]() -> FeatureFunction {
        if (kind == "coordinate") {
            int axis = params.contains("index") ? params.at("index").get<int>() : params.value("axis", 0);
            return FeatureFunction::coordinate(std::move(curve), axis);
        }
        if (kind == "identity") {
            return FeatureFunction::identity();
        }
        if (kind == "squared-norm") {
            if (params.contains("center")) {
                auto c = params.at("center").get<std::vector<double>>();
                return FeatureFunction::squared_norm(std::move(curve),
                                                     Eigen::Map<const Point>(c.data(), static_cast<Eigen::Index>(c.size())));
            }
            return FeatureFunction::squared_norm(std::move(curve));
        }
        if (kind == "window-ramp") {
            if (!params.contains("x") || !params.contains("y")) {
                throw DomainError("window-ramp needs x and y");
            }
            return FeatureFunction::window_ramp(params.at("x").get<double>(), params.at("y").get<double>());
        }
        if (kind == "cumulative-measure") {
            return FeatureFunction::cumulative_measure(number_list("masses"), number_list("knots"));
        }
        if (kind == "tabulated") {
            return FeatureFunction::tabulated(number_list("knots"), number_list("values"));
        }
        if (kind == "constant") {
            return FeatureFunction::constant(params.value("value", 0.0));
        }
        if (kind == "polynomial") {
            return FeatureFunction::polynomial(number_list("coefficients"));
        }
        throw DomainError("unknown feature kind '" + std::string(kind) + "'");
    }();

    if (params.contains("scale")) {
        f = f.scaled(params.at("scale").get<double>());
    }
    return f;
}

}  // namespace necksplit
