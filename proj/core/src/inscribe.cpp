#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "necksplit/alternating.hpp"
#include "necksplit/geometry.hpp"

namespace necksplit {

namespace {

double curve_diameter(const Curve& curve) {
    const auto& pts = curve.samples();
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            best = std::max(best, (pts[i] - pts[j]).squaredNorm());
        }
    }
    return std::sqrt(best);
}

Point sample_centroid(const Curve& curve) {
    const auto& pts = curve.samples();
    const std::size_t count = curve.closed() ? pts.size() - 1 : pts.size();
    Point c = Point::Zero(curve.dimension());
    for (std::size_t i = 0; i < count; ++i) c += pts[i];
    return c / static_cast<double>(count);
}

void require_loop(const Curve& curve, const char* what) {
    if (!curve.closed()) {
        throw ContractError(std::string(what) + " needs a closed curve");
    }
}

void require_window(Window w) {
    if (!(w.x >= 0.0 && w.y <= 1.0 && w.x < w.y)) {
        std::ostringstream msg;
        msg << "window needs 0 <= x < y <= 1, got (" << w.x << ", " << w.y << ")";
        throw DomainError(msg.str());
    }
}

// Points within tol of the line through the farthest pair.
bool nearly_collinear(const std::array<Point, 4>& v, double tol) {
    std::size_t a = 0, b = 1;
    double far = -1.0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            const double d = (v[i] - v[j]).squaredNorm();
            if (d > far) {
                far = d;
                a = i;
                b = j;
            }
        }
    }
    if (far <= tol * tol) return true;
    const Point dir = (v[b] - v[a]).normalized();
    for (const auto& p : v) {
        const Point rel = p - v[a];
        if ((rel - rel.dot(dir) * dir).norm() > tol) return false;
    }
    return true;
}

InscribedQuadrilateral finish(const Curve& curve, const AlternatingSplit& split, double tol,
                              std::optional<Window> window, const char* what) {
    InscribedQuadrilateral q = describe_quadrilateral(curve, split.cuts, tol, window);
    if (q.parallelogram_residual > tol) {
        std::ostringstream msg;
        msg << what << ": parallelogram residual " << q.parallelogram_residual << " exceeds " << tol;
        SplitResult best;
        best.config = split.config;
        best.report = split.report;
        throw NonConvergence(msg.str(), std::move(best));
    }
    return q;
}

}  // namespace

bool is_rectangle(const Point& a, const Point& b, const Point& c, const Point& d, double tol) {
    if (a.size() != b.size() || a.size() != c.size() || a.size() != d.size()) {
        throw ContractError("rectangle test needs vertices of equal dimension");
    }
    if ((a + c - b - d).norm() > tol) {
        throw ContractError("rectangle test needs a parallelogram (A + C = B + D)");
    }
    const Point center = (a + b + c + d) / 4.0;
    const std::array<double, 4> norms{(a - center).squaredNorm(), (b - center).squaredNorm(),
                                      (c - center).squaredNorm(), (d - center).squaredNorm()};
    const auto [lo, hi] = std::minmax_element(norms.begin(), norms.end());
    return *hi - *lo <= tol;
}

InscribedQuadrilateral describe_quadrilateral(const Curve& curve, const std::array<double, 4>& t, double tol,
                                              std::optional<Window> window) {
    InscribedQuadrilateral q;
    q.t = t;
    for (std::size_t i = 0; i < 4; ++i) {
        q.vertices[i] = curve.evaluate(t[i]);
    }
    const auto& [a, b, c, d] = q.vertices;
    q.parallelogram_residual = (a + c - b - d).norm();

    const Point center = (a + b + c + d) / 4.0;
    std::array<double, 4> norms{};
    for (std::size_t i = 0; i < 4; ++i) norms[i] = (q.vertices[i] - center).squaredNorm();
    const auto [lo, hi] = std::minmax_element(norms.begin(), norms.end());
    q.rectangle_residual = *hi - *lo;
    q.rectangle = q.parallelogram_residual <= tol && is_rectangle(a, b, c, d, tol);
    q.collinear = nearly_collinear(q.vertices, tol);

    double closest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            closest = std::min(closest, (q.vertices[i] - q.vertices[j]).norm());
        }
    }
    q.degenerate = closest < 1e-6 * curve_diameter(curve);

    if (window) {
        for (int i = 0; i < 4; ++i) {
            if (t[i] > window->x && t[i] < window->y) {
                q.window_hit = i;
                break;
            }
        }
    }
    return q;
}

InscribedQuadrilateral find_parallelogram(std::shared_ptr<const Curve> curve, Window window, double tol,
                                          const SolverOptions& options) {
    require_loop(*curve, "parallelogram search");
    require_window(window);
    const int d = curve->dimension();
    if (d != 2 && d != 3) {
        throw ContractError("parallelogram search needs a curve in 2 or 3 dimensions");
    }
    std::vector<FeatureFunction> features;
    for (int axis = 0; axis < d; ++axis) {
        features.push_back(FeatureFunction::coordinate(curve, axis));
    }
    features.push_back(FeatureFunction::window_ramp(window.x, window.y));
    if (d == 2) {
        features.push_back(FeatureFunction::constant(0.0));
    }
    const AlternatingSplit split = solve_alternating_4(features, tol / 2.0, options);
    return finish(*curve, split, tol, window, "parallelogram search");
}

InscribedQuadrilateral find_rectangle(std::shared_ptr<const Curve> curve, Window window, double tol,
                                      const SolverOptions& options) {
    require_loop(*curve, "rectangle search");
    require_window(window);
    if (curve->dimension() != 2) {
        throw ContractError("rectangle search needs a planar curve");
    }
    // Coordinates weighted by 4(1 + diameter).
    const double weight = 4.0 * (1.0 + curve_diameter(*curve));
    std::vector<FeatureFunction> features{
        FeatureFunction::coordinate(curve, 0).scaled(weight),
        FeatureFunction::coordinate(curve, 1).scaled(weight),
        FeatureFunction::window_ramp(window.x, window.y),
        FeatureFunction::squared_norm(curve, sample_centroid(*curve)),
    };
    const AlternatingSplit split = solve_alternating_4(features, tol / 4.0, options);
    InscribedQuadrilateral q = finish(*curve, split, tol, window, "rectangle search");
    if (!q.rectangle) {
        std::ostringstream msg;
        msg << "rectangle search: centered-norm spread " << q.rectangle_residual << " exceeds " << tol;
        SplitResult best;
        best.config = split.config;
        best.report = split.report;
        throw NonConvergence(msg.str(), std::move(best));
    }
    return q;
}

InscribedQuadrilateral find_balanced_rectangle(std::shared_ptr<const Curve> curve, double tol,
                                               const SolverOptions& options) {
    require_loop(*curve, "balanced rectangle search");
    if (curve->dimension() != 2) {
        throw ContractError("balanced rectangle search needs a planar curve");
    }
    const double weight = 4.0 * (1.0 + curve_diameter(*curve));
    std::vector<FeatureFunction> features{
        FeatureFunction::coordinate(curve, 0).scaled(weight),
        FeatureFunction::coordinate(curve, 1).scaled(weight),
        FeatureFunction::squared_norm(curve, sample_centroid(*curve)),
        FeatureFunction::identity(),
    };
    const AlternatingSplit split = solve_alternating_4(features, tol / 4.0, options);
    InscribedQuadrilateral q = finish(*curve, split, tol, std::nullopt, "balanced rectangle search");
    if (!q.rectangle) {
        std::ostringstream msg;
        msg << "balanced rectangle search: centered-norm spread " << q.rectangle_residual << " exceeds " << tol;
        SplitResult best;
        best.config = split.config;
        best.report = split.report;
        throw NonConvergence(msg.str(), std::move(best));
    }
    const double L = curve->length();
    const auto& t = q.t;
    q.arcs = std::array<double, 4>{(t[1] - t[0]) * L, (t[2] - t[1]) * L, (t[3] - t[2]) * L,
                                   (1.0 - t[3] + t[0]) * L};
    return q;
}

}  // namespace necksplit
