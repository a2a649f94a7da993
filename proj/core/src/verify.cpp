#include "necksplit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace necksplit {

namespace {

double interval_start(const std::vector<double>& cuts, std::size_t j) { return j == 0 ? 0.0 : cuts[j - 1]; }
double interval_end(const std::vector<double>& cuts, std::size_t j) { return j < cuts.size() ? cuts[j] : 1.0; }

double monotonicity_violation(const std::vector<double>& cuts) {
    double worst = 0.0;
    double previous = 0.0;
    for (double t : cuts) {
        if (!std::isfinite(t)) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, previous - t);
        previous = t;
    }
    return std::max(worst, previous - 1.0);
}

// Arc length of the sub-polyline between parameters a <= b, walking the samples.
double polyline_length(const Curve& curve, double a, double b) {
    const double L = curve.length();
    const auto& cumulative = curve.cumulative();
    const auto& samples = curve.samples();
    Point previous = curve.evaluate(a);
    double total = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (cumulative[i] > a * L && cumulative[i] < b * L) {
            total += (samples[i] - previous).norm();
            previous = samples[i];
        }
    }
    total += (curve.evaluate(b) - previous).norm();
    return total;
}

// Net vector of the sub-polyline, summed segment by segment.
Point polyline_chord(const Curve& curve, double a, double b) {
    const double L = curve.length();
    const auto& cumulative = curve.cumulative();
    const auto& samples = curve.samples();
    Point previous = curve.evaluate(a);
    Point net = Point::Zero(curve.dimension());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (cumulative[i] > a * L && cumulative[i] < b * L) {
            net += samples[i] - previous;
            previous = samples[i];
        }
    }
    net += curve.evaluate(b) - previous;
    return net;
}

}  // namespace

VerificationReport check_split(const std::vector<FeatureFunction>& features, const SplitConfiguration& config,
                               double tol) {
    VerificationReport report;
    const std::size_t n = config.cuts.size();
    bool shape_ok = config.parts >= 2 && config.labels.size() == n + 1;
    for (int label : config.labels) {
        shape_ok = shape_ok && label >= 0 && label < config.parts;
    }
    report.add_flag("shape", shape_ok);
    if (!shape_ok) return report;

    report.add("cuts-monotone", monotonicity_violation(config.cuts), 0.0);
    if (!report.checks.back().pass) return report;

    for (std::size_t k = 0; k < features.size(); ++k) {
        const auto& f = features[k];
        std::vector<double> sums(static_cast<std::size_t>(config.parts), 0.0);
        double absolute = 0.0;
        for (std::size_t j = 0; j <= n; ++j) {
            const double inc = f(interval_end(config.cuts, j)) - f(interval_start(config.cuts, j));
            sums[static_cast<std::size_t>(config.labels[j])] += inc;
            absolute += std::abs(inc);
        }
        double total = 0.0;
        for (double s : sums) total += s;
        const double mean = total / config.parts;
        double worst = 0.0;
        for (double s : sums) worst = std::max(worst, std::abs(s - mean));
        report.add("balance[" + std::to_string(k) + "]", worst, tol);

        const double expected = f(1.0) - f(0.0);
        report.add("telescoping[" + std::to_string(k) + "]", std::abs(total - expected), 1e-10 * (1.0 + absolute));
    }
    return report;
}

VerificationReport check_loop_split(const Curve& curve, const LoopSplit& split, double tol) {
    VerificationReport report;
    const double L = curve.length();
    const std::size_t n = split.cuts.size();
    const auto r = static_cast<double>(split.groups.size());

    report.add_flag("closed-curve", curve.closed());
    report.add("cuts-monotone", monotonicity_violation(split.cuts), 0.0);

    std::vector<int> seen(n + 1, 0);
    bool partition_ok = split.groups.size() >= 2;
    for (const auto& group : split.groups) {
        for (int j : group) {
            if (j < 0 || static_cast<std::size_t>(j) > n) {
                partition_ok = false;
            } else {
                ++seen[static_cast<std::size_t>(j)];
            }
        }
    }
    partition_ok = partition_ok && std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
    report.add_flag("groups-partition", partition_ok);
    if (!partition_ok || !report.checks[1].pass) return report;

    double total_length = 0.0;
    for (std::size_t g = 0; g < split.groups.size(); ++g) {
        const std::string tag = "[" + std::to_string(g) + "]";
        Point displacement = Point::Zero(curve.dimension());
        Point chained = Point::Zero(curve.dimension());
        double length = 0.0;
        for (int j : split.groups[g]) {
            const double a = interval_start(split.cuts, static_cast<std::size_t>(j));
            const double b = interval_end(split.cuts, static_cast<std::size_t>(j));
            if (!(b > a)) continue;
            displacement += curve.evaluate(b) - curve.evaluate(a);
            chained += polyline_chord(curve, a, b);
            length += polyline_length(curve, a, b);
        }
        total_length += length;
        report.add("displacement" + tag, displacement.norm(), tol * L);
        report.add("length" + tag, std::abs(length - L / r), tol * L);
        report.add("closure" + tag, chained.norm(), tol * L);
    }
    report.add("total-length", std::abs(total_length - L), 1e-9 * L);

    if (split.colors) {
        Labeling labels(n + 1, -1);
        for (std::size_t g = 0; g < split.groups.size(); ++g) {
            for (int j : split.groups[g]) labels[static_cast<std::size_t>(j)] = static_cast<int>(g);
        }
        int worst = 0;
        for (const auto& block : split.colors->blocks()) {
            std::vector<int> hits(split.groups.size(), 0);
            for (int j : block) {
                if (j >= 0 && static_cast<std::size_t>(j) <= n) {
                    worst = std::max(worst, ++hits[static_cast<std::size_t>(labels[static_cast<std::size_t>(j)])]);
                }
            }
        }
        report.add("rainbow", static_cast<double>(std::max(0, worst - 1)), 0.0);
    }
    return report;
}

VerificationReport check_quadrilateral(const Curve& curve, const InscribedQuadrilateral& quad, double tol,
                                       bool require_rectangle, std::optional<Window> window) {
    VerificationReport report;
    double order = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!(quad.t[i] >= 0.0 && quad.t[i] <= 1.0)) {
            report.add_flag("parameters-in-range", false);
            return report;
        }
        if (i > 0) order = std::max(order, quad.t[i - 1] - quad.t[i]);
    }
    report.add("parameters-ordered", order, 0.0);

    std::array<Point, 4> v;
    double off_curve = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        v[i] = curve.evaluate(quad.t[i]);
        if (quad.vertices[i].size() == v[i].size()) {
            off_curve = std::max(off_curve, (quad.vertices[i] - v[i]).norm());
        } else {
            off_curve = std::numeric_limits<double>::infinity();
        }
    }
    report.add("vertices-on-curve", off_curve, 1e-9 * (1.0 + curve.length()));
    report.add("parallelogram", (v[0] + v[2] - v[1] - v[3]).norm(), tol);

    if (require_rectangle) {
        // Squared distances to the diagonal midpoint must agree.
        const Point center = (v[0] + v[1] + v[2] + v[3]) / 4.0;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (const auto& p : v) {
            const double s = (p - center).squaredNorm();
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        report.add("rectangle", hi - lo, tol);
    }
    if (window) {
        bool hit = false;
        for (double t : quad.t) hit = hit || (t > window->x && t < window->y);
        report.add_flag("window-hit", hit);
    }
    return report;
}

VerificationReport density_probe(std::shared_ptr<const Curve> curve, const std::vector<Window>& windows,
                                 Finder finder, double tol, const SolverOptions& options) {
    std::vector<Window> sorted = windows;
    std::sort(sorted.begin(), sorted.end(), [](Window a, Window b) { return a.x < b.x; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].x < sorted[i - 1].y) {
            throw ContractError("density probe windows must be disjoint");
        }
    }

    VerificationReport report;
    for (std::size_t i = 0; i < windows.size(); ++i) {
        const std::string name = "window[" + std::to_string(i) + "]";
        try {
            const InscribedQuadrilateral q = finder == Finder::parallelogram
                                                 ? find_parallelogram(curve, windows[i], tol, options)
                                                 : find_rectangle(curve, windows[i], tol, options);
            const VerificationReport sub =
                check_quadrilateral(*curve, q, tol, finder == Finder::rectangle, windows[i]);
            const double residual =
                finder == Finder::rectangle ? std::max(q.parallelogram_residual, q.rectangle_residual)
                                            : q.parallelogram_residual;
            report.checks.push_back({name, sub.passed(), residual, tol});
        } catch (const NonConvergence& e) {
            report.checks.push_back({name, false, e.best().report.max_abs_deviation, tol});
        }
    }
    return report;
}

}  // namespace necksplit
