#include <algorithm>
#include <functional>
#include <sstream>

#include "necksplit/split.hpp"

namespace necksplit {

namespace {

using StageSolver = std::function<SplitResult(const std::vector<FeatureFunction>&, double)>;

// Positive-length intervals of one part, glued into a single parameter range [0,1].
struct GluedPart {
    std::vector<int> intervals;  // stage-1 interval indices
    std::vector<double> left;    // interval start in [0,1]
    std::vector<double> right;
    std::vector<double> u_end;   // glued coordinate where each interval ends
    double total = 0.0;

    int piece_of(double u) const {
        for (std::size_t s = 0; s < u_end.size(); ++s) {
            if (u <= u_end[s]) return static_cast<int>(s);
        }
        return static_cast<int>(u_end.size()) - 1;
    }
    double position(int s, double u) const {
        const double u_start = s == 0 ? 0.0 : u_end[static_cast<std::size_t>(s) - 1];
        return std::clamp(left[s] + (u - u_start) * total, left[s], right[s]);
    }
};

// h_k on the glued range: f_k inside each piece, shifted so that the value at
// the end of a piece matches the value at the start of the next one.
FeatureFunction glued_feature(const FeatureFunction& f, std::shared_ptr<const GluedPart> part) {
    std::vector<double> offset(part->intervals.size());
    double acc = 0.0;
    for (std::size_t s = 0; s < offset.size(); ++s) {
        offset[s] = acc - f.value(part->left[s]);
        acc += f.value(part->right[s]) - f.value(part->left[s]);
    }
    auto value = [f, part, offset](double u) {
        const int s = part->piece_of(u);
        return f.value(part->position(s, u)) + offset[static_cast<std::size_t>(s)];
    };
    auto slope = [f, part](double u) {
        const int s = part->piece_of(u);
        const double x = part->position(s, u);
        return f.slope(x) * part->total;
    };
    return FeatureFunction::custom("glued", std::move(value), std::move(slope));
}

SplitResult compose_impl(const std::vector<FeatureFunction>& features, int p, double tolerance,
                         const SolverOptions& options, const StageSolver& solve_inner, int q) {
    SplitProblem outer_problem;
    outer_problem.features = features;
    outer_problem.parts = p;
    outer_problem.tolerance = tolerance / 2.0;
    const SplitResult outer = solve_split(outer_problem, options);

    const auto& cuts = outer.config.cuts;
    const std::size_t n = cuts.size();
    auto bound = [&](std::size_t j) { return j == 0 ? 0.0 : cuts[j - 1]; };  // start of interval j
    auto upper = [&](std::size_t j) { return j < n ? cuts[j] : 1.0; };

    // inner_cuts[j] = stage-2 cut positions falling in stage-1 interval j, ascending.
    std::vector<std::vector<double>> inner_cuts(n + 1);
    std::vector<Labeling> inner_labels(static_cast<std::size_t>(p));

    for (int part = 0; part < p; ++part) {
        auto glued = std::make_shared<GluedPart>();
        int first_interval = -1;
        for (std::size_t j = 0; j <= n; ++j) {
            if (outer.config.labels[j] != part) continue;
            if (first_interval < 0) first_interval = static_cast<int>(j);
            const double len = upper(j) - bound(j);
            if (len > 0.0) {
                glued->intervals.push_back(static_cast<int>(j));
                glued->left.push_back(bound(j));
                glued->right.push_back(upper(j));
                glued->total += len;
                glued->u_end.push_back(glued->total);
            }
        }
        const int inner_cut_count = (q - 1) * static_cast<int>(features.size());

        if (glued->intervals.empty()) {
            // Empty part: park the cuts at its first interval.
            const std::size_t at = static_cast<std::size_t>(std::max(first_interval, 0));
            inner_cuts[at].assign(static_cast<std::size_t>(inner_cut_count), bound(at));
            Labeling labels(static_cast<std::size_t>(inner_cut_count) + 1);
            for (std::size_t j = 0; j < labels.size(); ++j) labels[j] = static_cast<int>(j % static_cast<std::size_t>(q));
            inner_labels[static_cast<std::size_t>(part)] = std::move(labels);
            continue;
        }
        for (auto& u : glued->u_end) u /= glued->total;
        glued->u_end.back() = 1.0;

        std::vector<FeatureFunction> glued_features;
        glued_features.reserve(features.size());
        for (const auto& f : features) {
            glued_features.push_back(glued_feature(f, glued));
        }
        const SplitResult inner = solve_inner(glued_features, tolerance / 2.0);
        for (double u : inner.config.cuts) {
            const int s = glued->piece_of(u);
            inner_cuts[static_cast<std::size_t>(glued->intervals[s])].push_back(glued->position(s, u));
        }
        inner_labels[static_cast<std::size_t>(part)] = inner.config.labels;
    }

    // Merge: stage-1 cuts interleaved with the stage-2 cuts of each interval.
    SplitConfiguration merged;
    merged.parts = p * q;
    std::vector<std::size_t> emitted(static_cast<std::size_t>(p), 0);
    for (std::size_t j = 0; j <= n; ++j) {
        const int part = outer.config.labels[j];
        auto& count = emitted[static_cast<std::size_t>(part)];
        const auto& inner = inner_labels[static_cast<std::size_t>(part)];
        merged.labels.push_back(part * q + inner[count]);
        for (double x : inner_cuts[j]) {
            merged.cuts.push_back(x);
            ++count;
            merged.labels.push_back(part * q + inner[count]);
        }
        if (j < n) {
            merged.cuts.push_back(cuts[j]);
        }
    }
    std::sort(merged.cuts.begin(), merged.cuts.end());

    SplitResult result;
    result.config = std::move(merged);
    result.report = residual(features, result.config);
    result.labelings_tried = outer.labelings_tried;
    if (result.report.max_abs_deviation > tolerance) {
        std::ostringstream msg;
        msg << "composed split exceeds tolerance: " << result.report.max_abs_deviation;
        throw NonConvergence(msg.str(), std::move(result));
    }
    return result;
}

}  // namespace

SplitResult compose_splittings(const std::vector<FeatureFunction>& features, int p, int q, double tolerance,
                               const SolverOptions& options) {
    if (p < 2 || q < 2) {
        throw ContractError("composition needs p, q >= 2");
    }
    if (features.empty()) {
        throw ContractError("composition needs at least one feature");
    }
    StageSolver inner = [&](const std::vector<FeatureFunction>& glued, double tol) {
        SplitProblem problem;
        problem.features = glued;
        problem.parts = q;
        problem.tolerance = tol;
        return solve_split(problem, options);
    };
    return compose_impl(features, p, tolerance, options, inner, q);
}

SplitResult solve_split_factored(const std::vector<FeatureFunction>& features, int r, double tolerance,
                                 const SolverOptions& options) {
    if (r < 2) {
        throw ContractError("a split needs at least 2 parts");
    }
    if (is_prime(r)) {
        SplitProblem problem;
        problem.features = features;
        problem.parts = r;
        problem.tolerance = tolerance;
        return solve_split(problem, options);
    }
    int p = 2;
    while (r % p != 0) ++p;
    const int q = r / p;
    StageSolver inner = [&](const std::vector<FeatureFunction>& glued, double tol) {
        return solve_split_factored(glued, q, tol, options);
    };
    return compose_impl(features, p, tolerance, options, inner, q);
}

}  // namespace necksplit
