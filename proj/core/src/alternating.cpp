#include "necksplit/alternating.hpp"

#include <algorithm>
#include <string>

namespace necksplit {

std::vector<double> alternating_balance(const std::vector<FeatureFunction>& features,
                                        const std::array<double, 4>& t) {
    std::vector<double> out;
    out.reserve(features.size());
    for (const auto& f : features) {
        out.push_back(2.0 * f.value(t[0]) + 2.0 * f.value(t[2]) + f.value(1.0) - 2.0 * f.value(t[1]) -
                      2.0 * f.value(t[3]) - f.value(0.0));
    }
    return out;
}

SplitConfiguration canonicalize_alternating(const SplitConfiguration& config) {
    if (config.parts != 2 || config.cuts.size() != 4 || config.labels.size() != 5) {
        throw ContractError("alternating canonicalization needs an r = 2, n = 4 configuration");
    }
    SplitConfiguration out = config;
    for (int label : out.labels) {
        if (label != 0 && label != 1) {
            throw ContractError("labels must be 0 or 1");
        }
    }
    // Each pass removes the largest pair of consecutive intervals in one part.
    for (;;) {
        int j = -1;
        for (int i = 3; i >= 0; --i) {
            if (out.labels[i] == out.labels[i + 1]) {
                j = i;
                break;
            }
        }
        if (j < 0) break;
        // Drop the cut between j and j+1. Later intervals shift down one slot
        // and flip parts; the new last interval [1,1] is empty.
        for (int i = j + 1; i < 5; ++i) {
            out.labels[i] = 1 - out.labels[i];
        }
        out.cuts.erase(out.cuts.begin() + j);
        out.cuts.push_back(1.0);
    }
    if (out.labels[0] != 0) {
        for (auto& label : out.labels) label = 1 - label;
    }
    return out;
}

AlternatingSplit solve_alternating_4(const std::vector<FeatureFunction>& features, double tolerance,
                                     const SolverOptions& options) {
    if (features.size() != 4) {
        throw ContractError("the alternating solver takes exactly 4 features, got " +
                            std::to_string(features.size()));
    }
    SplitProblem problem;
    problem.features = features;
    problem.parts = 2;
    problem.tolerance = tolerance;
    const SplitResult raw = solve_split(problem, options);

    AlternatingSplit out;
    out.config = canonicalize_alternating(raw.config);
    std::copy(out.config.cuts.begin(), out.config.cuts.end(), out.cuts.begin());
    out.report = residual(features, out.config);
    return out;
}

}  // namespace necksplit
