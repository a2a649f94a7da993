#pragma once

#include <array>
#include <vector>

#include "necksplit/split.hpp"

namespace necksplit {

/// Four cuts with the alternating labeling {1,3,5}/{2,4} (0-based {0,2,4}/{1,3}).
struct AlternatingSplit {
    std::array<double, 4> cuts{};
    SplitConfiguration config;
    ResidualReport report;
};

/// Per feature: 2f(t1) + 2f(t3) + f(1) - 2f(t2) - 2f(t4) - f(0).
[[nodiscard]] std::vector<double> alternating_balance(const std::vector<FeatureFunction>& features,
                                                      const std::array<double, 4>& cuts);

/// Rewrites an r = 2, n = 4 configuration into the alternating one.
///
/// While some part holds two consecutive intervals j, j+1 (take the largest
/// such j), every interval after j switches part, cut j is dropped, and 1 is
/// appended as the last cut. The balance of every feature is unchanged.
[[nodiscard]] SplitConfiguration canonicalize_alternating(const SplitConfiguration& config);

/// Solves the four-feature alternating balance.
[[nodiscard]] AlternatingSplit solve_alternating_4(const std::vector<FeatureFunction>& features, double tolerance,
                                                   const SolverOptions& options = {});

}  // namespace necksplit
