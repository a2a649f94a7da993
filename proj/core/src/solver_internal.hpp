#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "necksplit/split.hpp"

namespace necksplit::detail {

/// Euclidean projection onto {0 <= t_1 <= ... <= t_n <= 1}.
void project_ordered(std::vector<double>& t);

/// Deviation vector D (parts*m, part-major) for a fixed labeling and its Jacobian in the cuts.
class LabelingObjective {
public:
    LabelingObjective(const std::vector<FeatureFunction>& features, const Labeling& labels, int parts);

    /// Fills `out` with D and returns max |D|.
    double evaluate(const std::vector<double>& cuts, Eigen::VectorXd& out) const;
    void jacobian(const std::vector<double>& cuts, Eigen::MatrixXd& out) const;

private:
    const std::vector<FeatureFunction>& features_;
    const Labeling& labels_;
    int parts_;
    std::vector<double> start_values_;
    std::vector<double> end_values_;
};

struct StartOutcome {
    std::vector<double> cuts;
    double max_dev;
    bool converged;
};

using LabelingOutcome = StartOutcome;

StartOutcome run_start(const LabelingObjective& objective, std::vector<double> cuts, double tolerance,
                       int max_iterations);

std::vector<double> random_simplex_cuts(std::mt19937_64& rng, std::size_t n);

LabelingOutcome solve_labeling(const std::vector<FeatureFunction>& features, const Labeling& labels, int parts,
                               std::size_t n, double tolerance, const SolverOptions& options,
                               std::size_t labeling_index);

/// Ordered search over canonical labelings; throws NonConvergence with the best candidate.
SplitResult search(const std::vector<FeatureFunction>& features, int parts, int n,
                   const std::optional<ColorConstraint>& colors, double tolerance, const SolverOptions& options);

}  // namespace necksplit::detail
