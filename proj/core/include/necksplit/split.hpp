#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "necksplit/errors.hpp"
#include "necksplit/feature.hpp"
#include "necksplit/partitions.hpp"

namespace necksplit {

inline constexpr double kAnalyticTolerance = 1e-9;
inline constexpr double kTabulatedTolerance = 1e-6;

/// Features to equalize across `parts` groups of intervals.
struct SplitProblem {
    std::vector<FeatureFunction> features;
    int parts = 2;
    std::optional<int> cuts;                // defaults to (parts-1) * features.size()
    std::optional<ColorConstraint> colors;  // over interval indices 0..cuts
    std::optional<double> tolerance;        // defaults by feature kind

    [[nodiscard]] int cut_count() const;
    [[nodiscard]] double effective_tolerance() const;

    /// Throws ContractError / ConstraintError on an ill-formed problem.
    void validate() const;
};

/// Cut points t_1 <= ... <= t_n (t_0 = 0 and t_{n+1} = 1 implicit) and the
/// part owning each of the n+1 intervals. An empty interval keeps whatever
/// label it was given and contributes nothing.
struct SplitConfiguration {
    std::vector<double> cuts;
    Labeling labels;
    int parts = 2;

    /// Interval indices (0-based) of every part, ascending.
    [[nodiscard]] std::vector<std::vector<int>> part_members() const;
};

/// S[j][k] = sum over intervals of part j of the increment of feature k;
/// D = S minus the per-feature mean over parts.
struct ResidualReport {
    Eigen::MatrixXd part_sums;  // parts x features
    Eigen::MatrixXd deviation;  // parts x features
    double max_abs_deviation = 0.0;
};

struct SolverOptions {
    std::uint64_t seed = 0;
    int starts = 32;
    int max_iterations = 10000;  // per start
    unsigned threads = 1;        // 0 picks the hardware concurrency
};

struct SplitResult {
    SplitConfiguration config;
    ResidualReport report;
    /// False when existence is not known to hold for the instance
    /// (a color constraint with non-prime r).
    bool existence_guaranteed = true;
    std::size_t labelings_tried = 0;
};

/// Raised when no labeling reached the tolerance within the iteration budget.
/// This is a numerical failure: a fair configuration always exists.
class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, SplitResult best) : Error(what), best_(std::move(best)) {}
    [[nodiscard]] const SplitResult& best() const noexcept { return best_; }

private:
    SplitResult best_;
};

[[nodiscard]] ResidualReport residual(const SplitProblem& problem, const SplitConfiguration& config);
[[nodiscard]] ResidualReport residual(const std::vector<FeatureFunction>& features, const SplitConfiguration& config);

/// Searches canonical labelings in order; for each, runs projected
/// Levenberg-Marquardt from several starts on the simplex of interval lengths.
/// Returns the first configuration whose max |D| is within tolerance.
[[nodiscard]] SplitResult solve_split(const SplitProblem& problem, const SolverOptions& options = {});

/// solve_split restricted to rainbow labelings. Requires problem.colors.
[[nodiscard]] SplitResult solve_colored(const SplitProblem& problem, const SolverOptions& options = {});

/// Splits into p*q parts by splitting into p, then splitting each part's
/// intervals (glued into one reparametrized interval) into q.
/// The result has exactly (pq-1)m cuts.
[[nodiscard]] SplitResult compose_splittings(const std::vector<FeatureFunction>& features, int p, int q,
                                             double tolerance, const SolverOptions& options = {});

/// Runs the composition over the prime factorization of r.
[[nodiscard]] SplitResult solve_split_factored(const std::vector<FeatureFunction>& features, int r,
                                               double tolerance, const SolverOptions& options = {});

[[nodiscard]] bool is_prime(int r) noexcept;

}  // namespace necksplit
