#include "necksplit/split.hpp"

#include <cmath>
#include <string>

namespace necksplit {

int SplitProblem::cut_count() const {
    return cuts.value_or((parts - 1) * static_cast<int>(features.size()));
}

double SplitProblem::effective_tolerance() const {
    if (tolerance) {
        return *tolerance;
    }
    for (const auto& f : features) {
        if (f.is_tabulated()) {
            return kTabulatedTolerance;
        }
    }
    return kAnalyticTolerance;
}

void SplitProblem::validate() const {
    if (parts < 2) {
        throw ContractError("a split needs at least 2 parts, got " + std::to_string(parts));
    }
    if (features.empty()) {
        throw ContractError("a split needs at least one feature");
    }
    const int minimum = (parts - 1) * static_cast<int>(features.size());
    if (cut_count() < minimum) {
        throw ContractError("cut count " + std::to_string(cut_count()) + " is below (r-1)m = " +
                            std::to_string(minimum));
    }
    if (!(effective_tolerance() > 0.0)) {
        throw ContractError("tolerance must be positive");
    }
    if (colors) {
        colors->validate(static_cast<std::size_t>(cut_count()) + 1, parts);
    }
}

std::vector<std::vector<int>> SplitConfiguration::part_members() const {
    std::vector<std::vector<int>> members(static_cast<std::size_t>(parts));
    for (std::size_t j = 0; j < labels.size(); ++j) {
        members.at(static_cast<std::size_t>(labels[j])).push_back(static_cast<int>(j));
    }
    return members;
}

ResidualReport residual(const std::vector<FeatureFunction>& features, const SplitConfiguration& config) {
    const std::size_t n = config.cuts.size();
    if (config.labels.size() != n + 1) {
        throw ContractError("configuration has " + std::to_string(n) + " cuts but " +
                            std::to_string(config.labels.size()) + " labels");
    }
    if (config.parts < 2) {
        throw ContractError("configuration needs at least 2 parts");
    }
    for (int label : config.labels) {
        if (label < 0 || label >= config.parts) {
            throw ContractError("label " + std::to_string(label) + " outside [0, r)");
        }
    }

    const auto m = static_cast<Eigen::Index>(features.size());
    ResidualReport report;
    report.part_sums = Eigen::MatrixXd::Zero(config.parts, m);
    // Totals accumulate in interval order.
    Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(m);
    for (Eigen::Index k = 0; k < m; ++k) {
        const auto& f = features[static_cast<std::size_t>(k)];
        double previous = f.value(0.0);
        for (std::size_t j = 0; j <= n; ++j) {
            const double current = f.value(j < n ? config.cuts[j] : 1.0);
            report.part_sums(config.labels[j], k) += current - previous;
            mean(k) += current - previous;
            previous = current;
        }
    }
    mean /= static_cast<double>(config.parts);
    report.deviation = report.part_sums.rowwise() - mean;
    report.max_abs_deviation = m == 0 ? 0.0 : report.deviation.cwiseAbs().maxCoeff();
    return report;
}

ResidualReport residual(const SplitProblem& problem, const SplitConfiguration& config) {
    if (static_cast<int>(config.cuts.size()) != problem.cut_count()) {
        throw ContractError("configuration has " + std::to_string(config.cuts.size()) + " cuts, problem expects " +
                            std::to_string(problem.cut_count()));
    }
    if (config.parts != problem.parts) {
        throw ContractError("configuration has " + std::to_string(config.parts) + " parts, problem expects " +
                            std::to_string(problem.parts));
    }
    return residual(problem.features, config);
}

bool is_prime(int r) noexcept {
    if (r < 2) return false;
    for (int d = 2; d * d <= r; ++d) {
        if (r % d == 0) return false;
    }
    return true;
}

}  // namespace necksplit
