#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include <Eigen/Cholesky>

#include "necksplit/split.hpp"
#include "solver_internal.hpp"

namespace necksplit {

namespace detail {

void project_ordered(std::vector<double>& t) {
    // Pool adjacent violators for the isotonic fit, then clamp to [0,1].
    const std::size_t n = t.size();
    std::vector<double> level;
    std::vector<std::size_t> width;
    level.reserve(n);
    width.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double v = t[i];
        std::size_t w = 1;
        while (!level.empty() && level.back() > v) {
            v = (level.back() * static_cast<double>(width.back()) + v * static_cast<double>(w)) /
                static_cast<double>(width.back() + w);
            w += width.back();
            level.pop_back();
            width.pop_back();
        }
        level.push_back(v);
        width.push_back(w);
    }
    std::size_t pos = 0;
    for (std::size_t b = 0; b < level.size(); ++b) {
        const double v = std::clamp(level[b], 0.0, 1.0);
        for (std::size_t k = 0; k < width[b]; ++k) {
            t[pos++] = v;
        }
    }
}

LabelingObjective::LabelingObjective(const std::vector<FeatureFunction>& features, const Labeling& labels, int parts)
    : features_(features), labels_(labels), parts_(parts) {
    start_values_.reserve(features.size());
    end_values_.reserve(features.size());
    for (const auto& f : features) {
        start_values_.push_back(f.value(0.0));
        end_values_.push_back(f.value(1.0));
    }
}

double LabelingObjective::evaluate(const std::vector<double>& cuts, Eigen::VectorXd& out) const {
    const std::size_t m = features_.size();
    const std::size_t n = cuts.size();
    out.setZero(static_cast<Eigen::Index>(parts_ * m));
    for (std::size_t k = 0; k < m; ++k) {
        double previous = start_values_[k];
        for (std::size_t j = 0; j <= n; ++j) {
            const double current = j < n ? features_[k].value(cuts[j]) : end_values_[k];
            out[static_cast<Eigen::Index>(labels_[j] * m + k)] += current - previous;
            previous = current;
        }
        double mean = 0.0;
        for (int p = 0; p < parts_; ++p) {
            mean += out[static_cast<Eigen::Index>(p * m + k)];
        }
        mean /= parts_;
        for (int p = 0; p < parts_; ++p) {
            out[static_cast<Eigen::Index>(p * m + k)] -= mean;
        }
    }
    return out.size() == 0 ? 0.0 : out.cwiseAbs().maxCoeff();
}

void LabelingObjective::jacobian(const std::vector<double>& cuts, Eigen::MatrixXd& out) const {
    const std::size_t m = features_.size();
    const std::size_t n = cuts.size();
    out.setZero(static_cast<Eigen::Index>(parts_ * m), static_cast<Eigen::Index>(n));
    for (std::size_t c = 0; c < n; ++c) {
        const int left = labels_[c];
        const int right = labels_[c + 1];
        if (left == right) {
            continue;
        }
        for (std::size_t k = 0; k < m; ++k) {
            const double s = features_[k].slope(cuts[c]);
            out(static_cast<Eigen::Index>(left * m + k), static_cast<Eigen::Index>(c)) += s;
            out(static_cast<Eigen::Index>(right * m + k), static_cast<Eigen::Index>(c)) -= s;
        }
    }
}

StartOutcome run_start(const LabelingObjective& objective, std::vector<double> cuts, double tolerance,
                       int max_iterations) {
    constexpr int kPolishSteps = 6;
    constexpr int kStallWindow = 60;

    project_ordered(cuts);
    Eigen::VectorXd res;
    Eigen::VectorXd trial_res;
    Eigen::MatrixXd jac;
    double max_dev = objective.evaluate(cuts, res);
    double phi = res.squaredNorm();
    double mu = 1e-3;
    double checkpoint = phi;
    int since_checkpoint = 0;
    int polish = -1;
    const auto n = static_cast<Eigen::Index>(cuts.size());

    for (int it = 0; it < max_iterations; ++it) {
        if (max_dev <= tolerance) {
            if (polish < 0) polish = 0;
            if (polish >= kPolishSteps || max_dev == 0.0) break;
            ++polish;
        }
        if (n == 0) break;

        objective.jacobian(cuts, jac);
        const Eigen::MatrixXd normal = jac.transpose() * jac;
        const Eigen::VectorXd gradient = jac.transpose() * res;
        const Eigen::VectorXd diag =
            normal.diagonal().array() + 1e-12 * (1.0 + normal.diagonal().maxCoeff());
        Eigen::MatrixXd damped = normal;
        damped.diagonal() += mu * diag;
        const Eigen::VectorXd step = damped.ldlt().solve(-gradient);

        std::vector<double> trial(cuts.size());
        for (std::size_t i = 0; i < cuts.size(); ++i) {
            trial[i] = cuts[i] + step[static_cast<Eigen::Index>(i)];
        }
        project_ordered(trial);
        const double trial_dev = objective.evaluate(trial, trial_res);
        const double trial_phi = trial_res.squaredNorm();

        if (trial_phi < phi) {
            cuts = std::move(trial);
            res.swap(trial_res);
            phi = trial_phi;
            max_dev = trial_dev;
            mu = std::max(mu * 0.3, 1e-12);
        } else {
            if (polish >= 0) break;  // already within tolerance and no further gain
            mu *= 5.0;
            if (mu > 1e12) break;
        }

        if (phi < 0.25 * checkpoint) {
            checkpoint = phi;
            since_checkpoint = 0;
        } else if (++since_checkpoint > kStallWindow && polish < 0) {
            break;
        }
    }
    return {std::move(cuts), max_dev, max_dev <= tolerance};
}

std::vector<double> random_simplex_cuts(std::mt19937_64& rng, std::size_t n) {
    // Interval lengths uniform on the n-simplex via normalized exponential spacings.
    std::vector<double> lengths(n + 1);
    double total = 0.0;
    for (auto& x : lengths) {
        const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
        x = -std::log(u);
        total += x;
    }
    std::vector<double> cuts(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += lengths[i] / total;
        cuts[i] = std::min(acc, 1.0);
    }
    return cuts;
}

LabelingOutcome solve_labeling(const std::vector<FeatureFunction>& features, const Labeling& labels, int parts,
                               std::size_t n, double tolerance, const SolverOptions& options,
                               std::size_t labeling_index) {
    LabelingObjective objective(features, labels, parts);
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(labeling_index)};
    std::mt19937_64 rng(seq);

    LabelingOutcome best{{}, std::numeric_limits<double>::infinity(), false};
    const int starts = std::max(1, options.starts);
    for (int s = 0; s < starts; ++s) {
        std::vector<double> start;
        if (s == 0) {
            start.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                start[i] = static_cast<double>(i + 1) / static_cast<double>(n + 1);
            }
        } else {
            start = random_simplex_cuts(rng, n);
        }
        StartOutcome out = run_start(objective, std::move(start), tolerance, options.max_iterations);
        if (out.max_dev < best.max_dev) {
            best = {std::move(out.cuts), out.max_dev, out.converged};
        }
        if (best.converged) break;
    }
    return best;
}

SplitResult search(const std::vector<FeatureFunction>& features, int parts, int n,
                   const std::optional<ColorConstraint>& colors, double tolerance, const SolverOptions& options) {
    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    const std::size_t batch_size = threads > 1 ? threads * 4 : 1;

    std::vector<Labeling> batch;
    std::size_t processed = 0;
    std::optional<std::pair<std::size_t, LabelingOutcome>> winner;
    std::optional<std::pair<Labeling, LabelingOutcome>> best;

    auto process = [&]() {
        std::vector<LabelingOutcome> outcomes(batch.size());
        auto work = [&](std::size_t first, std::size_t stride) {
            for (std::size_t i = first; i < batch.size(); i += stride) {
                outcomes[i] = solve_labeling(features, batch[i], parts, static_cast<std::size_t>(n), tolerance,
                                             options, processed + i);
            }
        };
        if (threads > 1 && batch.size() > 1) {
            std::vector<std::future<void>> tasks;
            const std::size_t workers = std::min<std::size_t>(threads, batch.size());
            for (std::size_t w = 0; w < workers; ++w) {
                tasks.push_back(std::async(std::launch::async, work, w, workers));
            }
            for (auto& t : tasks) t.get();
        } else {
            work(0, 1);
        }
        // Reduce in serial order.
        for (std::size_t i = 0; i < batch.size(); ++i) {
            if (!best || outcomes[i].max_dev < best->second.max_dev) {
                best.emplace(batch[i], outcomes[i]);
            }
            if (outcomes[i].converged) {
                winner.emplace(processed + i, outcomes[i]);
                best.emplace(batch[i], outcomes[i]);
                processed += i + 1;
                batch.clear();
                return;
            }
        }
        processed += batch.size();
        batch.clear();
    };

    for_each_partition(n, parts, colors, [&](const Labeling& labels) {
        batch.push_back(labels);
        if (batch.size() >= batch_size) {
            process();
        }
        return !winner.has_value();
    });
    if (!winner && !batch.empty()) {
        process();
    }

    SplitResult result;
    result.labelings_tried = processed;
    if (!best) {
        throw ConstraintError("no labeling satisfies the color constraint");
    }
    result.config.cuts = best->second.cuts;
    result.config.labels = best->first;
    result.config.parts = parts;
    result.report = residual(features, result.config);
    if (!winner) {
        std::ostringstream msg;
        msg.precision(3);
        msg << "split did not converge: best max deviation " << result.report.max_abs_deviation << " > tolerance "
            << tolerance << " after " << processed << " labelings";
        throw NonConvergence(msg.str(), std::move(result));
    }
    return result;
}

}  // namespace detail

SplitResult solve_split(const SplitProblem& problem, const SolverOptions& options) {
    problem.validate();
    SplitResult result = [&] {
        try {
            return detail::search(problem.features, problem.parts, problem.cut_count(), problem.colors,
                                  problem.effective_tolerance(), options);
        } catch (NonConvergence& e) {
            SplitResult best = e.best();
            best.existence_guaranteed = !problem.colors || is_prime(problem.parts);
            throw NonConvergence(e.what(), std::move(best));
        }
    }();
    result.existence_guaranteed = !problem.colors || is_prime(problem.parts);
    return result;
}

SplitResult solve_colored(const SplitProblem& problem, const SolverOptions& options) {
    if (!problem.colors) {
        throw ContractError("solve_colored needs a color constraint");
    }
    return solve_split(problem, options);
}

}  // namespace necksplit
