#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "necksplit/curve.hpp"
#include "necksplit/feature.hpp"
#include "necksplit/geometry.hpp"
#include "necksplit/split.hpp"

namespace necksplit {

struct VerificationReport {
    struct Check {
        std::string name;
        bool pass = false;
        double residual = 0.0;
        double tol = 0.0;
    };
    std::vector<Check> checks;

    void add(std::string name, double residual, double tol) {
        checks.push_back({std::move(name), residual <= tol, residual, tol});
    }
    void add_flag(std::string name, bool pass) { checks.push_back({std::move(name), pass, pass ? 0.0 : 1.0, 0.0}); }

    /// Conjunction of every check; vacuously true when empty.
    [[nodiscard]] bool passed() const noexcept {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
    [[nodiscard]] const Check* find(const std::string& name) const {
        for (const auto& c : checks) {
            if (c.name == name) return &c;
        }
        return nullptr;
    }
};

// The checks below recompute everything from curve and feature evaluation
// alone. They never call into the solver.

/// Per-feature balance (max |S_j - mean|), cut monotonicity, telescoping.
[[nodiscard]] VerificationReport check_split(const std::vector<FeatureFunction>& features,
                                             const SplitConfiguration& config, double tol);

/// Displacement, equal length, closure of every group; rainbow when colors are attached.
[[nodiscard]] VerificationReport check_loop_split(const Curve& curve, const LoopSplit& split, double tol);

/// Vertices on the curve, parallelogram residual, optional rectangle and window checks.
[[nodiscard]] VerificationReport check_quadrilateral(const Curve& curve, const InscribedQuadrilateral& quad,
                                                     double tol, bool require_rectangle,
                                                     std::optional<Window> window = {});

enum class Finder { parallelogram, rectangle };

/// Runs the finder once per window and checks that a vertex parameter lands inside it.
[[nodiscard]] VerificationReport density_probe(std::shared_ptr<const Curve> curve, const std::vector<Window>& windows,
                                               Finder finder, double tol, const SolverOptions& options = {});

/// Division of a discrete necklace: cut positions are bead boundaries
/// (1..N-1, ascending) and owners[i] is the thief taking piece i.
struct DiscreteDivision {
    bool feasible = false;
    std::vector<int> cuts;
    std::vector<int> owners;
};

/// Minimal-cut fair division by exhaustive search over at most (r-1)m cuts.
/// Beads are type ids; every type count must be divisible by r. Throws
/// ResourceError beyond 24 beads or when the search space is too large.
[[nodiscard]] DiscreteDivision brute_force_discrete_split(const std::vector<int>& beads, int r);

[[nodiscard]] bool is_fair_division(const std::vector<int>& beads, const DiscreteDivision& division, int r);

/// One cumulative-count feature per bead type (ascending type id), beads on equal cells of [0,1].
[[nodiscard]] std::vector<FeatureFunction> bead_features(const std::vector<int>& beads);

/// Moves each continuous cut to the nearest bead boundary (ties go left).
[[nodiscard]] DiscreteDivision round_to_beads(const SplitConfiguration& config, std::size_t bead_count);

}  // namespace necksplit
