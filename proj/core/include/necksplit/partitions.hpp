#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace necksplit {

/// Interval -> part assignment. Entry j is the part (0-based) owning interval j,
/// the interval between cut j-1 and cut j with cut -1 = 0 and cut n = 1.
using Labeling = std::vector<int>;

/// Partition C_1..C_l of the interval indices {0..n} into color blocks.
/// A labeling is rainbow when no part takes two intervals of one block.
class ColorConstraint {
public:
    ColorConstraint() = default;
    explicit ColorConstraint(std::vector<std::vector<int>> blocks);

    [[nodiscard]] const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
    [[nodiscard]] std::size_t largest_block() const noexcept;

    /// Throws ConstraintError unless the blocks partition {0..intervals-1}
    /// exactly and every block has at most r-1 members.
    void validate(std::size_t intervals, int r) const;

    /// Block index of every interval; requires a prior successful validate().
    [[nodiscard]] std::vector<int> block_of(std::size_t intervals) const;

    /// |C_i ∩ T_j| <= 1 for every block and part.
    [[nodiscard]] bool admits(const Labeling& labels) const;

private:
    std::vector<std::vector<int>> blocks_;
};

/// Calls `visit` once per S_r-orbit of surjective labelings of n+1 intervals
/// into r parts, in lexicographic order of the canonical representative (the
/// restricted growth string: interval 0 takes part 0 and each new part gets the
/// smallest unused label). With a constraint only rainbow labelings are
/// produced. `visit` returns false to stop early. Returns the number visited.
std::size_t for_each_partition(int n, int r, const std::optional<ColorConstraint>& constraint,
                               const std::function<bool(const Labeling&)>& visit);

[[nodiscard]] std::vector<Labeling> enumerate_partitions(int n, int r,
                                                         const std::optional<ColorConstraint>& constraint = {});

/// Relabels parts in order of first appearance, yielding the orbit representative.
[[nodiscard]] Labeling canonical_labeling(const Labeling& labels);

}  // namespace necksplit
