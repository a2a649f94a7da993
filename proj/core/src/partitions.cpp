#include "necksplit/partitions.hpp"

#include <algorithm>
#include <string>

#include "necksplit/errors.hpp"

namespace necksplit {

ColorConstraint::ColorConstraint(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {}

std::size_t ColorConstraint::largest_block() const noexcept {
    std::size_t largest = 0;
    for (const auto& b : blocks_) {
        largest = std::max(largest, b.size());
    }
    return largest;
}

void ColorConstraint::validate(std::size_t intervals, int r) const {
    std::vector<int> seen(intervals, 0);
    for (const auto& block : blocks_) {
        if (block.size() > static_cast<std::size_t>(r - 1)) {
            throw ConstraintError("color block of size " + std::to_string(block.size()) +
                                  " exceeds r-1 = " + std::to_string(r - 1));
        }
        for (int idx : block) {
            if (idx < 0 || static_cast<std::size_t>(idx) >= intervals) {
                throw ConstraintError("color block index " + std::to_string(idx) + " out of range");
            }
            if (seen[idx]++) {
                throw ConstraintError("interval " + std::to_string(idx) + " appears in two color blocks");
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        throw ConstraintError("color blocks do not cover every interval");
    }
}

std::vector<int> ColorConstraint::block_of(std::size_t intervals) const {
    std::vector<int> owner(intervals, -1);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (int idx : blocks_[b]) {
            owner[idx] = static_cast<int>(b);
        }
    }
    return owner;
}

bool ColorConstraint::admits(const Labeling& labels) const {
    for (const auto& block : blocks_) {
        std::vector<int> parts;
        for (int idx : block) {
            if (idx < 0 || static_cast<std::size_t>(idx) >= labels.size()) {
                return false;
            }
            parts.push_back(labels[idx]);
        }
        std::sort(parts.begin(), parts.end());
        if (std::adjacent_find(parts.begin(), parts.end()) != parts.end()) {
            return false;
        }
    }
    return true;
}

namespace {

struct Enumeration {
    int intervals;
    int r;
    std::vector<int> block;                 // -1 when unconstrained
    std::vector<std::vector<char>> taken;   // taken[block][part]
    const std::function<bool(const Labeling&)>& visit;
    Labeling labels;
    std::size_t count = 0;
    bool stopped = false;

    void run(int pos, int used) {
        if (stopped) return;
        if (pos == intervals) {
            if (used == r) {
                ++count;
                if (!visit(labels)) stopped = true;
            }
            return;
        }
        // Remaining slots must still be able to open the missing parts.
        if (intervals - pos < r - used) return;
        const int top = std::min(used, r - 1);
        for (int part = 0; part <= top && !stopped; ++part) {
            const int b = block.empty() ? -1 : block[pos];
            if (b >= 0 && taken[b][part]) continue;
            labels[pos] = part;
            if (b >= 0) taken[b][part] = 1;
            run(pos + 1, part == used ? used + 1 : used);
            if (b >= 0) taken[b][part] = 0;
        }
    }
};

}  // namespace

std::size_t for_each_partition(int n, int r, const std::optional<ColorConstraint>& constraint,
                               const std::function<bool(const Labeling&)>& visit) {
    if (n < 0 || r < 2) {
        throw ContractError("partition enumeration needs n >= 0 and r >= 2");
    }
    const int intervals = n + 1;
    Enumeration e{intervals, r, {}, {}, visit, Labeling(intervals, 0)};
    if (constraint) {
        constraint->validate(static_cast<std::size_t>(intervals), r);
        e.block = constraint->block_of(static_cast<std::size_t>(intervals));
        e.taken.assign(constraint->blocks().size(), std::vector<char>(r, 0));
    }
    e.run(0, 0);
    return e.count;
}

std::vector<Labeling> enumerate_partitions(int n, int r, const std::optional<ColorConstraint>& constraint) {
    std::vector<Labeling> out;
    for_each_partition(n, r, constraint, [&](const Labeling& l) {
        out.push_back(l);
        return true;
    });
    return out;
}

Labeling canonical_labeling(const Labeling& labels) {
    std::vector<int> rename;
    Labeling out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = std::find(rename.begin(), rename.end(), labels[i]);
        if (it == rename.end()) {
            rename.push_back(labels[i]);
            it = rename.end() - 1;
        }
        out[i] = static_cast<int>(it - rename.begin());
    }
    return out;
}

}  // namespace necksplit
