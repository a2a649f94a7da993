#include "necksplit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace necksplit {

namespace {

constexpr std::size_t kMaxBeads = 24;
constexpr double kMaxWork = 5e7;

std::vector<int> dense_types(const std::vector<int>& beads, int& type_count) {
    std::map<int, int> ids;
    for (int b : beads) ids.emplace(b, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    type_count = next;
    std::vector<int> out;
    out.reserve(beads.size());
    for (int b : beads) out.push_back(ids[b]);
    return out;
}

double binomial(std::size_t n, std::size_t k) {
    double c = 1.0;
    for (std::size_t i = 0; i < k; ++i) c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return c;
}

// counts[thief][type] for the division; false on malformed input.
bool tally(const std::vector<int>& types, int type_count, const std::vector<int>& cuts, const std::vector<int>& owners,
           int r, std::vector<std::vector<int>>& counts) {
    if (owners.size() != cuts.size() + 1) return false;
    counts.assign(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(type_count), 0));
    std::size_t piece = 0;
    for (std::size_t i = 0; i < types.size(); ++i) {
        while (piece < cuts.size() && static_cast<std::size_t>(cuts[piece]) <= i) ++piece;
        const int owner = owners[piece];
        if (owner < 0 || owner >= r) return false;
        ++counts[static_cast<std::size_t>(owner)][static_cast<std::size_t>(types[i])];
    }
    return true;
}

}  // namespace

std::vector<FeatureFunction> bead_features(const std::vector<int>& beads) {
    int type_count = 0;
    const std::vector<int> types = dense_types(beads, type_count);
    std::vector<FeatureFunction> features;
    for (int k = 0; k < type_count; ++k) {
        std::vector<double> masses(types.size(), 0.0);
        for (std::size_t i = 0; i < types.size(); ++i) masses[i] = types[i] == k ? 1.0 : 0.0;
        features.push_back(FeatureFunction::cumulative_measure(masses));
    }
    return features;
}

bool is_fair_division(const std::vector<int>& beads, const DiscreteDivision& division, int r) {
    if (r < 1) return false;
    int previous = 0;
    for (int c : division.cuts) {
        if (c < previous || c > static_cast<int>(beads.size())) return false;
        previous = c;
    }
    int type_count = 0;
    const std::vector<int> types = dense_types(beads, type_count);
    std::vector<std::vector<int>> counts;
    if (!tally(types, type_count, division.cuts, division.owners, r, counts)) return false;
    for (int k = 0; k < type_count; ++k) {
        for (int j = 1; j < r; ++j) {
            if (counts[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] !=
                counts[0][static_cast<std::size_t>(k)]) {
                return false;
            }
        }
    }
    return true;
}

DiscreteDivision brute_force_discrete_split(const std::vector<int>& beads, int r) {
    if (r < 2) throw ContractError("discrete split needs r >= 2");
    if (beads.size() > kMaxBeads) throw ResourceError("discrete brute force is limited to 24 beads");
    int type_count = 0;
    const std::vector<int> types = dense_types(beads, type_count);
    std::vector<int> per_type(static_cast<std::size_t>(type_count), 0);
    for (int t : types) ++per_type[static_cast<std::size_t>(t)];
    for (int c : per_type) {
        if (c % r != 0) throw ContractError("every bead count must be divisible by r");
    }

    const std::size_t boundaries = beads.empty() ? 0 : beads.size() - 1;
    const std::size_t max_cuts = std::min<std::size_t>(static_cast<std::size_t>((r - 1) * type_count), boundaries);
    double work = 0.0;
    for (std::size_t c = 0; c <= max_cuts; ++c) work += binomial(boundaries, c) * std::pow(r, static_cast<double>(c));
    if (work > kMaxWork) throw ResourceError("discrete search space too large");

    DiscreteDivision candidate;
    for (std::size_t c = 0; c <= max_cuts; ++c) {
        // Choose c boundaries from 1..N-1 via a selection mask.
        std::vector<bool> mask(boundaries, false);
        std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(c), true);
        do {
            candidate.cuts.clear();
            for (std::size_t b = 0; b < boundaries; ++b) {
                if (mask[b]) candidate.cuts.push_back(static_cast<int>(b + 1));
            }
            // Owners as base-r digits; piece 0 always goes to thief 0.
            candidate.owners.assign(c + 1, 0);
            while (true) {
                if (is_fair_division(beads, candidate, r)) {
                    candidate.feasible = true;
                    return candidate;
                }
                std::size_t i = 1;
                while (i <= c && candidate.owners[i] == r - 1) candidate.owners[i++] = 0;
                if (i > c) break;
                ++candidate.owners[i];
            }
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    return DiscreteDivision{};
}

DiscreteDivision round_to_beads(const SplitConfiguration& config, std::size_t bead_count) {
    DiscreteDivision out;
    out.owners = config.labels;
    const auto N = static_cast<double>(bead_count);
    for (double t : config.cuts) {
        const double scaled = t * N;
        const double below = std::floor(scaled);
        // Ties go to the left boundary.
        const double pick = scaled - below <= 0.5 ? below : below + 1.0;
        out.cuts.push_back(static_cast<int>(std::clamp(pick, 0.0, N)));
    }
    out.feasible = true;
    return out;
}

}  // namespace necksplit
