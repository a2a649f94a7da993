#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "necksplit/curve.hpp"
#include "necksplit/geometry.hpp"
#include "necksplit/split.hpp"
#include "necksplit/verify.hpp"

namespace necksplit {

/// Unreadable file, malformed JSON, or a document of the wrong shape.
class InputError : public Error {
public:
    using Error::Error;
};

/// Interval indices in files are 1-based; everything in memory is 0-based.

[[nodiscard]] nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Pretty-printed JSON with every real written to 17 significant digits.
[[nodiscard]] std::string dump_json(const nlohmann::json& doc);

/// { "dimension", "closed", "points" } or { "builtin": { "name", "params", "samples" } }.
[[nodiscard]] Curve curve_from_json(const nlohmann::json& doc);
[[nodiscard]] nlohmann::json curve_to_json(const Curve& curve);

struct ProblemFile {
    SplitProblem problem;
    std::shared_ptr<const Curve> curve;  // set when the document embeds "curve"
};

/// { "features": [{ "kind", "params" }], "r", "n"?, "colors"?, "tolerance"?, "curve"? }.
[[nodiscard]] ProblemFile problem_from_json(const nlohmann::json& doc);
[[nodiscard]] ColorConstraint colors_from_json(const nlohmann::json& doc);
[[nodiscard]] nlohmann::json colors_to_json(const ColorConstraint& colors);

[[nodiscard]] nlohmann::json split_to_json(const SplitConfiguration& config, const ResidualReport& report);
[[nodiscard]] SplitConfiguration split_from_json(const nlohmann::json& doc);

[[nodiscard]] nlohmann::json quadrilateral_to_json(const InscribedQuadrilateral& quad);
[[nodiscard]] InscribedQuadrilateral quadrilateral_from_json(const nlohmann::json& doc);

[[nodiscard]] nlohmann::json loop_split_to_json(const LoopSplit& split);
/// Restores cuts, groups and colors; displacements and lengths are left for the checker to recompute.
[[nodiscard]] LoopSplit loop_split_from_json(const nlohmann::json& doc);

[[nodiscard]] nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace necksplit
