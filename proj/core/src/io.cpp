#include "necksplit/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace necksplit {

using nlohmann::json;

namespace {

std::string format_real(double x) {
    if (!std::isfinite(x)) return "null";
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

void write_value(std::ostringstream& out, const json& v, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
    switch (v.type()) {
        case json::value_t::object: {
            if (v.empty()) {
                out << "{}";
                return;
            }
            out << "{\n";
            bool first = true;
            for (const auto& [key, item] : v.items()) {
                if (!first) out << ",\n";
                first = false;
                out << pad << json(key).dump() << ": ";
                write_value(out, item, depth + 1);
            }
            out << '\n' << close_pad << '}';
            return;
        }
        case json::value_t::array: {
            // Arrays of scalars stay on one line.
            bool flat = true;
            for (const auto& item : v) flat = flat && !item.is_structured();
            if (v.empty()) {
                out << "[]";
                return;
            }
            if (flat) {
                out << '[';
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i) out << ", ";
                    write_value(out, v[i], depth + 1);
                }
                out << ']';
                return;
            }
            out << "[\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out << ",\n";
                out << pad;
                write_value(out, v[i], depth + 1);
            }
            out << '\n' << close_pad << ']';
            return;
        }
        case json::value_t::number_float:
            out << format_real(v.get<double>());
            return;
        default:
            out << v.dump();
    }
}

template <class T>
T field(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception&) {
        throw InputError(std::string("field \"") + key + "\" has the wrong type");
    }
}

json point_to_json(const Point& p) {
    json out = json::array();
    for (Eigen::Index i = 0; i < p.size(); ++i) out.push_back(p[i]);
    return out;
}

Point point_from_json(const json& doc) {
    const auto coords = doc.get<std::vector<double>>();
    return Eigen::Map<const Eigen::VectorXd>(coords.data(), static_cast<Eigen::Index>(coords.size()));
}

std::vector<std::vector<int>> to_zero_based(const json& doc, const char* what) {
    std::vector<std::vector<int>> lists;
    try {
        lists = doc.get<std::vector<std::vector<int>>>();
    } catch (const json::exception&) {
        throw InputError(std::string(what) + " must be a list of integer lists");
    }
    for (auto& list : lists) {
        for (int& i : list) {
            if (i < 1) throw InputError(std::string(what) + " indices are 1-based");
            --i;
        }
    }
    return lists;
}

json to_one_based(const std::vector<std::vector<int>>& lists) {
    json out = json::array();
    for (const auto& list : lists) {
        json row = json::array();
        for (int i : list) row.push_back(i + 1);
        out.push_back(row);
    }
    return out;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
}

std::string dump_json(const json& doc) {
    std::ostringstream out;
    write_value(out, doc, 0);
    out << '\n';
    return out.str();
}

Curve curve_from_json(const json& doc) {
    if (!doc.is_object()) throw InputError("curve document must be an object");
    if (doc.contains("builtin")) {
        const json& b = doc.at("builtin");
        std::map<std::string, double> params;
        if (b.contains("params") && !b.at("params").is_null()) {
            try {
                params = b.at("params").get<std::map<std::string, double>>();
            } catch (const json::exception&) {
                throw InputError("builtin params must map names to reals");
            }
        }
        const int samples = b.contains("samples") ? field<int>(b, "samples") : 1024;
        return builtin_curve(field<std::string>(b, "name"), params, samples);
    }
    const json& raw = doc.contains("points") ? doc.at("points") : json();
    if (!raw.is_array()) throw InputError("curve needs \"points\" or \"builtin\"");
    std::vector<Point> points;
    try {
        for (const auto& p : raw) points.push_back(point_from_json(p));
    } catch (const json::exception&) {
        throw InputError("points must be lists of reals");
    }
    const bool closed = doc.contains("closed") ? field<bool>(doc, "closed") : false;
    if (doc.contains("dimension")) {
        const int d = field<int>(doc, "dimension");
        for (const auto& p : points) {
            if (p.size() != d) throw InvalidCurve("point dimension does not match \"dimension\"");
        }
    }
    return build_curve(std::move(points), closed);
}

json curve_to_json(const Curve& curve) {
    json points = json::array();
    const auto& samples = curve.samples();
    const std::size_t count = curve.closed() ? samples.size() - 1 : samples.size();
    for (std::size_t i = 0; i < count; ++i) points.push_back(point_to_json(samples[i]));
    return {{"dimension", curve.dimension()}, {"closed", curve.closed()}, {"points", points}};
}

ColorConstraint colors_from_json(const json& doc) {
    const json& blocks = doc.is_object() ? doc.at("colors") : doc;
    return ColorConstraint(to_zero_based(blocks, "colors"));
}

json colors_to_json(const ColorConstraint& colors) { return to_one_based(colors.blocks()); }

ProblemFile problem_from_json(const json& doc) {
    ProblemFile out;
    if (!doc.is_object()) throw InputError("problem document must be an object");
    if (doc.contains("curve")) out.curve = std::make_shared<const Curve>(curve_from_json(doc.at("curve")));
    const json& features = doc.contains("features") ? doc.at("features") : json();
    if (!features.is_array() || features.empty()) throw InputError("problem needs a non-empty \"features\" list");
    for (const auto& f : features) {
        const json params = f.contains("params") ? f.at("params") : json::object();
        out.problem.features.push_back(make_feature(field<std::string>(f, "kind"), params, out.curve));
    }
    out.problem.parts = field<int>(doc, "r");
    if (doc.contains("n") && !doc.at("n").is_null()) out.problem.cuts = field<int>(doc, "n");
    if (doc.contains("colors") && !doc.at("colors").is_null()) out.problem.colors = colors_from_json(doc.at("colors"));
    if (doc.contains("tolerance") && !doc.at("tolerance").is_null()) {
        out.problem.tolerance = field<double>(doc, "tolerance");
    }
    return out;
}

json split_to_json(const SplitConfiguration& config, const ResidualReport& report) {
    json sums = json::array();
    for (Eigen::Index j = 0; j < report.part_sums.rows(); ++j) {
        json row = json::array();
        for (Eigen::Index k = 0; k < report.part_sums.cols(); ++k) row.push_back(report.part_sums(j, k));
        sums.push_back(row);
    }
    return {{"cuts", config.cuts},
            {"parts", to_one_based(config.part_members())},
            {"max_deviation", report.max_abs_deviation},
            {"part_sums", sums}};
}

SplitConfiguration split_from_json(const json& doc) {
    SplitConfiguration config;
    config.cuts = field<std::vector<double>>(doc, "cuts");
    const auto parts = to_zero_based(field<json>(doc, "parts"), "parts");
    config.parts = static_cast<int>(parts.size());
    config.labels.assign(config.cuts.size() + 1, -1);
    for (std::size_t j = 0; j < parts.size(); ++j) {
        for (int i : parts[j]) {
            if (static_cast<std::size_t>(i) >= config.labels.size() || config.labels[static_cast<std::size_t>(i)] != -1) {
                throw ContractError("parts must partition the intervals 1..n+1");
            }
            config.labels[static_cast<std::size_t>(i)] = static_cast<int>(j);
        }
    }
    for (int label : config.labels) {
        if (label < 0) throw ContractError("parts must partition the intervals 1..n+1");
    }
    return config;
}

json quadrilateral_to_json(const InscribedQuadrilateral& quad) {
    json vertices = json::array();
    for (const auto& v : quad.vertices) vertices.push_back(point_to_json(v));
    json out = {{"t", quad.t},
                {"vertices", vertices},
                {"residual", quad.parallelogram_residual},
                {"rectangle_residual", quad.rectangle_residual},
                {"rectangle", quad.rectangle},
                {"collinear", quad.collinear},
                {"degenerate", quad.degenerate}};
    if (quad.window_hit) out["window_hit"] = *quad.window_hit + 1;
    if (quad.arcs) out["arcs"] = *quad.arcs;
    return out;
}

InscribedQuadrilateral quadrilateral_from_json(const json& doc) {
    InscribedQuadrilateral quad;
    const auto t = field<std::vector<double>>(doc, "t");
    if (t.size() != 4) throw ContractError("quadrilateral needs exactly four parameters");
    std::copy(t.begin(), t.end(), quad.t.begin());
    const auto vertices = field<json>(doc, "vertices");
    if (!vertices.is_array() || vertices.size() != 4) throw ContractError("quadrilateral needs four vertices");
    try {
        for (std::size_t i = 0; i < 4; ++i) quad.vertices[i] = point_from_json(vertices[i]);
    } catch (const json::exception&) {
        throw InputError("vertices must be lists of reals");
    }
    quad.parallelogram_residual = doc.value("residual", 0.0);
    quad.rectangle = doc.value("rectangle", false);
    quad.collinear = doc.value("collinear", false);
    return quad;
}

json loop_split_to_json(const LoopSplit& split) {
    json displacements = json::array();
    for (const auto& d : split.displacements) displacements.push_back(point_to_json(d));
    json out = {{"cuts", split.cuts},
                {"groups", to_one_based(split.groups)},
                {"displacements", displacements},
                {"lengths", split.lengths}};
    if (split.colors) out["colors"] = colors_to_json(*split.colors);
    return out;
}

LoopSplit loop_split_from_json(const json& doc) {
    LoopSplit split;
    split.cuts = field<std::vector<double>>(doc, "cuts");
    split.groups = to_zero_based(field<json>(doc, "groups"), "groups");
    if (doc.contains("colors") && !doc.at("colors").is_null()) split.colors = colors_from_json(doc.at("colors"));
    return split;
}

json report_to_json(const VerificationReport& report) {
    json out = json::array();
    for (const auto& c : report.checks) {
        out.push_back({{"check", c.name}, {"pass", c.pass}, {"residual", c.residual}, {"tol", c.tol}});
    }
    return out;
}

}  // namespace necksplit
