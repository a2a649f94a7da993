#include "necksplit/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <sstream>

namespace necksplit {

namespace {

constexpr double kCanvas = 480.0;
constexpr double kMargin = 20.0;
constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

class Canvas {
public:
    explicit Canvas(const Curve& curve) {
        double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
        double x1 = -x0, y1 = -x0;
        for (const auto& p : curve.samples()) {
            x0 = std::min(x0, p[0]);
            x1 = std::max(x1, p[0]);
            y0 = std::min(y0, p[1]);
            y1 = std::max(y1, p[1]);
        }
        const double span = std::max({x1 - x0, y1 - y0, 1e-12});
        scale_ = (kCanvas - 2 * kMargin) / span;
        x0_ = x0;
        y1_ = y1;
        out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas
             << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n"
             << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    }

    std::string xy(const Point& p) const {
        char buffer[64];
        std::snprintf(buffer, sizeof buffer, "%.3f,%.3f", kMargin + (p[0] - x0_) * scale_,
                      kMargin + (y1_ - p[1]) * scale_);
        return buffer;
    }

    void polyline(const std::vector<Point>& points, const char* color, double width) {
        out_ << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << width << "\" points=\"";
        for (std::size_t i = 0; i < points.size(); ++i) out_ << (i ? " " : "") << xy(points[i]);
        out_ << "\"/>\n";
    }

    void dot(const Point& p, const char* color) {
        const std::string s = xy(p);
        const auto comma = s.find(',');
        out_ << "<circle cx=\"" << s.substr(0, comma) << "\" cy=\"" << s.substr(comma + 1) << "\" r=\"3.5\" fill=\""
             << color << "\"/>\n";
    }

    std::string finish() {
        out_ << "</svg>\n";
        return out_.str();
    }

private:
    std::ostringstream out_;
    double scale_ = 1.0;
    double x0_ = 0.0;
    double y1_ = 0.0;
};

void require_plottable(const Curve& curve) {
    if (curve.dimension() < 2) throw ContractError("plotting needs a curve of dimension at least 2");
}

// Samples of the curve restricted to [a, b], endpoints included.
std::vector<Point> piece(const Curve& curve, double a, double b) {
    const double L = curve.length();
    std::vector<Point> out{curve.evaluate(a)};
    const auto& cumulative = curve.cumulative();
    for (std::size_t i = 0; i < cumulative.size(); ++i) {
        if (cumulative[i] > a * L && cumulative[i] < b * L) out.push_back(curve.samples()[i]);
    }
    out.push_back(curve.evaluate(b));
    return out;
}

}  // namespace

std::string svg_loop_split(const Curve& curve, const LoopSplit& split) {
    require_plottable(curve);
    Canvas canvas(curve);
    const std::size_t n = split.cuts.size();
    std::vector<int> owner(n + 1, 0);
    for (std::size_t g = 0; g < split.groups.size(); ++g) {
        for (int j : split.groups[g]) {
            if (j >= 0 && static_cast<std::size_t>(j) <= n) owner[static_cast<std::size_t>(j)] = static_cast<int>(g);
        }
    }
    for (std::size_t j = 0; j <= n; ++j) {
        const double a = j == 0 ? 0.0 : split.cuts[j - 1];
        const double b = j == n ? 1.0 : split.cuts[j];
        if (!(b > a)) continue;
        canvas.polyline(piece(curve, a, b), kPalette[static_cast<std::size_t>(owner[j]) % kPalette.size()], 3.0);
    }
    for (double t : split.cuts) canvas.dot(curve.evaluate(t), "black");
    return canvas.finish();
}

std::string svg_quadrilateral(const Curve& curve, const InscribedQuadrilateral& quad) {
    require_plottable(curve);
    Canvas canvas(curve);
    canvas.polyline(curve.samples(), "#555555", 1.5);
    std::vector<Point> outline(quad.vertices.begin(), quad.vertices.end());
    outline.push_back(quad.vertices[0]);
    canvas.polyline(outline, kPalette[1], 2.0);
    for (const auto& v : quad.vertices) canvas.dot(v, kPalette[0]);
    return canvas.finish();
}

}  // namespace necksplit
