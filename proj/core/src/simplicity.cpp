#include <algorithm>

#include "necksplit/geometry.hpp"

namespace necksplit {

namespace {

double cross(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) && std::min(a[1], b[1]) <= p[1] &&
           p[1] <= std::max(a[1], b[1]);
}

bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d) {
    const double d1 = cross(c, d, a), d2 = cross(c, d, b);
    const double d3 = cross(a, b, c), d4 = cross(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
    return (d1 == 0 && on_segment(a, c, d)) || (d2 == 0 && on_segment(b, c, d)) || (d3 == 0 && on_segment(c, a, b)) ||
           (d4 == 0 && on_segment(d, a, b));
}

}  // namespace

bool has_self_intersection(const Curve& curve) {
    if (curve.dimension() != 2) return false;
    // Repeated samples are dropped.
    std::vector<Point> pts;
    for (const auto& p : curve.samples()) {
        if (pts.empty() || p != pts.back()) pts.push_back(p);
    }
    const std::size_t segs = pts.size() - 1;
    for (std::size_t i = 0; i < segs; ++i) {
        for (std::size_t j = i + 2; j < segs; ++j) {
            if (curve.closed() && i == 0 && j == segs - 1) continue;  // neighbours across the seam
            if (segments_touch(pts[i], pts[i + 1], pts[j], pts[j + 1])) return true;
        }
    }
    return false;
}

}  // namespace necksplit
