#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <vector>

#include "necksplit/curve.hpp"
#include "necksplit/feature.hpp"
#include "necksplit/split.hpp"

namespace necksplit::testing {

/// Root of a monotone function on [lo, hi] by plain bisection.
inline double bisect(const std::function<double(double)>& g, double lo, double hi) {
    double glo = g(lo);
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double gm = g(mid);
        if ((gm < 0) == (glo < 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

inline FeatureFunction square_feature() { return FeatureFunction::polynomial({0.0, 0.0, 1.0}); }

inline std::shared_ptr<const Curve> unit_square() {
    return std::make_shared<const Curve>(
        build_curve({Point(Eigen::Vector2d(0, 0)), Point(Eigen::Vector2d(1, 0)), Point(Eigen::Vector2d(1, 1)),
                     Point(Eigen::Vector2d(0, 1))},
                    true));
}

inline std::shared_ptr<const Curve> builtin(const std::string& name, int samples,
                                            std::map<std::string, double> params = {}) {
    return std::make_shared<const Curve>(builtin_curve(name, params, samples));
}

/// Random ordered cuts and uniform labels; every part may come out empty.
inline SplitConfiguration random_configuration(std::mt19937_64& rng, int n, int parts) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> label(0, parts - 1);
    SplitConfiguration c;
    c.parts = parts;
    for (int i = 0; i < n; ++i) c.cuts.push_back(unit(rng));
    std::sort(c.cuts.begin(), c.cuts.end());
    for (int i = 0; i <= n; ++i) c.labels.push_back(label(rng));
    return c;
}

/// Mix of analytic and tabulated features with random coefficients.
inline std::vector<FeatureFunction> random_features(std::mt19937_64& rng, int m) {
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::vector<FeatureFunction> out;
    for (int k = 0; k < m; ++k) {
        switch (k % 3) {
            case 0:
                out.push_back(FeatureFunction::polynomial({coef(rng), coef(rng), coef(rng), coef(rng)}));
                break;
            case 1:
                out.push_back(FeatureFunction::tabulated({0.0, 0.3, 0.6, 1.0}, {coef(rng), coef(rng), coef(rng), coef(rng)}));
                break;
            default:
                out.push_back(FeatureFunction::window_ramp(0.2, 0.7).scaled(coef(rng)));
        }
    }
    return out;
}

}  // namespace necksplit::testing
