#pragma once

// Seeded random nice polygons with rational coordinates.

#include "polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pinwheel {

struct GenerationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sorted random angles on a perturbed circle of radius `bound`, rounded to the
// grid (1/16)Z^2, resampled until the result is nice. Floats only choose the
// candidate; validation is exact.
inline NicePolygon<Rational> random_nice_polygon(int n, std::uint64_t seed, long bound = 64) {
    if (n < 3 || n > 12) throw std::invalid_argument("polygon size must be in 3..12");
    constexpr long grid = 16;
    Rng rng(seed, static_cast<std::uint64_t>(n));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Rng r = rng.split(static_cast<std::uint64_t>(attempt));
        std::vector<double> angles;
        for (int i = 0; i < n; ++i) angles.push_back(2 * std::numbers::pi * r.uniform());
        std::sort(angles.begin(), angles.end(), std::greater<>());
        std::vector<Point2<Rational>> vs;
        for (double t : angles) {
            double rad = static_cast<double>(bound) * (0.8 + 0.2 * r.uniform());
            long x = std::lround(rad * std::cos(t) * grid), y = std::lround(rad * std::sin(t) * grid);
            vs.push_back({make_rational(x, grid), make_rational(y, grid)});
        }
        try {
            return NicePolygon<Rational>::from_vertices(std::move(vs));
        } catch (const PolygonError&) {
        }
    }
    throw GenerationFailed("no nice polygon after 1000 attempts");
}

}  // namespace pinwheel
