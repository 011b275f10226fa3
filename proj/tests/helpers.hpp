#pragma once

#include <cmath>
#include <vector>

#include "juntalab/inequalities.hpp"
#include "juntalab/rng.hpp"
#include "juntalab/trig_poly.hpp"

namespace testutil {

inline bool near(double a, double b, double tol) {
    return std::abs(a - b) <= tol;
}

/// Small random poly for property tests (full degree box up to dimension 3,
/// a 16-mode sparse support above to keep evaluation cheap).
inline juntalab::TrigPoly random_poly(int dim, int degree, std::uint64_t seed,
                                      double scale = 0.5, bool normalize = false) {
    juntalab::RandomPolySpec spec;
    spec.dim = dim;
    spec.degree = degree;
    spec.scale = scale;
    spec.seed = seed;
    spec.normalize = normalize;
    if (dim > 3) spec.max_modes = 16;
    return juntalab::random_trigpoly(spec);
}

inline std::vector<double> random_point(int dim, std::uint64_t seed, std::uint64_t index) {
    std::vector<double> x(dim);
    for (int j = 0; j < dim; ++j)
        x[j] = juntalab::uniform01(seed, index * dim + j);
    return x;
}

inline double max_coeff_diff(const juntalab::TrigPoly& a, const juntalab::TrigPoly& b) {
    double m = 0.0;
    for (const auto& [k, c] : a.terms()) m = std::max(m, std::abs(c - b.coefficient(k)));
    for (const auto& [k, c] : b.terms()) m = std::max(m, std::abs(c - a.coefficient(k)));
    return m;
}

}  // namespace testutil
