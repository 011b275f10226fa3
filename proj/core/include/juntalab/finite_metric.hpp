#pragma once

#include <utility>
#include <vector>

#include "juntalab/common.hpp"

namespace juntalab {

/// A finite metric space given by its distance matrix. Symmetry, zero
/// diagonal and the triangle inequality are validated on construction.
class FiniteMetricSpace {
public:
    explicit FiniteMetricSpace(std::vector<std::vector<double>> dist);

    static FiniteMetricSpace from_points(const std::vector<std::vector<double>>& points);

    int size() const { return static_cast<int>(dist_.size()); }
    double dist(int i, int j) const { return dist_[i][j]; }
    const std::vector<std::vector<double>>& matrix() const { return dist_; }

private:
    std::vector<std::vector<double>> dist_;
};

/// Non-decreasing modulus of continuity as a piecewise-linear knot table.
/// omega(0) = 0; beyond the last knot the table extends by the last slope
/// (keeps the Lipschitz constant finite and conservative).
class ModulusSpec {
public:
    /// Knots (r, omega(r)); r strictly increasing, omega non-decreasing.
    /// A leading (0,0) knot is implied if absent.
    static ModulusSpec from_knots(std::vector<std::pair<double, double>> knots);
    static ModulusSpec identity();  // omega(r) = r

    double operator()(double r) const;
    /// sup over r >= eps of omega(r)/r (attained at eps, a knot, or the
    /// tail slope).
    double sup_ratio_from(double eps) const;
    const std::vector<std::pair<double, double>>& knots() const { return knots_; }

private:
    ModulusSpec() = default;
    std::vector<std::pair<double, double>> knots_;
};

struct RegularizationResult {
    std::vector<double> values;  // h on the space points
    double lipschitz;            // K = max(sup_{r>=eps} omega(r)/r, 1)
};

/// Sandwiches f between K-Lipschitz level-set envelopes:
///     h(x) = inf_n (eps*n + K*d(x, {f <= eps*n})).
/// Guarantees Lip(h) <= K always, and max|f-h| <= K*eps whenever omega is a
/// modulus of continuity for f; both are asserted post-hoc (throws
/// std::domain_error if the modulus hypothesis fails).
RegularizationResult lipschitz_regularize(const FiniteMetricSpace& space,
                                          const std::vector<double>& f, const ModulusSpec& omega,
                                          double eps);

}  // namespace juntalab
