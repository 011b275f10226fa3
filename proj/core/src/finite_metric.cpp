#include "juntalab/finite_metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace juntalab {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::vector<double>> dist)
    : dist_(std::move(dist)) {
    const int n = static_cast<int>(dist_.size());
    require(n >= 1, "FiniteMetricSpace: need at least one point");
    for (int i = 0; i < n; ++i) {
        require(static_cast<int>(dist_[i].size()) == n, "FiniteMetricSpace: matrix not square");
        require(dist_[i][i] == 0.0, "FiniteMetricSpace: nonzero diagonal");
        for (int j = 0; j < n; ++j) {
            require(std::isfinite(dist_[i][j]) && dist_[i][j] >= 0.0,
                    "FiniteMetricSpace: distances must be finite and nonnegative");
            require(dist_[i][j] == dist_[j][i], "FiniteMetricSpace: matrix not symmetric");
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                require(dist_[i][j] <= dist_[i][k] + dist_[k][j] + 1e-12,
                        "FiniteMetricSpace: triangle inequality violated");
}

FiniteMetricSpace FiniteMetricSpace::from_points(const std::vector<std::vector<double>>& points) {
    const int n = static_cast<int>(points.size());
    require(n >= 1, "FiniteMetricSpace: need at least one point");
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            require(points[i].size() == points[j].size(),
                    "FiniteMetricSpace: point dimension mismatch");
            double s = 0.0;
            for (std::size_t c = 0; c < points[i].size(); ++c) {
                const double diff = points[i][c] - points[j][c];
                s += diff * diff;
            }
            d[i][j] = d[j][i] = std::sqrt(s);
        }
    return FiniteMetricSpace(std::move(d));
}

ModulusSpec ModulusSpec::from_knots(std::vector<std::pair<double, double>> knots) {
    require(!knots.empty(), "ModulusSpec: need at least one knot");
    std::sort(knots.begin(), knots.end());
    if (knots.front().first > 0.0) knots.insert(knots.begin(), {0.0, 0.0});
    require(knots.front().first == 0.0 && knots.front().second == 0.0,
            "ModulusSpec: omega(0) must be 0");
    for (std::size_t i = 0; i < knots.size(); ++i) {
        require(std::isfinite(knots[i].first) && std::isfinite(knots[i].second) &&
                    knots[i].second >= 0.0,
                "ModulusSpec: knots must be finite and nonnegative");
        if (i > 0) {
            require(knots[i].first > knots[i - 1].first, "ModulusSpec: knot radii must increase");
            require(knots[i].second >= knots[i - 1].second,
                    "ModulusSpec: omega must be non-decreasing");
        }
    }
    ModulusSpec m;
    m.knots_ = std::move(knots);
    return m;
}

ModulusSpec ModulusSpec::identity() {
    return from_knots({{0.0, 0.0}, {1.0, 1.0}});
}

double ModulusSpec::operator()(double r) const {
    require(r >= 0.0, "ModulusSpec: radius must be nonnegative");
    const auto& ks = knots_;
    if (r >= ks.back().first) {
        // extend by the last slope
        double slope = 0.0;
        if (ks.size() >= 2) {
            const auto& a = ks[ks.size() - 2];
            const auto& b = ks.back();
            slope = (b.second - a.second) / (b.first - a.first);
        }
        return ks.back().second + slope * (r - ks.back().first);
    }
    for (std::size_t i = 1; i < ks.size(); ++i) {
        if (r <= ks[i].first) {
            const auto& a = ks[i - 1];
            const auto& b = ks[i];
            const double w = (r - a.first) / (b.first - a.first);
            return a.second + w * (b.second - a.second);
        }
    }
    return ks.back().second;
}

double ModulusSpec::sup_ratio_from(double eps) const {
    require(eps > 0.0, "ModulusSpec: eps must be positive");
    // omega(r)/r is monotone between knots, so the sup over [eps, inf) is
    // attained at eps, at a knot, or in the last-slope tail limit.
    double best = (*this)(eps) / eps;
    for (const auto& [r, w] : knots_)
        if (r >= eps && r > 0.0) best = std::max(best, w / r);
    double tail_slope = 0.0;
    if (knots_.size() >= 2) {
        const auto& a = knots_[knots_.size() - 2];
        const auto& b = knots_.back();
        tail_slope = (b.second - a.second) / (b.first - a.first);
    }
    return std::max(best, tail_slope);
}

RegularizationResult lipschitz_regularize(const FiniteMetricSpace& space,
                                          const std::vector<double>& f, const ModulusSpec& omega,
                                          double eps) {
    const int n = space.size();
    require(eps > 0.0, "lipschitz_regularize: eps must be positive");
    require(static_cast<int>(f.size()) == n, "lipschitz_regularize: value count mismatch");
    for (double v : f)
        require(std::isfinite(v), "lipschitz_regularize: values must be finite");

    const double K = std::max(omega.sup_ratio_from(eps), 1.0);
    require(std::isfinite(K), "lipschitz_regularize: Lipschitz constant is infinite");

    const double f_min = *std::min_element(f.begin(), f.end());
    const double f_max = *std::max_element(f.begin(), f.end());
    const long n_lo = static_cast<long>(std::floor(f_min / eps)) - 1;
    const long n_hi = static_cast<long>(std::ceil(f_max / eps)) + 1;

    std::vector<double> h(n, std::numeric_limits<double>::infinity());
    for (long lvl = n_lo; lvl <= n_hi; ++lvl) {
        const double cut = eps * static_cast<double>(lvl);
        for (int x = 0; x < n; ++x) {
            // K * d(x, X_lvl) with X_lvl = {f <= cut}; empty level sets are skipped
            double dmin = std::numeric_limits<double>::infinity();
            for (int y = 0; y < n; ++y)
                if (f[y] <= cut) dmin = std::min(dmin, space.dist(x, y));
            if (std::isfinite(dmin)) h[x] = std::min(h[x], cut + K * dmin);
        }
    }

    const double scale = std::max({1.0, std::abs(f_min), std::abs(f_max), K * eps});
    const double tol = 1e-12 * scale;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(h[i] - h[j]) > K * space.dist(i, j) + tol)
                throw std::domain_error("lipschitz_regularize: output is not K-Lipschitz");
    for (int i = 0; i < n; ++i)
        if (std::abs(f[i] - h[i]) > K * eps + tol)
            throw std::domain_error(
                "lipschitz_regularize: |f-h| exceeds K*eps (omega is not a modulus for f)");

    return {std::move(h), K};
}

}  // namespace juntalab
