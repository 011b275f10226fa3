#include "juntalab/boxes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "juntalab/rng.hpp"

namespace juntalab {

namespace {

double interval_gap(const Interval& a, const Interval& b) {
    return std::max({0.0, b.lo - a.hi, a.lo - b.hi});
}

double point_gap(double x, const Interval& iv) {
    return std::max({0.0, iv.lo - x, x - iv.hi});
}

}  // namespace

BoxSet::BoxSet(int dim, std::vector<std::vector<Interval>> boxes)
    : dim_(dim), boxes_(std::move(boxes)) {
    require(dim >= 1, "BoxSet: dimension must be >= 1");
    require(!boxes_.empty(), "BoxSet: need at least one box");
    for (const auto& box : boxes_) {
        require(static_cast<int>(box.size()) == dim, "BoxSet: box dimension mismatch");
        for (const auto& iv : box) {
            require(std::isfinite(iv.lo) && std::isfinite(iv.hi) && iv.lo <= iv.hi,
                    "BoxSet: malformed interval");
            require(iv.lo >= 0.0 && iv.hi <= 1.0, "BoxSet: intervals must lie within [0,1]");
        }
    }
}

bool BoxSet::contains(std::span<const double> x) const {
    require(static_cast<int>(x.size()) == dim_, "BoxSet: point dimension mismatch");
    for (const auto& box : boxes_) {
        bool inside = true;
        for (int j = 0; j < dim_ && inside; ++j)
            inside = x[j] >= box[j].lo && x[j] <= box[j].hi;
        if (inside) return true;
    }
    return false;
}

double BoxSet::distance_to(std::span<const double> x) const {
    require(static_cast<int>(x.size()) == dim_, "BoxSet: point dimension mismatch");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& box : boxes_) {
        double d = 0.0;
        for (int j = 0; j < dim_; ++j) d = std::max(d, point_gap(x[j], box[j]));
        best = std::min(best, d);
    }
    return best;
}

double linf_distance(const BoxSet& A, const BoxSet& B) {
    require(A.dim() == B.dim(), "linf_distance: dimension mismatch");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& a : A.boxes())
        for (const auto& b : B.boxes()) {
            double d = 0.0;
            for (int j = 0; j < A.dim(); ++j) d = std::max(d, interval_gap(a[j], b[j]));
            best = std::min(best, d);
        }
    return best;
}

FnHandle clipped_distance_fn(const BoxSet& A, double delta) {
    require(delta > 0.0, "clipped_distance_fn: delta must be positive");
    auto set = std::make_shared<BoxSet>(A);
    return FnHandle(A.dim(), Domain::Cube, [set, delta](std::span<const double> x) {
        return std::min(delta, set->distance_to(x));
    });
}

bool SeparatedSetsResult::in_a_prime(std::span<const double> x) const {
    return level_fn(x) <= theta_lo * delta;
}

bool SeparatedSetsResult::in_b_prime(std::span<const double> x) const {
    return level_fn(x) >= theta_hi * delta;
}

SeparatedSetsResult separated_junta_sets(const BoxSet& A, const BoxSet& B, double delta,
                                         double epsilon, const EngineConfig& cfg,
                                         std::uint64_t seed) {
    require(A.dim() == B.dim(), "separated_junta_sets: dimension mismatch");
    require(delta > 0.0, "separated_junta_sets: delta must be positive");
    require(epsilon > 0.0 && epsilon < 1.0, "separated_junta_sets: epsilon must be in (0,1)");
    require(linf_distance(A, B) >= delta - 1e-12,
            "separated_junta_sets: sets are closer than the declared delta");

    const int dim = A.dim();
    const int m = cfg.cond_exp_resolution(dim);
    require(epsilon > 1.0 / m,
            "separated_junta_sets: conditional-expectation grid too coarse for this epsilon");

    SeparatedSetsResult out;
    out.delta = delta;
    out.epsilon = epsilon;
    // Level thresholds: symmetric around delta/2, tight enough that the
    // 1-Lipschitz level gap minus one grid cell still reaches delta - eps.
    out.theta_lo = std::min(0.25, (epsilon - 1.0 / m) / (2.0 * delta));
    out.theta_hi = 1.0 - out.theta_lo;

    FnHandle f = clipped_distance_fn(A, delta);
    JuntaApproximation ja =
        extract_junta(ProductFn(f), epsilon * delta / 8.0, ScheduleMode::Empirical, cfg);
    out.S = ja.S;
    out.extraction_error = ja.l1_error;
    out.level_fn = ja.projection.as_handle();

    // Monte-Carlo losses mu(A \ A') and mu(B \ B'), plus point pools for
    // the separation measurement.
    const std::int64_t n = std::max<std::int64_t>(cfg.quad.samples, 1 << 14);
    const std::uint64_t draw_seed = derive_seed(seed ^ cfg.quad.seed, 101);
    std::vector<double> x(dim);
    std::int64_t in_a = 0, lost_a = 0, in_b = 0, lost_b = 0;
    std::vector<std::vector<double>> pool_a, pool_b;
    constexpr int kPoolCap = 256;
    for (std::int64_t i = 0; i < n; ++i) {
        for (int j = 0; j < dim; ++j)
            x[j] = uniform01(draw_seed, static_cast<std::uint64_t>(i) * dim + j);
        const double level = out.level_fn(x);
        if (A.contains(x)) {
            ++in_a;
            if (level > out.theta_lo * delta) ++lost_a;
        }
        if (B.contains(x)) {
            ++in_b;
            if (level < out.theta_hi * delta) ++lost_b;
        }
        if (level <= out.theta_lo * delta && static_cast<int>(pool_a.size()) < kPoolCap)
            pool_a.emplace_back(x.begin(), x.end());
        if (level >= out.theta_hi * delta && static_cast<int>(pool_b.size()) < kPoolCap)
            pool_b.emplace_back(x.begin(), x.end());
    }
    auto rate = [n](std::int64_t count) {
        const double p = static_cast<double>(count) / static_cast<double>(n);
        return Estimate{p, kZ99 * std::sqrt(std::max(0.0, p * (1.0 - p)) / n)};
    };
    out.loss_a = rate(lost_a);
    out.loss_b = rate(lost_b);

    out.pairs_a = static_cast<int>(pool_a.size());
    out.pairs_b = static_cast<int>(pool_b.size());
    double sep = std::numeric_limits<double>::infinity();
    for (const auto& a : pool_a)
        for (const auto& b : pool_b) {
            double d = 0.0;
            for (int j = 0; j < dim; ++j) d = std::max(d, std::abs(a[j] - b[j]));
            sep = std::min(sep, d);
        }
    out.measured_separation = sep;
    return out;
}

}  // namespace juntalab
