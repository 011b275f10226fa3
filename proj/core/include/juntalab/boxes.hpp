#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "juntalab/common.hpp"
#include "juntalab/fn_handle.hpp"
#include "juntalab/junta.hpp"

namespace juntalab {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

/// Finite union of axis-aligned closed boxes inside [0,1]^N.
class BoxSet {
public:
    BoxSet(int dim, std::vector<std::vector<Interval>> boxes);

    int dim() const { return dim_; }
    int box_count() const { return static_cast<int>(boxes_.size()); }
    const std::vector<std::vector<Interval>>& boxes() const { return boxes_; }

    bool contains(std::span<const double> x) const;
    /// Sup-metric distance from a point to the set (exact box formula).
    double distance_to(std::span<const double> x) const;

private:
    int dim_;
    std::vector<std::vector<Interval>> boxes_;
};

/// inf{d^N_inf(x,y) : x in A, y in B}; exact (min over box pairs of the
/// max per-coordinate interval gap).
double linf_distance(const BoxSet& A, const BoxSet& B);

/// The clipped sup-distance witness f(x) = min(delta, dist_inf(x, A)):
/// 1-Lipschitz for d^N_inf, f|A = 0, f|B = delta when the sets are
/// delta-separated.
FnHandle clipped_distance_fn(const BoxSet& A, double delta);

struct SeparatedSetsResult {
    CoordSet S;
    double delta = 0.0;
    double epsilon = 0.0;
    double theta_lo = 0.0;  // A' = {E_S f <= theta_lo * delta}
    double theta_hi = 0.0;  // B' = {E_S f >= theta_hi * delta}
    FnHandle level_fn;      // E_S f (junta on S)
    Estimate extraction_error;
    Estimate loss_a;  // mu(A \ A')
    Estimate loss_b;  // mu(B \ B')
    double measured_separation = 0.0;  // min d_inf over sampled cross pairs
    int pairs_a = 0;
    int pairs_b = 0;

    bool in_a_prime(std::span<const double> x) const;
    bool in_b_prime(std::span<const double> x) const;
};

/// Junta form of the separated pair: extracts S from f = min(delta,
/// dist(x,A)) at tolerance eps*delta/8 and reads A', B' off as level sets
/// of E_S f. Thresholds are theta_lo = min(1/4, (eps - 1/m)/(2 delta)) and
/// theta_hi = 1 - theta_lo with m the conditional-expectation grid, which
/// makes the point-level separation of A' and B' at least delta - eps.
SeparatedSetsResult separated_junta_sets(const BoxSet& A, const BoxSet& B, double delta,
                                         double epsilon, const EngineConfig& cfg,
                                         std::uint64_t seed = 0);

}  // namespace juntalab
