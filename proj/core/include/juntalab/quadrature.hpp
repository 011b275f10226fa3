#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "juntalab/common.hpp"
#include "juntalab/fn_handle.hpp"
#include "juntalab/trig_poly.hpp"

namespace juntalab {

/// Integration scheme over [0,1)^N with the probability measure.
///   TensorGrid: midpoint rule, points_per_axis per coordinate; half-widths
///     are the difference against the points_per_axis/2 estimate.
///   MonteCarlo: counter-seeded uniform samples; half-widths are 99%
///     confidence intervals from the sample variance. Deterministic given
///     (seed, samples) regardless of evaluation order.
struct QuadratureSpec {
    enum class Scheme { TensorGrid, MonteCarlo };

    Scheme scheme = Scheme::TensorGrid;
    int points_per_axis = 64;
    std::int64_t samples = std::int64_t{1} << 16;
    std::uint64_t seed = 0;

    static QuadratureSpec tensor_grid(int points_per_axis);
    static QuadratureSpec monte_carlo(std::int64_t samples, std::uint64_t seed);
    /// Spec default: 64-point grids up to dimension 3, Monte-Carlo with
    /// 2^16 samples above.
    static QuadratureSpec default_for(int dim, std::uint64_t seed);
    /// Scales total node count by ~factor (per-axis factor^(1/dim) for
    /// grids, sample factor for Monte-Carlo).
    QuadratureSpec scaled(double factor, int dim) const;

    std::int64_t total_nodes(int dim) const;
};

using VectorIntegrand = std::function<void(std::span<const double>, std::span<double>)>;
using ScalarIntegrand = std::function<double(std::span<const double>)>;

/// Integrates a vector-valued integrand; one Estimate per component.
std::vector<Estimate> integrate(const QuadratureSpec& quad, int dim, int components,
                                const VectorIntegrand& fn);
Estimate integrate_scalar(const QuadratureSpec& quad, int dim, const ScalarIntegrand& fn);

/// Supremum of fn over the quadrature nodes (a lower bound on the true sup).
double max_over_nodes(const QuadratureSpec& quad, int dim, const ScalarIntegrand& fn);

/// (integral of |h|^p)^(1/p). Requires p >= 1.
Estimate lp_norm_est(const FnHandle& h, double p, const QuadratureSpec& quad);
Estimate lp_norm_est(const TrigPoly& f, double p, const QuadratureSpec& quad);

/// Per-coordinate influences ||d/dx_n f||_1 with half-widths; the exact
/// ||d/dx_n f||_2 values ride along for trig polys.
struct InfluenceProfile {
    std::vector<Estimate> l1;
    std::vector<double> l2;  // exact (Parseval); empty for black-box inputs

    int dim() const { return static_cast<int>(l1.size()); }
    double total_l1() const;
    double total_l1_half_width() const;
};

InfluenceProfile influences(const TrigPoly& f, const QuadratureSpec& quad);
InfluenceProfile finite_diff_influences(const FnHandle& h, double step, const QuadratureSpec& quad);

/// (sum_n ||d/dx_n f||_p^p)^(1/p) for p in {1,2}; p = 2 is exact via
/// Parseval (zero half-width), p = 1 runs one shared-gradient quadrature.
Estimate grad_norm(const TrigPoly& f, int p, const QuadratureSpec& quad);

/// sup over quadrature nodes of sum_n |d/dx_n f(x)|; converges to Lip(f)
/// for the sup-product metric under grid refinement.
double lipschitz_constant(const TrigPoly& f, const QuadratureSpec& quad);

/// Conditional expectation of a black-box function by grid averaging over
/// the coordinates outside S. Tensor-grid specs only. The result is
/// piecewise constant on the S-grid cells.
FnHandle grid_cond_exp(const FnHandle& h, const CoordSet& S, const QuadratureSpec& quad);

/// ||h - grid_cond_exp(h,S)||_1 computed on the same grid (exactly zero for
/// full S by construction).
Estimate grid_junta_error(const FnHandle& h, const CoordSet& S, const QuadratureSpec& quad);

inline double kDefaultFdStep() { return 1e-4; }

}  // namespace juntalab
