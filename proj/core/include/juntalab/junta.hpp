#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "juntalab/common.hpp"
#include "juntalab/fn_handle.hpp"
#include "juntalab/quadrature.hpp"
#include "juntalab/trig_poly.hpp"

namespace juntalab {

enum class ScheduleMode { Certified, Empirical };

std::string to_string(ScheduleMode m);

/// Exponents of the smoothed-junta bound t^{-a} * eta^{b}:
///     a = e^{-2t} / (1 + e^{-2t}),   b = (1 - e^{-2t}) / (2 (1 + e^{-2t})).
double schedule_exponent_a(double t);
double schedule_exponent_b(double t);

/// (epsilon, t, eta) schedule for junta extraction.
///
/// Certified mode: t = eps^2/64 and log(eta) = (log(eps/4) + a log t)/b, so
/// t^{-a} eta^{b} = eps/4 < eps/2 by construction and the triangle bound
/// 4 sqrt(t) + t^{-a} eta^{b} = 3 eps/4 < eps. eta itself underflows to 0
/// for practical eps (1/b is enormous); log_eta is the exact carrier and
/// size bounds are handled in log space.
///
/// Empirical mode: same t; eta is chosen per-function inside extract_junta
/// by a monotone threshold sweep against the measured L1 error (heuristic,
/// no certificate). eta is NaN until extraction fills it in.
struct ParamSchedule {
    double epsilon = 0.0;
    double t = 0.0;
    double eta = 0.0;
    double log_eta = 0.0;  // natural log; exact even when eta underflows
    double a = 0.0;
    double b = 0.0;
    ScheduleMode mode = ScheduleMode::Empirical;
};

/// Requires eps in (0, 2].
ParamSchedule select_parameters(double epsilon, ScheduleMode mode);

/// Resolution knobs for the engine. cond_exp_points = 0 picks 64/32/16
/// points per axis for dim <= 3 / 4 / >= 5.
struct EngineConfig {
    QuadratureSpec quad;
    int cond_exp_points = 0;
    double fd_step = 1e-4;

    static EngineConfig defaults(int dim, std::uint64_t seed);
    int cond_exp_resolution(int dim) const;
    QuadratureSpec cond_exp_grid(int dim) const;
};

/// A function on a product domain: either an exact trig poly (torus) or a
/// black-box handle. One dispatching contract hides the difference: polys
/// use the exact operators, handles use grid conditional expectations and
/// finite-difference influences.
class ProductFn {
public:
    /*implicit*/ ProductFn(TrigPoly f) : v_(std::move(f)) {}
    /*implicit*/ ProductFn(FnHandle h) : v_(std::move(h)) {}

    int dim() const;
    Domain domain() const;
    bool is_poly() const { return std::holds_alternative<TrigPoly>(v_); }
    const TrigPoly& poly() const { return std::get<TrigPoly>(v_); }
    const FnHandle& handle() const { return std::get<FnHandle>(v_); }
    FnHandle as_handle() const;

    InfluenceProfile influence_profile(const EngineConfig& cfg) const;
    ProductFn conditional(const CoordSet& S, const EngineConfig& cfg) const;
    /// ||f - E_S f||_1.
    Estimate l1_projection_error(const CoordSet& S, const EngineConfig& cfg) const;
    Estimate mean_value(const EngineConfig& cfg) const;
    Estimate centered_l2(const EngineConfig& cfg) const;
    Estimate grad_l1(const EngineConfig& cfg) const;

private:
    std::variant<TrigPoly, FnHandle> v_;
};

struct JuntaApproximation {
    CoordSet S;
    ProductFn projection;
    Estimate l1_error;  // measured ||f - E_S f||_1, in the original scale
    ParamSchedule schedule;
    double size_bound;         // 1/eta; +inf when eta underflows
    bool size_certificate_ok;  // eta * |S| <= 1, checked in log space
    double theoretical_bound;  // certified: rescale*(4 sqrt(t) + t^-a eta^b); NaN empirical
    double rescale;            // c >= 1 applied to meet the normalized hypotheses
    std::string note;
};

/// Thresholds influences at eta and projects onto the surviving set.
/// Preconditions grad_norm(f,1) <= 1 and ||f - mean||_2 <= 1 are enforced by
/// rescaling (factor recorded in the result).
JuntaApproximation extract_junta(const ProductFn& f, double epsilon, const ParamSchedule& schedule,
                                 const EngineConfig& cfg);
JuntaApproximation extract_junta(const ProductFn& f, double epsilon, ScheduleMode mode,
                                 const EngineConfig& cfg);

/// ||f - E_S f||_1 with half-width.
Estimate junta_error(const ProductFn& f, const CoordSet& S, const EngineConfig& cfg);

struct OracleResult {
    CoordSet S;
    Estimate error;
};

/// Exhaustive minimization of ||f - E_S f||_1 over |S| <= max_size.
/// Guarded: throws when more than 10^4 subsets would be enumerated.
OracleResult best_junta_oracle(const ProductFn& f, int max_size, const EngineConfig& cfg);

}  // namespace juntalab
