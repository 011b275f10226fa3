#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "juntalab/common.hpp"
#include "juntalab/quadrature.hpp"
#include "juntalab/trig_poly.hpp"

namespace juntalab {

/// Outcome of one numerical inequality check. pass means
/// lhs <= rhs + tolerance where tolerance combines the estimator
/// half-widths with 1e-12 (exact comparisons) or 1e-9 (quadrature).
struct InequalityReport {
    std::string name;
    double t = 0.0;
    double eta = 0.0;
    double p = 0.0;
    int dim = 0;
    int degree = 0;
    std::uint64_t seed = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double lhs_half_width = 0.0;
    double rhs_half_width = 0.0;
    double tolerance = 0.0;
    double slack = 0.0;  // rhs - lhs
    bool pass = false;
    std::string convention;
};

struct RandomPolySpec {
    int dim = 1;
    int degree = 1;          // max |k_j| per coordinate
    double scale = 1.0;      // coefficient magnitude scale
    std::uint64_t seed = 0;
    int max_modes = 0;       // nonzero-frequency budget; 0 = full box
    bool normalize = false;  // rescale to grad-L1 <= 1 and centered-L2 <= 1
};

/// Seeded random real trig poly on the degree box. Deterministic and
/// bit-exact given the spec. Normalization divides by
/// max(1, sum_n ||d_n f||_2, ||f - mean||_2), which dominates both target
/// norms exactly.
TrigPoly random_trigpoly(const RandomPolySpec& spec);

/// ||f - P^g_s f||_1 <= sqrt(s) ||grad f||_{L1 l1} in the variance-s
/// Gaussian convention; identically ||f - heat(f,t)||_1 <= sqrt(2t) * same
/// in the spectral convention (s = 2t). One check, both labels reported.
InequalityReport verify_heat_l1(const TrigPoly& f, double t, const QuadratureSpec& quad);

/// ||grad P_t f||_{L2 l2} <= ||f||_2 / sqrt(t); all sides exact (Parseval).
InequalityReport verify_reverse_poincare(const TrigPoly& f, double t);

/// ||P_t f||_2 <= ||f||_p with p = 1 + e^{-2t}; L2 side exact, Lp side
/// quadrature at ~4x the supplied node count.
InequalityReport verify_hypercontractivity(const TrigPoly& f, double t,
                                           const QuadratureSpec& quad);

/// ||f - E_S f||_2^2 <= sum_{n not in S} ||d_n f||_2^2; exact both sides
/// (lhs/rhs are the squared quantities).
InequalityReport verify_poincare_junta(const TrigPoly& f, const CoordSet& S);

/// With S = {n : ||d_n f||_1 >= eta}:
/// ||P_2t f - E_S P_2t f||_2 < t^{-a} eta^{b}. L2 quantities exact;
/// preconditions grad-L1 <= 1 and ||f||_2 <= 1 enforced by rescaling
/// (noted in the report).
InequalityReport verify_smoothed_junta(const TrigPoly& f, double t, double eta,
                                       const QuadratureSpec& quad);

/// Measured composite triangle bound behind the junta approximation:
/// ||f - E_S f||_1 <= 2 ||f - P_2t f||_1 + ||P_2t f - E_S P_2t f||_2.
InequalityReport verify_junta_triangle(const TrigPoly& f, double t, double eta,
                                       const QuadratureSpec& quad);

/// Suite definition (see suites/*.json): a seeded family of random
/// normalized polys crossed with a list of checks and parameter grids.
struct SuiteCheck {
    std::string name;                // heat_l1 | reverse_poincare | ...
    std::vector<double> t_values;    // empty where not applicable
    std::vector<double> eta_values;  // smoothed_junta / junta_triangle only
};

struct SuiteSpec {
    int count = 10;
    int dim_max = 3;
    int degree = 3;
    double scale = 0.5;
    int max_modes = 0;
    std::uint64_t seed = 0;
    std::vector<SuiteCheck> checks;
};

std::vector<InequalityReport> run_suite(const SuiteSpec& suite);

}  // namespace juntalab
