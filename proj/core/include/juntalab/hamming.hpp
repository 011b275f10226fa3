#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "juntalab/common.hpp"
#include "juntalab/fn_handle.hpp"
#include "juntalab/junta.hpp"

namespace juntalab {

/// Per-coordinate base distance: |a-b| on the cube, wrapped on the torus.
double coordinate_distance(double a, double b, Domain domain);

/// Hamming metric d^N_1(x,y) = (1/N) sum_n d(x_n, y_n).
double hamming_distance(std::span<const double> x, std::span<const double> y,
                        Domain domain = Domain::Cube);

/// Sup-product metric d^N_inf(x,y) = max_n d(x_n, y_n).
double linf_point_distance(std::span<const double> x, std::span<const double> y,
                           Domain domain = Domain::Cube);

using BaseMetric = std::function<double(double, double)>;

/// Product metrics over an arbitrary base metric on the coordinate space.
double hamming_distance(std::span<const double> x, std::span<const double> y,
                        const BaseMetric& d);
double linf_point_distance(std::span<const double> x, std::span<const double> y,
                           const BaseMetric& d);

/// F = (F_1,...,F_M) : [0,1]^N -> [0,1]^M with a declared Hamming-Lipschitz
/// bound. alpha = M/N.
struct VectorMap {
    int input_dim = 0;
    int output_dim = 0;
    std::vector<FnHandle> components;
    double lipschitz = 1.0;
    std::string note;

    double alpha() const { return static_cast<double>(output_dim) / input_dim; }
};

/// x -> x (every component already a 1-junta); L = 1.
VectorMap identity_map(int n);

/// (x_1,...,x_{N-1}, (1+sin(2 pi (x_1+...+x_N)))/2), n >= 2. The published
/// form maps into [-1,1]; the affine rescale into [0,1] is recorded in the
/// note. Declared L = 1+pi, the map's actual Hamming-Lipschitz constant.
VectorMap sine_family(int n);

struct HammingComponent {
    int index = 0;       // 0-based component index
    bool selected = false;  // member of I
    CoordSet S;          // junta coordinates (selected components)
    Estimate l1_error;   // ||F_m - G_m||_1
    Estimate grad_mass;  // ||grad F_m||_{L1 l1}
    double constant = 0.0;  // replacement value when not selected
    FnHandle g;          // the junta (or constant) replacement
};

struct HammingJuntaResult {
    std::vector<HammingComponent> components;
    std::vector<int> selected;  // I, 0-based
    Estimate total_error;       // (1/M) sum_m ||F_m - G_m||_1
    double average_mass = 0.0;  // (1/M) sum_m grad mass
    double mass_budget = 0.0;   // L / alpha
    double selection_threshold = 0.0;  // 2L / (alpha eps)
    int max_junta_size = 0;
};

/// Splits components by gradient mass at 2L/(alpha eps), junta-approximates
/// the selected ones at tolerance eps/2 and replaces the rest by their
/// means. Errors if the average-mass precondition (1/M) sum g_m <= L/alpha
/// fails (the map is not L-Lipschitz as declared).
HammingJuntaResult hamming_junta_map(const VectorMap& F, double epsilon, const EngineConfig& cfg);

}  // namespace juntalab
