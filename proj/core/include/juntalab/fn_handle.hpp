#pragma once

#include <functional>
#include <memory>
#include <span>

#include "juntalab/common.hpp"
#include "juntalab/trig_poly.hpp"

namespace juntalab {

/// Evaluation contract for a black-box function on [0,1)^N. Torus handles
/// must be 1-periodic per coordinate; the optional gradient evaluator fills
/// all N partials at a point.
class FnHandle {
public:
    using Eval = std::function<double(std::span<const double>)>;
    using Grad = std::function<void(std::span<const double>, std::span<double>)>;

    FnHandle() = default;
    FnHandle(int dim, Domain domain, Eval eval, Grad grad = nullptr);

    int dim() const { return dim_; }
    Domain domain() const { return domain_; }
    double operator()(std::span<const double> x) const { return eval_(x); }
    bool has_gradient() const { return static_cast<bool>(grad_); }
    void gradient(std::span<const double> x, std::span<double> out) const;

    /// Wraps a trig poly as a torus handle (analytic gradient attached).
    static FnHandle from_poly(TrigPoly f);

private:
    int dim_ = 0;
    Domain domain_ = Domain::Torus;
    Eval eval_;
    Grad grad_;
};

/// The 2-Lipschitz measure-preserving tent surjection T -> [0,1]:
/// F(theta) = 2*theta on [0,1/2), 2 - 2*theta on [1/2,1).
double tent_map(double theta);

/// h on the cube composed with the coordinatewise tent map; pushes Haar on
/// T^N to the uniform measure on [0,1]^N. Gradients transfer by chain rule
/// where h supplies them.
FnHandle tent_transfer(const FnHandle& h);

/// Piecewise-constant function on the m-per-axis midpoint grid over the
/// coordinates in S (constant in all other coordinates).
FnHandle make_grid_junta(int dim, Domain domain, const CoordSet& S, int points_per_axis,
                         std::shared_ptr<const std::vector<double>> table);

/// Box-grid dump: CSV of midpoint node coordinates and values, full m^N
/// lattice in lexicographic order. read_grid_csv reconstructs a
/// piecewise-constant handle at the dumped resolution.
void write_grid_csv(const std::string& path, const FnHandle& h, int points_per_axis);
FnHandle read_grid_csv(const std::string& path, Domain domain = Domain::Cube);

}  // namespace juntalab
