#include "juntalab/hamming.hpp"

#include <cmath>
#include <numbers>

#include "juntalab/summation.hpp"

namespace juntalab {

double coordinate_distance(double a, double b, Domain domain) {
    double d = std::abs(a - b);
    if (domain == Domain::Torus) {
        d = d - std::floor(d);
        d = std::min(d, 1.0 - d);
    }
    return d;
}

double hamming_distance(std::span<const double> x, std::span<const double> y, Domain domain) {
    require(x.size() == y.size(), "hamming_distance: dimension mismatch");
    require(!x.empty(), "hamming_distance: empty points");
    KahanSum s;
    for (std::size_t i = 0; i < x.size(); ++i) s.add(coordinate_distance(x[i], y[i], domain));
    return s.value() / static_cast<double>(x.size());
}

double linf_point_distance(std::span<const double> x, std::span<const double> y, Domain domain) {
    require(x.size() == y.size(), "linf_point_distance: dimension mismatch");
    require(!x.empty(), "linf_point_distance: empty points");
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        m = std::max(m, coordinate_distance(x[i], y[i], domain));
    return m;
}

double hamming_distance(std::span<const double> x, std::span<const double> y,
                        const BaseMetric& d) {
    require(x.size() == y.size(), "hamming_distance: dimension mismatch");
    require(!x.empty(), "hamming_distance: empty points");
    KahanSum s;
    for (std::size_t i = 0; i < x.size(); ++i) s.add(d(x[i], y[i]));
    return s.value() / static_cast<double>(x.size());
}

double linf_point_distance(std::span<const double> x, std::span<const double> y,
                           const BaseMetric& d) {
    require(x.size() == y.size(), "linf_point_distance: dimension mismatch");
    require(!x.empty(), "linf_point_distance: empty points");
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, d(x[i], y[i]));
    return m;
}

VectorMap identity_map(int n) {
    require(n >= 1, "identity_map: dimension must be >= 1");
    VectorMap F;
    F.input_dim = n;
    F.output_dim = n;
    F.lipschitz = 1.0;
    F.note = "identity";
    for (int m = 0; m < n; ++m) {
        F.components.emplace_back(
            n, Domain::Cube, [m](std::span<const double> x) { return x[m]; },
            [m, n](std::span<const double>, std::span<double> g) {
                for (int j = 0; j < n; ++j) g[j] = (j == m) ? 1.0 : 0.0;
            });
    }
    return F;
}

VectorMap sine_family(int n) {
    require(n >= 2, "sine_family: needs dimension >= 2");
    VectorMap F;
    F.input_dim = n;
    F.output_dim = n;
    F.lipschitz = 1.0 + std::numbers::pi;
    F.note =
        "last component (1+sin(2 pi sum x))/2, rescaled into [0,1] from the published [-1,1] "
        "range; declared L = 1+pi is the map's Hamming-Lipschitz constant (the nominal claim of "
        "2 ignores the sine term's per-coordinate stretch)";
    for (int m = 0; m < n - 1; ++m) {
        F.components.emplace_back(
            n, Domain::Cube, [m](std::span<const double> x) { return x[m]; },
            [m, n](std::span<const double>, std::span<double> g) {
                for (int j = 0; j < n; ++j) g[j] = (j == m) ? 1.0 : 0.0;
            });
    }
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    F.components.emplace_back(
        n, Domain::Cube,
        [n](std::span<const double> x) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += x[j];
            return (1.0 + std::sin(kTwoPi * s)) / 2.0;
        },
        [n](std::span<const double> x, std::span<double> g) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += x[j];
            const double d = std::numbers::pi * std::cos(kTwoPi * s);
            for (int j = 0; j < n; ++j) g[j] = d;
        });
    return F;
}

HammingJuntaResult hamming_junta_map(const VectorMap& F, double epsilon, const EngineConfig& cfg) {
    require(epsilon > 0.0 && epsilon <= 2.0, "hamming_junta_map: epsilon must be in (0, 2]");
    require(F.output_dim >= 1 && static_cast<int>(F.components.size()) == F.output_dim,
            "hamming_junta_map: component count mismatch");
    const int M = F.output_dim;
    const double alpha = F.alpha();

    HammingJuntaResult out;
    out.mass_budget = F.lipschitz / alpha;
    out.selection_threshold = 2.0 * F.lipschitz / (alpha * epsilon);

    // gradient mass per component
    std::vector<Estimate> mass(M);
    KahanSum mass_sum, mass_hw;
    for (int m = 0; m < M; ++m) {
        ProductFn fm(F.components[m]);
        mass[m] = fm.grad_l1(cfg);
        mass_sum.add(mass[m].value);
        mass_hw.add(mass[m].half_width);
    }
    out.average_mass = mass_sum.value() / M;
    const double avg_hw = mass_hw.value() / M;
    if (out.average_mass > out.mass_budget + avg_hw + 1e-9)
        throw std::invalid_argument(
            "hamming_junta_map: average gradient mass " + std::to_string(out.average_mass) +
            " exceeds L/alpha = " + std::to_string(out.mass_budget) +
            " (input is not L-Lipschitz as declared)");

    for (int m = 0; m < M; ++m) {
        HammingComponent comp;
        comp.index = m;
        comp.grad_mass = mass[m];
        comp.selected = mass[m].value <= out.selection_threshold + mass[m].half_width;
        if (comp.selected) {
            JuntaApproximation ja =
                extract_junta(ProductFn(F.components[m]), epsilon / 2.0, ScheduleMode::Empirical,
                              cfg);
            comp.S = ja.S;
            comp.l1_error = ja.l1_error;
            comp.g = ja.projection.as_handle();
            out.selected.push_back(m);
            out.max_junta_size = std::max(out.max_junta_size, ja.S.size());
        } else {
            // constant replacement: the component mean (any constant is a
            // valid 0-junta; values stay in [0,1])
            ProductFn fm(F.components[m]);
            const Estimate mean = fm.mean_value(cfg);
            comp.S = CoordSet::empty(F.input_dim);
            comp.constant = mean.value;
            const FnHandle& h = F.components[m];
            const double c = mean.value;
            comp.l1_error = integrate_scalar(
                cfg.quad, F.input_dim,
                [&h, c](std::span<const double> x) { return std::abs(h(x) - c); });
            comp.g = FnHandle(F.input_dim, Domain::Cube,
                              [c](std::span<const double>) { return c; });
        }
        out.components.push_back(std::move(comp));
    }

    const int selected_count = static_cast<int>(out.selected.size());
    if (selected_count < (1.0 - epsilon / 2.0) * M)
        throw std::logic_error("hamming_junta_map: selection bound |I| >= (1-eps/2)M failed");

    KahanSum err, err_hw;
    for (const auto& comp : out.components) {
        err.add(comp.l1_error.value);
        err_hw.add(comp.l1_error.half_width);
    }
    out.total_error = {err.value() / M, err_hw.value() / M};
    return out;
}

}  // namespace juntalab
