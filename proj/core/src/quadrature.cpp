#include "juntalab/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "juntalab/rng.hpp"
#include "juntalab/summation.hpp"

namespace juntalab {

namespace {

constexpr std::int64_t kMaxGridNodes = std::int64_t{1} << 27;

std::int64_t grid_total(int dim, int m) {
    std::int64_t total = 1;
    for (int j = 0; j < dim; ++j) {
        total *= m;
        require(total <= kMaxGridNodes, "tensor grid too large (raise scheme to Monte-Carlo)");
    }
    return total;
}

/// One full midpoint sweep at resolution m; returns component means.
std::vector<double> grid_pass(int dim, int m, int components, const VectorIntegrand& fn) {
    const std::int64_t total = grid_total(dim, m);
    KahanVec acc(components);
    std::vector<int> digit(dim, 0);
    std::vector<double> x(dim), out(components);
    for (std::int64_t i = 0; i < total; ++i) {
        for (int j = 0; j < dim; ++j) x[j] = (digit[j] + 0.5) / m;
        fn(x, out);
        for (int c = 0; c < components; ++c) acc.add(c, out[c]);
        int j = dim - 1;
        while (j >= 0 && ++digit[j] == m) digit[j--] = 0;
    }
    std::vector<double> mean(components);
    for (int c = 0; c < components; ++c) mean[c] = acc.value(c) / static_cast<double>(total);
    return mean;
}

}  // namespace

QuadratureSpec QuadratureSpec::tensor_grid(int points_per_axis) {
    require(points_per_axis >= 1, "QuadratureSpec: points_per_axis must be >= 1");
    QuadratureSpec q;
    q.scheme = Scheme::TensorGrid;
    q.points_per_axis = points_per_axis;
    return q;
}

QuadratureSpec QuadratureSpec::monte_carlo(std::int64_t samples, std::uint64_t seed) {
    require(samples >= 1, "QuadratureSpec: sample count must be >= 1");
    QuadratureSpec q;
    q.scheme = Scheme::MonteCarlo;
    q.samples = samples;
    q.seed = seed;
    return q;
}

QuadratureSpec QuadratureSpec::default_for(int dim, std::uint64_t seed) {
    if (dim <= 3) {
        QuadratureSpec q = tensor_grid(64);
        q.seed = seed;
        return q;
    }
    return monte_carlo(std::int64_t{1} << 16, seed);
}

QuadratureSpec QuadratureSpec::scaled(double factor, int dim) const {
    require(factor > 0.0, "QuadratureSpec: scale factor must be positive");
    QuadratureSpec q = *this;
    if (scheme == Scheme::MonteCarlo) {
        q.samples = std::max<std::int64_t>(1, static_cast<std::int64_t>(
                                                  std::llround(samples * factor)));
    } else {
        const double per_axis = points_per_axis * std::pow(factor, 1.0 / dim);
        q.points_per_axis = std::max(1, static_cast<int>(std::llround(per_axis)));
    }
    return q;
}

std::int64_t QuadratureSpec::total_nodes(int dim) const {
    if (scheme == Scheme::MonteCarlo) return samples;
    std::int64_t total = 1;
    for (int j = 0; j < dim; ++j) total *= points_per_axis;
    return total;
}

std::vector<Estimate> integrate(const QuadratureSpec& quad, int dim, int components,
                                const VectorIntegrand& fn) {
    require(dim >= 1, "integrate: dimension must be >= 1");
    require(components >= 1, "integrate: need at least one component");

    std::vector<Estimate> result(components);
    if (quad.scheme == QuadratureSpec::Scheme::TensorGrid) {
        const int m = quad.points_per_axis;
        const std::vector<double> fine = grid_pass(dim, m, components, fn);
        if (m >= 2) {
            const std::vector<double> coarse = grid_pass(dim, m / 2, components, fn);
            for (int c = 0; c < components; ++c)
                result[c] = {fine[c], std::abs(fine[c] - coarse[c])};
        } else {
            for (int c = 0; c < components; ++c) result[c] = {fine[c], 0.0};
        }
        return result;
    }

    const std::int64_t n = quad.samples;
    KahanVec sum(components), sumsq(components);
    std::vector<double> x(dim), out(components);
    for (std::int64_t i = 0; i < n; ++i) {
        for (int j = 0; j < dim; ++j)
            x[j] = uniform01(quad.seed, static_cast<std::uint64_t>(i) * dim + j);
        fn(x, out);
        for (int c = 0; c < components; ++c) {
            sum.add(c, out[c]);
            sumsq.add(c, out[c] * out[c]);
        }
    }
    for (int c = 0; c < components; ++c) {
        const double mean = sum.value(c) / static_cast<double>(n);
        double hw = 0.0;
        if (n > 1) {
            const double var =
                std::max(0.0, (sumsq.value(c) / n - mean * mean) * (double(n) / (n - 1)));
            hw = kZ99 * std::sqrt(var / static_cast<double>(n));
        }
        result[c] = {mean, hw};
    }
    return result;
}

Estimate integrate_scalar(const QuadratureSpec& quad, int dim, const ScalarIntegrand& fn) {
    auto r = integrate(quad, dim, 1,
                       [&fn](std::span<const double> x, std::span<double> out) { out[0] = fn(x); });
    return r[0];
}

double max_over_nodes(const QuadratureSpec& quad, int dim, const ScalarIntegrand& fn) {
    require(dim >= 1, "max_over_nodes: dimension must be >= 1");
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> x(dim);
    if (quad.scheme == QuadratureSpec::Scheme::TensorGrid) {
        const int m = quad.points_per_axis;
        const std::int64_t total = grid_total(dim, m);
        std::vector<int> digit(dim, 0);
        for (std::int64_t i = 0; i < total; ++i) {
            for (int j = 0; j < dim; ++j) x[j] = (digit[j] + 0.5) / m;
            best = std::max(best, fn(x));
            int j = dim - 1;
            while (j >= 0 && ++digit[j] == m) digit[j--] = 0;
        }
        return best;
    }
    for (std::int64_t i = 0; i < quad.samples; ++i) {
        for (int j = 0; j < dim; ++j)
            x[j] = uniform01(quad.seed, static_cast<std::uint64_t>(i) * dim + j);
        best = std::max(best, fn(x));
    }
    return best;
}

namespace {

Estimate power_norm(Estimate integral, double p) {
    const double lo = std::max(0.0, integral.value - integral.half_width);
    const double hi = std::max(0.0, integral.value + integral.half_width);
    const double mid = std::pow(std::max(0.0, integral.value), 1.0 / p);
    const double up = std::pow(hi, 1.0 / p) - mid;
    const double down = mid - std::pow(lo, 1.0 / p);
    return {mid, std::max(up, down)};
}

}  // namespace

Estimate lp_norm_est(const FnHandle& h, double p, const QuadratureSpec& quad) {
    require(p >= 1.0, "lp_norm_est: p must be >= 1");
    Estimate integral = integrate_scalar(quad, h.dim(), [&h, p](std::span<const double> x) {
        const double v = std::abs(h(x));
        if (!std::isfinite(v)) throw std::runtime_error("lp_norm_est: non-finite evaluation");
        return p == 1.0 ? v : std::pow(v, p);
    });
    return p == 1.0 ? integral : power_norm(integral, p);
}

Estimate lp_norm_est(const TrigPoly& f, double p, const QuadratureSpec& quad) {
    require(p >= 1.0, "lp_norm_est: p must be >= 1");
    if (p == 2.0) return {l2_norm(f), 0.0};  // Parseval, exact
    CachedTrigEvaluator ev(f);
    Estimate integral = integrate_scalar(quad, f.dim(), [&ev, p](std::span<const double> x) {
        const double v = std::abs(ev.eval(x));
        return p == 1.0 ? v : std::pow(v, p);
    });
    return p == 1.0 ? integral : power_norm(integral, p);
}

double InfluenceProfile::total_l1() const {
    KahanSum s;
    for (const auto& e : l1) s.add(e.value);
    return s.value();
}

double InfluenceProfile::total_l1_half_width() const {
    KahanSum s;
    for (const auto& e : l1) s.add(e.half_width);
    return s.value();
}

InfluenceProfile influences(const TrigPoly& f, const QuadratureSpec& quad) {
    const int dim = f.dim();
    CachedTrigEvaluator ev(f);
    std::vector<Estimate> est =
        integrate(quad, dim, dim, [&ev, dim](std::span<const double> x, std::span<double> out) {
            ev.eval_gradient(x, out);
            for (int j = 0; j < dim; ++j) out[j] = std::abs(out[j]);
        });
    InfluenceProfile prof;
    prof.l1 = std::move(est);
    prof.l2.resize(dim);
    for (int j = 0; j < dim; ++j) prof.l2[j] = partial_l2_norm(f, j);
    return prof;
}

InfluenceProfile finite_diff_influences(const FnHandle& h, double step,
                                        const QuadratureSpec& quad) {
    require(step > 0.0, "finite_diff_influences: step must be positive");
    const int dim = h.dim();
    const bool torus = h.domain() == Domain::Torus;
    const bool analytic = h.has_gradient();

    VectorIntegrand fn = [&h, step, dim, torus, analytic](std::span<const double> x,
                                                          std::span<double> out) {
        if (analytic) {
            h.gradient(x, out);
            for (int j = 0; j < dim; ++j) {
                if (!std::isfinite(out[j]))
                    throw std::runtime_error("finite_diff_influences: non-finite gradient");
                out[j] = std::abs(out[j]);
            }
            return;
        }
        std::vector<double> pt(x.begin(), x.end());
        for (int j = 0; j < dim; ++j) {
            const double xj = x[j];
            double d;
            if (torus) {
                pt[j] = xj + step - std::floor(xj + step);
                const double up = h(pt);
                pt[j] = xj - step - std::floor(xj - step);
                const double dn = h(pt);
                d = (up - dn) / (2.0 * step);
            } else if (xj + step > 1.0) {  // one-sided at the cube boundary
                const double at = h(x);
                pt[j] = xj - step;
                d = (at - h(pt)) / step;
            } else if (xj - step < 0.0) {
                pt[j] = xj + step;
                const double at = h(x);
                d = (h(pt) - at) / step;
            } else {
                pt[j] = xj + step;
                const double up = h(pt);
                pt[j] = xj - step;
                const double dn = h(pt);
                d = (up - dn) / (2.0 * step);
            }
            pt[j] = xj;
            if (!std::isfinite(d))
                throw std::runtime_error("finite_diff_influences: non-finite evaluation");
            out[j] = std::abs(d);
        }
    };

    InfluenceProfile prof;
    prof.l1 = integrate(quad, dim, dim, fn);
    return prof;
}

Estimate grad_norm(const TrigPoly& f, int p, const QuadratureSpec& quad) {
    if (p == 2) return {grad_norm_l2(f), 0.0};
    require(p == 1, "grad_norm: p must be 1 or 2");
    const int dim = f.dim();
    CachedTrigEvaluator ev(f);
    std::vector<double> g(dim);
    return integrate_scalar(quad, dim, [&ev, &g, dim](std::span<const double> x) {
        ev.eval_gradient(x, g);
        double s = 0.0;
        for (int j = 0; j < dim; ++j) s += std::abs(g[j]);
        return s;
    });
}

double lipschitz_constant(const TrigPoly& f, const QuadratureSpec& quad) {
    const int dim = f.dim();
    CachedTrigEvaluator ev(f);
    std::vector<double> g(dim);
    return max_over_nodes(quad, dim, [&ev, &g, dim](std::span<const double> x) {
        ev.eval_gradient(x, g);
        double s = 0.0;
        for (int j = 0; j < dim; ++j) s += std::abs(g[j]);
        return s;
    });
}

FnHandle grid_cond_exp(const FnHandle& h, const CoordSet& S, const QuadratureSpec& quad) {
    require(quad.scheme == QuadratureSpec::Scheme::TensorGrid,
            "grid_cond_exp: requires a tensor-grid quadrature spec");
    require(S.dim() == h.dim(), "grid_cond_exp: coordinate set dimension mismatch");
    const int dim = h.dim();
    const int m = quad.points_per_axis;
    const std::int64_t total = grid_total(dim, m);

    std::size_t table_size = 1;
    for (int i = 0; i < S.size(); ++i) table_size *= static_cast<std::size_t>(m);
    std::vector<KahanSum> acc(table_size);

    const std::vector<int>& sc = S.coords();
    std::vector<int> digit(dim, 0);
    std::vector<double> x(dim);
    for (std::int64_t i = 0; i < total; ++i) {
        for (int j = 0; j < dim; ++j) x[j] = (digit[j] + 0.5) / m;
        std::size_t idx = 0;
        for (int c : sc) idx = idx * m + digit[c];
        acc[idx].add(h(x));
        int j = dim - 1;
        while (j >= 0 && ++digit[j] == m) digit[j--] = 0;
    }
    const double fiber = static_cast<double>(total) / static_cast<double>(table_size);
    auto table = std::make_shared<std::vector<double>>(table_size);
    for (std::size_t i = 0; i < table_size; ++i) (*table)[i] = acc[i].value() / fiber;
    return make_grid_junta(dim, h.domain(), S, m, std::move(table));
}

Estimate grid_junta_error(const FnHandle& h, const CoordSet& S, const QuadratureSpec& quad) {
    FnHandle proj = grid_cond_exp(h, S, quad);
    return integrate_scalar(quad, h.dim(), [&h, &proj](std::span<const double> x) {
        return std::abs(h(x) - proj(x));
    });
}

}  // namespace juntalab
