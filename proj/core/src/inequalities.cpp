#include "juntalab/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "juntalab/junta.hpp"
#include "juntalab/rng.hpp"
#include "juntalab/summation.hpp"

namespace juntalab {

namespace {

constexpr double kExactTol = 1e-12;
constexpr double kQuadTol = 1e-9;

void finalize(InequalityReport& r, bool exact) {
    r.tolerance = r.lhs_half_width + r.rhs_half_width + (exact ? kExactTol : kQuadTol);
    r.slack = r.rhs - r.lhs;
    r.pass = r.lhs <= r.rhs + r.tolerance;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

bool canonical_freq(const Freq& k) {
    for (int v : k) {
        if (v > 0) return true;
        if (v < 0) return false;
    }
    return true;
}

}  // namespace

TrigPoly random_trigpoly(const RandomPolySpec& spec) {
    require(spec.dim >= 1, "random_trigpoly: dimension must be >= 1");
    require(spec.degree >= 1, "random_trigpoly: degree must be >= 1");
    require(spec.max_modes >= 0, "random_trigpoly: mode budget must be >= 0");

    const int d = spec.dim;
    const int deg = spec.degree;
    std::vector<std::pair<Freq, std::complex<double>>> terms;
    std::uint64_t ctr = 0;
    auto coeff = [&](bool zero_mode) {
        const double re = spec.scale * (2.0 * uniform01(spec.seed, ctr++) - 1.0);
        const double im = zero_mode ? 0.0 : spec.scale * (2.0 * uniform01(spec.seed, ctr++) - 1.0);
        return std::complex<double>(re, im);
    };

    terms.emplace_back(Freq(d, 0), coeff(true));  // mean

    if (spec.max_modes == 0) {
        // full degree box, canonical representatives in lexicographic order
        Freq k(d, -deg);
        while (true) {
            if (canonical_freq(k) && std::any_of(k.begin(), k.end(), [](int v) { return v != 0; }))
                terms.emplace_back(k, coeff(false));
            int j = d - 1;
            while (j >= 0 && ++k[j] > deg) k[j--] = -deg;
            if (j < 0) break;
        }
    } else {
        // sparse support: rejection-sampled distinct canonical frequencies
        std::vector<Freq> seen;
        const int want = spec.max_modes;
        std::uint64_t draw = 1u << 20;  // separate counter stream for frequencies
        int attempts = 0;
        while (static_cast<int>(seen.size()) < want && attempts < 100000) {
            ++attempts;
            Freq k(d);
            for (int j = 0; j < d; ++j)
                k[j] = static_cast<int>(uniform_below(spec.seed, draw++, 2 * deg + 1)) - deg;
            if (std::all_of(k.begin(), k.end(), [](int v) { return v == 0; })) continue;
            if (!canonical_freq(k))
                for (int& v : k) v = -v;
            if (std::find(seen.begin(), seen.end(), k) != seen.end()) continue;
            seen.push_back(k);
        }
        std::sort(seen.begin(), seen.end());
        for (const auto& k : seen) terms.emplace_back(k, coeff(false));
    }

    TrigPoly f = TrigPoly::from_terms(d, terms);
    if (spec.normalize) {
        // sum_n ||d_n f||_2 >= sum_n ||d_n f||_1 = grad-L1, so dividing by
        // the max of that and the centered L2 norm certifies both targets.
        KahanSum grad_l2_sum;
        for (int n = 0; n < d; ++n) grad_l2_sum.add(partial_l2_norm(f, n));
        TrigPoly centered = f - TrigPoly::constant(d, f.mean());
        const double c = std::max({1.0, grad_l2_sum.value(), l2_norm(centered)});
        f *= 1.0 / c;
    }
    return f;
}

InequalityReport verify_heat_l1(const TrigPoly& f, double t, const QuadratureSpec& quad) {
    require(t > 0.0, "verify_heat_l1: t must be positive");
    InequalityReport r;
    r.name = "heat_l1";
    r.t = t;
    r.dim = f.dim();

    const double s = 2.0 * t;  // Gaussian variance matching exp(t*Laplacian)
    TrigPoly diff = f - heat(f, t);
    Estimate lhs = lp_norm_est(diff, 1.0, quad);
    Estimate grad1 = grad_norm(f, 1, quad);
    r.lhs = lhs.value;
    r.lhs_half_width = lhs.half_width;
    r.rhs = std::sqrt(s) * grad1.value;
    r.rhs_half_width = std::sqrt(s) * grad1.half_width;
    r.convention = "gaussian: ||f-P^g_s f||_1 <= sqrt(s)*||grad f||_L1l1 with s=2t=" + fmt(s) +
                   "; spectral: ||f-exp(t*Lap)f||_1 <= sqrt(2t)*||grad f||_L1l1 with t=" + fmt(t) +
                   " (same numbers)";
    finalize(r, false);
    return r;
}

InequalityReport verify_reverse_poincare(const TrigPoly& f, double t) {
    require(t > 0.0, "verify_reverse_poincare: t must be positive");
    InequalityReport r;
    r.name = "reverse_poincare";
    r.t = t;
    r.dim = f.dim();
    r.lhs = grad_norm_l2(heat(f, t));
    r.rhs = l2_norm(f) / std::sqrt(t);
    r.convention = "spectral P_t = exp(t*Laplacian); both sides exact via Parseval";
    finalize(r, true);
    return r;
}

InequalityReport verify_hypercontractivity(const TrigPoly& f, double t,
                                           const QuadratureSpec& quad) {
    require(t > 0.0, "verify_hypercontractivity: t must be positive");
    InequalityReport r;
    r.name = "hypercontractivity";
    r.t = t;
    r.dim = f.dim();
    r.p = 1.0 + std::exp(-2.0 * t);
    r.lhs = l2_norm(heat(f, t));
    // fractional p amplifies quadrature error near zeros of f; 4x nodes
    Estimate rhs = lp_norm_est(f, r.p, quad.scaled(4.0, f.dim()));
    r.rhs = rhs.value;
    r.rhs_half_width = rhs.half_width;
    r.convention = "spectral P_t = exp(t*Laplacian); p = 1+e^{-2t}";
    finalize(r, false);
    return r;
}

InequalityReport verify_poincare_junta(const TrigPoly& f, const CoordSet& S) {
    require(S.dim() == f.dim(), "verify_poincare_junta: coordinate set dimension mismatch");
    InequalityReport r;
    r.name = "poincare_junta";
    r.dim = f.dim();
    const double res = l2_norm(f - cond_exp(f, S));
    r.lhs = res * res;
    KahanSum rhs;
    for (int n = 0; n < f.dim(); ++n) {
        if (S.contains(n)) continue;
        const double pn = partial_l2_norm(f, n);
        rhs.add(pn * pn);
    }
    r.rhs = rhs.value();
    r.convention = "squared quantities; exact via Parseval";
    finalize(r, true);
    return r;
}

InequalityReport verify_smoothed_junta(const TrigPoly& f, double t, double eta,
                                       const QuadratureSpec& quad) {
    require(t > 0.0, "verify_smoothed_junta: t must be positive");
    require(eta > 0.0, "verify_smoothed_junta: eta must be positive");
    InequalityReport r;
    r.name = "smoothed_junta";
    r.t = t;
    r.eta = eta;
    r.dim = f.dim();

    Estimate grad1 = grad_norm(f, 1, quad);
    const double l2full = l2_norm(f);
    const double c = std::max({1.0, grad1.value, l2full});
    TrigPoly g = f;
    std::string note = "spectral convention";
    if (c > 1.0 + 1e-12) {
        g *= 1.0 / c;
        note += "; input rescaled by 1/" + fmt(c) + " to meet grad-L1 <= 1 and L2 <= 1";
    }

    InfluenceProfile prof = influences(g, quad);
    std::vector<int> members;
    for (int n = 0; n < g.dim(); ++n)
        if (prof.l1[n].value + prof.l1[n].half_width >= eta) members.push_back(n);
    CoordSet S(members, g.dim());

    TrigPoly smoothed = heat(g, 2.0 * t);
    r.lhs = l2_norm(smoothed - cond_exp(smoothed, S));
    const double a = schedule_exponent_a(t);
    const double b = schedule_exponent_b(t);
    r.rhs = std::pow(t, -a) * std::pow(eta, b);
    r.convention = note + "; S = {n : ||d_n f||_1 >= eta}, |S| = " + std::to_string(S.size());
    finalize(r, true);
    return r;
}

InequalityReport verify_junta_triangle(const TrigPoly& f, double t, double eta,
                                       const QuadratureSpec& quad) {
    require(t > 0.0, "verify_junta_triangle: t must be positive");
    require(eta > 0.0, "verify_junta_triangle: eta must be positive");
    InequalityReport r;
    r.name = "junta_triangle";
    r.t = t;
    r.eta = eta;
    r.dim = f.dim();

    InfluenceProfile prof = influences(f, quad);
    std::vector<int> members;
    for (int n = 0; n < f.dim(); ++n)
        if (prof.l1[n].value + prof.l1[n].half_width >= eta) members.push_back(n);
    CoordSet S(members, f.dim());

    TrigPoly smoothed = heat(f, 2.0 * t);
    Estimate lhs = lp_norm_est(f - cond_exp(f, S), 1.0, quad);
    Estimate drift = lp_norm_est(f - smoothed, 1.0, quad);
    const double l2_tail = l2_norm(smoothed - cond_exp(smoothed, S));
    r.lhs = lhs.value;
    r.lhs_half_width = lhs.half_width;
    r.rhs = 2.0 * drift.value + l2_tail;
    r.rhs_half_width = 2.0 * drift.half_width;
    r.convention = "measured triangle bound, spectral P_{2t}; |S| = " + std::to_string(S.size());
    finalize(r, false);
    return r;
}

std::vector<InequalityReport> run_suite(const SuiteSpec& suite) {
    require(suite.count >= 1, "run_suite: instance count must be >= 1");
    require(suite.dim_max >= 1, "run_suite: dim_max must be >= 1");
    std::vector<InequalityReport> out;

    for (int i = 0; i < suite.count; ++i) {
        const std::uint64_t inst_seed = derive_seed(suite.seed, static_cast<std::uint64_t>(i));
        RandomPolySpec ps;
        ps.dim = 1 + static_cast<int>(uniform_below(inst_seed, 0, suite.dim_max));
        ps.degree = suite.degree;
        ps.scale = suite.scale;
        ps.seed = derive_seed(inst_seed, 1);
        ps.normalize = true;
        // full degree boxes stay cheap only through dimension 2; above that
        // the suite's sparse mode budget applies
        if (suite.max_modes > 0 && ps.dim > 2) ps.max_modes = suite.max_modes;
        TrigPoly f = random_trigpoly(ps);

        const QuadratureSpec quad = QuadratureSpec::default_for(ps.dim, derive_seed(inst_seed, 2));
        for (const auto& check : suite.checks) {
            auto push = [&](InequalityReport r) {
                r.degree = ps.degree;
                r.seed = ps.seed;
                out.push_back(std::move(r));
            };
            if (check.name == "heat_l1") {
                for (double t : check.t_values) push(verify_heat_l1(f, t, quad));
            } else if (check.name == "reverse_poincare") {
                for (double t : check.t_values) push(verify_reverse_poincare(f, t));
            } else if (check.name == "hypercontractivity") {
                for (double t : check.t_values) push(verify_hypercontractivity(f, t, quad));
            } else if (check.name == "poincare_junta") {
                // random proper subset of the coordinates
                std::vector<int> members;
                const std::uint64_t sseed = derive_seed(inst_seed, 3);
                for (int n = 0; n < ps.dim; ++n)
                    if (uniform01(sseed, n) < 0.5) members.push_back(n);
                if (static_cast<int>(members.size()) == ps.dim) members.pop_back();
                push(verify_poincare_junta(f, CoordSet(members, ps.dim)));
            } else if (check.name == "smoothed_junta") {
                for (double t : check.t_values)
                    for (double eta : check.eta_values) push(verify_smoothed_junta(f, t, eta, quad));
            } else if (check.name == "junta_triangle") {
                for (double t : check.t_values)
                    for (double eta : check.eta_values) push(verify_junta_triangle(f, t, eta, quad));
            } else {
                throw std::invalid_argument("run_suite: unknown check '" + check.name + "'");
            }
        }
    }
    return out;
}

}  // namespace juntalab
