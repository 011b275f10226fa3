#include "juntalab/junta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "juntalab/rng.hpp"
#include "juntalab/summation.hpp"

namespace juntalab {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

std::string to_string(ScheduleMode m) {
    return m == ScheduleMode::Certified ? "certified" : "empirical";
}

double schedule_exponent_a(double t) {
    require(t > 0.0, "schedule exponent: t must be positive");
    const double e = std::exp(-2.0 * t);
    return e / (1.0 + e);
}

double schedule_exponent_b(double t) {
    require(t > 0.0, "schedule exponent: t must be positive");
    const double e = std::exp(-2.0 * t);
    return (1.0 - e) / (2.0 * (1.0 + e));
}

ParamSchedule select_parameters(double epsilon, ScheduleMode mode) {
    require(epsilon > 0.0 && epsilon <= 2.0, "select_parameters: epsilon must be in (0, 2]");
    ParamSchedule s;
    s.epsilon = epsilon;
    s.mode = mode;
    s.t = epsilon * epsilon / 64.0;  // inside the required (0, eps^2/32) window
    s.a = schedule_exponent_a(s.t);
    s.b = schedule_exponent_b(s.t);
    if (mode == ScheduleMode::Certified) {
        s.log_eta = (std::log(epsilon / 4.0) + s.a * std::log(s.t)) / s.b;
        s.eta = std::exp(s.log_eta);  // may underflow to 0; log_eta stays exact
    } else {
        s.eta = kNaN;  // chosen per-function during extraction
        s.log_eta = kNaN;
    }
    return s;
}

EngineConfig EngineConfig::defaults(int dim, std::uint64_t seed) {
    EngineConfig cfg;
    cfg.quad = QuadratureSpec::default_for(dim, seed);
    cfg.cond_exp_points = 0;
    cfg.fd_step = 1e-4;
    return cfg;
}

int EngineConfig::cond_exp_resolution(int dim) const {
    if (cond_exp_points > 0) return cond_exp_points;
    if (dim <= 3) return 64;
    if (dim == 4) return 32;
    return 16;
}

QuadratureSpec EngineConfig::cond_exp_grid(int dim) const {
    return QuadratureSpec::tensor_grid(cond_exp_resolution(dim));
}

int ProductFn::dim() const {
    return is_poly() ? poly().dim() : handle().dim();
}

Domain ProductFn::domain() const {
    return is_poly() ? Domain::Torus : handle().domain();
}

FnHandle ProductFn::as_handle() const {
    return is_poly() ? FnHandle::from_poly(poly()) : handle();
}

InfluenceProfile ProductFn::influence_profile(const EngineConfig& cfg) const {
    if (is_poly()) return influences(poly(), cfg.quad);
    return finite_diff_influences(handle(), cfg.fd_step, cfg.quad);
}

ProductFn ProductFn::conditional(const CoordSet& S, const EngineConfig& cfg) const {
    if (is_poly()) return ProductFn(cond_exp(poly(), S));
    return ProductFn(grid_cond_exp(handle(), S, cfg.cond_exp_grid(dim())));
}

Estimate ProductFn::l1_projection_error(const CoordSet& S, const EngineConfig& cfg) const {
    if (is_poly()) {
        TrigPoly diff = poly() - cond_exp(poly(), S);
        return lp_norm_est(diff, 1.0, cfg.quad);
    }
    return grid_junta_error(handle(), S, cfg.cond_exp_grid(dim()));
}

Estimate ProductFn::mean_value(const EngineConfig& cfg) const {
    if (is_poly()) return {poly().mean(), 0.0};
    const FnHandle& h = handle();
    return integrate_scalar(cfg.quad, h.dim(), [&h](std::span<const double> x) { return h(x); });
}

Estimate ProductFn::centered_l2(const EngineConfig& cfg) const {
    if (is_poly()) {
        TrigPoly centered = poly() - TrigPoly::constant(poly().dim(), poly().mean());
        return {l2_norm(centered), 0.0};
    }
    const FnHandle& h = handle();
    const Estimate mean = mean_value(cfg);
    Estimate sq = integrate_scalar(cfg.quad, h.dim(), [&h, &mean](std::span<const double> x) {
        const double d = h(x) - mean.value;
        return d * d;
    });
    const double val = std::sqrt(std::max(0.0, sq.value));
    const double hi = std::sqrt(std::max(0.0, sq.value + sq.half_width));
    return {val, hi - val + mean.half_width};
}

Estimate ProductFn::grad_l1(const EngineConfig& cfg) const {
    if (is_poly()) return grad_norm(poly(), 1, cfg.quad);
    InfluenceProfile prof = influence_profile(cfg);
    return {prof.total_l1(), prof.total_l1_half_width()};
}

Estimate junta_error(const ProductFn& f, const CoordSet& S, const EngineConfig& cfg) {
    return f.l1_projection_error(S, cfg);
}

namespace {

/// Coordinates sorted by decreasing influence, grouped so that values whose
/// estimates overlap within half-widths are never split (spec's
/// conservative >=-threshold rule).
std::vector<std::vector<int>> tie_groups(const InfluenceProfile& prof) {
    const int dim = prof.dim();
    std::vector<int> order(dim);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&prof](int i, int j) {
        return prof.l1[i].value > prof.l1[j].value;
    });
    std::vector<std::vector<int>> groups;
    for (int idx : order) {
        const bool tie =
            !groups.empty() &&
            prof.l1[groups.back().back()].value - prof.l1[idx].value <=
                prof.l1[groups.back().back()].half_width + prof.l1[idx].half_width + 1e-12;
        if (tie)
            groups.back().push_back(idx);
        else
            groups.push_back({idx});
    }
    return groups;
}

struct CertifiedSelection {
    CoordSet S;
    bool certificate_ok;
};

CertifiedSelection threshold_select(const InfluenceProfile& prof, double log_eta, double rescale) {
    std::vector<int> members;
    for (int n = 0; n < prof.dim(); ++n) {
        const double inf_hi = (prof.l1[n].value + prof.l1[n].half_width) / rescale;
        if (inf_hi > 0.0 && std::log(inf_hi) >= log_eta) members.push_back(n);
    }
    CertifiedSelection sel{CoordSet(members, prof.dim()), true};
    if (sel.S.size() > 0)
        sel.certificate_ok = log_eta + std::log(static_cast<double>(sel.S.size())) <= 0.0;
    return sel;
}

}  // namespace

JuntaApproximation extract_junta(const ProductFn& f, double epsilon, const ParamSchedule& schedule,
                                 const EngineConfig& cfg) {
    require(epsilon > 0.0 && epsilon <= 2.0, "extract_junta: epsilon must be in (0, 2]");
    const int dim = f.dim();
    InfluenceProfile prof = f.influence_profile(cfg);

    // Normalized hypotheses: grad_norm(f,1) <= 1 and ||f - mean||_2 <= 1.
    const Estimate grad1{prof.total_l1(), prof.total_l1_half_width()};
    const Estimate centered = f.centered_l2(cfg);
    double rescale = std::max({1.0, grad1.value, centered.value});
    std::string note;
    if (rescale > 1.0 + 1e-9) {
        note = "input rescaled by 1/" + std::to_string(rescale) +
               " to meet grad-L1 <= 1 and centered-L2 <= 1; errors reported in original scale";
    } else {
        rescale = 1.0;
    }

    ParamSchedule sched = schedule;
    CoordSet S = CoordSet::empty(dim);
    bool certificate_ok = true;
    Estimate err{kNaN, 0.0};

    if (schedule.mode == ScheduleMode::Certified) {
        CertifiedSelection sel = threshold_select(prof, schedule.log_eta, rescale);
        S = sel.S;
        certificate_ok = sel.certificate_ok;
        err = junta_error(f, S, cfg);
    } else {
        // Monotone sweep: add coordinates in decreasing-influence order,
        // tie groups whole, until the measured error meets epsilon. The
        // full set has error 0, so the sweep terminates.
        const auto groups = tie_groups(prof);
        std::vector<int> members;
        double last_included = kNaN;
        std::size_t gi = 0;
        while (true) {
            CoordSet cand(members, dim);
            err = junta_error(f, cand, cfg);
            if (err.value < epsilon || cand.is_full()) {
                S = cand;
                break;
            }
            members.insert(members.end(), groups[gi].begin(), groups[gi].end());
            last_included = prof.l1[groups[gi].back()].value;
            ++gi;
        }
        // eta reproducing S through the >= rule: the smallest included
        // influence, or just above the largest when S is empty.
        double eta;
        if (S.is_empty()) {
            double top = 0.0;
            for (int n = 0; n < dim; ++n)
                top = std::max(top, prof.l1[n].value + prof.l1[n].half_width);
            eta = top + std::max(1e-9, 1e-6 * top);
        } else {
            eta = last_included;
            if (!(eta > 0.0)) eta = std::numeric_limits<double>::min();
        }
        sched.eta = eta;
        sched.log_eta = std::log(eta);
        if (S.size() > 0)
            certificate_ok = sched.log_eta + std::log(static_cast<double>(S.size())) <= 0.0;
    }
    JuntaApproximation out{S,
                           f.conditional(S, cfg),
                           err,
                           sched,
                           std::exp(-sched.log_eta),
                           certificate_ok,
                           kNaN,
                           rescale,
                           std::move(note)};
    if (schedule.mode == ScheduleMode::Certified) {
        // Valid triangle-bound chain in the spectral convention: P_{2t} has
        // Gaussian variance 4t, so ||f - P_{2t}f||_1 <= 2 sqrt(t) and
        // ||f - E_S f||_1 <= 4 sqrt(t) + t^{-a} eta^{b} (= 3 eps/4 here).
        const double tail = std::exp(-sched.a * std::log(sched.t) + sched.b * sched.log_eta);
        out.theoretical_bound = rescale * (4.0 * std::sqrt(sched.t) + tail);
    }
    return out;
}

JuntaApproximation extract_junta(const ProductFn& f, double epsilon, ScheduleMode mode,
                                 const EngineConfig& cfg) {
    return extract_junta(f, epsilon, select_parameters(epsilon, mode), cfg);
}

OracleResult best_junta_oracle(const ProductFn& f, int max_size, const EngineConfig& cfg) {
    const int dim = f.dim();
    require(max_size >= 0 && max_size <= dim, "best_junta_oracle: size cap out of range");

    // Guard the enumeration: sum of C(dim, j) for j <= max_size.
    double count = 0.0;
    {
        double binom = 1.0;
        for (int j = 0; j <= max_size; ++j) {
            count += binom;
            binom = binom * (dim - j) / (j + 1);
        }
    }
    require(count <= 1e4, "best_junta_oracle: enumeration guard exceeded (more than 10^4 subsets)");

    OracleResult best{CoordSet::empty(dim), {kInf, 0.0}};
    std::vector<int> subset;
    // enumerate by size, lexicographic inside each size
    for (int size = 0; size <= max_size; ++size) {
        subset.assign(size, 0);
        std::iota(subset.begin(), subset.end(), 0);
        while (true) {
            CoordSet S(subset, dim);
            Estimate err = junta_error(f, S, cfg);
            if (err.value < best.error.value) best = {S, err};
            if (size == 0) break;
            int i = size - 1;
            while (i >= 0 && subset[i] == dim - size + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    return best;
}

}  // namespace juntalab
