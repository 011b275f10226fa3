#include "juntalab/smoothing.hpp"

#include <cmath>
#include <memory>
#include <numbers>

#include "juntalab/rng.hpp"
#include "juntalab/summation.hpp"

namespace juntalab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

int freq_norm_sq(const Freq& k) {
    int s = 0;
    for (int v : k) s += v * v;
    return s;
}
}  // namespace

std::vector<double> gaussian_offsets(int dim, std::int64_t samples, double variance,
                                     std::uint64_t seed) {
    require(dim >= 1, "gaussian_offsets: dimension must be >= 1");
    require(samples >= 1, "gaussian_offsets: sample count must be >= 1");
    require(variance >= 0.0, "gaussian_offsets: variance must be nonnegative");
    const double sd = std::sqrt(variance);
    std::vector<double> y(static_cast<std::size_t>(samples) * dim);
    for (std::int64_t i = 0; i < samples; ++i)
        for (int j = 0; j < dim; ++j)
            y[static_cast<std::size_t>(i) * dim + j] =
                sd * normal01(seed, static_cast<std::uint64_t>(i) * dim + j);
    return y;
}

FnHandle heat_gaussian(const FnHandle& h, double variance, std::int64_t samples,
                       std::uint64_t seed) {
    const int dim = h.dim();
    auto offsets = std::make_shared<std::vector<double>>(
        gaussian_offsets(dim, samples, variance, seed));
    auto inner = std::make_shared<FnHandle>(h);
    const bool torus = h.domain() == Domain::Torus;
    return FnHandle(dim, h.domain(),
                    [inner, offsets, samples, dim, torus](std::span<const double> x) {
                        KahanSum acc;
                        std::vector<double> pt(dim);
                        for (std::int64_t i = 0; i < samples; ++i) {
                            const double* y = offsets->data() + static_cast<std::size_t>(i) * dim;
                            for (int j = 0; j < dim; ++j) {
                                double v = x[j] + y[j];
                                if (torus) v -= std::floor(v);
                                pt[j] = v;
                            }
                            acc.add((*inner)(pt));
                        }
                        return acc.value() / static_cast<double>(samples);
                    });
}

TrigPoly heat_gaussian(const TrigPoly& f, double variance, std::int64_t samples,
                       std::uint64_t seed) {
    const int dim = f.dim();
    const std::vector<double> y = gaussian_offsets(dim, samples, variance, seed);
    std::vector<std::complex<double>> mult;
    mult.reserve(f.term_count());
    for (const auto& [k, c] : f.terms()) {
        KahanSum re, im;
        for (std::int64_t i = 0; i < samples; ++i) {
            double dot = 0.0;
            const double* yi = y.data() + static_cast<std::size_t>(i) * dim;
            for (int j = 0; j < dim; ++j) dot += k[j] * yi[j];
            re.add(std::cos(kTwoPi * dot));
            im.add(std::sin(kTwoPi * dot));
        }
        mult.emplace_back(re.value() / samples, im.value() / samples);
    }
    return apply_multiplier(f, mult);
}

double gaussian_mode_multiplier(const Freq& k, double variance) {
    return std::exp(-2.0 * std::numbers::pi * std::numbers::pi * freq_norm_sq(k) * variance);
}

ModeMultiplierEstimate estimate_mode_multiplier(const Freq& k, double variance,
                                                std::int64_t samples, std::uint64_t seed) {
    const int dim = static_cast<int>(k.size());
    const std::vector<double> y = gaussian_offsets(dim, samples, variance, seed);
    KahanSum re, im, sq;
    for (std::int64_t i = 0; i < samples; ++i) {
        double dot = 0.0;
        const double* yi = y.data() + static_cast<std::size_t>(i) * dim;
        for (int j = 0; j < dim; ++j) dot += k[j] * yi[j];
        const double c = std::cos(kTwoPi * dot);
        const double s = std::sin(kTwoPi * dot);
        re.add(c);
        im.add(s);
        sq.add(c * c + s * s);
    }
    const double n = static_cast<double>(samples);
    ModeMultiplierEstimate out;
    out.mean = {re.value() / n, im.value() / n};
    const double var = std::max(0.0, sq.value() / n - std::norm(out.mean));
    out.half_width = samples > 1 ? kZ99 * std::sqrt(var / n) : 0.0;
    out.exact = gaussian_mode_multiplier(k, variance);
    return out;
}

}  // namespace juntalab
