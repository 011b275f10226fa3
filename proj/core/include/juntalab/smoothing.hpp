#pragma once

#include <complex>
#include <cstdint>

#include "juntalab/common.hpp"
#include "juntalab/fn_handle.hpp"
#include "juntalab/trig_poly.hpp"

namespace juntalab {

// Gaussian representation of the heat semigroup, estimated by Monte-Carlo:
//     P^g_s f(x) = average over j of f(x + y_j),  y_j ~ N(0, s I) on R^N,
// with one common offset set shared across x (so the result is an honest
// function of x). On a mode k the expected multiplier is
// exp(-2 pi^2 |k|^2 s); variance s = 2t therefore estimates heat(., t).

/// The shared offsets (row-major samples x dim), counter-seeded.
std::vector<double> gaussian_offsets(int dim, std::int64_t samples, double variance,
                                     std::uint64_t seed);

FnHandle heat_gaussian(const FnHandle& h, double variance, std::int64_t samples,
                       std::uint64_t seed);

/// Same operator applied in Fourier space with the same offsets: coefficient
/// c_k becomes c_k * mean_j e^{2 pi i k.y_j}. Agrees pointwise with the
/// handle version when the handle wraps f.
TrigPoly heat_gaussian(const TrigPoly& f, double variance, std::int64_t samples,
                       std::uint64_t seed);

struct ModeMultiplierEstimate {
    std::complex<double> mean;
    double half_width;  // 99% CI on |mean - exact| from the sample variance
    double exact;       // exp(-2 pi^2 |k|^2 s)
};

ModeMultiplierEstimate estimate_mode_multiplier(const Freq& k, double variance,
                                                std::int64_t samples, std::uint64_t seed);

/// exp(-2 pi^2 |k|^2 s), the exact Gaussian-representation multiplier.
double gaussian_mode_multiplier(const Freq& k, double variance);

}  // namespace juntalab
