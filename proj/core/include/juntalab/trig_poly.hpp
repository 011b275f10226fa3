#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "juntalab/common.hpp"

namespace juntalab {

/// Real-valued trigonometric polynomial on T^N = (R/Z)^N,
///     f(x) = sum_k c_k e^{2*pi*i k.x},   c_{-k} = conj(c_k).
///
/// Storage is canonical: only one representative per conjugate pair is kept
/// (k = 0, or the first nonzero component of k positive), the 0-frequency
/// coefficient is real, and coefficients with magnitude below
/// kPruneThreshold are dropped. Hermitian symmetry is therefore structural
/// and cannot drift through operations.
class TrigPoly {
public:
    static constexpr double kPruneThreshold = 1e-15;

    explicit TrigPoly(int dim);

    static TrigPoly constant(int dim, double value);
    /// Sets the Fourier coefficient at k to amplitude (and conj at -k).
    static TrigPoly harmonic(int dim, const Freq& k, std::complex<double> amplitude);
    /// amp * cos(2 pi k.x) and amp * sin(2 pi k.x); k must be nonzero.
    static TrigPoly cosine(int dim, const Freq& k, double amp = 1.0);
    static TrigPoly sine(int dim, const Freq& k, double amp = 1.0);
    /// Builds from a list of (frequency, coefficient) pairs. The list may
    /// carry one or both members of each conjugate pair; inconsistent pairs
    /// are rejected.
    static TrigPoly from_terms(int dim,
                               const std::vector<std::pair<Freq, std::complex<double>>>& terms);

    int dim() const { return dim_; }
    /// Canonical representatives only; conjugate halves are implied.
    const std::map<Freq, std::complex<double>>& terms() const { return coeffs_; }
    int term_count() const { return static_cast<int>(coeffs_.size()); }
    bool is_zero() const { return coeffs_.empty(); }

    /// Fourier coefficient at any k (returns the implied conjugate for
    /// non-canonical k, 0 if absent).
    std::complex<double> coefficient(const Freq& k) const;
    double mean() const;

    /// Max |k_j| over the support, per axis.
    std::vector<int> axis_degrees() const;

    double eval(std::span<const double> x) const;

    TrigPoly& operator+=(const TrigPoly& o);
    TrigPoly& operator-=(const TrigPoly& o);
    TrigPoly& operator*=(double s);
    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator*(double s, TrigPoly f) { return f *= s; }

    /// Throws std::logic_error if a canonical-form invariant is violated.
    void check_invariants() const;

private:
    void set_raw(const Freq& k, std::complex<double> c);  // canonical k only
    void prune();

    int dim_;
    std::map<Freq, std::complex<double>> coeffs_;

    friend TrigPoly partial_derivative(const TrigPoly&, int);
    friend TrigPoly heat(const TrigPoly&, double);
    friend TrigPoly cond_exp(const TrigPoly&, const CoordSet&);
    friend TrigPoly apply_multiplier(const TrigPoly&,
                                     const std::vector<std::complex<double>>&);
};

/// d/dx_n f; coordinate is 0-based.
TrigPoly partial_derivative(const TrigPoly& f, int coordinate);

/// Heat semigroup P_t = exp(t*Laplacian): Fourier multiplier
/// exp(-4 pi^2 |k|^2 t). The Gaussian representation of the same operator
/// has per-coordinate variance 2t (see heat_gaussian in smoothing.hpp).
TrigPoly heat(const TrigPoly& f, double t);

/// Conditional expectation E_S: keeps exactly the frequencies supported on S.
TrigPoly cond_exp(const TrigPoly& f, const CoordSet& S);

/// Applies an arbitrary per-mode multiplier m(canonical k); used by the
/// Monte-Carlo Gaussian smoothing path. Multipliers are supplied in the
/// canonical term order of f.
TrigPoly apply_multiplier(const TrigPoly& f, const std::vector<std::complex<double>>& mult);

/// Parseval: sqrt(c_0^2 + 2 sum |c_k|^2). Exact.
double l2_norm(const TrigPoly& f);

/// ||d/dx_n f||_2 via Parseval. Exact.
double partial_l2_norm(const TrigPoly& f, int coordinate);

/// (sum_n ||d/dx_n f||_2^2)^{1/2}, the homogeneous Sobolev seminorm. Exact.
double grad_norm_l2(const TrigPoly& f);

/// Fast repeated evaluation of a fixed polynomial: per-axis power tables
/// share one sincos per coordinate across all modes. Stateless per call,
/// safe for concurrent use.
class TrigPolyEvaluator {
public:
    explicit TrigPolyEvaluator(const TrigPoly& f);

    int dim() const { return dim_; }
    double eval(std::span<const double> x) const;
    /// Value plus all partial derivatives in one sweep.
    double eval_gradient(std::span<const double> x, std::span<double> grad) const;

private:
    void fill_tables(std::span<const double> x, std::complex<double>* tab) const;
    double run(std::span<const double> x, double* grad) const;

    int dim_;
    double c0_;
    std::vector<int> max_deg_;              // per axis
    std::vector<int> mode_k_;               // n_modes * dim, canonical, k != 0
    std::vector<std::complex<double>> mode_c_;
    std::vector<int> table_off_;
    int table_size_;
};

/// Streaming evaluator for quadrature loops: per-axis power tables are
/// cached across calls, so sweeps that hold most coordinates fixed (tensor
/// grids) pay one sincos per point. Stateful; use one instance per sweep,
/// do not share across threads.
class CachedTrigEvaluator {
public:
    explicit CachedTrigEvaluator(const TrigPoly& f);

    int dim() const { return dim_; }
    double eval(std::span<const double> x);
    double eval_gradient(std::span<const double> x, std::span<double> grad);

private:
    void refresh(std::span<const double> x);

    int dim_;
    double c0_;
    std::vector<int> max_deg_;
    std::vector<int> mode_k_;    // n_modes * dim
    std::vector<int> mode_off_;  // n_modes * dim, table offset of |k_j| on axis j
    std::vector<double> mode_re_, mode_im_;
    std::vector<double> tab_re_, tab_im_;  // per-axis powers 0..deg
    std::vector<int> table_off_;
    std::vector<double> last_x_;
    bool primed_ = false;
};

/// Plain-text file format: header, dim, then one record per canonical
/// frequency (k-vector, real part, imaginary part) with 17 significant
/// digits; round-trips bit-exactly.
void write_trigpoly(std::ostream& out, const TrigPoly& f);
TrigPoly read_trigpoly(std::istream& in);
void save_trigpoly(const std::string& path, const TrigPoly& f);
TrigPoly load_trigpoly(const std::string& path);

}  // namespace juntalab
