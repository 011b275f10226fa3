#include "juntalab/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace juntalab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_canonical(const Freq& k) {
    for (int v : k) {
        if (v > 0) return true;
        if (v < 0) return false;
    }
    return true;  // k == 0
}

Freq negate(const Freq& k) {
    Freq m(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) m[i] = -k[i];
    return m;
}

bool is_zero_freq(const Freq& k) {
    return std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
}

int freq_norm_sq(const Freq& k) {
    int s = 0;
    for (int v : k) s += v * v;
    return s;
}

}  // namespace

CoordSet::CoordSet(std::vector<int> coords, int dim) : coords_(std::move(coords)), dim_(dim) {
    require(dim >= 1, "CoordSet: dimension must be >= 1");
    std::sort(coords_.begin(), coords_.end());
    coords_.erase(std::unique(coords_.begin(), coords_.end()), coords_.end());
    for (int c : coords_)
        require(c >= 0 && c < dim, "CoordSet: coordinate index out of range");
}

CoordSet CoordSet::full(int dim) {
    std::vector<int> all(dim);
    for (int i = 0; i < dim; ++i) all[i] = i;
    return CoordSet(std::move(all), dim);
}

bool CoordSet::contains(int c) const {
    return std::binary_search(coords_.begin(), coords_.end(), c);
}

CoordSet CoordSet::complement() const {
    std::vector<int> rest;
    for (int i = 0; i < dim_; ++i)
        if (!contains(i)) rest.push_back(i);
    return CoordSet(std::move(rest), dim_);
}

std::string to_string(Domain d) {
    return d == Domain::Torus ? "torus" : "cube";
}

TrigPoly::TrigPoly(int dim) : dim_(dim) {
    require(dim >= 1, "TrigPoly: dimension must be >= 1");
}

TrigPoly TrigPoly::constant(int dim, double value) {
    TrigPoly f(dim);
    f.set_raw(Freq(dim, 0), value);
    f.prune();
    return f;
}

TrigPoly TrigPoly::harmonic(int dim, const Freq& k, std::complex<double> amplitude) {
    TrigPoly f(dim);
    require(static_cast<int>(k.size()) == dim, "harmonic: frequency length != dim");
    if (is_canonical(k)) {
        if (is_zero_freq(k)) {
            require(std::abs(amplitude.imag()) < 1e-12,
                    "harmonic: 0-frequency coefficient must be real");
            f.set_raw(k, amplitude.real());
        } else {
            f.set_raw(k, amplitude);
        }
    } else {
        f.set_raw(negate(k), std::conj(amplitude));
    }
    f.prune();
    return f;
}

TrigPoly TrigPoly::cosine(int dim, const Freq& k, double amp) {
    require(!is_zero_freq(k), "cosine: frequency must be nonzero");
    return harmonic(dim, k, {amp / 2.0, 0.0});
}

TrigPoly TrigPoly::sine(int dim, const Freq& k, double amp) {
    require(!is_zero_freq(k), "sine: frequency must be nonzero");
    // amp*sin(2 pi k.x) has coefficient amp/(2i) = -i*amp/2 at k.
    return harmonic(dim, k, {0.0, -amp / 2.0});
}

TrigPoly TrigPoly::from_terms(int dim,
                              const std::vector<std::pair<Freq, std::complex<double>>>& terms) {
    std::map<Freq, std::complex<double>> raw;
    for (const auto& [k, c] : terms) {
        require(static_cast<int>(k.size()) == dim, "from_terms: frequency length != dim");
        raw[k] += c;
    }
    TrigPoly f(dim);
    for (const auto& [k, c] : raw) {
        if (!is_canonical(k)) continue;  // handled from the mirror side
        auto mirror = raw.find(negate(k));
        std::complex<double> value = c;
        if (!is_zero_freq(k) && mirror != raw.end()) {
            const double mismatch = std::abs(std::conj(mirror->second) - c);
            require(mismatch <= 1e-9 * (1.0 + std::abs(c)),
                    "from_terms: coefficients are not Hermitian-symmetric");
        }
        if (is_zero_freq(k)) {
            require(std::abs(c.imag()) <= 1e-9 * (1.0 + std::abs(c)),
                    "from_terms: 0-frequency coefficient must be real");
            value = c.real();
        }
        f.set_raw(k, value);
    }
    // Frequencies present only on the non-canonical side.
    for (const auto& [k, c] : raw) {
        if (is_canonical(k)) continue;
        Freq m = negate(k);
        if (raw.find(m) == raw.end()) f.set_raw(m, std::conj(c));
    }
    f.prune();
    return f;
}

void TrigPoly::set_raw(const Freq& k, std::complex<double> c) {
    coeffs_[k] = c;
}

void TrigPoly::prune() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (std::abs(it->second) < kPruneThreshold)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

std::complex<double> TrigPoly::coefficient(const Freq& k) const {
    require(static_cast<int>(k.size()) == dim_, "coefficient: frequency length != dim");
    if (is_canonical(k)) {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? std::complex<double>{} : it->second;
    }
    auto it = coeffs_.find(negate(k));
    return it == coeffs_.end() ? std::complex<double>{} : std::conj(it->second);
}

double TrigPoly::mean() const {
    auto it = coeffs_.find(Freq(dim_, 0));
    return it == coeffs_.end() ? 0.0 : it->second.real();
}

std::vector<int> TrigPoly::axis_degrees() const {
    std::vector<int> deg(dim_, 0);
    for (const auto& [k, c] : coeffs_)
        for (int j = 0; j < dim_; ++j) deg[j] = std::max(deg[j], std::abs(k[j]));
    return deg;
}

double TrigPoly::eval(std::span<const double> x) const {
    TrigPolyEvaluator ev(*this);
    return ev.eval(x);
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
    require(dim_ == o.dim_, "TrigPoly: dimension mismatch");
    for (const auto& [k, c] : o.coeffs_) coeffs_[k] += c;
    prune();
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
    require(dim_ == o.dim_, "TrigPoly: dimension mismatch");
    for (const auto& [k, c] : o.coeffs_) coeffs_[k] -= c;
    prune();
    return *this;
}

TrigPoly& TrigPoly::operator*=(double s) {
    for (auto& [k, c] : coeffs_) c *= s;
    prune();
    return *this;
}

void TrigPoly::check_invariants() const {
    for (const auto& [k, c] : coeffs_) {
        if (static_cast<int>(k.size()) != dim_)
            throw std::logic_error("TrigPoly invariant: frequency length mismatch");
        if (!is_canonical(k))
            throw std::logic_error("TrigPoly invariant: non-canonical frequency stored");
        if (is_zero_freq(k) && c.imag() != 0.0)
            throw std::logic_error("TrigPoly invariant: 0-frequency coefficient not real");
        if (std::abs(c) < kPruneThreshold)
            throw std::logic_error("TrigPoly invariant: stored zero coefficient");
    }
}

TrigPoly partial_derivative(const TrigPoly& f, int coordinate) {
    require(coordinate >= 0 && coordinate < f.dim_, "partial_derivative: coordinate out of range");
    TrigPoly g(f.dim_);
    for (const auto& [k, c] : f.coeffs_) {
        if (k[coordinate] == 0) continue;
        g.coeffs_[k] = c * std::complex<double>(0.0, kTwoPi * k[coordinate]);
    }
    g.prune();
    return g;
}

TrigPoly heat(const TrigPoly& f, double t) {
    require(t >= 0.0, "heat: time must be nonnegative");
    TrigPoly g(f.dim_);
    for (const auto& [k, c] : f.coeffs_) {
        const double mult = std::exp(-4.0 * std::numbers::pi * std::numbers::pi *
                                     freq_norm_sq(k) * t);
        g.coeffs_[k] = c * mult;
    }
    g.prune();
    return g;
}

TrigPoly cond_exp(const TrigPoly& f, const CoordSet& S) {
    require(S.dim() == f.dim_, "cond_exp: coordinate set dimension mismatch");
    TrigPoly g(f.dim_);
    for (const auto& [k, c] : f.coeffs_) {
        bool keep = true;
        for (int j = 0; j < f.dim_ && keep; ++j)
            if (k[j] != 0 && !S.contains(j)) keep = false;
        if (keep) g.coeffs_[k] = c;
    }
    g.prune();
    return g;
}

TrigPoly apply_multiplier(const TrigPoly& f, const std::vector<std::complex<double>>& mult) {
    require(mult.size() == f.coeffs_.size(), "apply_multiplier: multiplier count mismatch");
    TrigPoly g(f.dim_);
    std::size_t i = 0;
    for (const auto& [k, c] : f.coeffs_) {
        std::complex<double> v = c * mult[i++];
        if (is_zero_freq(k)) v = v.real();
        g.coeffs_[k] = v;
    }
    g.prune();
    return g;
}

double l2_norm(const TrigPoly& f) {
    double s = 0.0;
    for (const auto& [k, c] : f.terms()) {
        const double m = std::norm(c);
        s += is_zero_freq(k) ? m : 2.0 * m;
    }
    return std::sqrt(s);
}

double partial_l2_norm(const TrigPoly& f, int coordinate) {
    require(coordinate >= 0 && coordinate < f.dim(), "partial_l2_norm: coordinate out of range");
    double s = 0.0;
    for (const auto& [k, c] : f.terms()) {
        if (k[coordinate] == 0) continue;
        const double w = kTwoPi * k[coordinate];
        s += 2.0 * w * w * std::norm(c);
    }
    return std::sqrt(s);
}

double grad_norm_l2(const TrigPoly& f) {
    double s = 0.0;
    for (const auto& [k, c] : f.terms()) {
        if (is_zero_freq(k)) continue;
        s += 2.0 * kTwoPi * kTwoPi * freq_norm_sq(k) * std::norm(c);
    }
    return std::sqrt(s);
}

TrigPolyEvaluator::TrigPolyEvaluator(const TrigPoly& f)
    : dim_(f.dim()), c0_(f.mean()), max_deg_(f.axis_degrees()) {
    for (const auto& [k, c] : f.terms()) {
        if (is_zero_freq(k)) continue;
        mode_k_.insert(mode_k_.end(), k.begin(), k.end());
        mode_c_.push_back(c);
    }
    table_off_.resize(dim_ + 1, 0);
    for (int j = 0; j < dim_; ++j) table_off_[j + 1] = table_off_[j] + max_deg_[j] + 1;
    table_size_ = table_off_[dim_];
}

void TrigPolyEvaluator::fill_tables(std::span<const double> x, std::complex<double>* tables) const {
    for (int j = 0; j < dim_; ++j) {
        std::complex<double>* tab = tables + table_off_[j];
        tab[0] = {1.0, 0.0};
        if (max_deg_[j] > 0) {
            const double a = kTwoPi * x[j];
            const std::complex<double> z(std::cos(a), std::sin(a));
            for (int p = 1; p <= max_deg_[j]; ++p) tab[p] = tab[p - 1] * z;
        }
    }
}

double TrigPolyEvaluator::run(std::span<const double> x, double* grad) const {
    constexpr int kStackTable = 64;
    std::complex<double> stack[kStackTable];
    std::vector<std::complex<double>> heap;
    std::complex<double>* tables = stack;
    if (table_size_ > kStackTable) {
        heap.resize(table_size_);
        tables = heap.data();
    }
    fill_tables(x, tables);
    if (grad)
        for (int j = 0; j < dim_; ++j) grad[j] = 0.0;
    double acc = 0.0;
    const int n = static_cast<int>(mode_c_.size());
    for (int m = 0; m < n; ++m) {
        std::complex<double> prod = mode_c_[m];
        const int* k = mode_k_.data() + static_cast<std::size_t>(m) * dim_;
        for (int j = 0; j < dim_; ++j) {
            const int kj = k[j];
            if (kj == 0) continue;
            const std::complex<double> e = tables[table_off_[j] + std::abs(kj)];
            prod *= (kj > 0) ? e : std::conj(e);
        }
        acc += prod.real();
        if (grad) {
            // d/dx_j of 2 Re(c e^{2 pi i k.x}) = -4 pi k_j Im(c e^{2 pi i k.x})
            const double im = prod.imag();
            for (int j = 0; j < dim_; ++j)
                if (k[j] != 0) grad[j] -= 2.0 * kTwoPi * k[j] * im;
        }
    }
    return c0_ + 2.0 * acc;
}

double TrigPolyEvaluator::eval(std::span<const double> x) const {
    return run(x, nullptr);
}

double TrigPolyEvaluator::eval_gradient(std::span<const double> x, std::span<double> grad) const {
    return run(x, grad.data());
}

CachedTrigEvaluator::CachedTrigEvaluator(const TrigPoly& f)
    : dim_(f.dim()), c0_(f.mean()), max_deg_(f.axis_degrees()) {
    table_off_.resize(dim_ + 1, 0);
    for (int j = 0; j < dim_; ++j) table_off_[j + 1] = table_off_[j] + max_deg_[j] + 1;
    tab_re_.assign(table_off_[dim_], 0.0);
    tab_im_.assign(table_off_[dim_], 0.0);
    last_x_.assign(dim_, 0.0);
    for (const auto& [k, c] : f.terms()) {
        if (is_zero_freq(k)) continue;
        mode_k_.insert(mode_k_.end(), k.begin(), k.end());
        for (int j = 0; j < dim_; ++j) mode_off_.push_back(table_off_[j] + std::abs(k[j]));
        mode_re_.push_back(c.real());
        mode_im_.push_back(c.imag());
    }
}

void CachedTrigEvaluator::refresh(std::span<const double> x) {
    for (int j = 0; j < dim_; ++j) {
        if (primed_ && x[j] == last_x_[j]) continue;
        last_x_[j] = x[j];
        double* re = tab_re_.data() + table_off_[j];
        double* im = tab_im_.data() + table_off_[j];
        re[0] = 1.0;
        im[0] = 0.0;
        if (max_deg_[j] > 0) {
            const double a = kTwoPi * x[j];
            const double zr = std::cos(a), zi = std::sin(a);
            for (int p = 1; p <= max_deg_[j]; ++p) {
                re[p] = re[p - 1] * zr - im[p - 1] * zi;
                im[p] = re[p - 1] * zi + im[p - 1] * zr;
            }
        }
    }
    primed_ = true;
}

double CachedTrigEvaluator::eval(std::span<const double> x) {
    refresh(x);
    double acc = 0.0;
    const std::size_t n = mode_re_.size();
    for (std::size_t m = 0; m < n; ++m) {
        const int* k = mode_k_.data() + m * dim_;
        const int* off = mode_off_.data() + m * dim_;
        double pr = mode_re_[m], pi = mode_im_[m];
        for (int j = 0; j < dim_; ++j) {
            const int kj = k[j];
            if (kj == 0) continue;
            const double tr = tab_re_[off[j]];
            const double ti = kj > 0 ? tab_im_[off[j]] : -tab_im_[off[j]];
            const double nr = pr * tr - pi * ti;
            pi = pr * ti + pi * tr;
            pr = nr;
        }
        acc += pr;
    }
    return c0_ + 2.0 * acc;
}

double CachedTrigEvaluator::eval_gradient(std::span<const double> x, std::span<double> grad) {
    refresh(x);
    for (int j = 0; j < dim_; ++j) grad[j] = 0.0;
    double acc = 0.0;
    const std::size_t n = mode_re_.size();
    for (std::size_t m = 0; m < n; ++m) {
        const int* k = mode_k_.data() + m * dim_;
        const int* off = mode_off_.data() + m * dim_;
        double pr = mode_re_[m], pi = mode_im_[m];
        for (int j = 0; j < dim_; ++j) {
            const int kj = k[j];
            if (kj == 0) continue;
            const double tr = tab_re_[off[j]];
            const double ti = kj > 0 ? tab_im_[off[j]] : -tab_im_[off[j]];
            const double nr = pr * tr - pi * ti;
            pi = pr * ti + pi * tr;
            pr = nr;
        }
        acc += pr;
        for (int j = 0; j < dim_; ++j)
            if (k[j] != 0) grad[j] -= 2.0 * kTwoPi * k[j] * pi;
    }
    return c0_ + 2.0 * acc;
}

void write_trigpoly(std::ostream& out, const TrigPoly& f) {
    out << "trigpoly v1\n";
    out << "dim " << f.dim() << "\n";
    out << "terms " << f.term_count() << "\n";
    char buf[64];
    for (const auto& [k, c] : f.terms()) {
        for (int v : k) out << v << ' ';
        std::snprintf(buf, sizeof(buf), "%.17g", c.real());
        out << buf << ' ';
        std::snprintf(buf, sizeof(buf), "%.17g", c.imag());
        out << buf << '\n';
    }
}

TrigPoly read_trigpoly(std::istream& in) {
    std::string word, version;
    in >> word >> version;
    require(in.good() && word == "trigpoly" && version == "v1",
            "read_trigpoly: bad header (expected 'trigpoly v1')");
    int dim = 0, count = 0;
    in >> word >> dim;
    require(in.good() && word == "dim" && dim >= 1, "read_trigpoly: bad dim line");
    in >> word >> count;
    require(in.good() && word == "terms" && count >= 0, "read_trigpoly: bad terms line");
    std::vector<std::pair<Freq, std::complex<double>>> terms;
    terms.reserve(count);
    for (int i = 0; i < count; ++i) {
        Freq k(dim);
        for (int j = 0; j < dim; ++j) in >> k[j];
        double re = 0.0, im = 0.0;
        in >> re >> im;
        require(in.good() || in.eof(), "read_trigpoly: truncated record");
        require(!in.fail(), "read_trigpoly: malformed record");
        terms.emplace_back(std::move(k), std::complex<double>(re, im));
    }
    return TrigPoly::from_terms(dim, terms);
}

void save_trigpoly(const std::string& path, const TrigPoly& f) {
    std::ofstream out(path);
    require(out.good(), "save_trigpoly: cannot open " + path);
    write_trigpoly(out, f);
    require(out.good(), "save_trigpoly: write failed for " + path);
}

TrigPoly load_trigpoly(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "load_trigpoly: cannot open " + path);
    return read_trigpoly(in);
}

}  // namespace juntalab
