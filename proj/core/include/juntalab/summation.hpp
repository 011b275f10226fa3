#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace juntalab {

/// Neumaier compensated accumulator. Quadrature sums run through this so
/// that results do not drift with accumulation order at the tolerances the
/// exactness tests use.
class KahanSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class KahanVec {
public:
    explicit KahanVec(std::size_t n) : acc_(n) {}
    void add(std::size_t i, double x) { acc_[i].add(x); }
    double value(std::size_t i) const { return acc_[i].value(); }
    std::size_t size() const { return acc_.size(); }

private:
    std::vector<KahanSum> acc_;
};

}  // namespace juntalab
