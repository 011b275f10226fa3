#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace juntalab {

/// Domain tag for function handles. Both domains are parametrized over
/// [0,1)^N; Torus means coordinates wrap (1-periodic evaluators).
enum class Domain { Torus, Cube };

std::string to_string(Domain d);

/// A numeric estimate with an error indicator. For Monte-Carlo estimates
/// half_width is a 99% confidence half-width from the sample variance; for
/// tensor-grid estimates it is the coarse-refinement difference; exact
/// quantities carry 0.
struct Estimate {
    double value = 0.0;
    double half_width = 0.0;
};

/// Two-sided 99% normal quantile used for all confidence half-widths.
inline constexpr double kZ99 = 2.5758293035489004;

/// Frequency multi-index on the dual of T^N.
using Freq = std::vector<int>;

/// Sorted subset of coordinate indices {0,...,dim-1}. The library is
/// 0-based; reports serialize coordinates 1-based.
class CoordSet {
public:
    CoordSet() = default;
    CoordSet(std::vector<int> coords, int dim);

    static CoordSet full(int dim);
    static CoordSet empty(int dim) { return CoordSet({}, dim); }

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(coords_.size()); }
    bool contains(int c) const;
    bool is_full() const { return size() == dim_; }
    bool is_empty() const { return coords_.empty(); }
    CoordSet complement() const;
    const std::vector<int>& coords() const { return coords_; }

    bool operator==(const CoordSet& o) const = default;

private:
    std::vector<int> coords_;
    int dim_ = 0;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace juntalab
