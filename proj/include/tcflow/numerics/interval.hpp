#pragma once

#include <cmath>

#include "tcflow/errors.hpp"

namespace tcflow::numerics {

/// Closed interval [lo, hi] with lo < hi, both finite.
class Interval {
public:
    Interval(double lo, double hi) : lo_(lo), hi_(hi) {
        if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
            throw InvalidArgument("Interval requires finite lo < hi");
    }

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double width() const noexcept { return hi_ - lo_; }
    double mid() const noexcept { return 0.5 * (lo_ + hi_); }
    bool contains(double x) const noexcept { return x >= lo_ && x <= hi_; }

private:
    double lo_;
    double hi_;
};

}  // namespace tcflow::numerics
