#pragma once

#include <cmath>
#include <string>

#include "tcflow/errors.hpp"
#include "tcflow/numerics/interval.hpp"

namespace tcflow::numerics {

/// Bisection on a sign-changing bracket. Stops once the bracket is no wider
/// than tol (or an exact zero is hit) and returns its midpoint.
///
/// Only signs of f are inspected, so f and c*f (c != 0) generate the same
/// bracket sequence.
template <class F>
double find_root(F&& f, const Interval& bracket, double tol) {
    if (!(tol > 0.0)) throw InvalidArgument("find_root: tol must be positive");
    double lo = bracket.lo();
    double hi = bracket.hi();
    const double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi) || std::isnan(flo) || std::isnan(fhi))
        throw BracketError("find_root: no sign change on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
    const bool lo_negative = std::signbit(flo);
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at machine resolution
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (std::signbit(fm) == lo_negative)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

/// Walks start, start+step, ... and returns the first interval of width step
/// over which f changes sign. A sample where f vanishes exactly closes the
/// bracket on that sample.
template <class F>
Interval scan_first_bracket(F&& f, double start, double step, double max_x) {
    if (!(step > 0.0)) throw InvalidArgument("scan_first_bracket: step must be positive");
    if (!(start < max_x)) throw InvalidArgument("scan_first_bracket: start must be below max_x");
    double x0 = start;
    double f0 = f(x0);
    for (long i = 1;; ++i) {
        const double x1 = start + static_cast<double>(i) * step;
        if (x1 > max_x) break;
        const double f1 = f(x1);
        if (f1 == 0.0 || (f0 != 0.0 && std::signbit(f0) != std::signbit(f1)))
            return Interval(x0, x1);
        x0 = x1;
        f0 = f1;
    }
    throw NotFound("scan_first_bracket: no sign change before " + std::to_string(max_x));
}

}  // namespace tcflow::numerics
