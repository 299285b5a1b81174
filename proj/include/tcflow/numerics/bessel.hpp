#pragma once

// Bessel functions of integer order 0 and 1 for real nonnegative arguments.
//
// Ascending series (summed in long double) for x <= kSeriesLimit and the
// Hankel asymptotic expansion beyond. Absolute error stays below 1e-12 on
// (0, 50] for all four functions.

#include <cmath>
#include <numbers>

#include "tcflow/errors.hpp"

namespace tcflow::numerics {

namespace detail {

inline constexpr double kSeriesLimit = 14.0;
inline constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;
inline constexpr long double kPiL = 3.141592653589793238462643383279502884L;

struct SeriesPair {
    long double j;
    long double y;
};

inline SeriesPair series_order0(double xd) {
    const long double x = xd;
    const long double q = x * x / 4.0L;
    long double term = 1.0L;  // (-q)^k / (k!)^2
    long double j = 1.0L;
    long double harmonic = 0.0L;
    long double ysum = 0.0L;  // sum_{k>=1} (-1)^{k+1} H_k q^k/(k!)^2
    for (int k = 1; k < 200; ++k) {
        term *= -q / (static_cast<long double>(k) * k);
        harmonic += 1.0L / k;
        j += term;
        ysum -= harmonic * term;
        if (std::fabs(term) * (1.0L + harmonic) < 1e-22L * std::fabs(j) && k > 2) break;
    }
    long double y = 0.0L;
    if (x > 0.0L) y = (2.0L / kPiL) * ((std::log(x / 2.0L) + kEulerGamma) * j + ysum);
    return {j, y};
}

inline SeriesPair series_order1(double xd) {
    const long double x = xd;
    const long double half = x / 2.0L;
    const long double q = half * half;
    long double term = half;  // (-1)^k (x/2)^{2k+1} / (k!(k+1)!)
    long double j = term;
    long double h_k = 0.0L;
    long double h_k1 = 1.0L;
    long double ysum = (h_k + h_k1) * term;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (static_cast<long double>(k) * (k + 1));
        h_k += 1.0L / k;
        h_k1 += 1.0L / (k + 1);
        j += term;
        ysum += (h_k + h_k1) * term;
        if (std::fabs(term) * (1.0L + h_k1) < 1e-22L * (std::fabs(j) + 1e-30L) && k > 2) break;
    }
    long double y = 0.0L;
    if (x > 0.0L)
        y = (2.0L / kPiL) * (std::log(half) + kEulerGamma) * j - 2.0L / (kPiL * x) -
            ysum / kPiL;
    return {j, y};
}

// Hankel expansion: J = A (P cos chi - Q sin chi), Y = A (P sin chi + Q cos chi).
inline SeriesPair hankel(int order, double x) {
    const double mu = 4.0 * order * order;
    double p = 1.0;
    double q = 0.0;
    double a = 1.0;  // a_k(nu) / x^k with alternating signs folded in below
    double last = 1.0;
    for (int k = 1; k < 60; ++k) {
        const double odd = 2.0 * k - 1.0;
        a *= (mu - odd * odd) / (k * 8.0 * x);
        const double mag = std::fabs(a);
        if (mag > last) break;  // asymptotic series started diverging
        last = mag;
        // k odd -> Q, k even -> P; signs alternate within each of P and Q.
        if (k % 2 == 1) {
            q += ((k / 2) % 2 == 0 ? a : -a);
        } else {
            p += ((k / 2) % 2 == 0 ? a : -a);
        }
        if (mag < 1e-17) break;
    }
    const double chi = x - (0.5 * order + 0.25) * std::numbers::pi;
    const double amp = std::sqrt(2.0 / (std::numbers::pi * x));
    const double c = std::cos(chi);
    const double s = std::sin(chi);
    return {amp * (p * c - q * s), amp * (p * s + q * c)};
}

inline void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) throw InvalidArgument(std::string(name) + ": non-finite argument");
}

}  // namespace detail

/// Bessel function of the first kind, order zero. Requires x >= 0.
inline double bessel_j0(double x) {
    detail::require_finite(x, "bessel_j0");
    if (x < 0.0) throw DomainError("bessel_j0: negative argument");
    if (x <= detail::kSeriesLimit) return static_cast<double>(detail::series_order0(x).j);
    return detail::hankel(0, x).j;
}

/// Bessel function of the first kind, order one. Requires x >= 0.
inline double bessel_j1(double x) {
    detail::require_finite(x, "bessel_j1");
    if (x < 0.0) throw DomainError("bessel_j1: negative argument");
    if (x <= detail::kSeriesLimit) return static_cast<double>(detail::series_order1(x).j);
    return detail::hankel(1, x).j;
}

/// Bessel function of the second kind, order zero. Requires x > 0.
inline double bessel_y0(double x) {
    detail::require_finite(x, "bessel_y0");
    if (x <= 0.0) throw DomainError("bessel_y0: argument must be positive");
    if (x <= detail::kSeriesLimit) return static_cast<double>(detail::series_order0(x).y);
    return detail::hankel(0, x).y;
}

/// Bessel function of the second kind, order one. Requires x > 0.
inline double bessel_y1(double x) {
    detail::require_finite(x, "bessel_y1");
    if (x <= 0.0) throw DomainError("bessel_y1: argument must be positive");
    if (x <= detail::kSeriesLimit) return static_cast<double>(detail::series_order1(x).y);
    return detail::hankel(1, x).y;
}

/// J0'(x) = -J1(x)
inline double bessel_j0_prime(double x) { return -bessel_j1(x); }
/// Y0'(x) = -Y1(x)
inline double bessel_y0_prime(double x) { return -bessel_y1(x); }

/// Y0(alpha) J0(alpha/R) - J0(alpha) Y0(alpha/R). Its first positive root
/// fixes the least Dirichlet eigenvalue of the annulus 1 < rho < R.
inline double cross_product_fn(double alpha, double R) {
    if (!(alpha > 0.0)) throw DomainError("cross_product_fn: alpha must be positive");
    if (!(R > 1.0)) throw DomainError("cross_product_fn: R must exceed 1");
    const double inner = alpha / R;
    return bessel_y0(alpha) * bessel_j0(inner) - bessel_j0(alpha) * bessel_y0(inner);
}

}  // namespace tcflow::numerics
