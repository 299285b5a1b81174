#pragma once

#include <cmath>
#include <memory>

#include "tcflow/errors.hpp"
#include "tcflow/numerics/bessel.hpp"
#include "tcflow/numerics/roots.hpp"
#include "tcflow/solutions/geometry.hpp"
#include "tcflow/solutions/profile.hpp"

namespace tcflow::spectral {

/// First positive zero of J0, located by scanning and bisection.
inline double bessel_j0_first_zero() {
    auto j0 = [](double x) { return numerics::bessel_j0(x); };
    const numerics::Interval br = numerics::scan_first_bracket(j0, 1e-3, 0.05, 10.0);
    return numerics::find_root(j0, br, 1e-15);
}

struct EigenResult {
    double R = 0.0;
    double alpha = 0.0;
    double lambda = 0.0;
    double lower = 0.0;  // pi^2 / (2 R^2)
    double upper = 0.0;  // 10 / (R - 1)^2
};

/// Least Laplace-Dirichlet eigenvalue of the annulus, lambda = (alpha/R)^2
/// with alpha the first root of Y0(a)J0(a/R) - J0(a)Y0(a/R).
inline EigenResult eigenvalue(const Annulus& ann, double tol = 1e-10) {
    const double R = ann.R();
    auto f = [R](double a) { return numerics::cross_product_fn(a, R); };
    const double max_x = 2.0 * R * std::sqrt(10.0) / (R - 1.0) + 10.0;
    const numerics::Interval br = numerics::scan_first_bracket(f, 1e-3, 0.05, max_x);
    EigenResult out;
    out.R = R;
    out.alpha = numerics::find_root(f, br, tol);
    out.lambda = (out.alpha / R) * (out.alpha / R);
    out.lower = kPi * kPi / (2.0 * R * R);
    out.upper = 10.0 / ((R - 1.0) * (R - 1.0));
    if (!(out.lower <= out.lambda && out.lambda <= out.upper))
        throw NumericalConsistency("eigenvalue: computed lambda violates the bound sandwich");
    return out;
}

/// F(rho) = Y0(alpha)J0(alpha rho/R) - J0(alpha)Y0(alpha rho/R), signed so
/// that F > 0 inside the annulus.
inline RadialProfile eigenfunction(const Annulus& ann, const EigenResult& eig) {
    const double R = ann.R();
    const double a = eig.alpha;
    const double y0a = numerics::bessel_y0(a);
    const double j0a = numerics::bessel_j0(a);
    const double k = a / R;
    auto raw = [=](double r) { return y0a * numerics::bessel_j0(k * r) - j0a * numerics::bessel_y0(k * r); };
    const double sign = raw(0.5 * (1.0 + R)) < 0.0 ? -1.0 : 1.0;
    return RadialProfile::closed_form(
        "eigenfunction", [=](double r) { return sign * raw(r); },
        [=](double r) {
            return sign * k * (-y0a * numerics::bessel_j1(k * r) + j0a * numerics::bessel_y1(k * r));
        });
}

inline RadialProfile eigenfunction(const Annulus& ann) { return eigenfunction(ann, eigenvalue(ann)); }

}  // namespace tcflow::spectral
