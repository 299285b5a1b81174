#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "tcflow/errors.hpp"
#include "tcflow/numerics/interval.hpp"
#include "tcflow/numerics/quadrature.hpp"
#include "tcflow/solutions/field.hpp"
#include "tcflow/solutions/geometry.hpp"
#include "tcflow/verify/residual.hpp"

namespace tcflow::verify {

struct JumpResult {
    double jump = 0.0;
    double at_eps = 0.0;       // mean jump at eps = 1e-3
    double at_half_eps = 0.0;  // mean jump at eps = 5e-4
    std::string note;
};

/// Mean over x in (1, R) of p(x, 2 pi - eps) - p(x, eps), extrapolated
/// linearly in eps from eps = 1e-3 and 5e-4.
inline JumpResult jump_check(const FlowField& field, int n = 64) {
    if (n < 1) throw InvalidArgument("jump_check: need at least one sample");
    JumpResult out;
    if (!field.multivalued_pressure()) {
        out.note = "single-valued pressure: no jump";
        return out;
    }
    const auto range = verification_range(field);
    auto mean_jump = [&](double eps) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) {
            const double x = range.lo() + range.width() * (k + 0.5) / n;
            s += field.pressure({x, kTwoPi - eps}) - field.pressure({x, eps});
        }
        return s / n;
    };
    out.at_eps = mean_jump(1e-3);
    out.at_half_eps = mean_jump(5e-4);
    out.jump = 2.0 * out.at_half_eps - out.at_eps;
    return out;
}

/// 2 pi int rho (G'^2 + G^2/rho^2) for u = G(rho) theta-hat on the annulus.
/// G' is analytic when the field provides it, otherwise a five-point
/// difference (one-sided near the ends).
inline double energy_quadrature(const FlowField& field) {
    if (field.meta().domain != DomainKind::annulus)
        throw InvalidArgument("energy_quadrature: annulus field required");
    if (!field.meta().rotationally_invariant)
        throw InvalidArgument("energy_quadrature: rotationally invariant velocity required");
    const double R = field.meta().params.R;
    const double h = 1e-3 * (R - 1.0);
    auto dG = [&](double r) {
        if (field.has_azimuthal_derivative()) return field.azimuthal_derivative(r);
        auto G = [&](double x) { return field.azimuthal(x); };
        if (r - 2.0 * h < 1.0)
            return (-25.0 * G(r) + 48.0 * G(r + h) - 36.0 * G(r + 2 * h) + 16.0 * G(r + 3 * h) - 3.0 * G(r + 4 * h)) /
                   (12.0 * h);
        if (r + 2.0 * h > R)
            return (25.0 * G(r) - 48.0 * G(r - h) + 36.0 * G(r - 2 * h) - 16.0 * G(r - 3 * h) + 3.0 * G(r - 4 * h)) /
                   (12.0 * h);
        return (G(r - 2 * h) - 8.0 * G(r - h) + 8.0 * G(r + h) - G(r + 2 * h)) / (12.0 * h);
    };
    auto integrand = [&](double r) {
        const double g = field.azimuthal(r);
        const double d = dG(r);
        return r * (d * d + g * g / (r * r));
    };
    return kTwoPi * numerics::integrate_relative(integrand, numerics::Interval(1.0, R), 1e-12);
}

}  // namespace tcflow::verify
