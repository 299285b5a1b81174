#pragma once

#include <cmath>
#include <string>

#include "tcflow/errors.hpp"
#include "tcflow/solutions/field.hpp"
#include "tcflow/solutions/geometry.hpp"
#include "tcflow/solutions/taylor_couette.hpp"

namespace tcflow {

struct StokesConstants {
    double C1, C2, C3, C4;
    /// 1 - R^2 + log R + R^2 log R
    double D;
};

inline StokesConstants stokes_constants(const Annulus& ann) {
    const double R = ann.R();
    const double L = std::log(R);
    const double D = 1.0 - R * R + L + R * R * L;
    if (!(D > 0.0)) throw NumericalConsistency("stokes_constants: non-positive denominator");
    return {-1.0 / (2.0 * D), R * R / (2.0 * D), (1.0 - R * R) / (2.0 * D), (R * R + 1.0) / D, D};
}

namespace detail {

inline FlowField stokes_annulus(const Annulus& ann, double s, SolutionKind kind, const char* name) {
    const auto c = stokes_constants(ann);
    FlowField::Metadata meta;
    meta.kind = kind;
    meta.name = name;
    meta.equations = Equations::stokes;
    meta.params.R = ann.R();
    meta.outer_data = [s](double) { return CartesianVector{s, 0.0}; };
    meta.inner_data = zero_data();
    auto vel = [c, s](const PolarPoint& p) {
        const double r2 = p.rho * p.rho;
        const double L = std::log(p.rho);
        const double ur = c.C1 * r2 + c.C2 / r2 + c.C3 + c.C4 * L;
        const double ut = 3.0 * c.C1 * r2 - c.C2 / r2 + c.C3 + c.C4 * (1.0 + L);
        return PolarVector{s * ur * std::cos(p.theta), -s * ut * std::sin(p.theta)};
    };
    auto pre = [c, s](const PolarPoint& p) {
        return s * (8.0 * c.C1 * p.rho - 2.0 * c.C4 / p.rho) * std::cos(p.theta);
    };
    auto grad = [c, s](const PolarPoint& p) {
        const double r = p.rho;
        return PolarVector{s * (8.0 * c.C1 + 2.0 * c.C4 / (r * r)) * std::cos(p.theta),
                           -s * (8.0 * c.C1 - 2.0 * c.C4 / (r * r)) * std::sin(p.theta)};
    };
    return FlowField(std::move(meta), vel, pre, grad);
}

}  // namespace detail

/// Stokes flow with uniform velocity (1, 0) on the outer circle.
inline FlowField stokes_annulus_uniform(const Annulus& ann) {
    return detail::stokes_annulus(ann, 1.0, SolutionKind::stokes_uniform, "stokes-uniform");
}

/// Same flow with boundary velocity (log R, 0).
inline FlowField stokes_annulus_scaled(const Annulus& ann) {
    return detail::stokes_annulus(ann, std::log(ann.R()), SolutionKind::stokes_scaled, "stokes-scaled");
}

enum class RotatingScale { unit, R };

/// Rigid rotation data on the outer circle: speed 1 (unit) or R.
inline FlowField stokes_annulus_rotating(const Annulus& ann, RotatingScale scale = RotatingScale::unit) {
    const double R = ann.R();
    const double speed = scale == RotatingScale::unit ? 1.0 : R;
    const double c = R * speed / (R * R - 1.0);
    FlowField::Metadata meta;
    meta.kind = SolutionKind::stokes_rotating;
    meta.name = "stokes-rotating";
    meta.equations = Equations::stokes;
    meta.params.R = R;
    meta.params.omega = speed;
    meta.outer_data = detail::azimuthal_data(speed);
    meta.inner_data = detail::zero_data();
    return detail::azimuthal_field(
        std::move(meta), [c](double r) { return c * (r - 1.0 / r); },
        [c](double r) { return c * (1.0 + 1.0 / (r * r)); }, [](double) { return 0.0; },
        [](double) { return 0.0; }, 0.0);
}

/// Couette flow in the disk B_R: rigid rotation with angular speed omega/R.
inline FlowField disk_couette(double R, double omega) {
    if (!std::isfinite(R) || !(R > 0.0)) throw InvalidArgument("disk_couette: R must be positive");
    detail::require_omega(omega);
    const double k = omega / R;
    FlowField::Metadata meta;
    meta.kind = SolutionKind::disk_couette;
    meta.name = "disk-couette";
    meta.domain = DomainKind::disk;
    meta.params.R = R;
    meta.params.omega = omega;
    meta.outer_data = detail::azimuthal_data(omega);
    return detail::azimuthal_field(
        std::move(meta), [k](double r) { return k * r; }, [k](double) { return k; },
        [k](double r) { return 0.5 * k * k * r * r; }, [k](double r) { return k * k * r; }, 0.0);
}

struct ExteriorKind {
    enum class Tag { log_solution, rigid_family, linear, log_flux };
    Tag tag;
    /// Rotation rate of rigid_family.
    double K = 0.0;

    static ExteriorKind log_solution() { return {Tag::log_solution}; }
    static ExteriorKind rigid_family(double K) { return {Tag::rigid_family, K}; }
    static ExteriorKind linear() { return {Tag::linear}; }
    static ExteriorKind log_flux() { return {Tag::log_flux}; }
};

/// Explicit solutions in the exterior of the unit disk.
inline FlowField exterior_catalog(ExteriorKind kind) {
    FlowField::Metadata meta;
    meta.domain = DomainKind::exterior;
    meta.inner_data = detail::zero_data();
    switch (kind.tag) {
        case ExteriorKind::Tag::log_solution: {
            meta.kind = SolutionKind::exterior_log;
            meta.name = "exterior-log";
            meta.equations = Equations::stokes;
            auto vel = [](const PolarPoint& p) {
                const double a = 0.5 / (p.rho * p.rho) - 0.5;
                const double L = std::log(p.rho);
                return PolarVector{(a + L) * std::cos(p.theta), (a - L) * std::sin(p.theta)};
            };
            auto pre = [](const PolarPoint& p) { return -2.0 / p.rho * std::cos(p.theta); };
            auto grad = [](const PolarPoint& p) {
                const double r2 = p.rho * p.rho;
                return PolarVector{2.0 / r2 * std::cos(p.theta), 2.0 / r2 * std::sin(p.theta)};
            };
            return FlowField(std::move(meta), vel, pre, grad);
        }
        case ExteriorKind::Tag::rigid_family: {
            if (!std::isfinite(kind.K)) throw InvalidArgument("rigid_family: K must be finite");
            const double K = kind.K;
            meta.kind = SolutionKind::exterior_rigid;
            meta.name = "exterior-rigid";
            meta.params.K = K;
            return detail::azimuthal_field(
                std::move(meta), [K](double r) { return K * (r - 1.0 / r); },
                [K](double r) { return K * (1.0 + 1.0 / (r * r)); },
                [K](double r) { return 0.5 * K * K * (r * r - 1.0 / (r * r) - 4.0 * std::log(r)); },
                [K](double r) {
                    const double g = K * (r - 1.0 / r);
                    return g * g / r;
                },
                0.0);
        }
        case ExteriorKind::Tag::linear:
            meta.kind = SolutionKind::exterior_linear;
            meta.name = "exterior-linear";
            meta.equations = Equations::stokes;
            return detail::azimuthal_field(
                std::move(meta), [](double r) { return r - 1.0 / r; },
                [](double r) { return 1.0 + 1.0 / (r * r); }, [](double) { return 0.0; },
                [](double) { return 0.0; }, 0.0);
        case ExteriorKind::Tag::log_flux:
            meta.kind = SolutionKind::exterior_logflux;
            meta.name = "exterior-logflux";
            meta.equations = Equations::stokes;
            // P = theta, i.e. -lambda theta with lambda = -1.
            return detail::azimuthal_field(
                std::move(meta), [](double r) { return 0.5 * r * std::log(r); },
                [](double r) { return 0.5 * (std::log(r) + 1.0); }, [](double) { return 0.0; },
                [](double) { return 0.0; }, -1.0);
    }
    throw InvalidArgument("exterior_catalog: unknown kind");
}

}  // namespace tcflow
