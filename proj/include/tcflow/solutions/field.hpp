#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tcflow/errors.hpp"
#include "tcflow/solutions/geometry.hpp"
#include "tcflow/solutions/profile.hpp"

namespace tcflow {

enum class SolutionKind {
    taylor_couette,
    generalized_tc,
    special_forcing_tc,
    incomplete,
    flux_carrier,
    stokes_uniform,
    stokes_scaled,
    stokes_rotating,
    disk_couette,
    exterior_log,
    exterior_rigid,
    exterior_linear,
    exterior_logflux,
    cut_potential,
    custom,
};

enum class DomainKind { annulus, disk, exterior };

/// Which momentum balance the field satisfies.
enum class Equations { navier_stokes, stokes };

struct FieldParams {
    double R = std::numeric_limits<double>::quiet_NaN();
    double omega = 0.0;
    double lambda = 0.0;
    double phi = 0.0;
    double K = 0.0;
    /// Accumulated rotation applied by rotate_field.
    double rotation = 0.0;
};

/// Velocity/pressure pair in polar components plus what is known about it.
///
/// A multivalued pressure lives on the cut domain (theta in [0, 2pi), cut at
/// theta = 0) and always ships an analytic gradient, which is single-valued.
class FlowField {
public:
    using VelocityFn = std::function<PolarVector(const PolarPoint&)>;
    using PressureFn = std::function<double(const PolarPoint&)>;
    using GradientFn = std::function<PolarVector(const PolarPoint&)>;
    /// Prescribed Cartesian velocity on a boundary circle, as a function of theta.
    using BoundaryFn = std::function<CartesianVector(double)>;

    struct Metadata {
        SolutionKind kind = SolutionKind::custom;
        std::string name = "custom";
        FieldParams params;
        DomainKind domain = DomainKind::annulus;
        Equations equations = Equations::navier_stokes;
        Forcing forcing;
        bool multivalued_pressure = false;
        /// u = G(rho) theta-hat with theta-independent pressure gradient.
        bool rotationally_invariant = false;
        BoundaryFn outer_data;  // rho = R (annulus, disk)
        BoundaryFn inner_data;  // rho = 1 (annulus, exterior)
    };

    FlowField(Metadata meta, VelocityFn velocity, PressureFn pressure,
              std::optional<GradientFn> pressure_gradient = std::nullopt,
              std::function<double(double)> azimuthal_derivative = {})
        : meta_(std::move(meta)),
          velocity_(std::move(velocity)),
          pressure_(std::move(pressure)),
          gradient_(std::move(pressure_gradient)),
          azimuthal_derivative_(std::move(azimuthal_derivative)) {
        if (meta_.multivalued_pressure && !gradient_)
            throw InvalidArgument("multivalued pressure requires an analytic gradient");
        if (meta_.domain != DomainKind::exterior && !(meta_.params.R > 0.0))
            throw InvalidArgument("bounded field needs a positive outer radius");
    }

    const Metadata& meta() const noexcept { return meta_; }
    const std::string& name() const noexcept { return meta_.name; }
    bool multivalued_pressure() const noexcept { return meta_.multivalued_pressure; }

    PolarVector velocity(const PolarPoint& p) const { return velocity_(p); }
    double pressure(const PolarPoint& p) const { return pressure_(p); }
    bool has_pressure_gradient() const noexcept { return gradient_.has_value(); }
    /// (d_rho p, (1/rho) d_theta p)
    PolarVector pressure_gradient(const PolarPoint& p) const {
        if (!gradient_) throw UnsupportedOperation(name() + ": no analytic pressure gradient");
        return (*gradient_)(p);
    }

    /// Azimuthal component on theta = 0, the profile G of a rotationally
    /// invariant field.
    double azimuthal(double rho) const { return velocity_({rho, 0.0}).theta; }
    bool has_azimuthal_derivative() const noexcept { return static_cast<bool>(azimuthal_derivative_); }
    double azimuthal_derivative(double rho) const { return azimuthal_derivative_(rho); }

    double inner_radius() const {
        return meta_.domain == DomainKind::disk ? 0.0 : 1.0;
    }
    /// Outer radius, +inf for exterior fields.
    double outer_radius() const {
        return meta_.domain == DomainKind::exterior ? std::numeric_limits<double>::infinity()
                                                    : meta_.params.R;
    }
    bool contains(double rho) const {
        const double slack = 1e-12 * std::max(1.0, std::isfinite(outer_radius()) ? outer_radius() : rho);
        return rho >= inner_radius() - slack && rho <= outer_radius() + slack;
    }

    const VelocityFn& velocity_fn() const noexcept { return velocity_; }
    const PressureFn& pressure_fn() const noexcept { return pressure_; }
    const std::optional<GradientFn>& gradient_fn() const noexcept { return gradient_; }
    const std::function<double(double)>& azimuthal_derivative_fn() const noexcept {
        return azimuthal_derivative_;
    }

private:
    Metadata meta_;
    VelocityFn velocity_;
    PressureFn pressure_;
    std::optional<GradientFn> gradient_;
    std::function<double(double)> azimuthal_derivative_;
};

struct FieldSample {
    PolarPoint point;
    PolarVector u;
    CartesianVector u_cartesian;
    /// Empty on the cut of a multivalued pressure.
    std::optional<double> p;
};

/// Batch evaluation. Throws DomainError carrying the index of the first
/// point outside the field's domain.
inline std::vector<FieldSample> evaluate(const FlowField& field, std::span<const PolarPoint> points) {
    std::vector<FieldSample> out;
    out.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const PolarPoint& pt = points[i];
        if (!std::isfinite(pt.rho) || !std::isfinite(pt.theta) || !field.contains(pt.rho))
            throw DomainError(field.name() + ": point " + std::to_string(i) + " (rho=" +
                                  std::to_string(pt.rho) + ") outside the domain",
                              static_cast<long>(i));
        FieldSample s;
        s.point = pt;
        s.u = field.velocity(pt);
        s.u_cartesian = to_cartesian(s.u, pt.theta);
        if (!(field.multivalued_pressure() && wrap_angle(pt.theta) == 0.0)) s.p = field.pressure(pt);
        out.push_back(s);
    }
    return out;
}

/// u_phi(x) = Rot(phi)^T u(Rot(phi) x), p_phi(x) = p(Rot(phi) x). In polar
/// components this is a shift of the angle by phi.
inline FlowField rotate_field(const FlowField& field, double phi) {
    if (field.multivalued_pressure())
        throw UnsupportedOperation("rotate_field: multivalued pressure cannot be rotated");
    auto shift = [phi](PolarPoint p) {
        p.theta = p.theta + phi;
        return p;
    };
    auto rotate_data = [phi](const FlowField::BoundaryFn& data) -> FlowField::BoundaryFn {
        if (!data) return {};
        return [phi, data](double theta) {
            const CartesianVector v = data(theta + phi);
            const double c = std::cos(phi), s = std::sin(phi);
            return CartesianVector{c * v.x + s * v.y, -s * v.x + c * v.y};
        };
    };

    FlowField::Metadata meta = field.meta();
    meta.params.rotation += phi;
    meta.outer_data = rotate_data(meta.outer_data);
    meta.inner_data = rotate_data(meta.inner_data);

    std::optional<FlowField::GradientFn> grad;
    if (field.gradient_fn()) {
        auto g = *field.gradient_fn();
        grad = [g, shift](const PolarPoint& p) { return g(shift(p)); };
    }
    auto vel = field.velocity_fn();
    auto pre = field.pressure_fn();
    return FlowField(
        std::move(meta), [vel, shift](const PolarPoint& p) { return vel(shift(p)); },
        [pre, shift](const PolarPoint& p) { return pre(shift(p)); }, std::move(grad),
        field.meta().rotationally_invariant ? field.azimuthal_derivative_fn()
                                            : std::function<double(double)>{});
}

}  // namespace tcflow
