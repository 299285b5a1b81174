#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tcflow/errors.hpp"
#include "tcflow/numerics/interval.hpp"
#include "tcflow/numerics/quadrature.hpp"
#include "tcflow/report.hpp"
#include "tcflow/solutions/field.hpp"
#include "tcflow/solutions/geometry.hpp"
#include "tcflow/solutions/profile.hpp"

namespace tcflow {

namespace detail {

/// int_a^b t^k g(t) dt. Tabulated profiles are split at their knots, where
/// Simpson's rule is exact for k <= 2; everything else goes through adaptive
/// quadrature.
inline double profile_moment(const RadialProfile& g, int k, double a, double b, double tol = 1e-13) {
    if (a == b || g.is_zero()) return 0.0;
    if (b < a) return -profile_moment(g, k, b, a, tol);
    auto integrand = [&](double t) { return std::pow(t, k) * g(t); };
    if (const auto* tab = std::get_if<RadialProfile::Tabulated>(&g.kind())) {
        double sum = 0.0;
        double lo = a;
        auto it = std::upper_bound(tab->rho.begin(), tab->rho.end(), a);
        for (;; ++it) {
            const double hi = (it == tab->rho.end() || *it >= b) ? b : *it;
            if (hi > lo) sum += numerics::detail::simpson(lo, hi, integrand(lo), integrand(0.5 * (lo + hi)),
                                                         integrand(hi));
            if (hi >= b) break;
            lo = hi;
        }
        return sum;
    }
    const double scale = std::max({1.0, std::fabs(integrand(a)), std::fabs(integrand(b)),
                                   std::fabs(integrand(0.5 * (a + b)))});
    return numerics::integrate(integrand, numerics::Interval(a, b), tol * scale * (b - a));
}

/// Uniform node table on [1, R] holding a radial primitive P with known
/// derivative; evaluated by cubic Hermite interpolation.
class RadialPrimitive {
public:
    template <class Deriv>
    RadialPrimitive(double R, std::size_t n, Deriv&& dP) : R_(R), h_((R - 1.0) / static_cast<double>(n - 1)) {
        value_.assign(n, 0.0);
        slope_.resize(n);
        double scale = 1e-300;
        for (std::size_t i = 0; i < n; ++i) {
            slope_[i] = dP(node(i));
            scale = std::max(scale, std::fabs(slope_[i]));
        }
        for (std::size_t i = 1; i < n; ++i) {
            const double a = node(i - 1);
            const double b = node(i);
            value_[i] = value_[i - 1] + numerics::integrate(dP, numerics::Interval(a, b), 1e-14 * scale * (b - a));
        }
    }

    double node(std::size_t i) const {
        return i + 1 == value_.size() ? R_ : 1.0 + h_ * static_cast<double>(i);
    }

    double operator()(double rho) const {
        const std::size_t n = value_.size();
        double t = (rho - 1.0) / h_;
        std::size_t i = t <= 0.0 ? 0 : std::min(static_cast<std::size_t>(t), n - 2);
        const double a = node(i);
        const double h = node(i + 1) - a;
        t = (rho - a) / h;
        const double t2 = t * t, t3 = t2 * t;
        return (2 * t3 - 3 * t2 + 1) * value_[i] + (t3 - 2 * t2 + t) * h * slope_[i] +
               (-2 * t3 + 3 * t2) * value_[i + 1] + (t3 - t2) * h * slope_[i + 1];
    }

private:
    double R_;
    double h_;
    std::vector<double> value_;
    std::vector<double> slope_;
};

inline constexpr std::size_t kPressureNodes = 2001;

inline FlowField::BoundaryFn azimuthal_data(double speed) {
    return [speed](double theta) { return CartesianVector{-speed * std::sin(theta), speed * std::cos(theta)}; };
}

inline FlowField::BoundaryFn zero_data() {
    return [](double) { return CartesianVector{0.0, 0.0}; };
}

inline void require_omega(double omega) {
    if (!std::isfinite(omega) || omega < 0.0) throw InvalidArgument("omega must be finite and >= 0");
}

/// u = G(rho) theta-hat with pressure P(rho) - lambda * theta.
inline FlowField azimuthal_field(FlowField::Metadata meta, std::function<double(double)> G,
                                 std::function<double(double)> dG, std::function<double(double)> P,
                                 std::function<double(double)> dP, double lambda) {
    meta.rotationally_invariant = true;
    meta.multivalued_pressure = lambda != 0.0;
    auto vel = [G](const PolarPoint& p) { return PolarVector{0.0, G(p.rho)}; };
    auto pre = [P, lambda](const PolarPoint& p) {
        return lambda == 0.0 ? P(p.rho) : P(p.rho) - lambda * wrap_angle(p.theta);
    };
    auto grad = [dP, lambda](const PolarPoint& p) { return PolarVector{dP(p.rho), -lambda / p.rho}; };
    return FlowField(std::move(meta), vel, pre, grad, std::move(dG));
}

}  // namespace detail

/// Classical Taylor-Couette flow: inner circle at rest, outer circle rotating
/// with angular velocity omega.
inline FlowField taylor_couette(const Annulus& ann, double omega) {
    detail::require_omega(omega);
    const double R = ann.R();
    const double c = R * omega / (R * R - 1.0);
    FlowField::Metadata meta;
    meta.kind = SolutionKind::taylor_couette;
    meta.name = "taylor-couette";
    meta.params.R = R;
    meta.params.omega = omega;
    meta.outer_data = detail::azimuthal_data(omega);
    meta.inner_data = detail::zero_data();
    return detail::azimuthal_field(
        std::move(meta), [c](double r) { return c * (r - 1.0 / r); },
        [c](double r) { return c * (1.0 + 1.0 / (r * r)); },
        [c](double r) { return 0.5 * c * c * (r * r - 1.0 / (r * r) - 4.0 * std::log(r)); },
        [c](double r) {
            const double g = c * (r - 1.0 / r);
            return g * g / r;
        },
        0.0);
}

/// A_R(omega, f).
inline double coefficient_A(const Annulus& ann, double omega, const Forcing& f) {
    detail::require_omega(omega);
    const double R = ann.R();
    const double i0 = detail::profile_moment(f.f_theta, 0, 1.0, R);
    const double i2 = detail::profile_moment(f.f_theta, 2, 1.0, R);
    return R / (R * R - 1.0) * (omega + 0.5 * R * i0 - i2 / (2.0 * R));
}

/// Generalized Taylor-Couette flow driven by a rotationally invariant force.
/// The inner integrals of f^theta are tabulated on a uniform node set and
/// completed by a short quadrature from the nearest node.
inline FlowField generalized_tc(const Annulus& ann, double omega, const Forcing& f) {
    detail::require_omega(omega);
    const double R = ann.R();
    const double A = coefficient_A(ann, omega, f);

    struct Moments {
        RadialProfile ft;
        double R;
        double h;
        std::vector<double> i0, i2;

        double node(std::size_t i) const { return i + 1 == i0.size() ? R : 1.0 + h * static_cast<double>(i); }
        std::pair<double, double> at(double rho) const {
            const double slack = 1e-12 * R;
            if (rho < 1.0 - slack || rho > R + slack)
                throw DomainError("generalized_tc: rho outside [1, R]");
            rho = std::clamp(rho, 1.0, R);
            const double t = (rho - 1.0) / h;
            std::size_t i = std::min(static_cast<std::size_t>(t + 0.5), i0.size() - 1);
            const double a = node(i);
            return {i0[i] + detail::profile_moment(ft, 0, a, rho), i2[i] + detail::profile_moment(ft, 2, a, rho)};
        }
    };
    auto m = std::make_shared<Moments>();
    m->ft = f.f_theta;
    m->R = R;
    constexpr std::size_t n = detail::kPressureNodes;
    m->h = (R - 1.0) / static_cast<double>(n - 1);
    m->i0.assign(n, 0.0);
    m->i2.assign(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        const double a = m->node(i - 1), b = m->node(i);
        m->i0[i] = m->i0[i - 1] + detail::profile_moment(f.f_theta, 0, a, b);
        m->i2[i] = m->i2[i - 1] + detail::profile_moment(f.f_theta, 2, a, b);
    }

    auto G = [m, A](double r) {
        const auto [i0, i2] = m->at(r);
        return A * (r - 1.0 / r) - 0.5 * r * i0 + i2 / (2.0 * r);
    };
    auto dG = [m, A](double r) {
        const auto [i0, i2] = m->at(r);
        return A * (1.0 + 1.0 / (r * r)) - 0.5 * i0 - i2 / (2.0 * r * r);
    };
    const RadialProfile fr = f.f_rho;
    auto dP = [G, fr](double r) {
        const double g = G(r);
        return g * g / r + fr(r);
    };
    auto P = std::make_shared<detail::RadialPrimitive>(R, n, dP);

    FlowField::Metadata meta;
    meta.kind = SolutionKind::generalized_tc;
    meta.name = "generalized-tc";
    meta.params.R = R;
    meta.params.omega = omega;
    meta.forcing = f;
    meta.outer_data = detail::azimuthal_data(omega);
    meta.inner_data = detail::zero_data();
    return detail::azimuthal_field(std::move(meta), G, dG, [P](double r) { return (*P)(r); }, dP, 0.0);
}

namespace detail {

/// Azimuthal profile a(rho - 1/rho) - (lambda rho / 2) log rho shared by the
/// special forcing, incomplete and flux-carrier families.
struct LogProfile {
    double a;
    double lambda;
    double operator()(double r) const { return a * (r - 1.0 / r) - 0.5 * lambda * r * std::log(r); }
    double derivative(double r) const {
        return a * (1.0 + 1.0 / (r * r)) - 0.5 * lambda * (std::log(r) + 1.0);
    }
};

inline LogProfile log_profile(double R, double omega, double lambda) {
    return {R / (R * R - 1.0) * (omega + 0.5 * lambda * R * std::log(R)), lambda};
}

inline FlowField log_profile_field(FlowField::Metadata meta, const LogProfile& g, double pressure_lambda,
                                   bool with_convection_pressure) {
    const double R = meta.params.R;
    std::function<double(double)> P = [](double) { return 0.0; };
    std::function<double(double)> dP = [](double) { return 0.0; };
    if (with_convection_pressure) {
        dP = [g](double r) {
            const double v = g(r);
            return v * v / r;
        };
        auto table = std::make_shared<RadialPrimitive>(R, kPressureNodes, dP);
        P = [table](double r) { return (*table)(r); };
    }
    return azimuthal_field(
        std::move(meta), g, [g](double r) { return g.derivative(r); }, P, dP, pressure_lambda);
}

}  // namespace detail

/// Generalized flow for f = (lambda/rho) theta-hat, in closed form. The
/// pressure is the single radial quadrature of G^2/t.
inline FlowField special_forcing_tc(const Annulus& ann, double omega, double lambda) {
    detail::require_omega(omega);
    if (!std::isfinite(lambda)) throw InvalidArgument("lambda must be finite");
    FlowField::Metadata meta;
    meta.kind = SolutionKind::special_forcing_tc;
    meta.name = "special-forcing-tc";
    meta.params.R = ann.R();
    meta.params.omega = omega;
    meta.params.lambda = lambda;
    meta.forcing = lambda == 0.0 ? Forcing::zero() : Forcing::azimuthal(RadialProfile::inverse_rho(lambda));
    meta.outer_data = detail::azimuthal_data(omega);
    meta.inner_data = detail::zero_data();
    return detail::log_profile_field(std::move(meta), detail::log_profile(ann.R(), omega, lambda), 0.0, true);
}

/// Unforced incomplete solutions: the special-forcing velocity with pressure
/// shifted by -lambda * theta, multivalued across the cut theta = 0.
inline FlowField incomplete_family(const Annulus& ann, double omega, double lambda) {
    detail::require_omega(omega);
    if (!std::isfinite(lambda)) throw InvalidArgument("lambda must be finite");
    FlowField::Metadata meta;
    meta.kind = SolutionKind::incomplete;
    meta.name = "incomplete";
    meta.params.R = ann.R();
    meta.params.omega = omega;
    meta.params.lambda = lambda;
    meta.outer_data = detail::azimuthal_data(omega);
    meta.inner_data = detail::zero_data();
    return detail::log_profile_field(std::move(meta), detail::log_profile(ann.R(), omega, lambda), lambda, true);
}

inline double lambda_star(const Annulus& ann, double omega, double Phi) {
    detail::require_omega(omega);
    const double R = ann.R();
    const double den = R * R * R * R + R * R * R - R - 6.0 * R * R * std::log(R) - 1.0;
    if (!(den > 0.0)) throw NumericalConsistency("lambda_star: non-positive denominator");
    return 18.0 * (R + 1.0) / den * (Phi - R * omega / (R * R - 1.0) * (R * R * R / 3.0 - R + 2.0 / 3.0));
}

/// Incomplete Stokes solution with prescribed flux Phi across the cut.
inline FlowField flux_carrier(const Annulus& ann, double omega, double Phi) {
    const double ls = lambda_star(ann, omega, Phi);
    FlowField::Metadata meta;
    meta.kind = SolutionKind::flux_carrier;
    meta.name = "flux-carrier";
    meta.equations = Equations::stokes;
    meta.params.R = ann.R();
    meta.params.omega = omega;
    meta.params.phi = Phi;
    meta.params.lambda = ls;
    meta.outer_data = detail::azimuthal_data(omega);
    meta.inner_data = detail::zero_data();
    return detail::log_profile_field(std::move(meta), detail::log_profile(ann.R(), omega, ls), ls, false);
}

/// K_R(omega, Phi) = squared L2 norm of the gradient of the flux carrier.
inline double dirichlet_energy_flux_carrier(const Annulus& ann, double omega, double Phi) {
    const double R = ann.R();
    const double ls = lambda_star(ann, omega, Phi);
    const double L = std::log(R);
    const double w = omega + 0.5 * R * ls * L;
    const double r2 = R * R;
    return kTwoPi * ((r2 + 1.0) / (r2 - 1.0) * w * w + ls * ls / 8.0 * (2.0 * r2 * L * L + r2 - 1.0) -
                     ls * R * (r2 + 1.0) * L / (r2 - 1.0) * w);
}

enum class FluxDefinition { weighted, line };

/// Flux of the azimuthal profile on theta = 0 across the cut.
/// weighted: int rho G; line: int G.
inline double flux(const FlowField& field, FluxDefinition def = FluxDefinition::weighted) {
    if (field.meta().domain != DomainKind::annulus)
        throw InvalidArgument("flux: annulus field required");
    const double R = field.meta().params.R;
    auto g = [&](double r) {
        const double v = field.azimuthal(r);
        return def == FluxDefinition::weighted ? r * v : v;
    };
    return numerics::integrate(g, numerics::Interval(1.0, R), 1e-11);
}

struct ThresholdResult {
    double K = 0.0;
    double forcing_norm = 0.0;
    /// Present when an eigenvalue was supplied.
    std::optional<double> sqrt_lambda;
    /// K < sqrt(lambda), strictly.
    std::optional<bool> uniqueness;
};

/// K_R(omega, f) = omega + sqrt(R-1)/(sqrt(15) R) sqrt(8R^4-7R^3-7R^2+3R+3) ||f^theta||.
inline ThresholdResult threshold_force(const Annulus& ann, double omega, const Forcing& f,
                                       std::optional<double> eigenvalue = std::nullopt) {
    detail::require_omega(omega);
    const double R = ann.R();
    ThresholdResult out;
    out.forcing_norm = annulus_l2_norm(f.f_theta, ann);
    const double poly = 8 * R * R * R * R - 7 * R * R * R - 7 * R * R + 3 * R + 3;
    out.K = omega + std::sqrt(R - 1.0) / (std::sqrt(15.0) * R) * std::sqrt(poly) * out.forcing_norm;
    if (eigenvalue) {
        if (!(*eigenvalue > 0.0)) throw InvalidArgument("threshold_force: eigenvalue must be positive");
        out.sqrt_lambda = std::sqrt(*eigenvalue);
        out.uniqueness = out.K < *out.sqrt_lambda;
    }
    return out;
}

/// Max of |u| over 2000 radii on theta = 0, compared against K.
inline Report sup_velocity_bound_check(const FlowField& field, double K) {
    constexpr int n = 2000;
    const double lo = field.inner_radius();
    const double hi = field.outer_radius();
    if (!std::isfinite(hi)) throw InvalidArgument("sup_velocity_bound_check: bounded field required");
    double mx = 0.0;
    double at = lo;
    for (int i = 0; i < n; ++i) {
        const double r = i + 1 == n ? hi : lo + (hi - lo) * i / (n - 1.0);
        const PolarVector u = field.velocity({r, 0.0});
        const double m = std::hypot(u.rho, u.theta);
        if (m > mx) {
            mx = m;
            at = r;
        }
    }
    Report rep;
    rep.title = "sup-velocity";
    rep.input("K", K);
    rep.output("max_velocity", mx);
    rep.output("argmax_rho", at);
    rep.check_le("max_velocity<=K", mx, K * (1.0 + 4e-16) + 1e-300);
    return rep;
}

}  // namespace tcflow
