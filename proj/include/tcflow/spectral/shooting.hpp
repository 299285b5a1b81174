#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "tcflow/errors.hpp"
#include "tcflow/numerics/ode.hpp"
#include "tcflow/report.hpp"
#include "tcflow/solutions/geometry.hpp"
#include "tcflow/spectral/sobolev.hpp"

namespace tcflow::spectral {

/// v'' + v'/rho + v^3 = 0 as a first-order system in (v, v').
struct LaneEmdenRhs {
    numerics::Vec<2> operator()(double rho, const numerics::Vec<2>& y) const {
        return {y[1], -y[1] / rho - y[0] * y[0] * y[0]};
    }
};

inline numerics::StepControl shooting_control(const Annulus& ann, bool store) {
    numerics::StepControl c;
    c.mode = numerics::StepControl::Mode::fixed;
    c.step = (ann.R() - 1.0) / 20000.0;
    c.richardson_check = true;
    c.store_trajectory = store;
    c.zero_crossing_component = 0;
    c.event_tolerance = 1e-12;
    return c;
}

inline numerics::Trajectory<2> shoot(const Annulus& ann, double a, bool store) {
    if (!std::isfinite(a) || !(a > 0.0)) throw InvalidArgument("shoot: slope must be positive");
    numerics::OdeState<2> init;
    init.rho = 1.0;
    init.y = {0.0, a};
    return numerics::integrate_ode(LaneEmdenRhs{}, init, numerics::Interval(1.0, 2.0 * ann.R() - 1.0),
                                   shooting_control(ann, store));
}

/// First zero of the solution with v(1) = 0, v'(1) = a; +inf when none occurs
/// before 2R - 1.
inline double shoot_first_zero(const Annulus& ann, double a) {
    const auto traj = shoot(ann, a, false);
    return traj.event_rho ? *traj.event_rho : std::numeric_limits<double>::infinity();
}

struct ShootResult {
    double a_star = 0.0;
    double R0 = 0.0;
    double rho_star = 0.0;
    /// 2 pi int rho v'^2 and 2 pi int rho v^4 on the final trajectory.
    double grad_energy = 0.0;
    double l4_energy = 0.0;
    std::vector<numerics::OdeState<2>> profile;
    std::vector<std::pair<double, double>> ladder;  // (a, rho*(a))
    bool ladder_monotone = true;
    int bisection_steps = 0;
    double max_local_error = 0.0;
};

namespace detail {

inline std::string ladder_dump(const std::vector<std::pair<double, double>>& ladder) {
    std::string s;
    char buf[64];
    for (const auto& [a, r] : ladder) {
        std::snprintf(buf, sizeof buf, " (%.6g, %.6g)", a, r);
        s += buf;
    }
    return s;
}

}  // namespace detail

/// Shooting for the radial Sobolev constant: a* with rho*(a*) = R, and
/// R0 = sqrt(2 pi) int rho v'^2 / sqrt(int rho v^4) by the trapezoid rule on
/// the integrator's step grid.
inline ShootResult radial_sobolev(const Annulus& ann, double rho_tol = 1e-8) {
    const double R = ann.R();
    ShootResult out;
    std::size_t hi_idx = 0;
    bool bracketed = false;
    for (int k = 0; k <= 60 && !bracketed; ++k) {
        const double a = std::ldexp(1e-3, k);
        double rs = 0.0;
        try {
            rs = shoot_first_zero(ann, a);
        } catch (const IntegrationFailure& e) {
            throw BracketError(std::string("radial_sobolev: ladder shot failed (") + e.what() + ");" +
                               detail::ladder_dump(out.ladder));
        }
        out.ladder.emplace_back(a, rs);
        if (rs <= R) {
            hi_idx = out.ladder.size() - 1;
            bracketed = true;
        }
    }
    for (std::size_t i = 1; i < out.ladder.size(); ++i)
        if (out.ladder[i].second > out.ladder[i - 1].second) out.ladder_monotone = false;
    if (!bracketed || hi_idx == 0)
        throw BracketError("radial_sobolev: no slope bracket on the ladder;" + detail::ladder_dump(out.ladder));

    double lo = out.ladder[hi_idx - 1].first;  // rho* > R
    double hi = out.ladder[hi_idx].first;      // rho* <= R
    double a = hi;
    double rs = out.ladder[hi_idx].second;
    for (int it = 0; it < 200 && std::fabs(rs - R) > rho_tol; ++it) {
        a = 0.5 * (lo + hi);
        if (a <= lo || a >= hi) break;
        rs = shoot_first_zero(ann, a);
        ++out.bisection_steps;
        if (rs > R)
            lo = a;
        else
            hi = a;
    }

    const auto traj = shoot(ann, a, true);
    if (!traj.event_rho) throw NumericalConsistency("radial_sobolev: final shot has no zero");
    out.a_star = a;
    out.rho_star = *traj.event_rho;
    out.profile = traj.states;
    out.max_local_error = traj.max_local_error;

    double ig = 0.0, i4 = 0.0;
    for (std::size_t i = 1; i < out.profile.size(); ++i) {
        const auto& s0 = out.profile[i - 1];
        const auto& s1 = out.profile[i];
        const double h = s1.rho - s0.rho;
        auto g = [](const numerics::OdeState<2>& s) { return s.rho * s.y[1] * s.y[1]; };
        auto q = [](const numerics::OdeState<2>& s) {
            const double v2 = s.y[0] * s.y[0];
            return s.rho * v2 * v2;
        };
        ig += 0.5 * h * (g(s0) + g(s1));
        i4 += 0.5 * h * (q(s0) + q(s1));
    }
    out.grad_energy = kTwoPi * ig;
    out.l4_energy = kTwoPi * i4;
    out.R0 = std::sqrt(kTwoPi) * ig / std::sqrt(i4);
    return out;
}

/// s4_lower <= R0, with the triple (s4_lower, R0, s4_upper).
inline Report tobias_check(const Annulus& ann) {
    const SobolevBounds b = s4_bounds(ann);
    const ShootResult s = radial_sobolev(ann);
    Report rep;
    rep.title = "tobias";
    rep.input("R", ann.R());
    rep.output("s4_lower", b.s4_lower);
    rep.output("R0", s.R0);
    rep.output("s4_upper", b.s4_upper);
    rep.check_le("s4_lower<=R0", b.s4_lower, s.R0);
    if (b.cancellation_warning) rep.note("kappa1 evaluated with heavy cancellation (R < 1.05)");
    return rep;
}

}  // namespace tcflow::spectral
