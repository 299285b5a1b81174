#pragma once

// Explicit classical Runge-Kutta (order 4) integration of first-order systems
// y' = F(rho, y), with cubic Hermite dense output and first-zero-crossing
// event detection.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tcflow/errors.hpp"
#include "tcflow/numerics/interval.hpp"

namespace tcflow::numerics {

template <std::size_t N>
using Vec = std::array<double, N>;

/// Sample of a trajectory: position, solution and derivative F(rho, y).
template <std::size_t N>
struct OdeState {
    double rho = 0.0;
    Vec<N> y{};
    Vec<N> dy{};
};

struct StepControl {
    enum class Mode { fixed, adaptive };

    Mode mode = Mode::fixed;
    /// Fixed step, or the initial step in adaptive mode.
    double step = 1e-3;
    /// Fixed mode: each step is also taken as two half steps; the half-step
    /// result is kept and |y_half - y_full|/15 is recorded as the local error.
    bool richardson_check = true;
    /// Adaptive mode: accepted local error (max norm).
    double tolerance = 1e-10;
    double min_step = 1e-14;
    bool store_trajectory = true;
    /// Stop at the first sign change of this component (excluding the start).
    std::optional<std::size_t> zero_crossing_component;
    /// Bracket width for the refined crossing location.
    double event_tolerance = 1e-10;
};

template <std::size_t N>
struct Trajectory {
    std::vector<OdeState<N>> states;
    OdeState<N> final_state;
    std::optional<double> event_rho;
    double max_local_error = 0.0;
    std::size_t steps = 0;
};

namespace detail {

template <std::size_t N>
Vec<N> axpy(const Vec<N>& y, double a, const Vec<N>& x) {
    Vec<N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + a * x[i];
    return out;
}

template <std::size_t N, class Rhs>
Vec<N> rk4_step(Rhs& rhs, double rho, const Vec<N>& y, const Vec<N>& k1, double h) {
    const Vec<N> k2 = rhs(rho + 0.5 * h, axpy(y, 0.5 * h, k1));
    const Vec<N> k3 = rhs(rho + 0.5 * h, axpy(y, 0.5 * h, k2));
    const Vec<N> k4 = rhs(rho + h, axpy(y, h, k3));
    Vec<N> out;
    for (std::size_t i = 0; i < N; ++i)
        out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

template <std::size_t N>
double max_abs_diff(const Vec<N>& a, const Vec<N>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

template <std::size_t N>
bool all_finite(const Vec<N>& y) {
    return std::all_of(y.begin(), y.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace detail

/// Cubic Hermite interpolation of component i between two states.
template <std::size_t N>
double hermite(const OdeState<N>& a, const OdeState<N>& b, std::size_t i, double rho) {
    const double h = b.rho - a.rho;
    const double t = (rho - a.rho) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    return h00 * a.y[i] + h10 * h * a.dy[i] + h01 * b.y[i] + h11 * h * b.dy[i];
}

/// Dense-output state at rho between two stored states. Derivatives are
/// re-evaluated from the interpolated solution.
template <std::size_t N, class Rhs>
OdeState<N> interpolate(Rhs&& rhs, const OdeState<N>& a, const OdeState<N>& b, double rho) {
    OdeState<N> s;
    s.rho = rho;
    for (std::size_t i = 0; i < N; ++i) s.y[i] = hermite(a, b, i, rho);
    s.dy = rhs(rho, s.y);
    return s;
}

/// Dense output of a stored trajectory.
template <std::size_t N, class Rhs>
OdeState<N> sample(Rhs&& rhs, const Trajectory<N>& traj, double rho) {
    const auto& st = traj.states;
    if (st.size() < 2) throw InvalidArgument("sample: trajectory has fewer than two states");
    if (rho < st.front().rho || rho > st.back().rho)
        throw DomainError("sample: rho outside the stored trajectory");
    auto it = std::upper_bound(st.begin(), st.end(), rho,
                               [](double r, const OdeState<N>& s) { return r < s.rho; });
    if (it == st.end()) --it;
    if (it == st.begin()) ++it;
    return interpolate(rhs, *(it - 1), *it, rho);
}

/// Integrates y' = rhs(rho, y) from init over span with classical RK4.
template <std::size_t N, class Rhs>
Trajectory<N> integrate_ode(Rhs&& rhs, OdeState<N> init, const Interval& span,
                            const StepControl& ctrl) {
    if (std::fabs(init.rho - span.lo()) > 1e-14 * std::max(1.0, std::fabs(span.lo())))
        throw InvalidArgument("integrate_ode: initial state must sit at span.lo");
    if (!(ctrl.step > 0.0)) throw InvalidArgument("integrate_ode: step must be positive");
    if (ctrl.zero_crossing_component && *ctrl.zero_crossing_component >= N)
        throw InvalidArgument("integrate_ode: event component out of range");

    Trajectory<N> traj;
    init.rho = span.lo();
    init.dy = rhs(init.rho, init.y);
    if (!detail::all_finite(init.y) || !detail::all_finite(init.dy))
        throw IntegrationFailure("integrate_ode: non-finite initial state", init.rho);

    OdeState<N> cur = init;
    if (ctrl.store_trajectory) traj.states.push_back(cur);

    // Returns true when the event fired between prev and next.
    auto handle_event = [&](const OdeState<N>& prev, const OdeState<N>& next) -> bool {
        if (!ctrl.zero_crossing_component) return false;
        const std::size_t k = *ctrl.zero_crossing_component;
        const double v0 = prev.y[k];
        const double v1 = next.y[k];
        const bool crossed = (v0 > 0.0 && v1 <= 0.0) || (v0 < 0.0 && v1 >= 0.0);
        if (!crossed) return false;
        double lo = prev.rho;
        double hi = next.rho;
        const bool lo_positive = v0 > 0.0;
        if (v1 != 0.0) {
            while (hi - lo > ctrl.event_tolerance) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                const double vm = hermite(prev, next, k, mid);
                if ((vm > 0.0) == lo_positive && vm != 0.0)
                    lo = mid;
                else
                    hi = mid;
            }
        } else {
            lo = hi;
        }
        const double at = (v1 == 0.0) ? next.rho : 0.5 * (lo + hi);
        traj.event_rho = at;
        traj.final_state = (v1 == 0.0) ? next : interpolate(rhs, prev, next, at);
        if (ctrl.store_trajectory) traj.states.push_back(traj.final_state);
        return true;
    };

    auto advance = [&](const OdeState<N>& from, double h, double& err) -> OdeState<N> {
        const Vec<N> full = detail::rk4_step<N>(rhs, from.rho, from.y, from.dy, h);
        const Vec<N> half1 = detail::rk4_step<N>(rhs, from.rho, from.y, from.dy, 0.5 * h);
        const Vec<N> dmid = rhs(from.rho + 0.5 * h, half1);
        const Vec<N> half2 = detail::rk4_step<N>(rhs, from.rho + 0.5 * h, half1, dmid, 0.5 * h);
        err = detail::max_abs_diff(half2, full) / 15.0;
        OdeState<N> next;
        next.rho = from.rho + h;
        next.y = half2;
        next.dy = rhs(next.rho, next.y);
        return next;
    };

    const double end = span.hi();
    double h = std::min(ctrl.step, span.width());
    while (cur.rho < end) {
        const double remaining = end - cur.rho;
        if (remaining <= 1e-14 * std::max(1.0, std::fabs(end))) break;
        double step = std::min(h, remaining);

        OdeState<N> next;
        if (ctrl.mode == StepControl::Mode::fixed) {
            if (ctrl.richardson_check) {
                double err = 0.0;
                next = advance(cur, step, err);
                traj.max_local_error = std::max(traj.max_local_error, err);
            } else {
                next.rho = cur.rho + step;
                next.y = detail::rk4_step<N>(rhs, cur.rho, cur.y, cur.dy, step);
                next.dy = rhs(next.rho, next.y);
            }
        } else {
            for (;;) {
                double err = 0.0;
                next = advance(cur, step, err);
                if (err <= ctrl.tolerance || !detail::all_finite(next.y)) {
                    traj.max_local_error = std::max(traj.max_local_error, err);
                    const double grow =
                        err == 0.0 ? 2.0 : std::min(2.0, 0.9 * std::pow(ctrl.tolerance / err, 0.2));
                    h = std::max(step * grow, ctrl.min_step);
                    break;
                }
                step *= std::max(0.1, 0.9 * std::pow(ctrl.tolerance / err, 0.2));
                if (step < ctrl.min_step)
                    throw IntegrationFailure("integrate_ode: step underflow", cur.rho);
            }
        }
        if (!detail::all_finite(next.y) || !detail::all_finite(next.dy))
            throw IntegrationFailure("integrate_ode: non-finite state", next.rho);
        if (remaining - step <= 1e-14 * std::max(1.0, std::fabs(end))) next.rho = end;

        ++traj.steps;
        if (handle_event(cur, next)) return traj;
        cur = next;
        if (ctrl.store_trajectory) traj.states.push_back(cur);
    }
    traj.final_state = cur;
    return traj;
}

}  // namespace tcflow::numerics
