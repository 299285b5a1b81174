#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "tcflow/errors.hpp"
#include "tcflow/solutions/field.hpp"
#include "tcflow/solutions/geometry.hpp"
#include "tcflow/solutions/profile.hpp"
#include "tcflow/verify/grid.hpp"

namespace tcflow::verify {

struct ResidualReport {
    double momentum_linf = 0.0;
    double momentum_l2 = 0.0;
    double divergence_linf = 0.0;
    double divergence_l2 = 0.0;
    /// Max boundary-data error over 720 samples per circle; 0 without data.
    double boundary_linf = 0.0;
    /// Max norms restricted to nodes with both indices divisible by the
    /// sampling stride (the nodes of a coarser nested grid).
    double momentum_linf_nested = 0.0;
    double divergence_linf_nested = 0.0;
    std::string grid;
    bool convection = true;
};

namespace detail {

/// Second-order first and second differences along one axis, one-sided at
/// the ends unless periodic.
struct Stencil {
    int n;
    double h;
    bool periodic;

    double d1(const std::vector<double>& f, int i, int stride, int base) const {
        auto at = [&](int k) { return f[base + k * stride]; };
        if (periodic) return (at((i + 1) % n) - at((i - 1 + n) % n)) / (2.0 * h);
        if (i == 0) return (-3.0 * at(0) + 4.0 * at(1) - at(2)) / (2.0 * h);
        if (i == n - 1) return (3.0 * at(n - 1) - 4.0 * at(n - 2) + at(n - 3)) / (2.0 * h);
        return (at(i + 1) - at(i - 1)) / (2.0 * h);
    }
    double d2(const std::vector<double>& f, int i, int stride, int base) const {
        auto at = [&](int k) { return f[base + k * stride]; };
        if (periodic) return (at((i + 1) % n) - 2.0 * at(i) + at((i - 1 + n) % n)) / (h * h);
        if (i == 0) return (2.0 * at(0) - 5.0 * at(1) + 4.0 * at(2) - at(3)) / (h * h);
        if (i == n - 1) return (2.0 * at(n - 1) - 5.0 * at(n - 2) + 4.0 * at(n - 3) - at(n - 4)) / (h * h);
        return (at(i + 1) - 2.0 * at(i) + at(i - 1)) / (h * h);
    }
};

}  // namespace detail

inline double boundary_check(const FlowField& field);

/// -Lap u + [(u . grad) u] + grad p - f and div u on the grid nodes. The
/// pressure is differenced when single-valued; a multivalued pressure uses
/// its analytic gradient.
inline ResidualReport assemble_residual(const FlowField& field, const Forcing& f, const PolarGrid& grid,
                                        bool convection, int stride = 1) {
    if (stride < 1) throw InvalidArgument("residual: stride must be positive");
    for (double r : {grid.rho_range().lo(), grid.rho_range().hi()})
        if (!field.contains(r)) throw DomainError(field.name() + ": grid leaves the field's domain");
    if (field.multivalued_pressure()) {
        if (!field.has_pressure_gradient())
            throw UnsupportedOperation(field.name() + ": multivalued pressure without analytic gradient");
        if (grid.topology() != ThetaTopology::cut)
            throw InvalidArgument(field.name() + ": multivalued pressure requires a cut grid");
    }
    if (grid.rho_range().lo() <= 0.0) throw InvalidArgument("residual: grid must avoid rho = 0");

    const int nr = grid.rho_nodes();
    const int nt = grid.theta_nodes();
    std::vector<double> ur(nr * nt), ut(nr * nt), p(nr * nt), rur(nr * nt);
    const bool diff_p = !field.multivalued_pressure();
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nt; ++j) {
            const PolarPoint pt{grid.rho(i), grid.theta(j)};
            const PolarVector u = field.velocity(pt);
            const int k = i * nt + j;
            ur[k] = u.rho;
            ut[k] = u.theta;
            rur[k] = pt.rho * u.rho;
            if (diff_p) p[k] = field.pressure(pt);
        }

    const detail::Stencil sr{nr, grid.d_rho(), false};
    const detail::Stencil st{nt, grid.d_theta(), grid.topology() == ThetaTopology::periodic};
    const double cell = grid.d_rho() * grid.d_theta();

    ResidualReport rep;
    rep.grid = grid.describe();
    rep.convection = convection;
    double m2 = 0.0, d2 = 0.0;
    for (int i = 1; i + 1 < nr; ++i) {
        const double r = grid.rho(i);
        const PolarVector force = f.at(r);
        for (int j = 0; j < nt; ++j) {
            const int k = i * nt + j;
            const int row = i * nt;
            const double urr = sr.d1(ur, i, nt, j), utr = sr.d1(ut, i, nt, j);
            const double urrr = sr.d2(ur, i, nt, j), utrr = sr.d2(ut, i, nt, j);
            const double urt = st.d1(ur, j, 1, row), utt = st.d1(ut, j, 1, row);
            const double urtt = st.d2(ur, j, 1, row), uttt = st.d2(ut, j, 1, row);

            const double lap_r = urrr + urr / r + urtt / (r * r) - ur[k] / (r * r) - 2.0 * utt / (r * r);
            const double lap_t = utrr + utr / r + uttt / (r * r) - ut[k] / (r * r) + 2.0 * urt / (r * r);

            double gp_r, gp_t;
            if (diff_p) {
                gp_r = sr.d1(p, i, nt, j);
                gp_t = st.d1(p, j, 1, row) / r;
            } else {
                const PolarVector g = field.pressure_gradient({r, grid.theta(j)});
                gp_r = g.rho;
                gp_t = g.theta;
            }
            double res_r = -lap_r + gp_r - force.rho;
            double res_t = -lap_t + gp_t - force.theta;
            if (convection) {
                res_r += ur[k] * urr + ut[k] / r * urt - ut[k] * ut[k] / r;
                res_t += ur[k] * utr + ut[k] / r * utt + ur[k] * ut[k] / r;
            }
            const double div = sr.d1(rur, i, nt, j) / r + utt / r;

            const double mom = std::hypot(res_r, res_t);
            rep.momentum_linf = std::max(rep.momentum_linf, mom);
            rep.divergence_linf = std::max(rep.divergence_linf, std::fabs(div));
            if (i % stride == 0 && j % stride == 0) {
                rep.momentum_linf_nested = std::max(rep.momentum_linf_nested, mom);
                rep.divergence_linf_nested = std::max(rep.divergence_linf_nested, std::fabs(div));
            }
            m2 += mom * mom * r * cell;
            d2 += div * div * r * cell;
        }
    }
    rep.momentum_l2 = std::sqrt(m2);
    rep.divergence_l2 = std::sqrt(d2);
    rep.boundary_linf = boundary_check(field);
    return rep;
}

inline ResidualReport ns_residual(const FlowField& field, const Forcing& f, const PolarGrid& grid) {
    return assemble_residual(field, f, grid, true);
}

inline ResidualReport stokes_residual(const FlowField& field, const PolarGrid& grid) {
    return assemble_residual(field, field.meta().forcing, grid, false);
}

/// Residual of the system the field is declared to solve, with its own forcing.
inline ResidualReport residual(const FlowField& field, const PolarGrid& grid) {
    return field.meta().equations == Equations::stokes ? stokes_residual(field, grid)
                                                       : ns_residual(field, field.meta().forcing, grid);
}

/// Radial range used for verification: the annulus or disk itself (disk
/// truncated to [0.1 R, R]), exterior fields truncated to [1, 5] ([1, 10]
/// for the linear field).
inline numerics::Interval verification_range(const FlowField& field) {
    switch (field.meta().domain) {
        case DomainKind::annulus: return {1.0, field.meta().params.R};
        case DomainKind::disk: return {0.1 * field.meta().params.R, field.meta().params.R};
        case DomainKind::exterior:
            return {1.0, field.meta().kind == SolutionKind::exterior_linear ? 10.0 : 5.0};
    }
    throw InvalidArgument("verification_range: unknown domain");
}

/// Grid matching the field: cut topology for multivalued pressures.
inline PolarGrid default_grid(const FlowField& field, int n) {
    const auto r = verification_range(field);
    return field.multivalued_pressure() ? PolarGrid::cut(n, n, r) : PolarGrid::periodic(n, n, r);
}

/// Max |u - data| over 720 samples on each boundary circle that carries data.
inline double boundary_check(const FlowField& field) {
    constexpr int n = 720;
    double err = 0.0;
    auto circle = [&](double r, const FlowField::BoundaryFn& data) {
        if (!data) return;
        for (int j = 0; j < n; ++j) {
            const double t = kTwoPi * j / n;
            const CartesianVector u = to_cartesian(field.velocity({r, t}), t);
            const CartesianVector d = data(t);
            err = std::max(err, std::hypot(u.x - d.x, u.y - d.y));
        }
    };
    if (field.meta().domain != DomainKind::exterior) circle(field.meta().params.R, field.meta().outer_data);
    if (field.meta().domain != DomainKind::disk) circle(1.0, field.meta().inner_data);
    return err;
}

/// Error against Taylor-Couette data: omega theta-hat on rho = R, rest on rho = 1.
inline double boundary_check(const FlowField& field, const Annulus& ann, double omega) {
    constexpr int n = 720;
    double err = 0.0;
    for (int j = 0; j < n; ++j) {
        const double t = kTwoPi * j / n;
        const CartesianVector uo = to_cartesian(field.velocity({ann.R(), t}), t);
        const CartesianVector ui = to_cartesian(field.velocity({1.0, t}), t);
        err = std::max(err, std::hypot(uo.x + omega * std::sin(t), uo.y - omega * std::cos(t)));
        err = std::max(err, std::hypot(ui.x, ui.y));
    }
    return err;
}

}  // namespace tcflow::verify
