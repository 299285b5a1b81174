#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "tcflow/errors.hpp"
#include "tcflow/report.hpp"
#include "tcflow/solutions/field.hpp"
#include "tcflow/verify/grid.hpp"
#include "tcflow/verify/residual.hpp"

namespace tcflow::verify {

struct ConvergenceOptions {
    double min_order = 1.9;
    /// Residuals below this on the coarsest grid are treated as rounding.
    double rounding_level = 1e-9;
    /// Divergence at or below this on every grid counts as exactly solenoidal.
    double divergence_exact = 1e-10;
    double boundary_tol = 1e-12;
};

struct ConvergenceStudy {
    std::vector<ResidualReport> levels;
    std::vector<double> momentum_orders;
    std::vector<double> divergence_orders;
    bool momentum_rounding = false;
    bool divergence_exact = false;
    bool momentum_pass = false;
    bool divergence_pass = false;
    bool boundary_pass = false;
    std::string note;

    bool passed() const { return momentum_pass && divergence_pass && boundary_pass; }
};

namespace detail {

inline std::vector<double> observed_orders(const std::vector<double>& r) {
    std::vector<double> o;
    for (std::size_t i = 1; i < r.size(); ++i) o.push_back(std::log2(r[i - 1] / r[i]));
    return o;
}

inline bool all_at_least(const std::vector<double>& v, double m) {
    for (double x : v)
        if (!(x >= m)) return false;
    return true;
}

}  // namespace detail

/// Residuals on a ladder of grids, each doubling both resolutions, with the
/// observed order log2(r(h) / r(h/2)) per level. Orders compare max norms
/// over the nodes of the coarsest grid, which every refinement contains.
inline ConvergenceStudy convergence_study(const FlowField& field, const Forcing& f, bool convection,
                                          const std::vector<PolarGrid>& grids, const ConvergenceOptions& opt = {}) {
    if (grids.size() < 3) throw InvalidArgument("convergence_study: need at least 3 grids");
    for (std::size_t i = 1; i < grids.size(); ++i)
        if (!grids[i].is_refinement_of(grids[i - 1]))
            throw InvalidArgument("convergence_study: each grid must double both resolutions");

    ConvergenceStudy s;
    std::vector<double> mom, div;
    double bnd = 0.0;
    int stride = 1;
    for (const auto& g : grids) {
        s.levels.push_back(assemble_residual(field, f, g, convection, stride));
        stride *= 2;
        mom.push_back(s.levels.back().momentum_linf_nested);
        div.push_back(s.levels.back().divergence_linf_nested);
        bnd = std::max(bnd, s.levels.back().boundary_linf);
    }
    s.momentum_orders = detail::observed_orders(mom);
    s.divergence_orders = detail::observed_orders(div);

    s.momentum_rounding = mom.front() <= opt.rounding_level;
    s.momentum_pass = s.momentum_rounding || detail::all_at_least(s.momentum_orders, opt.min_order);
    if (s.momentum_rounding) s.note = "momentum residual at rounding level; order test skipped";

    s.divergence_exact = true;
    for (double d : div) s.divergence_exact = s.divergence_exact && d <= opt.divergence_exact;
    s.divergence_pass = s.divergence_exact || detail::all_at_least(s.divergence_orders, opt.min_order);
    s.boundary_pass = bnd <= opt.boundary_tol;
    return s;
}

/// Study of the system the field declares, on the default ladder n, 2n, 4n.
inline ConvergenceStudy convergence_study(const FlowField& field, int n_coarse = 32,
                                          const ConvergenceOptions& opt = {}) {
    std::vector<PolarGrid> grids{default_grid(field, n_coarse)};
    grids.push_back(grids.back().refined());
    grids.push_back(grids.back().refined());
    return convergence_study(field, field.meta().forcing, field.meta().equations == Equations::navier_stokes, grids,
                             opt);
}

inline Report to_report(const ConvergenceStudy& s, const std::string& prefix = {}) {
    Report rep;
    rep.title = "convergence";
    for (std::size_t i = 0; i < s.levels.size(); ++i) {
        const std::string l = prefix + "level" + std::to_string(i) + ".";
        rep.output(l + "momentum_linf", s.levels[i].momentum_linf);
        rep.output(l + "momentum_l2", s.levels[i].momentum_l2);
        rep.output(l + "divergence_linf", s.levels[i].divergence_linf);
    }
    const ConvergenceOptions opt;
    for (std::size_t i = 0; i < s.momentum_orders.size(); ++i)
        rep.check(prefix + "momentum_order" + std::to_string(i), s.momentum_orders[i], opt.min_order,
                  s.momentum_rounding || s.momentum_orders[i] >= opt.min_order);
    if (s.divergence_exact)
        rep.check(prefix + "divergence_linf", s.levels.back().divergence_linf, opt.divergence_exact, true);
    else
        for (std::size_t i = 0; i < s.divergence_orders.size(); ++i)
            rep.check(prefix + "divergence_order" + std::to_string(i), s.divergence_orders[i], opt.min_order,
                      s.divergence_orders[i] >= opt.min_order);
    double bnd = 0.0;
    for (const auto& l : s.levels) bnd = std::max(bnd, l.boundary_linf);
    rep.check(prefix + "boundary_linf", bnd, opt.boundary_tol, s.boundary_pass);
    if (!s.note.empty()) rep.note(prefix + s.note);
    return rep;
}

}  // namespace tcflow::verify
