#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "tcflow/errors.hpp"
#include "tcflow/numerics/interval.hpp"

namespace tcflow::numerics {

struct QuadratureOptions {
    /// Upper bound on the number of accepted + rejected panels.
    std::size_t max_panels = 2'000'000;
    /// Panels narrower than this (relative to the interval) are accepted as-is.
    int max_depth = 60;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

namespace detail {

struct SimpsonPanel {
    double a, m, b;
    double fa, fm, fb;
    double whole;  // Simpson estimate on [a, b]
    double tol;
    int depth;
};

inline double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

}  // namespace detail

/// Adaptive Simpson quadrature with interval halving. The local error of a
/// panel is estimated as |S2 - S1|/15 and the Richardson-corrected value
/// S2 + (S2 - S1)/15 is accumulated once a panel is accepted.
///
/// Throws AccuracyFailure (with the best estimate) when the panel budget runs out.
template <class F>
QuadratureResult integrate_with_error(F&& f, const Interval& iv, double tol,
                                      const QuadratureOptions& opts = {}) {
    if (!(tol > 0.0)) throw InvalidArgument("integrate: tol must be positive");

    QuadratureResult out;
    const double a = iv.lo();
    const double b = iv.hi();
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    out.evaluations = 3;

    std::vector<detail::SimpsonPanel> stack;
    stack.push_back({a, m, b, fa, fm, fb, detail::simpson(a, b, fa, fm, fb), tol, 0});

    bool exhausted = false;
    std::size_t panels = 0;
    while (!stack.empty()) {
        const detail::SimpsonPanel p = stack.back();
        stack.pop_back();
        ++panels;

        const double lm = 0.5 * (p.a + p.m);
        const double rm = 0.5 * (p.m + p.b);
        const double flm = f(lm);
        const double frm = f(rm);
        out.evaluations += 2;
        const double left = detail::simpson(p.a, p.m, p.fa, flm, p.fm);
        const double right = detail::simpson(p.m, p.b, p.fm, frm, p.fb);
        const double refined = left + right;
        const double delta = refined - p.whole;

        if (!std::isfinite(refined))
            throw AccuracyFailure("integrate: non-finite integrand", out.value, INFINITY);

        const bool converged = std::fabs(delta) <= 15.0 * p.tol;
        const bool too_deep = p.depth >= opts.max_depth;
        if (converged || too_deep || panels >= opts.max_panels) {
            if (!converged) exhausted = true;
            out.value += refined + delta / 15.0;
            out.error_estimate += std::fabs(delta) / 15.0;
            continue;
        }
        const double half_tol = 0.5 * p.tol;
        stack.push_back({p.m, rm, p.b, p.fm, frm, p.fb, right, half_tol, p.depth + 1});
        stack.push_back({p.a, lm, p.m, p.fa, flm, p.fm, left, half_tol, p.depth + 1});
    }

    if (exhausted)
        throw AccuracyFailure("integrate: subdivision limit reached", out.value,
                              out.error_estimate);
    return out;
}

/// Integral of f over iv to absolute tolerance tol.
template <class F>
double integrate(F&& f, const Interval& iv, double tol = 1e-10) {
    return integrate_with_error(std::forward<F>(f), iv, tol).value;
}

/// Integral with a tolerance relative to the magnitude of the integrand. The
/// magnitude is taken from a 64-panel composite Simpson pass over |f|.
template <class F>
double integrate_relative(F&& f, const Interval& iv, double rel_tol) {
    constexpr int n = 64;
    const double h = iv.width() / n;
    double mag = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        mag += w * std::fabs(f(iv.lo() + i * h));
    }
    mag *= h / 3.0;
    if (mag == 0.0) return integrate(f, iv, 1e-300);
    return integrate(f, iv, rel_tol * mag);
}

}  // namespace tcflow::numerics
