#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "tcflow/errors.hpp"
#include "tcflow/numerics/interval.hpp"
#include "tcflow/numerics/quadrature.hpp"
#include "tcflow/report.hpp"
#include "tcflow/solutions/geometry.hpp"
#include "tcflow/solutions/profile.hpp"
#include "tcflow/spectral/eigen.hpp"

namespace tcflow::spectral {

struct SobolevBounds {
    double s4_lower = 0.0;
    double s4_upper = 0.0;
    double kappa1 = 0.0;
    double mu0 = 0.0;
    /// Set for R < 1.05, where the expanded kappa1 polynomial cancels almost
    /// completely; kappa1 then comes from its series in log R.
    bool cancellation_warning = false;
};

namespace detail {

/// kappa1 = L^13 sum_k c_k L^k with L = log R. All coefficients are positive;
/// terms past k = 39 are below 1e-17 relative for L < 0.41.
inline constexpr double kKappa1Series[] = {
    36.5714285714285714286,     182.857142857142857143,     478.753246753246753247,
    869.956709956709956710,     1228.42301402301402301,     1432.15836015836015836,
    1431.32527437289342051,     1257.84226355654927084,     989.884795261452591051,
    707.241702378957280918,     463.659728927241312312,     281.298050274890133641,
    159.028703792123291725,     84.2597743004266111117,     42.0439274382596748590,
    19.8389877578193075747,     8.88421867789264160143,     3.78751824741156532735,
    1.54140222799834932461,     0.600286266406715314181,    0.224194349728275579397,
    0.0804566617933061023938,   0.0277930571199732951158,   0.00925642934553362896925,
    0.00297658864264547728416,  0.000925432597751723427092, 0.000278520766255148823560,
    0.0000812367467398646184712, 0.0000229873424680919038606, 0.00000631674331040181464377,
    0.00000168719003477499466694, 4.38402757403843274443e-7, 1.10909793552080527099e-7,
    2.73389334535813744713e-8,  6.57077812757647624439e-9,  1.54087222640321432893e-9,
    3.52781730113713430009e-10, 7.89033744435745381864e-11, 1.72497196378913617138e-11,
    3.68807732535398297273e-12};

inline constexpr double kKappa1SeriesBelow = 1.5;

}  // namespace detail

/// kappa1 of the upper S4 bound. Below R = 1.5 a power series in log R;
/// otherwise the grouping u[1080u^4 - 2025u^3(s+1)L + 1700u^2(s^2+s+1)L^2
/// - 750u(s+1)(s^2+1)L^3 + 144(s^4+s^3+s^2+s+1)L^4], s = R^2, u = R^2 - 1.
inline double kappa1(double R) {
    const double L = std::log1p(R - 1.0);
    if (R < detail::kKappa1SeriesBelow) {
        double acc = 0.0;
        for (auto it = std::rbegin(detail::kKappa1Series); it != std::rend(detail::kKappa1Series); ++it)
            acc = acc * L + *it;
        const double L2 = L * L, L4 = L2 * L2, L8 = L4 * L4;
        return acc * L8 * L4 * L;
    }
    const double s = R * R;
    const double u = std::expm1(2.0 * L);
    const double c0 = 1080.0 * u * u * u * u;
    const double c1 = -2025.0 * u * u * u * (s + 1.0);
    const double c2 = 1700.0 * u * u * (s * s + s + 1.0);
    const double c3 = -750.0 * u * (s + 1.0) * (s * s + 1.0);
    const double c4 = 144.0 * (s * s * s * s + s * s * s + s * s + s + 1.0);
    return u * (c0 + L * (c1 + L * (c2 + L * (c3 + L * c4))));
}

/// (R^2 + 1) log R + 1 - R^2 = 2R (L cosh L - sinh L), L = log R.
inline double upper_numerator(double R) {
    const double L = std::log(R);
    if (R >= detail::kKappa1SeriesBelow) return (R * R + 1.0) * L + 1.0 - R * R;
    // L cosh L - sinh L = sum_k 2k L^(2k+1) / (2k+1)!
    double term = L, sum = 0.0;
    for (int k = 1; k <= 15; ++k) {
        term *= L * L / ((2.0 * k) * (2.0 * k + 1.0));
        sum += 2.0 * k * term;
    }
    return 2.0 * R * sum;
}

inline SobolevBounds s4_bounds(const Annulus& ann) {
    const double R = ann.R();
    SobolevBounds b;
    b.mu0 = bessel_j0_first_zero();
    b.s4_lower = b.mu0 * std::sqrt(3.0 * kPi / (2.0 * (R * R - 1.0)));
    b.kappa1 = kappa1(R);
    if (!(b.kappa1 > 0.0)) throw NumericalConsistency("s4_bounds: kappa1 is not positive");
    b.cancellation_warning = R < 1.05;
    const double L = std::log(R);
    b.s4_upper = 24.0 * std::sqrt(5.0 * kPi) * upper_numerator(R) * (R * R - 1.0) * L / std::sqrt(b.kappa1);
    return b;
}

/// Weighted radial integrals of a profile on the annulus.
struct RadialNorms {
    double l2_sq = 0.0;    // 2 pi int rho w^2
    double grad_sq = 0.0;  // 2 pi int rho w'^2
    double l4_4 = 0.0;     // 2 pi int rho w^4
};

inline RadialNorms radial_norms(const RadialProfile& w, const Annulus& ann, double rel_tol = 1e-13) {
    const numerics::Interval iv(1.0, ann.R());
    RadialNorms n;
    if (w.is_zero()) return n;
    n.l2_sq = kTwoPi * numerics::integrate_relative([&](double r) { return r * w(r) * w(r); }, iv, rel_tol);
    n.grad_sq = kTwoPi * numerics::integrate_relative(
                             [&](double r) {
                                 const double d = w.derivative(r);
                                 return r * d * d;
                             },
                             iv, rel_tol);
    n.l4_4 = kTwoPi * numerics::integrate_relative(
                          [&](double r) {
                              const double v = w(r) * w(r);
                              return r * v * v;
                          },
                          iv, rel_tol);
    return n;
}

/// ||grad w||^2 / ||w||_{L4}^2.
inline double rayleigh_l4(const RadialProfile& w, const Annulus& ann) {
    const RadialNorms n = radial_norms(w, ann);
    if (n.l4_4 == 0.0) throw InvalidArgument("rayleigh_l4: zero profile");
    return n.grad_sq / std::sqrt(n.l4_4);
}

/// X0(rho) = [(R^2 - 1) log(rho)/log(R) + 1 - rho^2] / 4, solving -Lap X0 = 1.
inline RadialProfile torsion_function(const Annulus& ann) {
    const double R = ann.R();
    const double c = (R * R - 1.0) / std::log(R);
    return RadialProfile::closed_form(
        "torsion", [c](double r) { return 0.25 * (c * std::log(r) + 1.0 - r * r); },
        [c](double r) { return 0.25 * (c / r - 2.0 * r); });
}

struct TrialProfile {
    std::string name;
    RadialProfile w;
};

/// (rho-1)(R-rho), sin(k pi (rho-1)/(R-1)) for k = 1..3 and the torsion function.
inline std::vector<TrialProfile> default_trials(const Annulus& ann) {
    const double R = ann.R();
    std::vector<TrialProfile> t;
    t.push_back({"parabola", RadialProfile::closed_form(
                                 "parabola", [R](double r) { return (r - 1.0) * (R - r); },
                                 [R](double r) { return R + 1.0 - 2.0 * r; })});
    for (int k = 1; k <= 3; ++k) {
        const double w = k * kPi / (R - 1.0);
        const std::string name = "sin" + std::to_string(k);
        t.push_back({name, RadialProfile::closed_form(
                               name, [w](double r) { return std::sin(w * (r - 1.0)); },
                               [w](double r) { return w * std::cos(w * (r - 1.0)); })});
    }
    t.push_back({"torsion", torsion_function(ann)});
    return t;
}

/// Interpolation, Faber-Krahn and Poincare inequalities for each trial, and
/// near-equality of the Poincare inequality on the eigenfunction.
inline Report inequality_suite(const Annulus& ann, const std::vector<TrialProfile>& trials,
                               double slack = 1e-8, double equality_tol = 1e-6) {
    const double R = ann.R();
    const EigenResult eig = eigenvalue(ann);
    const double mu0 = bessel_j0_first_zero();
    Report rep;
    rep.title = "inequalities";
    rep.input("R", R);
    rep.output("lambda", eig.lambda);
    rep.output("mu0", mu0);

    auto run = [&](const std::string& name, const RadialProfile& w) {
        const RadialNorms n = radial_norms(w, ann);
        const double l2 = std::sqrt(n.l2_sq);
        const double grad = std::sqrt(n.grad_sq);
        const double l4_sq = std::sqrt(n.l4_4);
        const double interp = std::sqrt(2.0 / (3.0 * kPi)) * grad * l2;
        const double fk = std::sqrt(R * R - 1.0) / mu0 * grad;
        const double pc = grad / std::sqrt(eig.lambda);
        rep.check(name + ":interpolation", l4_sq, interp, l4_sq <= interp * (1.0 + slack));
        rep.check(name + ":faber-krahn", l2, fk, l2 <= fk * (1.0 + slack));
        rep.check(name + ":poincare", l2, pc, l2 <= pc * (1.0 + slack));
        return std::pair{l2, pc};
    };
    for (const auto& t : trials) run(t.name, t.w);

    const auto [l2, pc] = run("eigenfunction", eigenfunction(ann, eig));
    const double rel = std::fabs(l2 - pc) / pc;
    rep.check_le("eigenfunction:poincare-equality", rel, equality_tol);
    return rep;
}

inline Report inequality_suite(const Annulus& ann) { return inequality_suite(ann, default_trials(ann)); }

}  // namespace tcflow::spectral
