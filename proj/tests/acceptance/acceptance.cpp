#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tcflow.hpp"

using namespace tcflow;

namespace {

struct TableRow {
    double R, alpha, lambda, a_star, R0;
};

// Published eigenvalue and radial-constant tables.
constexpr TableRow kTable[] = {
    {1.1, 34.5535, 986.7308, 1004.0745, 644.592}, {1.3, 13.6017, 109.4711, 118.258, 129.525},
    {1.5, 9.4053, 39.3158, 44.8402, 62.5316},     {1.7, 7.6028, 20.0011, 23.9763, 39.057},
    {2.0, 6.2461, 9.7533, 12.5131, 23.9345},      {3.0, 4.6453, 2.3977, 3.70134, 9.5259},
    {4.0, 4.0976, 1.0494, 1.87145, 5.6654},       {5.0, 3.8159, 0.5824, 1.16988, 3.9517},
    {6.0, 3.642, 0.3684, 0.8191, 3.00219},        {7.0, 3.5227, 0.2532, 0.61524, 2.40486},
    {8.0, 3.4351, 0.1843, 0.48467, 1.99753},      {9.0, 3.3677, 0.14002, 0.39518, 1.703},
    {10.0, 3.3139, 0.1098, 0.3307, 1.48117},      {15.0, 3.1504, 0.0441, 0.17205, 0.8838},
    {20.0, 3.0644, 0.0234, 0.11095, 0.622396},    {100.0, 2.8009, 0.0007, 0.012, 0.100268},
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail.clear();
        if (!detail.empty()) detail += "; ";
        detail += why;
        pass = false;
    }
};

std::string printf_str(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::vector<spectral::ShootResult> g_shoot;

Outcome eigen_table() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<spectral::EigenResult> eig;
    for (const auto& r : kTable) eig.push_back(spectral::eigenvalue(Annulus(r.R)));
    const double dt = seconds_since(t0);
    double worst_alpha = 0.0;
    for (std::size_t i = 0; i < eig.size(); ++i) {
        const auto& r = kTable[i];
        const double da = std::fabs(eig[i].alpha - r.alpha);
        const double dl = std::fabs(eig[i].lambda - r.lambda);
        const double tol_l = r.R == 100.0 ? 5e-5 : 5e-4;
        worst_alpha = std::max(worst_alpha, da);
        if (da > 5e-4) o.fail(printf_str("R=%g alpha %.6f vs %.6f", r.R, eig[i].alpha, r.alpha));
        if (dl > tol_l) o.fail(printf_str("R=%g lambda %.7g vs %.7g", r.R, eig[i].lambda, r.lambda));
    }
    if (dt >= 1.0) o.fail(printf_str("runtime %.3fs", dt));
    if (o.pass) o.detail = printf_str("max |d alpha| %.2e, %.3fs", worst_alpha, dt);
    else o.detail += printf_str(" (alpha max err %.2e, %.3fs)", worst_alpha, dt);
    return o;
}

Outcome radial_table() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& r : kTable) g_shoot.push_back(spectral::radial_sobolev(Annulus(r.R)));
    const double dt = seconds_since(t0);
    double worst = 0.0;
    for (std::size_t i = 0; i < g_shoot.size(); ++i) {
        const auto& r = kTable[i];
        const double ea = std::fabs(g_shoot[i].a_star - r.a_star) / r.a_star;
        const double er = std::fabs(g_shoot[i].R0 - r.R0) / r.R0;
        worst = std::max({worst, ea, er});
        if (ea > 5e-3) o.fail(printf_str("R=%g a* %.6g vs %.6g", r.R, g_shoot[i].a_star, r.a_star));
        if (er > 5e-3) o.fail(printf_str("R=%g R0 %.6g vs %.6g", r.R, g_shoot[i].R0, r.R0));
    }
    if (dt >= 30.0) o.fail(printf_str("runtime %.2fs", dt));
    if (o.pass) o.detail = printf_str("max rel err %.2e, %.2fs", worst, dt);
    return o;
}

Outcome bound_ordering() {
    Outcome o;
    for (std::size_t i = 0; i < std::size(kTable); ++i) {
        const double R = kTable[i].R;
        const Annulus ann(R);
        const double l = spectral::eigenvalue(ann).lambda;
        const auto b = spectral::s4_bounds(ann);
        if (!(kPi * kPi / (2 * R * R) <= l && l <= 10.0 / ((R - 1) * (R - 1))))
            o.fail(printf_str("R=%g lambda outside its bounds", R));
        if (!(b.s4_lower <= b.s4_upper)) o.fail(printf_str("R=%g s4_lower > s4_upper", R));
        const double R0 = i < g_shoot.size() ? g_shoot[i].R0 : spectral::radial_sobolev(ann).R0;
        if (!(b.s4_lower <= R0)) o.fail(printf_str("R=%g s4_lower > R0", R));
    }
    if (o.pass) o.detail = "16 radii";
    return o;
}

Outcome torsion_quotient() {
    Outcome o;
    double worst = 0.0;
    for (double R : {1.5, 2.0, 3.0, 5.0, 10.0}) {
        const Annulus ann(R);
        const double q = spectral::rayleigh_l4(spectral::torsion_function(ann), ann);
        const double c = spectral::s4_bounds(ann).s4_upper;
        const double e = std::fabs(q - c) / c;
        worst = std::max(worst, e);
        if (e > 1e-6) o.fail(printf_str("R=%g quotient %.10g vs %.10g", R, q, c));
    }
    if (o.pass) o.detail = printf_str("max rel err %.2e", worst);
    return o;
}

Outcome residual_convergence() {
    Outcome o;
    const Annulus a(2.0);
    const std::vector<FlowField> fields{taylor_couette(a, 1.0),
                                        generalized_tc(a, 1.0, Forcing::azimuthal(RadialProfile::constant(0.5))),
                                        special_forcing_tc(a, 1.0, 1.0),
                                        incomplete_family(a, 1.0, 1.0),
                                        flux_carrier(a, 1.0, 1.0),
                                        stokes_annulus_uniform(a),
                                        stokes_annulus_scaled(a),
                                        stokes_annulus_rotating(a),
                                        disk_couette(2.0, 1.0),
                                        exterior_catalog(ExteriorKind::log_solution()),
                                        exterior_catalog(ExteriorKind::rigid_family(1.0)),
                                        exterior_catalog(ExteriorKind::linear()),
                                        exterior_catalog(ExteriorKind::log_flux())};
    double min_order = INFINITY;
    for (const auto& f : fields) {
        const auto s = verify::convergence_study(f, 32);
        if (!s.momentum_rounding)
            for (double x : s.momentum_orders) min_order = std::min(min_order, x);
        if (!s.passed()) {
            std::string orders;
            for (double x : s.momentum_orders) orders += printf_str(" %.3f", x);
            o.fail(f.name() + " orders" + orders);
        }
    }
    if (o.pass) o.detail = printf_str("%zu fields, min order %.3f", fields.size(), min_order);
    return o;
}

Outcome flux_sample() {
    Outcome o;
    double worst = 0.0;
    int n = 0;
    for (double R : {1.5, 2.0, 5.0, 10.0})
        for (double w : {0.0, 1.0, 5.0})
            for (double P : {-2.0, 0.0, 1.0, 10.0}) {
                const double e = std::fabs(flux(flux_carrier(Annulus(R), w, P)) - P);
                worst = std::max(worst, e);
                ++n;
                if (e > 1e-9) o.fail(printf_str("R=%g omega=%g Phi=%g err %.2e", R, w, P, e));
            }
    if (o.pass) o.detail = printf_str("%d points, max err %.2e", n, worst);
    return o;
}

Outcome energy_closed_form() {
    Outcome o;
    double worst = 0.0;
    for (double R : {1.5, 2.0, 5.0, 10.0})
        for (double w : {0.0, 1.0, 5.0}) {
            const Annulus ann(R);
            for (double P : {-2.0, 0.0, 1.0, 10.0}) {
                const double c = dirichlet_energy_flux_carrier(ann, w, P);
                const double q = verify::energy_quadrature(flux_carrier(ann, w, P));
                const double e = std::fabs(c - q) / std::max(std::fabs(c), 1e-300);
                if (c != q) worst = std::max(worst, e);
                if (e > 1e-8 && c != q) o.fail(printf_str("R=%g omega=%g Phi=%g rel %.2e", R, w, P, e));
            }
            const double P0 = R * w / (R * R - 1) * (R * R * R / 3 - R + 2.0 / 3);
            const double c0 = dirichlet_energy_flux_carrier(ann, w, P0);
            const double ref = kTwoPi * w * w * (R * R + 1) / (R * R - 1);
            if (std::fabs(c0 - ref) > 1e-8 * std::max(ref, 1e-300) && c0 != ref)
                o.fail(printf_str("R=%g omega=%g lambda*=0 case %.12g vs %.12g", R, w, c0, ref));
        }
    if (o.pass) o.detail = printf_str("max rel err %.2e", worst);
    return o;
}

Outcome gtc_closed_form() {
    Outcome o;
    double worst = 0.0;
    for (double R : {1.5, 2.0, 5.0})
        for (double w : {0.0, 1.0})
            for (double lam : {-1.0, 1.0}) {
                const Annulus ann(R);
                const auto q = generalized_tc(ann, w, Forcing::azimuthal(RadialProfile::inverse_rho(lam)));
                const auto c = special_forcing_tc(ann, w, lam);
                for (int i = 0; i <= 400; ++i) {
                    const double r = 1.0 + (R - 1.0) * i / 400;
                    worst = std::max(worst, std::fabs(q.azimuthal(r) - c.azimuthal(r)));
                }
            }
    if (worst > 1e-8) o.fail(printf_str("max pointwise err %.2e", worst));
    else o.detail = printf_str("max pointwise err %.2e", worst);
    return o;
}

Outcome pressure_jumps() {
    Outcome o;
    double worst = 0.0;
    for (double R : {1.5, 2.0, 5.0})
        for (double lam : {-2.0, 0.5, 1.0, 3.0}) {
            const double j = verify::jump_check(incomplete_family(Annulus(R), 1.0, lam)).jump;
            const double e = std::fabs(j + kTwoPi * lam);
            worst = std::max(worst, e);
            if (e > 1e-8) o.fail(printf_str("R=%g lambda=%g jump %.12g", R, lam, j));
        }
    const double cj = verify::jump_check(cut_potential_field(Annulus(2.0))).jump;
    worst = std::max(worst, std::fabs(cj - 1.0));
    if (std::fabs(cj - 1.0) > 1e-8) o.fail(printf_str("cut potential jump %.12g", cj));
    if (o.pass) o.detail = printf_str("max err %.2e", worst);
    return o;
}

Outcome large_radius_limits() {
    Outcome o;
    const auto rep = verify::limit_suite({1e2, 1e4, 1e6});
    for (const auto& c : rep.checks)
        if (!c.pass) o.fail(printf_str("%s = %.4g (bound %.4g)", c.name.c_str(), c.value, c.bound));
    if (o.pass)
        o.detail = printf_str("C4 log R = %.4f at R = 1e6", rep.output_value("R=1e+06.C4logR"));
    return o;
}

Outcome bessel_checks() {
    Outcome o;
    const double mu0 = spectral::bessel_j0_first_zero();
    if (std::fabs(mu0 - 2.40483) > 1e-4) o.fail(printf_str("mu0 %.8f", mu0));
    double worst = 0.0;
    for (int i = 0; i <= 2950; ++i) {
        const double x = 0.5 + 0.01 * i;
        const double w =
            numerics::bessel_j0(x) * numerics::bessel_y0_prime(x) - numerics::bessel_j0_prime(x) * numerics::bessel_y0(x);
        worst = std::max(worst, std::fabs(w - 2.0 / (kPi * x)));
    }
    if (worst > 1e-10) o.fail(printf_str("Wronskian err %.2e", worst));
    if (o.pass) o.detail = printf_str("mu0 = %.6f, Wronskian err %.2e", mu0, worst);
    return o;
}

Outcome inequalities() {
    Outcome o;
    std::size_t n = 0;
    for (double R : {1.5, 2.0, 5.0, 10.0}) {
        const auto rep = spectral::inequality_suite(Annulus(R));
        n += rep.checks.size();
        for (const auto& c : rep.checks)
            if (!c.pass) o.fail(printf_str("R=%g %s", R, c.name.c_str()));
    }
    if (o.pass) o.detail = printf_str("%zu checks", n);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"eigenvalue table", eigen_table},
        {"radial Sobolev table", radial_table},
        {"bound ordering", bound_ordering},
        {"torsion Rayleigh quotient", torsion_quotient},
        {"residual convergence", residual_convergence},
        {"flux carrier flux", flux_sample},
        {"flux carrier energy", energy_closed_form},
        {"generalized TC closed form", gtc_closed_form},
        {"pressure jumps", pressure_jumps},
        {"large-R limits", large_radius_limits},
        {"Bessel zero and Wronskian", bessel_checks},
        {"inequality suite", inequalities},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        if (!o.pass) ++failed;
        std::printf("%-4s criterion %2zu  %-28s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
