#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "tcflow/spectral.hpp"

using namespace tcflow;
using namespace tcflow::spectral;
using Catch::Approx;

namespace {

// First root of the cross-product equation, 40-digit evaluation.
struct AlphaRow {
    double R, alpha;
};
constexpr AlphaRow kAlpha[] = {
    {1.1, 34.55354557587271}, {2.0, 6.246061839191384}, {10.0, 3.313938715053228}, {100.0, 2.800921755144992}};

// kappa1 from the expanded polynomial and the torsion-function Rayleigh
// quotient, both at 40 digits; the two upper-bound routes agree exactly.
struct UpperRow {
    double R, kappa1, s4_upper, s4_lower;
};
constexpr UpperRow kUpper[] = {
    {1.5, 0.0024492509586506271585, 66.008778782165856152, 4.6692716179983231889},
    {2.0, 13.214622852106826571, 25.341378048178740304, 3.0140018692377442236},
    {3.0, 60497.461721815953915, 10.14950166535369754, 1.8456916658567950217},
    {5.0, 237664500.82090019441, 4.2530494305563115496, 1.0656105801234694145},
    {10.0, 3204942490476.4882137, 1.6176773771870122467, 0.52467038044299822263},
    {100.0, 1.9327105100658979025e+24, 0.1136013040499277648, 0.052206654114240698632},
};

// (R, a*, R0) from an independent adaptive integrator with root polishing.
struct ShootRow {
    double R, a_star, R0;
};
constexpr ShootRow kShoot[] = {{2.0, 12.513097326191899, 23.9345531221485},
                               {5.0, 1.16988044243926, 3.951835721885833}};

}  // namespace

TEST_CASE("mu0", "[eigen]") { CHECK(bessel_j0_first_zero() == Approx(2.4048255576957727686).epsilon(1e-14)); }

TEST_CASE("eigenvalue against the high-precision oracle", "[eigen]") {
    for (const auto& r : kAlpha) {
        const auto e = eigenvalue(Annulus(r.R));
        INFO("R=" << r.R);
        CHECK(std::fabs(e.alpha - r.alpha) <= 1e-9);
        CHECK(e.lambda == Approx(r.alpha * r.alpha / (r.R * r.R)).epsilon(1e-9));
        CHECK(e.lower <= e.lambda);
        CHECK(e.lambda <= e.upper);
    }
}

TEST_CASE("eigenvalue decreases with R", "[eigen][property]") {
    double prev = INFINITY;
    for (double R : {1.1, 1.3, 1.5, 1.7, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0, 15.0, 20.0, 100.0}) {
        const double l = eigenvalue(Annulus(R)).lambda;
        CHECK(l < prev);
        prev = l;
    }
}

TEST_CASE("eigenvalue sandwich on random radii", "[eigen][property]") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> lr(std::log(1.05), std::log(200.0));
    for (int i = 0; i < 40; ++i) {
        const double R = std::exp(lr(rng));
        const auto e = eigenvalue(Annulus(R));
        CHECK(kPi * kPi / (2 * R * R) <= e.lambda);
        CHECK(e.lambda <= 10.0 / ((R - 1) * (R - 1)));
        CHECK(std::fabs(numerics::cross_product_fn(e.alpha, R)) <= 1e-8);
    }
}

TEST_CASE("eigenfunction", "[eigen]") {
    const Annulus ann(2.0);
    const auto e = eigenvalue(ann);
    const auto w = eigenfunction(ann, e);
    CHECK(std::fabs(w.value(1.0)) <= 1e-10);
    CHECK(std::fabs(w.value(2.0)) <= 1e-10);
    CHECK(w.value(1.5) > 0.0);
    const auto n = radial_norms(w, ann);
    CHECK(n.grad_sq / n.l2_sq == Approx(e.lambda).epsilon(1e-9));
    const double h = 1e-6;
    CHECK(w.derivative(1.3) == Approx((w.value(1.3 + h) - w.value(1.3 - h)) / (2 * h)).epsilon(1e-7));
}

TEST_CASE("s4 bounds and kappa1", "[sobolev]") {
    for (const auto& r : kUpper) {
        INFO("R=" << r.R);
        const auto b = s4_bounds(Annulus(r.R));
        CHECK(b.kappa1 == Approx(r.kappa1).epsilon(1e-9));
        CHECK(b.s4_upper == Approx(r.s4_upper).epsilon(1e-9));
        CHECK(b.s4_lower == Approx(r.s4_lower).epsilon(1e-13));
        CHECK(b.s4_lower <= b.s4_upper);
        CHECK_FALSE(b.cancellation_warning);
    }
    const auto near = s4_bounds(Annulus(1.01));
    CHECK(near.cancellation_warning);
    CHECK(near.kappa1 == Approx(3.6029810833966545e-25).epsilon(1e-13));
}

TEST_CASE("kappa1 positive and bounds ordered for all R > 1", "[sobolev][property]") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> lr(std::log(1e-4), std::log(1e3));
    for (int i = 0; i < 500; ++i) {
        const double R = 1.0 + std::exp(lr(rng));
        const auto b = s4_bounds(Annulus(R));
        CHECK(b.kappa1 > 0.0);
        CHECK(b.s4_lower > 0.0);
        CHECK(b.s4_lower <= b.s4_upper);
    }
}

TEST_CASE("kappa1 branches agree at the switch", "[sobolev]") {
    const double lo = kappa1(std::nextafter(1.5, 1.0));
    const double hi = kappa1(1.5);
    CHECK(lo == Approx(hi).epsilon(1e-9));
}

TEST_CASE("torsion Rayleigh quotient equals the closed-form upper bound", "[sobolev]") {
    for (double R : {1.5, 2.0, 3.0, 5.0, 10.0}) {
        const Annulus ann(R);
        CHECK(rayleigh_l4(torsion_function(ann), ann) == Approx(s4_bounds(ann).s4_upper).epsilon(1e-9));
    }
}

TEST_CASE("radial norms scale homogeneously", "[sobolev][property]") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> cd(0.1, 10), Rd(1.2, 8);
    for (int i = 0; i < 20; ++i) {
        const double c = cd(rng);
        const Annulus ann(Rd(rng));
        const double R = ann.R();
        const auto w = RadialProfile::closed_form(
            "bump", [R](double r) { return (r - 1) * (R - r); }, [R](double r) { return R + 1 - 2 * r; });
        const auto cw = RadialProfile::closed_form(
            "bump", [R, c](double r) { return c * (r - 1) * (R - r); }, [R, c](double r) { return c * (R + 1 - 2 * r); });
        const auto a = radial_norms(w, ann), b = radial_norms(cw, ann);
        CHECK(b.l2_sq == Approx(c * c * a.l2_sq).epsilon(1e-10));
        CHECK(b.grad_sq == Approx(c * c * a.grad_sq).epsilon(1e-10));
        CHECK(b.l4_4 == Approx(c * c * c * c * a.l4_4).epsilon(1e-10));
        CHECK(rayleigh_l4(cw, ann) == Approx(rayleigh_l4(w, ann)).epsilon(1e-10));
    }
}

TEST_CASE("inequality suite", "[sobolev]") {
    for (double R : {1.5, 2.0, 5.0, 10.0}) {
        const auto rep = inequality_suite(Annulus(R));
        INFO("R=" << R);
        for (const auto& c : rep.checks) {
            INFO(c.name << " value=" << c.value << " bound=" << c.bound);
            CHECK(c.pass);
        }
        CHECK(rep.checks.size() > default_trials(Annulus(R)).size());
    }
}

TEST_CASE("shooting: first zero for given slopes", "[shoot]") {
    CHECK(std::fabs(shoot_first_zero(Annulus(2.0), 12.5131) - 2.0) <= 1e-3);
    CHECK(std::fabs(shoot_first_zero(Annulus(5.0), 1.16988) - 5.0) <= 5e-3);
}

TEST_CASE("shooting: first zero decreases with the slope", "[shoot][property]") {
    const Annulus ann(3.0);
    double prev = INFINITY;
    for (double a = 0.5; a < 40; a *= 1.7) {
        const double z = shoot_first_zero(ann, a);
        CHECK(z <= prev);
        if (std::isfinite(z)) CHECK(z < prev);
        prev = z;
    }
}

TEST_CASE("radial Sobolev constant against the independent integrator", "[shoot]") {
    for (const auto& r : kShoot) {
        const auto s = radial_sobolev(Annulus(r.R));
        INFO("R=" << r.R);
        CHECK(s.a_star == Approx(r.a_star).epsilon(1e-7));
        CHECK(s.R0 == Approx(r.R0).epsilon(1e-6));
        CHECK(std::fabs(s.rho_star - r.R) <= 1e-8);
        CHECK(s.ladder_monotone);
        // v solves -Lap v = v^3, so int |grad v|^2 = int v^4
        CHECK(s.grad_energy == Approx(s.l4_energy).epsilon(1e-6));
    }
}

TEST_CASE("tobias check", "[shoot]") {
    for (double R : {1.1, 2.0, 100.0}) {
        const auto rep = tobias_check(Annulus(R));
        CHECK(rep.passed());
        CHECK(rep.output_value("s4_lower") <= rep.output_value("R0"));
    }
}
