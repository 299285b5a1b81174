#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tcflow/errors.hpp"
#include "tcflow/numerics/interval.hpp"
#include "tcflow/numerics/quadrature.hpp"
#include "tcflow/solutions/geometry.hpp"

namespace tcflow {

/// Scalar function of rho. Either a closed-form family or tabulated samples
/// joined by linear interpolation.
class RadialProfile {
public:
    struct Zero {};
    struct Constant {
        double c;
    };
    /// c * rho^k
    struct Power {
        double c;
        double k;
    };
    /// lambda / rho
    struct InverseRho {
        double lambda;
    };
    struct Tabulated {
        std::vector<double> rho;
        std::vector<double> value;
    };
    struct ClosedForm {
        std::string name;
        std::function<double(double)> value;
        std::function<double(double)> derivative;
    };
    using Kind = std::variant<Zero, Constant, Power, InverseRho, Tabulated, ClosedForm>;

    RadialProfile() : kind_(Zero{}) {}

    static RadialProfile zero() { return RadialProfile(Zero{}); }
    static RadialProfile constant(double c) { return RadialProfile(Constant{c}); }
    static RadialProfile power(double c, double k) { return RadialProfile(Power{c, k}); }
    static RadialProfile inverse_rho(double lambda) { return RadialProfile(InverseRho{lambda}); }

    /// Samples must be strictly increasing in rho and finite.
    static RadialProfile tabulated(std::vector<double> rho, std::vector<double> value) {
        if (rho.size() != value.size() || rho.size() < 2)
            throw InvalidArgument("tabulated profile needs >= 2 paired samples");
        for (std::size_t i = 0; i < rho.size(); ++i) {
            if (!std::isfinite(rho[i]) || !std::isfinite(value[i]))
                throw InvalidArgument("tabulated profile: non-finite sample");
            if (i > 0 && !(rho[i] > rho[i - 1]))
                throw InvalidArgument("tabulated profile: rho must be strictly increasing");
        }
        return RadialProfile(Tabulated{std::move(rho), std::move(value)});
    }

    static RadialProfile closed_form(std::string name, std::function<double(double)> value,
                                     std::function<double(double)> derivative = {}) {
        return RadialProfile(ClosedForm{std::move(name), std::move(value), std::move(derivative)});
    }

    const Kind& kind() const noexcept { return kind_; }
    bool is_zero() const noexcept { return std::holds_alternative<Zero>(kind_); }

    double operator()(double rho) const { return value(rho); }

    double value(double rho) const {
        return std::visit(
            [rho](const auto& k) -> double {
                using T = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<T, Zero>) return 0.0;
                else if constexpr (std::is_same_v<T, Constant>) return k.c;
                else if constexpr (std::is_same_v<T, Power>) return k.c * std::pow(rho, k.k);
                else if constexpr (std::is_same_v<T, InverseRho>) return k.lambda / rho;
                else if constexpr (std::is_same_v<T, Tabulated>) return interp(k, rho).first;
                else return k.value(rho);
            },
            kind_);
    }

    /// d/drho. Segment slope for tabulated data; centered differences for a
    /// closed form registered without a derivative.
    double derivative(double rho) const {
        return std::visit(
            [rho](const auto& k) -> double {
                using T = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<T, Zero> || std::is_same_v<T, Constant>) return 0.0;
                else if constexpr (std::is_same_v<T, Power>)
                    return k.c * k.k * std::pow(rho, k.k - 1.0);
                else if constexpr (std::is_same_v<T, InverseRho>) return -k.lambda / (rho * rho);
                else if constexpr (std::is_same_v<T, Tabulated>) return interp(k, rho).second;
                else {
                    if (k.derivative) return k.derivative(rho);
                    const double h = 1e-5 * std::max(1.0, std::fabs(rho));
                    return (k.value(rho + h) - k.value(rho - h)) / (2.0 * h);
                }
            },
            kind_);
    }

    std::string describe() const {
        return std::visit(
            [](const auto& k) -> std::string {
                using T = std::decay_t<decltype(k)>;
                std::ostringstream os;
                if constexpr (std::is_same_v<T, Zero>) os << "zero";
                else if constexpr (std::is_same_v<T, Constant>) os << "constant:" << k.c;
                else if constexpr (std::is_same_v<T, Power>) os << "power:" << k.c << "," << k.k;
                else if constexpr (std::is_same_v<T, InverseRho>) os << "inverse-rho:" << k.lambda;
                else if constexpr (std::is_same_v<T, Tabulated>)
                    os << "tabulated[" << k.rho.size() << "]";
                else os << k.name;
                return os.str();
            },
            kind_);
    }

private:
    explicit RadialProfile(Kind k) : kind_(std::move(k)) {}

    static std::pair<double, double> interp(const Tabulated& t, double rho) {
        const double lo = t.rho.front();
        const double hi = t.rho.back();
        const double slack = 1e-12 * std::max(1.0, std::fabs(hi));
        if (rho < lo - slack || rho > hi + slack)
            throw DomainError("tabulated profile evaluated outside its samples");
        rho = std::clamp(rho, lo, hi);
        auto it = std::upper_bound(t.rho.begin(), t.rho.end(), rho);
        std::size_t i = static_cast<std::size_t>(it - t.rho.begin());
        if (i == 0) i = 1;
        if (i >= t.rho.size()) i = t.rho.size() - 1;
        const double r0 = t.rho[i - 1], r1 = t.rho[i];
        const double slope = (t.value[i] - t.value[i - 1]) / (r1 - r0);
        return {t.value[i - 1] + slope * (rho - r0), slope};
    }

    Kind kind_;
};

/// Rotationally invariant body force f = f_rho(rho) rho-hat + f_theta(rho) theta-hat.
struct Forcing {
    RadialProfile f_rho;
    RadialProfile f_theta;

    static Forcing zero() { return {}; }
    static Forcing azimuthal(RadialProfile ft) { return {RadialProfile::zero(), std::move(ft)}; }

    bool is_zero() const { return f_rho.is_zero() && f_theta.is_zero(); }

    PolarVector at(double rho) const { return {f_rho(rho), f_theta(rho)}; }
};

/// L2(annulus) norm of a radial function: sqrt(2 pi int_1^R rho g^2).
inline double annulus_l2_norm(const RadialProfile& g, const Annulus& ann) {
    if (g.is_zero()) return 0.0;
    const auto sq = [&](double r) {
        const double v = g(r);
        return r * v * v;
    };
    return std::sqrt(kTwoPi * numerics::integrate_relative(sq, numerics::Interval(1.0, ann.R()), 1e-12));
}

inline double forcing_norm(const Forcing& f, const Annulus& ann) {
    return std::hypot(annulus_l2_norm(f.f_rho, ann), annulus_l2_norm(f.f_theta, ann));
}

/// Reads a two-column `rho,value` CSV with a header row. Rows must be
/// strictly increasing in rho, start at 1 and end at R.
inline RadialProfile read_profile_csv(std::istream& in, const Annulus& ann) {
    std::string line;
    std::size_t lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    if (!std::getline(in, line)) throw InvalidArgument("forcing CSV: empty input");
    ++lineno;
    {
        std::string h = trim(line);
        h.erase(std::remove_if(h.begin(), h.end(), [](char c) { return c == ' ' || c == '\t'; }),
                h.end());
        if (h != "rho,value") throw InvalidArgument("forcing CSV: header must be 'rho,value'");
    }
    std::vector<double> rho, val;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw InvalidArgument("forcing CSV line " + std::to_string(lineno) + ": expected two columns");
        try {
            std::size_t used = 0;
            const std::string a = trim(line.substr(0, comma));
            const std::string b = trim(line.substr(comma + 1));
            const double r = std::stod(a, &used);
            if (used != a.size()) throw std::invalid_argument("trailing");
            const double v = std::stod(b, &used);
            if (used != b.size()) throw std::invalid_argument("trailing");
            rho.push_back(r);
            val.push_back(v);
        } catch (const std::exception&) {
            throw InvalidArgument("forcing CSV line " + std::to_string(lineno) + ": bad number");
        }
    }
    if (rho.size() < 2) throw InvalidArgument("forcing CSV: need at least two rows");
    if (std::fabs(rho.front() - 1.0) > 1e-12)
        throw InvalidArgument("forcing CSV: first rho must be 1");
    if (std::fabs(rho.back() - ann.R()) > 1e-9 * ann.R())
        throw InvalidArgument("forcing CSV: last rho must equal R");
    rho.front() = 1.0;
    rho.back() = ann.R();
    return RadialProfile::tabulated(std::move(rho), std::move(val));
}

inline RadialProfile read_profile_csv(const std::string& path, const Annulus& ann) {
    std::ifstream f(path);
    if (!f) throw InvalidArgument("forcing CSV: cannot open " + path);
    return read_profile_csv(f, ann);
}

}  // namespace tcflow
