#pragma once

#include <cmath>
#include <numbers>

#include "tcflow/errors.hpp"

namespace tcflow {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// The annulus 1 < rho < R.
class Annulus {
public:
    explicit Annulus(double R) : R_(R) {
        if (!std::isfinite(R) || !(R > 1.0)) throw InvalidArgument("Annulus requires finite R > 1");
    }
    double R() const noexcept { return R_; }
    double area() const noexcept { return kPi * (R_ * R_ - 1.0); }

private:
    double R_;
};

/// Maps an angle into [0, 2pi).
inline double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    return t;
}

struct PolarPoint {
    double rho = 0.0;
    double theta = 0.0;

    double x() const { return rho * std::cos(theta); }
    double y() const { return rho * std::sin(theta); }
    static PolarPoint from_cartesian(double x, double y) {
        return {std::hypot(x, y), wrap_angle(std::atan2(y, x))};
    }
};

/// Vector in the local polar basis (rho-hat, theta-hat).
struct PolarVector {
    double rho = 0.0;
    double theta = 0.0;
};

struct CartesianVector {
    double x = 0.0;
    double y = 0.0;
};

/// rho-hat = (cos t, sin t), theta-hat = (-sin t, cos t).
inline CartesianVector to_cartesian(const PolarVector& v, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {v.rho * c - v.theta * s, v.rho * s + v.theta * c};
}

inline PolarVector to_polar(const CartesianVector& v, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {v.x * c + v.y * s, -v.x * s + v.y * c};
}

}  // namespace tcflow
