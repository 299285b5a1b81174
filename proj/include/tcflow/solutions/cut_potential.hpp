#pragma once

#include <cmath>

#include "tcflow/errors.hpp"
#include "tcflow/solutions/field.hpp"
#include "tcflow/solutions/geometry.hpp"

namespace tcflow {

/// theta / (2 pi) on the cut annulus, by the three-branch arctangent formula
/// (continuous across x = 0). Throws CutAmbiguity on the cut itself.
inline double cut_potential(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) throw InvalidArgument("cut_potential: non-finite point");
    if (y == 0.0 && x >= 0.0) throw CutAmbiguity("cut_potential: point lies on the cut");
    if (x == 0.0) return y > 0.0 ? 0.25 : 0.75;
    const double base = std::atan(y / x) / kTwoPi;
    if (x < 0.0) return base + 0.5;
    return y > 0.0 ? base : base + 1.0;
}

inline double cut_potential(const PolarPoint& p) { return cut_potential(p.x(), p.y()); }

/// Gradient (1/(2 pi rho)) theta-hat, in polar components.
inline PolarVector cut_potential_gradient(const PolarPoint& p) {
    if (!(p.rho > 0.0)) throw DomainError("cut_potential_gradient: rho must be positive");
    return {0.0, 1.0 / (kTwoPi * p.rho)};
}

/// The cut potential as a pressure with zero velocity, for the audit engine.
inline FlowField cut_potential_field(const Annulus& ann) {
    FlowField::Metadata meta;
    meta.kind = SolutionKind::cut_potential;
    meta.name = "cut-potential";
    meta.equations = Equations::stokes;
    meta.params.R = ann.R();
    meta.multivalued_pressure = true;
    return FlowField(
        std::move(meta), [](const PolarPoint&) { return PolarVector{}; },
        [](const PolarPoint& p) { return cut_potential(p); }, cut_potential_gradient);
}

}  // namespace tcflow
