#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "tcflow/errors.hpp"
#include "tcflow/numerics/interval.hpp"
#include "tcflow/solutions/geometry.hpp"

namespace tcflow::verify {

enum class ThetaTopology { periodic, cut };

/// Uniform tensor grid in (rho, theta).
///
/// n_rho counts radial intervals (n_rho + 1 nodes, both ends included). With
/// periodic topology there are n_theta nodes at 2 pi j / n_theta; with cut
/// topology n_theta intervals span [delta, 2 pi - delta]. Doubling n_rho and
/// n_theta therefore halves both spacings.
class PolarGrid {
public:
    PolarGrid(int n_rho, int n_theta, numerics::Interval rho_range,
              ThetaTopology topology = ThetaTopology::periodic, double delta = 0.0)
        : n_rho_(n_rho), n_theta_(n_theta), range_(rho_range), topology_(topology), delta_(delta) {
        if (n_rho < 8 || n_theta < 8) throw InvalidArgument("PolarGrid: resolutions must be >= 8");
        if (rho_range.lo() < 0.0) throw InvalidArgument("PolarGrid: rho range must be non-negative");
        if (topology == ThetaTopology::cut && !(delta > 0.0 && delta < kPi / 4))
            throw InvalidArgument("PolarGrid: cut topology needs 0 < delta < pi/4");
        if (topology == ThetaTopology::periodic) delta_ = 0.0;
    }

    static PolarGrid periodic(int n_rho, int n_theta, numerics::Interval r) {
        return PolarGrid(n_rho, n_theta, r, ThetaTopology::periodic);
    }
    static PolarGrid cut(int n_rho, int n_theta, numerics::Interval r, double delta = 1e-2) {
        return PolarGrid(n_rho, n_theta, r, ThetaTopology::cut, delta);
    }

    int n_rho() const noexcept { return n_rho_; }
    int n_theta() const noexcept { return n_theta_; }
    const numerics::Interval& rho_range() const noexcept { return range_; }
    ThetaTopology topology() const noexcept { return topology_; }
    double delta() const noexcept { return delta_; }

    int rho_nodes() const noexcept { return n_rho_ + 1; }
    int theta_nodes() const noexcept { return topology_ == ThetaTopology::periodic ? n_theta_ : n_theta_ + 1; }

    double d_rho() const { return range_.width() / n_rho_; }
    double d_theta() const {
        return topology_ == ThetaTopology::periodic ? kTwoPi / n_theta_ : (kTwoPi - 2.0 * delta_) / n_theta_;
    }

    double rho(int i) const { return i == n_rho_ ? range_.hi() : range_.lo() + i * d_rho(); }
    double theta(int j) const {
        if (topology_ == ThetaTopology::periodic) return j * d_theta();
        return j == n_theta_ ? kTwoPi - delta_ : delta_ + j * d_theta();
    }

    PolarGrid refined() const { return PolarGrid(2 * n_rho_, 2 * n_theta_, range_, topology_, delta_); }

    bool is_refinement_of(const PolarGrid& coarse) const {
        return n_rho_ == 2 * coarse.n_rho_ && n_theta_ == 2 * coarse.n_theta_ &&
               range_.lo() == coarse.range_.lo() && range_.hi() == coarse.range_.hi() &&
               topology_ == coarse.topology_ && delta_ == coarse.delta_;
    }

    std::string describe() const {
        char buf[160];
        if (topology_ == ThetaTopology::periodic)
            std::snprintf(buf, sizeof buf, "%dx%d rho=[%g,%g] periodic", n_rho_, n_theta_, range_.lo(), range_.hi());
        else
            std::snprintf(buf, sizeof buf, "%dx%d rho=[%g,%g] cut(%g)", n_rho_, n_theta_, range_.lo(), range_.hi(),
                          delta_);
        return buf;
    }

private:
    int n_rho_;
    int n_theta_;
    numerics::Interval range_;
    ThetaTopology topology_;
    double delta_;
};

}  // namespace tcflow::verify
