#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "tcflow/errors.hpp"
#include "tcflow/report.hpp"
#include "tcflow/solutions/stokes.hpp"
#include "tcflow/solutions/taylor_couette.hpp"

namespace tcflow::verify {

struct LimitRow {
    double R;
    StokesConstants c;
    double L;
    /// max over rho in [1, 10] of the Taylor-Couette speed (omega = 1).
    double tc_local_max;
};

/// Large-R behaviour of the Stokes constants and of the Taylor-Couette flow
/// on a fixed neighbourhood of the inner circle.
inline Report limit_suite(const std::vector<double>& ladder) {
    if (ladder.empty()) throw InvalidArgument("limit_suite: empty ladder");
    for (std::size_t i = 1; i < ladder.size(); ++i)
        if (!(ladder[i] > ladder[i - 1])) throw InvalidArgument("limit_suite: ladder must be increasing");
    if (!(ladder.front() > 10.0)) throw InvalidArgument("limit_suite: ladder must start above 10");

    std::vector<LimitRow> rows;
    for (double R : ladder) {
        const Annulus ann(R);
        const FlowField tc = taylor_couette(ann, 1.0);
        double mx = 0.0;
        for (int i = 0; i <= 900; ++i) mx = std::max(mx, std::fabs(tc.azimuthal(1.0 + i * 0.01)));
        rows.push_back({R, stokes_constants(ann), std::log(R), mx});
    }

    Report rep;
    rep.title = "limits";
    for (const auto& r : rows) {
        char tag[32];
        std::snprintf(tag, sizeof tag, "R=%g.", r.R);
        const std::string t = tag;
        rep.output(t + "C1", r.c.C1);
        rep.output(t + "C2", r.c.C2);
        rep.output(t + "C3", r.c.C3);
        rep.output(t + "C4", r.c.C4);
        rep.output(t + "C1logR", r.c.C1 * r.L);
        rep.output(t + "C2logR", r.c.C2 * r.L);
        rep.output(t + "C3logR", r.c.C3 * r.L);
        rep.output(t + "C4logR", r.c.C4 * r.L);
        rep.output(t + "tc_local_max", r.tc_local_max);
        rep.check_le(t + "tc_local_max<=12/R", r.tc_local_max, 12.0 / r.R);
    }

    struct Target {
        const char* name;
        double (*dev)(const LimitRow&);
        double bound;
    };
    const Target targets[] = {
        {"|C1|", [](const LimitRow& r) { return std::fabs(r.c.C1); }, 0.01},
        {"|C2|", [](const LimitRow& r) { return std::fabs(r.c.C2); }, 0.1},
        {"|C3|", [](const LimitRow& r) { return std::fabs(r.c.C3); }, 0.1},
        {"|C4|", [](const LimitRow& r) { return std::fabs(r.c.C4); }, 0.1},
        {"|C1logR|", [](const LimitRow& r) { return std::fabs(r.c.C1 * r.L); }, 0.01},
        {"|C2logR-1/2|", [](const LimitRow& r) { return std::fabs(r.c.C2 * r.L - 0.5); }, 0.05},
        {"|C3logR+1/2|", [](const LimitRow& r) { return std::fabs(r.c.C3 * r.L + 0.5); }, 0.05},
        {"|C4logR-1|", [](const LimitRow& r) { return std::fabs(r.c.C4 * r.L - 1.0); }, 0.1},
    };
    for (const auto& tg : targets) {
        bool mono = true;
        for (std::size_t i = 1; i < rows.size(); ++i) mono = mono && tg.dev(rows[i]) < tg.dev(rows[i - 1]);
        const double last = tg.dev(rows.back());
        rep.check(std::string(tg.name) + ":monotone", last, 0.0, mono);
        rep.check_le(std::string(tg.name) + ":final", last, tg.bound);
    }
    return rep;
}

}  // namespace tcflow::verify
