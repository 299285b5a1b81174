#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tcflow/errors.hpp"
#include "tcflow/report.hpp"
#include "tcflow/solutions.hpp"
#include "tcflow/spectral.hpp"
#include "tcflow/verify.hpp"

namespace tcflow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitArgument = 2;
inline constexpr int kExitNumerical = 3;

enum class Format { csv, json };

struct RunConfig {
    std::string subcommand;
    double R = 2.0;
    double omega = 1.0;
    double lambda = 1.0;
    double Phi = 1.0;
    bool phi_given = false;
    double K = 1.0;
    std::string forcing = "zero";
    std::optional<int> grid;
    std::optional<double> tol;
    std::string out;
    Format format = Format::csv;
    FluxDefinition flux_def = FluxDefinition::weighted;
    std::string which = "both";
    std::string solution = "taylor-couette";
};

/// R values of the eigenvalue and radial Sobolev tables, in table order.
inline const std::vector<double>& table_radii() {
    static const std::vector<double> r{1.1, 1.3, 1.5, 1.7, 2, 3, 4, 5, 6, 7, 8, 9, 10, 15, 20, 100};
    return r;
}

inline const std::vector<std::string>& solution_names() {
    static const std::vector<std::string> n{
        "taylor-couette", "generalized-tc", "special-forcing-tc", "incomplete",      "flux-carrier",
        "stokes-uniform", "stokes-scaled",  "stokes-rotating",    "disk-couette",    "exterior-log",
        "exterior-rigid", "exterior-linear", "exterior-logflux"};
    return n;
}

/// Six significant digits, C formatting; -0 prints as 0.
inline std::string fmt(double v) {
    if (v == 0.0) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

class Csv {
public:
    explicit Csv(std::vector<std::string> header) : width_(header.size()) { line(header); }

    void row(const std::vector<double>& values) {
        std::vector<std::string> cells;
        for (double v : values) cells.push_back(fmt(v));
        line(cells);
    }
    void line(const std::vector<std::string>& cells) {
        if (cells.size() != width_) throw InvalidArgument("csv: row width mismatch");
        for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
        out_ << '\n';
    }
    std::string str() const { return out_.str(); }

private:
    std::size_t width_;
    std::ostringstream out_;
};

/// Forcing from "zero", "constant:c", "power:c,k", "special:lambda" or
/// "csv:path". The profile is applied to the azimuthal component.
inline Forcing parse_forcing(const std::string& spec, const Annulus& ann) {
    const auto colon = spec.find(':');
    const std::string family = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? std::string() : spec.substr(colon + 1);
    auto numbers = [&](std::size_t expected) {
        std::vector<double> v;
        std::stringstream ss(args);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::size_t used = 0;
            double x;
            try {
                x = std::stod(tok, &used);
            } catch (const std::exception&) {
                throw InvalidArgument("forcing: bad number '" + tok + "'");
            }
            if (used != tok.size() || !std::isfinite(x)) throw InvalidArgument("forcing: bad number '" + tok + "'");
            v.push_back(x);
        }
        if (v.size() != expected)
            throw InvalidArgument("forcing: " + family + " takes " + std::to_string(expected) + " parameter(s)");
        return v;
    };
    if (family == "zero") {
        if (!args.empty()) throw InvalidArgument("forcing: zero takes no parameters");
        return Forcing::zero();
    }
    if (family == "constant") return Forcing::azimuthal(RadialProfile::constant(numbers(1)[0]));
    if (family == "power") {
        const auto v = numbers(2);
        return Forcing::azimuthal(RadialProfile::power(v[0], v[1]));
    }
    if (family == "special") return Forcing::azimuthal(RadialProfile::inverse_rho(numbers(1)[0]));
    if (family == "csv") {
        if (args.empty()) throw InvalidArgument("forcing: csv needs a path");
        return Forcing::azimuthal(read_profile_csv(args, ann));
    }
    throw InvalidArgument("forcing: unknown family '" + family + "'");
}

inline FlowField make_solution(const RunConfig& cfg) {
    const std::string& n = cfg.solution;
    if (n == "disk-couette") return disk_couette(cfg.R, cfg.omega);
    if (n == "exterior-log") return exterior_catalog(ExteriorKind::log_solution());
    if (n == "exterior-rigid") return exterior_catalog(ExteriorKind::rigid_family(cfg.K));
    if (n == "exterior-linear") return exterior_catalog(ExteriorKind::linear());
    if (n == "exterior-logflux") return exterior_catalog(ExteriorKind::log_flux());
    const Annulus ann(cfg.R);
    if (n == "taylor-couette") return taylor_couette(ann, cfg.omega);
    if (n == "generalized-tc") return generalized_tc(ann, cfg.omega, parse_forcing(cfg.forcing, ann));
    if (n == "special-forcing-tc") return special_forcing_tc(ann, cfg.omega, cfg.lambda);
    if (n == "incomplete") return incomplete_family(ann, cfg.omega, cfg.lambda);
    if (n == "flux-carrier") return flux_carrier(ann, cfg.omega, cfg.Phi);
    if (n == "stokes-uniform") return stokes_annulus_uniform(ann);
    if (n == "stokes-scaled") return stokes_annulus_scaled(ann);
    if (n == "stokes-rotating") return stokes_annulus_rotating(ann);
    throw InvalidArgument("unknown solution '" + n + "'");
}

inline nlohmann::ordered_json to_json(const Report& rep) {
    nlohmann::ordered_json j;
    j["title"] = rep.title;
    j["inputs"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.inputs) j["inputs"][k] = v;
    j["outputs"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.outputs) j["outputs"][k] = v;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : rep.checks)
        j["checks"].push_back({{"name", c.name}, {"value", c.value}, {"bound", c.bound}, {"pass", c.pass}});
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j;
}

/// kind,name,value,bound,pass with kind in {input, output, check}.
inline std::string report_csv(const Report& rep) {
    Csv csv({"kind", "name", "value", "bound", "pass"});
    for (const auto& [k, v] : rep.inputs) csv.line({"input", k, fmt(v), "", ""});
    for (const auto& [k, v] : rep.outputs) csv.line({"output", k, fmt(v), "", ""});
    for (const auto& c : rep.checks) csv.line({"check", c.name, fmt(c.value), fmt(c.bound), c.pass ? "1" : "0"});
    return csv.str();
}

struct Output {
    std::string text;
    int status = kExitOk;
};

inline Output emit(const RunConfig& cfg, const Report& rep, const std::string& csv_text, bool verification) {
    Output o;
    o.text = cfg.format == Format::json ? to_json(rep).dump(2) + "\n" : csv_text;
    if (verification && !rep.passed()) o.status = kExitVerification;
    return o;
}

inline Output run_eigen(const RunConfig& cfg) {
    const Annulus ann(cfg.R);
    const auto e = spectral::eigenvalue(ann, cfg.tol.value_or(1e-10));
    Report rep;
    rep.title = "eigen";
    rep.input("R", e.R);
    rep.output("alpha", e.alpha);
    rep.output("lambda", e.lambda);
    rep.output("lower", e.lower);
    rep.output("upper", e.upper);
    rep.check("lower<=lambda<=upper", e.lambda, e.upper, e.lower <= e.lambda && e.lambda <= e.upper);
    Csv csv({"R", "alpha", "lambda", "lower", "upper"});
    csv.row({e.R, e.alpha, e.lambda, e.lower, e.upper});
    return emit(cfg, rep, csv.str(), true);
}

inline Output run_shoot(const RunConfig& cfg) {
    const Annulus ann(cfg.R);
    const auto s = spectral::radial_sobolev(ann, cfg.tol.value_or(1e-8));
    Report rep;
    rep.title = "shoot";
    rep.input("R", cfg.R);
    rep.output("a_star", s.a_star);
    rep.output("R0", s.R0);
    rep.output("rho_star", s.rho_star);
    rep.output("grad_energy", s.grad_energy);
    rep.output("l4_energy", s.l4_energy);
    rep.output("bisection_steps", static_cast<double>(s.bisection_steps));
    rep.output("max_local_error", s.max_local_error);
    rep.check("ladder_monotone", s.ladder_monotone ? 1.0 : 0.0, 1.0, s.ladder_monotone);
    Csv csv({"R", "a_star", "R0"});
    csv.row({cfg.R, s.a_star, s.R0});
    return emit(cfg, rep, csv.str(), true);
}

inline Output run_sobolev(const RunConfig& cfg) {
    const Annulus ann(cfg.R);
    const auto b = spectral::s4_bounds(ann);
    Report rep;
    rep.title = "sobolev";
    rep.input("R", cfg.R);
    rep.output("s4_lower", b.s4_lower);
    rep.output("s4_upper", b.s4_upper);
    rep.output("kappa1", b.kappa1);
    rep.output("mu0", b.mu0);
    rep.check_le("s4_lower<=s4_upper", b.s4_lower, b.s4_upper);
    const Report t = spectral::tobias_check(ann);
    rep.append(t, "tobias.");
    Csv csv({"R", "s4_lower", "s4_upper", "kappa1", "mu0", "R0"});
    csv.row({cfg.R, b.s4_lower, b.s4_upper, b.kappa1, b.mu0, t.output_value("R0")});
    return emit(cfg, rep, csv.str(), true);
}

inline std::vector<PolarPoint> eval_points(const FlowField& field, int n) {
    numerics::Interval range = verify::verification_range(field);
    if (field.meta().domain == DomainKind::disk) range = numerics::Interval(0.0, field.meta().params.R);
    std::vector<PolarPoint> pts;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j < n; ++j)
            pts.push_back({range.lo() + range.width() * i / n, kTwoPi * j / n});
    return pts;
}

inline Output run_eval(const RunConfig& cfg) {
    const FlowField field = make_solution(cfg);
    const int n = cfg.grid.value_or(8);
    if (n < 1) throw InvalidArgument("eval: --grid must be positive");
    const auto pts = eval_points(field, n);
    const auto samples = evaluate(field, pts);
    Csv csv({"rho", "theta", "u_rho", "u_theta", "ux", "uy", "p"});
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& s : samples) {
        csv.line({fmt(s.point.rho), fmt(s.point.theta), fmt(s.u.rho), fmt(s.u.theta), fmt(s.u_cartesian.x),
                  fmt(s.u_cartesian.y), s.p ? fmt(*s.p) : std::string()});
        nlohmann::ordered_json r{{"rho", s.point.rho},   {"theta", s.point.theta}, {"u_rho", s.u.rho},
                                 {"u_theta", s.u.theta}, {"ux", s.u_cartesian.x},  {"uy", s.u_cartesian.y}};
        r["p"] = s.p ? nlohmann::ordered_json(*s.p) : nlohmann::ordered_json(nullptr);
        rows.push_back(std::move(r));
    }
    Output o;
    if (cfg.format == Format::csv) {
        o.text = csv.str();
    } else {
        nlohmann::ordered_json j;
        j["inputs"] = {{"solution", cfg.solution}, {"grid", n}};
        j["outputs"] = {{"samples", rows}};
        j["checks"] = nlohmann::ordered_json::array();
        o.text = j.dump(2) + "\n";
    }
    return o;
}

/// Convergence study, boundary check and, for multivalued pressures, the
/// jump across the cut against 2 pi rho (grad p . theta-hat).
inline Report verify_report(const FlowField& field, int n) {
    const auto study = verify::convergence_study(field, n);
    Report rep = verify::to_report(study);
    rep.title = "verify";
    rep.input("grid", n);
    if (field.multivalued_pressure()) {
        const auto range = verify::verification_range(field);
        const double r = range.mid();
        const double expected = kTwoPi * r * field.pressure_gradient({r, kPi}).theta;
        const auto j = verify::jump_check(field);
        rep.output("jump", j.jump);
        rep.output("expected_jump", expected);
        rep.check_le("|jump-expected|", std::fabs(j.jump - expected), 1e-8);
    }
    return rep;
}

inline Output run_verify(const RunConfig& cfg) {
    const FlowField field = make_solution(cfg);
    const Report rep = verify_report(field, cfg.grid.value_or(32));
    return emit(cfg, rep, report_csv(rep), true);
}

inline Output run_flux(const RunConfig& cfg) {
    const FlowField field = make_solution(cfg);
    const double w = flux(field, FluxDefinition::weighted);
    const double l = flux(field, FluxDefinition::line);
    const bool weighted = cfg.flux_def == FluxDefinition::weighted;
    Report rep;
    rep.title = "flux";
    rep.input("R", cfg.R);
    rep.output("flux", weighted ? w : l);
    rep.output("weighted", w);
    rep.output("line", l);
    Csv csv({"solution", "R", "definition", "flux", "weighted", "line"});
    csv.line({cfg.solution, fmt(cfg.R), weighted ? "weighted" : "line", fmt(weighted ? w : l), fmt(w), fmt(l)});
    return emit(cfg, rep, csv.str(), false);
}

/// Force mode compares K_R(omega, f) with sqrt(lambda); flux mode (--phi)
/// compares ||f|| / sqrt(lambda) + sqrt(K_R(omega, Phi)) with s4_lower.
inline Output run_threshold(const RunConfig& cfg) {
    const Annulus ann(cfg.R);
    const Forcing f = parse_forcing(cfg.forcing, ann);
    const auto eig = spectral::eigenvalue(ann);
    Report rep;
    rep.title = "threshold";
    rep.input("R", cfg.R);
    rep.input("omega", cfg.omega);
    double K, lhs, bound;
    std::string mode;
    if (cfg.phi_given) {
        mode = "flux";
        rep.input("Phi", cfg.Phi);
        K = dirichlet_energy_flux_carrier(ann, cfg.omega, cfg.Phi);
        lhs = forcing_norm(f, ann) / std::sqrt(eig.lambda) + std::sqrt(K);
        bound = spectral::s4_bounds(ann).s4_lower;
    } else {
        mode = "force";
        const auto t = threshold_force(ann, cfg.omega, f, eig.lambda);
        K = t.K;
        lhs = t.K;
        bound = *t.sqrt_lambda;
    }
    const bool certified = lhs < bound;
    const std::string cls = certified ? "sufficient-uniqueness" : "inconclusive";
    rep.output("K", K);
    rep.output("lhs", lhs);
    rep.output("bound", bound);
    rep.note(mode + ": " + cls);
    Csv csv({"mode", "R", "omega", "Phi", "K", "lhs", "bound", "classification"});
    csv.line({mode, fmt(cfg.R), fmt(cfg.omega), cfg.phi_given ? fmt(cfg.Phi) : std::string(), fmt(K), fmt(lhs),
              fmt(bound), cls});
    Output o = emit(cfg, rep, csv.str(), false);
    if (cfg.format == Format::json) {
        auto j = to_json(rep);
        j["outputs"]["classification"] = cls;
        o.text = j.dump(2) + "\n";
    }
    return o;
}

struct TableRow {
    double R;
    spectral::EigenResult eig;
    spectral::ShootResult shoot;
};

/// Table rows computed concurrently, one task per R, collected in table order.
inline std::vector<TableRow> compute_tables(bool eigen, bool radial) {
    std::vector<std::future<TableRow>> jobs;
    for (double R : table_radii())
        jobs.push_back(std::async(std::launch::async, [R, eigen, radial] {
            TableRow row{R, {}, {}};
            const Annulus ann(R);
            if (eigen) row.eig = spectral::eigenvalue(ann);
            if (radial) row.shoot = spectral::radial_sobolev(ann);
            return row;
        }));
    std::vector<TableRow> rows;
    for (auto& j : jobs) rows.push_back(j.get());
    return rows;
}

inline Output run_tables(const RunConfig& cfg) {
    const bool eigen = cfg.which == "eigen" || cfg.which == "both";
    const bool radial = cfg.which == "radial" || cfg.which == "both";
    if (!eigen && !radial) throw InvalidArgument("tables: --which must be eigen, radial or both");
    const auto rows = compute_tables(eigen, radial);

    std::vector<std::string> header{"R"};
    if (eigen) header.insert(header.end(), {"alpha", "lambda"});
    if (radial) header.insert(header.end(), {"a_star", "R0"});
    Csv csv(header);
    nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        std::vector<double> v{r.R};
        nlohmann::ordered_json j{{"R", r.R}};
        if (eigen) {
            v.insert(v.end(), {r.eig.alpha, r.eig.lambda});
            j["alpha"] = r.eig.alpha;
            j["lambda"] = r.eig.lambda;
        }
        if (radial) {
            v.insert(v.end(), {r.shoot.a_star, r.shoot.R0});
            j["a_star"] = r.shoot.a_star;
            j["R0"] = r.shoot.R0;
        }
        csv.row(v);
        jrows.push_back(std::move(j));
    }
    Output o;
    if (cfg.format == Format::csv) {
        o.text = csv.str();
    } else {
        nlohmann::ordered_json j;
        j["inputs"] = {{"which", cfg.which}};
        j["outputs"] = {{"rows", jrows}};
        j["checks"] = nlohmann::ordered_json::array();
        o.text = j.dump(2) + "\n";
    }
    return o;
}

inline Output run_limits(const RunConfig& cfg) {
    const Report rep = verify::limit_suite({1e2, 1e4, 1e6});
    return emit(cfg, rep, report_csv(rep), true);
}

inline Output dispatch(const RunConfig& cfg) {
    const std::string& s = cfg.subcommand;
    if (s == "eigen") return run_eigen(cfg);
    if (s == "shoot") return run_shoot(cfg);
    if (s == "sobolev") return run_sobolev(cfg);
    if (s == "eval") return run_eval(cfg);
    if (s == "verify") return run_verify(cfg);
    if (s == "flux") return run_flux(cfg);
    if (s == "threshold") return run_threshold(cfg);
    if (s == "tables") return run_tables(cfg);
    if (s == "limits") return run_limits(cfg);
    throw InvalidArgument("unknown subcommand '" + s + "'");
}

/// Parses args (without the program name), runs the subcommand and writes
/// its output to --out or to out. Returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Taylor-Couette exact solutions and annulus constants", "tcflow"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "csv", flux_def = "weighted";
    int grid = 0;
    double tol = 0.0;
    app.add_option("--radius", cfg.R, "outer radius R")->capture_default_str();
    app.add_option("--omega", cfg.omega, "outer angular velocity")->capture_default_str();
    app.add_option("--lambda", cfg.lambda, "forcing / family parameter")->capture_default_str();
    auto* phi = app.add_option("--phi", cfg.Phi, "flux Phi")->capture_default_str();
    app.add_option("--k", cfg.K, "rigid-family constant K")->capture_default_str();
    app.add_option("--forcing", cfg.forcing, "zero | constant:c | power:c,k | special:lambda | csv:path")
        ->capture_default_str();
    auto* grid_opt = app.add_option("--grid", grid, "grid size N");
    auto* tol_opt = app.add_option("--tol", tol, "tolerance")->check(CLI::PositiveNumber);
    app.add_option("--out", cfg.out, "output path (default stdout)");
    app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--flux-def", flux_def, "weighted | line")
        ->check(CLI::IsMember({"weighted", "line"}))
        ->capture_default_str();
    app.add_option("--which", cfg.which, "tables: eigen | radial | both")
        ->check(CLI::IsMember({"eigen", "radial", "both"}))
        ->capture_default_str();
    app.add_option("--solution", cfg.solution, "catalog solution name")
        ->check(CLI::IsMember(solution_names()))
        ->capture_default_str();

    for (const char* name : {"eigen", "sobolev", "shoot", "eval", "verify", "flux", "threshold", "tables", "limits"})
        app.add_subcommand(name)->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, ebuf;
        const int code = app.exit(e, o, ebuf);
        out << o.str();
        err << ebuf.str();
        return code == 0 ? kExitOk : kExitArgument;
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.phi_given = phi->count() > 0;
    if (grid_opt->count()) cfg.grid = grid;
    if (tol_opt->count()) cfg.tol = tol;
    cfg.format = format == "json" ? Format::json : Format::csv;
    cfg.flux_def = flux_def == "line" ? FluxDefinition::line : FluxDefinition::weighted;

    Output result;
    try {
        result = dispatch(cfg);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitArgument;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitArgument;
    } catch (const UnsupportedOperation& e) {
        err << "error: " << e.what() << '\n';
        return kExitArgument;
    } catch (const CutAmbiguity& e) {
        err << "error: " << e.what() << '\n';
        return kExitArgument;
    } catch (const Error& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }

    if (cfg.out.empty()) {
        out << result.text;
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            err << "error: cannot open " << cfg.out << '\n';
            return kExitArgument;
        }
        f << result.text;
    }
    if (result.status == kExitVerification) err << cfg.subcommand << ": verification failed\n";
    return result.status;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace tcflow::cli
