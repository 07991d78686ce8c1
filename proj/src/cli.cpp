// cli.cpp — subcommand front end producing CSV/JSON datasets.
#include "uswqed/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "uswqed/dataset.hpp"
#include "uswqed/dynamics.hpp"
#include "uswqed/field.hpp"
#include "uswqed/fluctuations.hpp"
#include "uswqed/model.hpp"
#include "uswqed/numerics.hpp"
#include "uswqed/version.hpp"

namespace uswqed::cli {
namespace {

constexpr double kPi = 3.14159265358979323846;

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    long count = 0;
};

GridSpec parse_grid(const std::string& text) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos)
        throw std::invalid_argument("grid must look like START:STOP:COUNT");
    GridSpec g;
    std::size_t used = 0;
    try {
        const std::string s0 = text.substr(0, c1);
        const std::string s1 = text.substr(c1 + 1, c2 - c1 - 1);
        const std::string s2 = text.substr(c2 + 1);
        g.start = std::stod(s0, &used);
        if (used != s0.size()) throw std::invalid_argument("grid start");
        g.stop = std::stod(s1, &used);
        if (used != s1.size()) throw std::invalid_argument("grid stop");
        g.count = std::stol(s2, &used);
        if (used != s2.size()) throw std::invalid_argument("grid count");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("grid value out of range");
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("grid must look like START:STOP:COUNT with numeric fields");
    }
    if (!std::isfinite(g.start) || !std::isfinite(g.stop) || !(g.start < g.stop))
        throw std::invalid_argument("grid needs finite START < STOP");
    if (g.count < 2 || g.count > 2'000'000)
        throw std::invalid_argument("grid COUNT must be between 2 and 2000000");
    return g;
}

std::vector<double> linspace(const GridSpec& g) {
    std::vector<double> out(static_cast<std::size_t>(g.count));
    const double h = (g.stop - g.start) / static_cast<double>(g.count - 1);
    for (long i = 0; i < g.count; ++i)
        out[static_cast<std::size_t>(i)] = g.start + h * static_cast<double>(i);
    out.back() = g.stop;
    return out;
}

nlohmann::json grid_json(const GridSpec& g) {
    return {{"start", g.start}, {"stop", g.stop}, {"count", g.count}};
}

std::string trim_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

// Flags shared by the subcommands; each command registers only the ones that
// apply to it, so stray flags are parse errors rather than silent no-ops.
struct Options {
    double omega_x = 5.0;
    std::vector<double> kappa;
    double kd = std::numeric_limits<double>::quiet_NaN();
    double ed_abs = std::numeric_limits<double>::quiet_NaN();
    double ed_phase = 0.0;
    double t = std::numeric_limits<double>::quiet_NaN();
    std::string grid;
    std::string out;
    std::string format = "csv";
    std::string mode = "full";
};

void add_output_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--out", o.out, "output path (default <command>.<format>)");
    cmd->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

void emit(const Dataset& d, const Options& o, const std::string& command) {
    std::string path = o.out;
    if (path.empty()) path = command + "." + o.format;
    if (o.format == "csv")
        write_csv(d, path);
    else
        write_json(d, path);
    std::cerr << "wrote " << path << " (" << d.rows.size() << " rows)\n";
}

nlohmann::json base_config(const std::string& command, const Options& o) {
    nlohmann::json cfg;
    cfg["command"] = command;
    cfg["format"] = o.format;
    cfg["omega_b"] = 1.0;
    cfg["omega_x"] = o.omega_x;
    cfg["rel_tol"] = default_quadrature_options().rel_tol;
    cfg["units"] = "omega_b=1";
    cfg["version"] = kVersion;
    return cfg;
}

double default_drive_strength(double kappa) {
    return std::sqrt(2.5 * kappa);
}

// ---------- renorm ----------

int cmd_renorm(const Options& o) {
    const GridSpec g = o.grid.empty() ? GridSpec{0.0, 0.188, 95} : parse_grid(o.grid);
    std::vector<double> kappas = linspace(g);
    const RegimeThresholds th = coupling_regime_thresholds(o.omega_x);
    for (double extra : {th.ultrastrong, th.deepstrong}) {
        if (extra >= g.start && extra <= g.stop) kappas.push_back(extra);
    }
    std::sort(kappas.begin(), kappas.end());

    Dataset d;
    nlohmann::json cfg = base_config("renorm", o);
    cfg["grid"] = grid_json(g);
    cfg["thresholds"] = {{"ultrastrong", th.ultrastrong}, {"deepstrong", th.deepstrong}};
    d.config_json = cfg.dump();
    d.columns = {"kappa_ratio", "kappa_tilde_over_kappa", "omega_tilde_root",
                 "omega_tilde_closed", "kappa_tilde_over_omega_tilde"};
    for (double kappa : kappas) {
        if (kappa == 0.0) {
            d.rows.push_back({0.0, 1.0, 1.0, 1.0, 0.0});
            continue;
        }
        const ModelParams p{1.0, o.omega_x, kappa};
        const Renormalization rn = renormalize(p);
        const double closed = renormalized_frequency_closed_form(p);
        // |lambda1| tracks the closed form to 0.1% everywhere below the bound;
        // the pole real part legitimately drifts several percent near it.
        if (std::abs(std::abs(solve_cubic(p).lambda1) - closed) > 1e-2 * closed)
            throw NumericsError("renormalized frequency routes disagree at kappa " +
                                std::to_string(kappa));
        d.rows.push_back({kappa, rn.kappa_tilde / kappa, rn.omega_b_tilde, closed,
                          rn.kappa_tilde / rn.omega_b_tilde});
    }
    emit(d, o, "renorm");
    return kExitOk;
}

// ---------- roots ----------

int cmd_roots(const Options& o) {
    const GridSpec g = o.grid.empty() ? GridSpec{0.0, 0.19, 96} : parse_grid(o.grid);
    Dataset d;
    nlohmann::json cfg = base_config("roots", o);
    cfg["grid"] = grid_json(g);
    d.config_json = cfg.dump();
    d.columns = {"kappa_ratio", "re_lambda1", "im_lambda1", "re_lambda2",
                 "im_lambda2", "re_lambda3", "im_lambda3"};
    for (double kappa : linspace(g)) {
        const DressedPoles poles = solve_cubic({1.0, o.omega_x, kappa});
        d.rows.push_back({kappa, poles.lambda1.real(), poles.lambda1.imag(),
                          poles.lambda2.real(), poles.lambda2.imag(),
                          poles.lambda3.real(), poles.lambda3.imag()});
    }
    emit(d, o, "roots");
    return kExitOk;
}

// ---------- trajectory ----------

int cmd_trajectory(const Options& o) {
    if (o.kappa.size() > 1)
        throw std::invalid_argument("trajectory takes a single --kappa");
    const double kappa = o.kappa.empty() ? 0.01 : o.kappa.front();
    const ModelParams p{1.0, o.omega_x, kappa};
    validate(p);   // report overcritical coupling before defaulting the drive
    Drive drive;
    drive.k_d = std::isnan(o.kd) ? renormalized_frequency_closed_form(p) : o.kd;
    drive.e_d_abs = std::isnan(o.ed_abs) ? default_drive_strength(kappa) : o.ed_abs;
    drive.theta_d = o.ed_phase;
    const GridSpec g = o.grid.empty() ? GridSpec{0.0, 4.0 * kPi / drive.k_d, 257}
                                      : parse_grid(o.grid);
    const TrajectoryMode mode =
        o.mode == "stationary" ? TrajectoryMode::stationary : TrajectoryMode::full;

    const std::vector<double> times = linspace(g);
    const Trajectory traj = trajectory(times, drive, p, mode);
    const EllipseGeometry geom = ellipse(drive, p);

    Dataset d;
    nlohmann::json cfg = base_config("trajectory", o);
    cfg["kappa"] = kappa;
    cfg["kd"] = drive.k_d;
    cfg["ed_abs"] = drive.e_d_abs;
    cfg["ed_phase"] = drive.theta_d;
    cfg["mode"] = o.mode;
    cfg["grid"] = grid_json(g);
    d.config_json = cfg.dump();
    d.columns = {"time", "re_stationary", "im_stationary", "re_full", "im_full",
                 "radius_x", "radius_y", "long_radius", "short_radius"};
    for (std::size_t i = 0; i < times.size(); ++i) {
        const cdouble s = stationary_amplitude(times[i], drive, p);
        const cdouble full = traj.values[i];
        d.rows.push_back({times[i], s.real(), s.imag(), full.real(), full.imag(),
                          geom.radius_x, geom.radius_y, geom.long_radius, geom.short_radius});
    }
    emit(d, o, "trajectory");
    return kExitOk;
}

// ---------- fluct ----------

int cmd_fluct(const Options& o) {
    const GridSpec g = o.grid.empty() ? GridSpec{0.0, 0.19, 96} : parse_grid(o.grid);
    Dataset d;
    nlohmann::json cfg = base_config("fluct", o);
    cfg["grid"] = grid_json(g);
    d.config_json = cfg.dump();
    d.columns = {"kappa_ratio", "n_virtual", "re_anomalous", "im_anomalous",
                 "dx", "dy", "sqrt_dx_dy"};
    for (double kappa : linspace(g)) {
        const Moments m = moments_closed_form({1.0, o.omega_x, kappa});
        const QuadratureFluct f = fluctuations_from(m);
        d.rows.push_back({kappa, m.n_virtual, m.anomalous.real(), m.anomalous.imag(),
                          f.dx, f.dy, std::sqrt(f.dx * f.dy)});
    }
    emit(d, o, "fluct");
    return kExitOk;
}

// ---------- field ----------

int cmd_field(const Options& o) {
    if (o.kappa.size() > 1)
        throw std::invalid_argument("field takes a single --kappa");
    const double kappa = o.kappa.empty() ? 0.1 : o.kappa.front();
    const ModelParams p{1.0, o.omega_x, kappa};
    Drive drive;
    drive.k_d = std::isnan(o.kd) ? 0.6 : o.kd;
    drive.e_d_abs = std::isnan(o.ed_abs) ? default_drive_strength(kappa) : o.ed_abs;
    drive.theta_d = o.ed_phase;
    const double t = std::isnan(o.t) ? 300.0 : o.t;
    const GridSpec g = o.grid.empty() ? GridSpec{-50.0, 320.0, 371} : parse_grid(o.grid);

    const std::vector<double> positions = linspace(g);
    const FieldProfile rig = field_profile(positions, t, drive, p, FieldMethod::rigorous);
    const FieldProfile app = field_profile(positions, t, drive, p, FieldMethod::approximate);

    Dataset d;
    nlohmann::json cfg = base_config("field", o);
    cfg["kappa"] = kappa;
    cfg["kd"] = drive.k_d;
    cfg["ed_abs"] = drive.e_d_abs;
    cfg["ed_phase"] = drive.theta_d;
    cfg["t"] = t;
    cfg["grid"] = grid_json(g);
    cfg["normalization"] = "incident wave E_d exp(i kd (r - t))";
    cfg["phase_convention"] = "exp(+ikr)";
    d.config_json = cfg.dump();
    d.columns = {"r", "re_rigorous", "im_rigorous", "re_approximate", "im_approximate"};
    for (std::size_t i = 0; i < positions.size(); ++i) {
        d.rows.push_back({positions[i], rig.normalized[i].real(), rig.normalized[i].imag(),
                          app.normalized[i].real(), app.normalized[i].imag()});
    }
    emit(d, o, "field");
    return kExitOk;
}

// ---------- reflection / transmission ----------

int cmd_reflection(const Options& o, bool transmission) {
    std::vector<double> kappas = o.kappa;
    if (kappas.empty())
        kappas = transmission ? std::vector<double>{0.01, 0.05, 0.15}
                              : std::vector<double>{0.01, 0.05, 0.10, 0.15};
    const GridSpec g = o.grid.empty() ? GridSpec{0.001, 2.0, 2301} : parse_grid(o.grid);
    const std::vector<double> ks = linspace(g);

    Dataset d;
    nlohmann::json cfg = base_config(transmission ? "transmission" : "reflection", o);
    cfg["kappa"] = kappas;
    cfg["grid"] = grid_json(g);
    if (!transmission) cfg["phase_branch"] = "continuous in (-2pi, 0]";
    d.config_json = cfg.dump();

    d.columns = {"kd"};
    std::vector<std::vector<double>> cols;
    for (double kappa : kappas) {
        const ModelParams p{1.0, o.omega_x, kappa};
        if (transmission) {
            d.columns.push_back("transmission_kappa_" + trim_number(kappa));
            std::vector<double> col(ks.size());
            for (std::size_t i = 0; i < ks.size(); ++i)
                col[i] = std::norm(open_waveguide(ks[i], p).t_prime);
            cols.push_back(std::move(col));
        } else {
            d.columns.push_back("phase_kappa_" + trim_number(kappa));
            cols.push_back(phase_spectrum(ks, p));
        }
    }
    d.rows.reserve(ks.size());
    for (std::size_t i = 0; i < ks.size(); ++i) {
        std::vector<double> row{ks[i]};
        for (const auto& col : cols) row.push_back(col[i]);
        d.rows.push_back(std::move(row));
    }
    emit(d, o, transmission ? "transmission" : "reflection");
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"cavity + semi-infinite waveguide beyond the rotating-wave regime"};
    app.set_version_flag("--version", std::string("uswqed v") + kVersion);
    app.require_subcommand(1);

    Options o;
    auto add_model = [&](CLI::App* cmd) {
        cmd->add_option("--omega-x", o.omega_x, "coupling cutoff in units of omega_b")
            ->check(CLI::PositiveNumber);
    };
    auto add_grid = [&](CLI::App* cmd, const char* what) {
        cmd->add_option("--grid", o.grid, std::string("START:STOP:COUNT for ") + what);
    };
    auto add_drive = [&](CLI::App* cmd) {
        cmd->add_option("--kd", o.kd, "drive wavenumber");
        cmd->add_option("--ed-abs", o.ed_abs, "drive strength |E_d|");
        cmd->add_option("--ed-phase", o.ed_phase, "drive phase theta_d");
    };

    CLI::App* renorm = app.add_subcommand("renorm", "renormalized frequency and linewidth vs kappa");
    add_model(renorm);
    add_grid(renorm, "kappa/omega_b");
    add_output_flags(renorm, o);

    CLI::App* roots = app.add_subcommand("roots", "dressed poles vs kappa");
    add_model(roots);
    add_grid(roots, "kappa/omega_b");
    add_output_flags(roots, o);

    CLI::App* traj = app.add_subcommand("trajectory", "cavity amplitude orbit in phase space");
    add_model(traj);
    traj->add_option("--kappa", o.kappa, "coupling kappa/omega_b")->delimiter(',');
    add_drive(traj);
    traj->add_option("--mode", o.mode, "stationary or full")
        ->check(CLI::IsMember({"stationary", "full"}));
    add_grid(traj, "time");
    add_output_flags(traj, o);

    CLI::App* fluct = app.add_subcommand("fluct", "ground-state quadrature fluctuations vs kappa");
    add_model(fluct);
    add_grid(fluct, "kappa/omega_b");
    add_output_flags(fluct, o);

    CLI::App* field = app.add_subcommand("field", "real-space waveguide field at fixed time");
    add_model(field);
    field->add_option("--kappa", o.kappa, "coupling kappa/omega_b")->delimiter(',');
    add_drive(field);
    field->add_option("--t", o.t, "evaluation time");
    add_grid(field, "position r");
    add_output_flags(field, o);

    CLI::App* refl = app.add_subcommand("reflection", "continuous reflection phase spectra");
    add_model(refl);
    refl->add_option("--kappa", o.kappa, "comma list of couplings")->delimiter(',');
    add_grid(refl, "drive wavenumber");
    add_output_flags(refl, o);

    CLI::App* trans = app.add_subcommand("transmission", "two-sided transmission probability spectra");
    add_model(trans);
    trans->add_option("--kappa", o.kappa, "comma list of couplings")->delimiter(',');
    add_grid(trans, "drive wavenumber");
    add_output_flags(trans, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (renorm->parsed()) return cmd_renorm(o);
        if (roots->parsed()) return cmd_roots(o);
        if (traj->parsed()) return cmd_trajectory(o);
        if (fluct->parsed()) return cmd_fluct(o);
        if (field->parsed()) return cmd_field(o);
        if (refl->parsed()) return cmd_reflection(o, false);
        if (trans->parsed()) return cmd_reflection(o, true);
    } catch (const OvercriticalCouplingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOvercritical;
    } catch (const NumericsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerics;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitConfig;
}

} // namespace uswqed::cli
