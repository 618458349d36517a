// ecsim command-line front end: coeffs, concurrence, verify, sweep

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "ecsim/commands.hpp"
#include "ecsim/config.hpp"
#include "ecsim/errors.hpp"

namespace {

struct Flags {
    std::optional<std::string> config;
    std::optional<std::string> out;
    std::optional<int> workers;
    std::optional<double> eta, omega_c, kappa, t_max, dt;
    std::optional<int> lambda;
    std::optional<std::string> alpha, kind;
};

void add_common_flags(CLI::App& cmd, Flags& f) {
    cmd.add_option("--config", f.config, "Config file (key = value with [section] headers)");
    cmd.add_option("--out", f.out, "Output path (file, or directory for sweep)");
    cmd.add_option("--workers", f.workers, "Concurrent sweep workers");
    cmd.add_option("--eta", f.eta, "Coupling strength eta");
    cmd.add_option("--omega-c", f.omega_c, "Cutoff frequency omega_c / omega0");
    cmd.add_option("--kappa", f.kappa, "Mode coupling kappa / omega0");
    cmd.add_option("--lambda", f.lambda, "Coupling sign, +1 or -1");
    cmd.add_option("--alpha", f.alpha, "Coherent amplitude, e.g. 0.8 or 0.5+0.3i");
    cmd.add_option("--kind", f.kind, "State kind: psi_plus, psi_minus, phi_plus, phi_minus");
    cmd.add_option("--t-max", f.t_max, "Grid horizon t_max * omega0");
    cmd.add_option("--dt", f.dt, "Grid step dt * omega0");
}

ecsim::cli::RunConfig build_config(const Flags& f) {
    ecsim::cli::RunConfig cfg;
    if (f.config) cfg = ecsim::cli::parse_config_file(*f.config);
    using ecsim::cli::apply_override;
    if (f.eta) apply_override(cfg, "spectral.eta", std::to_string(*f.eta));
    if (f.omega_c) apply_override(cfg, "spectral.omega_c", std::to_string(*f.omega_c));
    if (f.kappa) apply_override(cfg, "system.kappa", std::to_string(*f.kappa));
    if (f.lambda) apply_override(cfg, "system.lambda", std::to_string(*f.lambda));
    if (f.alpha) apply_override(cfg, "state.alpha", *f.alpha);
    if (f.kind) apply_override(cfg, "state.kind", *f.kind);
    if (f.t_max) apply_override(cfg, "grid.t_max", std::to_string(*f.t_max));
    if (f.dt) apply_override(cfg, "grid.dt", std::to_string(*f.dt));
    if (f.out) cfg.out_path = *f.out;
    if (f.workers) cfg.workers = *f.workers;
    cfg.validate();
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact non-Markovian dynamics of two coupled optical modes"};
    app.require_subcommand(1);

    Flags f;
    auto* coeffs = app.add_subcommand(
        "coeffs", "Master-equation coefficient tracks with Markov-limit columns");
    auto* conc = app.add_subcommand(
        "concurrence", "Concurrence dynamics of an entangled coherent state");
    auto* verify = app.add_subcommand(
        "verify", "Fock-space master-equation check against the closed form");
    auto* sweep = app.add_subcommand(
        "sweep", "Cartesian parameter sweep producing CSVs plus a manifest");
    for (auto* cmd : {coeffs, conc, verify, sweep}) add_common_flags(*cmd, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const auto cfg = build_config(f);
        if (coeffs->parsed()) {
            ecsim::cli::cmd_coeffs(cfg);
        } else if (conc->parsed()) {
            ecsim::cli::cmd_concurrence(cfg);
        } else if (verify->parsed()) {
            if (!ecsim::cli::cmd_verify(cfg, std::cout)) return 3;
        } else {
            ecsim::cli::cmd_sweep(cfg);
        }
    } catch (const ecsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const ecsim::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
