#include "ecsim/commands.hpp"

#include <array>
#include <atomic>
#include <cinttypes>
#include <filesystem>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "ecsim/errors.hpp"
#include "ecsim/fock.hpp"

namespace ecsim::cli {

std::string format_number(double x) {
    if (x == 0.0) x = 0.0; // normalize negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", x);
    return buf;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    out << content;
    if (!out) throw ConfigError("failed writing output file: " + path);
}

std::string coeffs_csv(const RunConfig& cfg) {
    const auto modes = dynamics::solve_modes(cfg.system, cfg.spectral, cfg.grid);
    const auto track = dynamics::coefficients_integral(cfg.system, cfg.spectral, modes);
    const auto markov = dynamics::markov_coefficients(cfg.system, cfg.spectral);

    std::ostringstream csv;
    csv << "t,gamma,gamma_cross,omega_shifted,omega_cross,delta_omega,"
           "gamma_markov,delta_omega_markov\n";
    for (std::size_t k = 0; k < cfg.grid.count(); ++k) {
        csv << format_number(cfg.grid.time(k)) << ',' << format_number(track.gamma[k])
            << ',' << format_number(track.gamma_cross[k]) << ','
            << format_number(track.omega_shifted[k]) << ','
            << format_number(track.omega_cross[k]) << ','
            << format_number(track.shift[k]) << ',' << format_number(markov.gamma)
            << ',' << format_number(markov.shift) << '\n';
    }
    return csv.str();
}

std::string concurrence_csv(const RunConfig& cfg) {
    const auto c_exact =
        states::concurrence_track(cfg.state, cfg.system, cfg.spectral, cfg.grid);
    const auto c_markov =
        states::markov_concurrence_track(cfg.state, cfg.system, cfg.spectral, cfg.grid);

    std::ostringstream csv;
    csv << "t,C_nonmarkov,C_markov\n";
    for (std::size_t k = 0; k < cfg.grid.count(); ++k) {
        csv << format_number(cfg.grid.time(k)) << ',' << format_number(c_exact[k])
            << ',' << format_number(c_markov[k]) << '\n';
    }
    return csv.str();
}

} // namespace

void cmd_coeffs(const RunConfig& cfg) {
    cfg.validate();
    write_file(cfg.out_path, coeffs_csv(cfg));
}

void cmd_concurrence(const RunConfig& cfg) {
    cfg.validate();
    write_file(cfg.out_path, concurrence_csv(cfg));
}

bool cmd_verify(const RunConfig& cfg, std::ostream& report) {
    cfg.validate();
    const auto space = fock::FockSpace::make(cfg.fock_cutoff);
    const volterra::TimeGrid grid{cfg.verify_t_max, cfg.grid.dt};
    // step the Fock integration 10x coarser than the coefficient track; the
    // track itself stays fine so interpolated coefficients remain accurate
    const std::size_t ratio = 10;
    const volterra::TimeGrid fock_grid{cfg.verify_t_max,
                                       cfg.grid.dt * static_cast<double>(ratio)};

    bool all_pass = true;
    for (int lambda : {+1, -1}) {
        dynamics::SystemParams sys = cfg.system;
        sys.lambda = lambda;
        const auto modes = dynamics::solve_modes(sys, cfg.spectral, grid);
        const auto coeffs = dynamics::coefficients_integral(sys, cfg.spectral, modes);

        // the kinds that couple to the damped branch at this lambda
        const auto kinds = (lambda == +1)
            ? std::array{states::ECSKind::phi_minus, states::ECSKind::phi_plus}
            : std::array{states::ECSKind::psi_minus, states::ECSKind::psi_plus};

        for (auto kind : kinds) {
            states::ECSState state{kind, cfg.state.alpha};
            const auto rho0 = fock::embed_ecs(state, space);

            // compare at ~twenty checkpoints across the run
            const std::size_t stride =
                std::max<std::size_t>(1, (fock_grid.count() - 1) / 20);
            double max_dist = 0.0;
            auto observer = [&](std::size_t k, const fock::DensityOperator& rho) {
                if (k % stride != 0 && k != fock_grid.count() - 1) return;
                const auto closed =
                    fock::closed_form_in_fock(state, modes, k * ratio, space);
                max_dist = std::max(max_dist, fock::trace_distance(rho, closed));
            };
            fock::integrate_master(rho0, coeffs, space, fock_grid, observer);

            const bool pass = max_dist <= 1e-3;
            all_pass = all_pass && pass;
            report << "verify kind=" << states::to_string(kind) << " lambda="
                   << (lambda > 0 ? "+1" : "-1")
                   << " max_trace_distance=" << format_number(max_dist) << ' '
                   << (pass ? "PASS" : "FAIL") << '\n';
        }
    }
    return all_pass;
}

namespace {

struct SweepRun {
    RunConfig cfg;
    std::vector<std::pair<std::string, std::string>> params;
    std::string file_name;
};

} // namespace

void cmd_sweep(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.sweep.empty()) {
        throw ConfigError("sweep: no parameter ranges configured");
    }
    for (const auto& [key, values] : cfg.sweep) {
        if (values.empty()) throw ConfigError("sweep: empty range for '" + key + "'");
    }

    // deterministic ordering: map iteration is sorted by key
    std::vector<SweepRun> runs;
    runs.push_back(SweepRun{cfg, {}, ""});
    for (const auto& [key, values] : cfg.sweep) {
        std::vector<SweepRun> next;
        for (const auto& base : runs) {
            for (const auto& value : values) {
                SweepRun r = base;
                const std::string section = (key == "lambda" || key == "kappa") ? "system"
                    : (key == "kind" || key == "alpha") ? "state"
                                                        : "spectral";
                apply_override(r.cfg, section + "." + key, value);
                r.params.emplace_back(key, value);
                next.push_back(std::move(r));
            }
        }
        runs = std::move(next);
    }

    namespace fs = std::filesystem;
    const fs::path dir(cfg.out_path);
    fs::create_directories(dir);

    for (std::size_t i = 0; i < runs.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "run-%04zu.csv", i);
        runs[i].file_name = name;
        runs[i].cfg.validate();
    }

    std::vector<std::string> contents(runs.size());
    std::vector<std::string> errors(runs.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= runs.size()) return;
            try {
                contents[i] = (cfg.sweep_target == "coeffs") ? coeffs_csv(runs[i].cfg)
                                                             : concurrence_csv(runs[i].cfg);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const std::size_t nthreads =
        std::min<std::size_t>(static_cast<std::size_t>(cfg.workers), runs.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t + 1 < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (!errors[i].empty()) {
            throw NumericalError("sweep run " + runs[i].file_name + ": " + errors[i]);
        }
    }

    std::ostringstream manifest;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        write_file((dir / runs[i].file_name).string(), contents[i]);
        manifest << runs[i].file_name;
        manifest << " target=" << cfg.sweep_target;
        for (const auto& [key, value] : runs[i].params) {
            manifest << ' ' << key << '=' << value;
        }
        char hash[24];
        std::snprintf(hash, sizeof hash, "%016" PRIx64, fnv1a64(contents[i]));
        manifest << " fnv1a64=" << hash << '\n';
    }
    write_file((dir / "manifest.txt").string(), manifest.str());
}

} // namespace ecsim::cli
