// config.hpp - run configuration: line-oriented config files plus overrides

#pragma once

#include <complex>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "ecsim/dynamics.hpp"
#include "ecsim/spectral.hpp"
#include "ecsim/states.hpp"
#include "ecsim/volterra.hpp"

namespace ecsim::cli {

// Full run description. Defaults mirror the standard weak-coupling Ohmic
// setup: kappa/omega0 = 0.5, omega_c/omega0 = 30, eta = 0.005, alpha = 0.8.
struct RunConfig {
    dynamics::SystemParams system{1.0, 0.5, +1};
    spectral::SpectralParams spectral{0.005, 30.0, 1.0};
    volterra::TimeGrid grid{10.0, 2e-3};
    states::ECSState state{states::ECSKind::phi_minus, {0.8, 0.0}};

    std::string out_path{"out.csv"};
    int workers{1};

    // verify subcommand
    int fock_cutoff{16};
    double verify_t_max{5.0};

    // sweep subcommand: parameter name -> list of values (as strings)
    std::map<std::string, std::vector<std::string>> sweep;
    std::string sweep_target{"concurrence"};

    void validate() const; // re-validates all module-level invariants
};

// Parses the "key = value" grammar with [section] headers. Unknown sections
// or keys are rejected. Blank lines and lines starting with '#' are ignored.
RunConfig parse_config_file(const std::filesystem::path& path);

// Applies a single "section.key" override (flags win over file values).
void apply_override(RunConfig& cfg, const std::string& dotted_key,
                    const std::string& value);

// Accepts "0.8", "0.8+0.3i", "-0.2-1i".
std::complex<double> parse_complex(const std::string& text);

} // namespace ecsim::cli
