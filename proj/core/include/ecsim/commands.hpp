// commands.hpp - subcommand implementations behind the CLI front end

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ecsim/config.hpp"

namespace ecsim::cli {

// Writes t, gamma, gamma_cross, omega_shifted, omega_cross, delta_omega,
// gamma_markov, delta_omega_markov; one row per grid point.
void cmd_coeffs(const RunConfig& cfg);

// Writes t, C_nonmarkov, C_markov for the configured (kind, lambda, alpha).
void cmd_concurrence(const RunConfig& cfg);

// Integrates the operator master equation in a truncated Fock space for the
// four decaying (kind, lambda) combinations and compares against the
// closed-form evolution. Prints one line per combination; returns true iff
// every maximum trace distance is <= 1e-3.
bool cmd_verify(const RunConfig& cfg, std::ostream& report);

// Cartesian product over the configured sweep ranges. Writes one CSV per run
// into the output directory plus a manifest listing each run's parameters,
// file name, and content hash.
void cmd_sweep(const RunConfig& cfg);

// CSV numeric format shared by all emitters: 12 significant digits.
std::string format_number(double x);

// FNV-1a 64-bit content hash used by the sweep manifest.
std::uint64_t fnv1a64(const std::string& bytes);

} // namespace ecsim::cli
