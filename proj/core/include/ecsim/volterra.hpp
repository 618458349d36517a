// volterra.hpp - product-integration solver for linear Volterra IDEs
//
// Solves Fdot(t) + i*a*F(t) + c * int_0^t mu(t-s) F(s) ds = 0 with F(0) = 1
// on a uniform grid, by predictor-corrector trapezoidal product integration.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ecsim/spectral.hpp"

namespace ecsim::volterra {

// Uniform grid with samples at exactly k*dt, k = 0..count()-1.
struct TimeGrid {
    double t_max{10.0};
    double dt{2e-3};

    std::size_t count() const {
        return static_cast<std::size_t>(t_max / dt + 0.5) + 1;
    }
    double time(std::size_t k) const { return static_cast<double>(k) * dt; }

    void validate() const; // throws ConfigError
};

struct VolterraProblem {
    double freq{0.0};   // oscillation frequency a
    double weight{0.0}; // kernel multiplier c, >= 0
    spectral::MemoryKernel kernel;
};

// Sampled solution F(k*dt); values[0] == 1 exactly.
struct AmplitudeTrack {
    TimeGrid grid;
    std::vector<std::complex<double>> values;
};

// Marches the problem across the grid. Enforces the resolution rule
// dt <= 0.1/omega_c whenever the memory term is active (weight > 0 and
// eta > 0); second-order accurate, deterministic.
AmplitudeTrack solve(const VolterraProblem& problem, const TimeGrid& grid);

// Trapezoidal product-integration value of int_0^{step*dt} mu(t-s) F(s) ds.
// values must hold F through index step (the entry at step may be a
// predictor). step >= 1.
std::complex<double> convolve_tail(const spectral::MemoryKernel& kernel,
                                   std::span<const std::complex<double>> values,
                                   std::size_t step, double dt);

} // namespace ecsim::volterra
