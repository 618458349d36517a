// dynamics.hpp - two-mode amplitudes F+/-, exact master-equation coefficients,
// and their Markovian closed forms

#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "ecsim/spectral.hpp"
#include "ecsim/volterra.hpp"

namespace ecsim::dynamics {

// Two identical optical modes: frequency omega0 (1 in internal units),
// tunneling rate kappa, and the coupling-phase branch lambda = +1 (in phase)
// or -1 (out of phase).
struct SystemParams {
    double omega0{1.0};
    double kappa{0.5};
    int lambda{+1};

    void validate() const; // throws std::domain_error
};

// F+ solves Fdot + i(omega0-kappa)F + (1-lambda) int mu F = 0,
// F- solves Fdot + i(omega0+kappa)F + (1+lambda) int mu F = 0; both F(0)=1.
// For lambda=+1 the plus branch is kernel-free (pure phase), mirrored for -1.
struct ModeAmplitudes {
    volterra::AmplitudeTrack f_plus;
    volterra::AmplitudeTrack f_minus;
};

// Time series of the exact master-equation coefficients.
// Identities maintained at every sample: gamma = lambda*gamma_cross,
// omega_cross - kappa = lambda*(omega_shifted - omega0), shift = omega0 - omega_shifted.
struct CoefficientTrack {
    volterra::TimeGrid grid;
    std::vector<double> gamma;         // per-mode decay rate
    std::vector<double> gamma_cross;   // correlated decay rate
    std::vector<double> omega_shifted; // renormalized mode frequency
    std::vector<double> omega_cross;   // renormalized inter-mode coupling
    std::vector<double> shift;         // omega0 - omega_shifted
};

// Constant Markov-limit coefficients.
struct MarkovCoefficients {
    double gamma;         // pi * J(omega0)
    double gamma_cross;   // lambda * gamma
    double omega_shifted; // omega0 - shift
    double omega_cross;   // kappa - lambda * shift
    double shift;         // principal-value integral
};

ModeAmplitudes solve_modes(const SystemParams& sys, const spectral::SpectralParams& env,
                           const volterra::TimeGrid& grid);

// u = (F+ + F-)/2, v = (F+ - F-)/2 pointwise.
std::pair<std::vector<std::complex<double>>, std::vector<std::complex<double>>>
uv_from_amplitudes(const ModeAmplitudes& m);

// Coefficients from the memory-integral form
// G(t) = (1/F(t)) int_0^t mu(t-s) F(s) ds with F the damped branch F_{-lambda}.
// Throws NumericalError when |F| falls below the zero-crossing guard 1e-8.
CoefficientTrack coefficients_integral(const SystemParams& sys,
                                       const spectral::SpectralParams& env,
                                       const ModeAmplitudes& m);

// Cross-validation route: coefficients from centered differences of u, v via
// Gamma + i*Omega = -(u*udot - v*vdot)/(u^2 - v^2),
// Gamma' + i*Omega' = -(v*udot - u*vdot)/(u^2 - v^2).
CoefficientTrack coefficients_derivative(const SystemParams& sys, const ModeAmplitudes& m);

// pi*J(omega0) and the principal-value shift, computed once.
struct MarkovConstants {
    double decay;
    double shift;
};
MarkovConstants markov_constants(const SystemParams& sys, const spectral::SpectralParams& env);

// Markov-limit closed forms
// u = [e^{-i(w0-lk)t} + e^{(-i(w0+lk) - 2(decay - i*shift)) t}]/2,
// v = (same difference) / (2*lambda).
std::pair<std::complex<double>, std::complex<double>>
markov_uv(const SystemParams& sys, const MarkovConstants& consts, double t);

std::pair<std::complex<double>, std::complex<double>>
markov_uv(const SystemParams& sys, const spectral::SpectralParams& env, double t);

MarkovCoefficients markov_coefficients(const SystemParams& sys,
                                       const spectral::SpectralParams& env);

} // namespace ecsim::dynamics
