// spectral.hpp - Ohmic-family spectral densities, memory kernels, Markov constants

#pragma once

#include <complex>
#include <functional>

namespace ecsim::spectral {

// Environment coupling: J(w) = eta * w * (w/omega_c)^(n-1) * exp(-w/omega_c).
// n = 1 is Ohmic, 0 < n < 1 sub-Ohmic, n > 1 super-Ohmic.
struct SpectralParams {
    double eta{0.005};    // dimensionless coupling strength, >= 0
    double omega_c{30.0}; // cutoff frequency in units of omega0, > 0
    double n{1.0};        // ohmicity exponent, > 0

    void validate() const; // throws std::domain_error
};

// Spectral weight J(w). Throws std::domain_error for w < 0.
double j_omega(const SpectralParams& p, double omega);

// Memory kernel mu(t) = integral_0^inf J(w) e^{-iwt} dw in closed form:
// eta * omega_c^2 * Gamma(n+1) / (1 + i*omega_c*t)^(n+1).
// Throws std::domain_error for t < 0.
std::complex<double> kernel_mu(const SpectralParams& p, double t);

// Markov decay rate pi * J(omega0).
double markov_decay(const SpectralParams& p, double omega0);

// Principal-value frequency shift P int_0^inf J(w)/(w - omega0) dw, computed
// by singularity subtraction plus the analytic log remainder, with
// window/step refinement converged to 1e-6 relative.
double markov_shift(const SpectralParams& p, double omega0);

// Evaluation rule t -> mu(t) plus the parameters it derives from. Negative
// arguments follow the Hermitian symmetry mu(-t) = conj(mu(t)).
struct MemoryKernel {
    SpectralParams params;
    std::function<std::complex<double>(double)> rule; // defined for t >= 0

    static MemoryKernel closed_form(const SpectralParams& p);

    std::complex<double> operator()(double t) const {
        return t < 0.0 ? std::conj(rule(-t)) : rule(t);
    }
};

} // namespace ecsim::spectral
