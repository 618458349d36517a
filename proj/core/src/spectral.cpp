#include "ecsim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ecsim/errors.hpp"
#include "ecsim/quadrature.hpp"

namespace ecsim::spectral {

void SpectralParams::validate() const {
    if (!(eta >= 0.0) || !std::isfinite(eta)) {
        throw std::domain_error("SpectralParams: eta must be >= 0");
    }
    if (!(omega_c > 0.0) || !std::isfinite(omega_c)) {
        throw std::domain_error("SpectralParams: omega_c must be > 0");
    }
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::domain_error("SpectralParams: n must be > 0");
    }
}

double j_omega(const SpectralParams& p, double omega) {
    p.validate();
    if (omega < 0.0) {
        throw std::domain_error("j_omega: omega must be >= 0");
    }
    if (omega == 0.0 || p.eta == 0.0) return 0.0;
    return p.eta * omega * std::pow(omega / p.omega_c, p.n - 1.0) *
           std::exp(-omega / p.omega_c);
}

std::complex<double> kernel_mu(const SpectralParams& p, double t) {
    p.validate();
    if (t < 0.0) {
        throw std::domain_error("kernel_mu: t must be >= 0");
    }
    if (p.eta == 0.0) return {0.0, 0.0};
    const std::complex<double> denom =
        std::pow(std::complex<double>(1.0, p.omega_c * t), p.n + 1.0);
    return p.eta * p.omega_c * p.omega_c * std::tgamma(p.n + 1.0) / denom;
}

double markov_decay(const SpectralParams& p, double omega0) {
    if (!(omega0 > 0.0)) {
        throw std::domain_error("markov_decay: omega0 must be > 0");
    }
    return M_PI * j_omega(p, omega0);
}

namespace {

// P int_0^W J/(w-w0) via subtraction of the removable singularity, plus the
// exact principal-value log of the subtracted 1/(w-w0) piece, plus the tail
// integral on [W, 8W] where J has already decayed to numerical noise.
double shift_with_window(const SpectralParams& p, double omega0, double window) {
    const double j0 = j_omega(p, omega0);
    // dJ/dw at omega0, used as the limit of the subtracted integrand
    const double slope = j0 * (p.n / omega0 - 1.0 / p.omega_c);
    auto regular = [&](double w) {
        const double d = w - omega0;
        if (std::abs(d) < 1e-9 * omega0) return slope;
        return (j_omega(p, w) - j0) / d;
    };
    const double scale = p.eta * p.omega_c + j0 + 1e-30;
    const double tol = 1e-11 * scale;
    double val = quadrature::adaptive_simpson(regular, 0.0, window, tol);
    val += j0 * std::log((window - omega0) / omega0);
    auto tail = [&](double w) { return j_omega(p, w) / (w - omega0); };
    val += quadrature::adaptive_simpson(tail, window, 8.0 * window, tol);
    return val;
}

} // namespace

double markov_shift(const SpectralParams& p, double omega0) {
    if (!(omega0 > 0.0)) {
        throw std::domain_error("markov_shift: omega0 must be > 0");
    }
    p.validate();
    if (p.eta == 0.0) return 0.0;

    double window = std::max(40.0 * p.omega_c, 8.0 * omega0);
    const double first = shift_with_window(p, omega0, window);
    const double refined = shift_with_window(p, omega0, 2.0 * window);
    const double rel = std::abs(refined - first) /
                       std::max(std::abs(refined), 1e-300);
    if (rel > 1e-6) {
        std::ostringstream msg;
        msg << "markov_shift: window refinement did not converge (window="
            << window << ", value=" << first << ", refined=" << refined
            << ", rel=" << rel << ")";
        throw NumericalError(msg.str());
    }
    return refined;
}

MemoryKernel MemoryKernel::closed_form(const SpectralParams& p) {
    p.validate();
    return MemoryKernel{p, [p](double t) { return kernel_mu(p, t); }};
}

} // namespace ecsim::spectral
