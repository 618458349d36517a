#include "ecsim/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "ecsim/errors.hpp"

namespace ecsim::dynamics {

using cplx = std::complex<double>;

void SystemParams::validate() const {
    if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
        throw std::domain_error("SystemParams: omega0 must be > 0");
    }
    if (lambda != +1 && lambda != -1) {
        throw std::domain_error("SystemParams: lambda must be +1 or -1");
    }
    if (!std::isfinite(kappa)) {
        throw std::domain_error("SystemParams: kappa must be finite");
    }
}

ModeAmplitudes solve_modes(const SystemParams& sys, const spectral::SpectralParams& env,
                           const volterra::TimeGrid& grid) {
    sys.validate();
    env.validate();
    const auto kernel = spectral::MemoryKernel::closed_form(env);
    const volterra::VolterraProblem plus{sys.omega0 - sys.kappa,
                                         1.0 - static_cast<double>(sys.lambda), kernel};
    const volterra::VolterraProblem minus{sys.omega0 + sys.kappa,
                                          1.0 + static_cast<double>(sys.lambda), kernel};
    return ModeAmplitudes{volterra::solve(plus, grid), volterra::solve(minus, grid)};
}

std::pair<std::vector<cplx>, std::vector<cplx>>
uv_from_amplitudes(const ModeAmplitudes& m) {
    const auto& fp = m.f_plus.values;
    const auto& fm = m.f_minus.values;
    std::vector<cplx> u(fp.size()), v(fp.size());
    for (std::size_t k = 0; k < fp.size(); ++k) {
        u[k] = 0.5 * (fp[k] + fm[k]);
        v[k] = 0.5 * (fp[k] - fm[k]);
    }
    return {std::move(u), std::move(v)};
}

namespace {

CoefficientTrack make_track(const volterra::TimeGrid& grid) {
    CoefficientTrack t;
    t.grid = grid;
    const std::size_t n = grid.count();
    t.gamma.resize(n);
    t.gamma_cross.resize(n);
    t.omega_shifted.resize(n);
    t.omega_cross.resize(n);
    t.shift.resize(n);
    return t;
}

void fill_from_g(CoefficientTrack& t, std::size_t k, cplx g,
                 const SystemParams& sys) {
    const double lam = static_cast<double>(sys.lambda);
    t.gamma[k] = g.real();
    t.gamma_cross[k] = lam * g.real();
    t.omega_shifted[k] = sys.omega0 + g.imag();
    t.omega_cross[k] = sys.kappa + lam * g.imag();
    t.shift[k] = -g.imag();
}

} // namespace

CoefficientTrack coefficients_integral(const SystemParams& sys,
                                       const spectral::SpectralParams& env,
                                       const ModeAmplitudes& m) {
    sys.validate();
    const auto& f = (sys.lambda == +1) ? m.f_minus : m.f_plus; // F_{-lambda}
    const auto& grid = f.grid;
    const std::size_t n = grid.count();
    const double dt = grid.dt;

    std::vector<cplx> mu(n);
    for (std::size_t k = 0; k < n; ++k) {
        mu[k] = spectral::kernel_mu(env, grid.time(k));
    }

    CoefficientTrack track = make_track(grid);
    fill_from_g(track, 0, 0.0, sys); // empty memory integral

    for (std::size_t k = 1; k < n; ++k) {
        if (std::abs(f.values[k]) < 1e-8) {
            std::ostringstream msg;
            msg << "coefficients_integral: amplitude below zero-crossing guard at t="
                << grid.time(k) << "; coefficients are singular there";
            throw NumericalError(msg.str());
        }
        cplx acc = 0.5 * mu[k] * f.values[0] + 0.5 * mu[0] * f.values[k];
        for (std::size_t j = 1; j < k; ++j) {
            acc += mu[k - j] * f.values[j];
        }
        fill_from_g(track, k, dt * acc / f.values[k], sys);
    }
    return track;
}

CoefficientTrack coefficients_derivative(const SystemParams& sys, const ModeAmplitudes& m) {
    sys.validate();
    auto [u, v] = uv_from_amplitudes(m);
    const auto& grid = m.f_plus.grid;
    const std::size_t n = grid.count();
    const double dt = grid.dt;

    CoefficientTrack track = make_track(grid);
    for (std::size_t k = 0; k < n; ++k) {
        cplx du, dv;
        if (k == 0) {
            du = (u[1] - u[0]) / dt;
            dv = (v[1] - v[0]) / dt;
        } else if (k == n - 1) {
            du = (u[k] - u[k - 1]) / dt;
            dv = (v[k] - v[k - 1]) / dt;
        } else {
            du = (u[k + 1] - u[k - 1]) / (2.0 * dt);
            dv = (v[k + 1] - v[k - 1]) / (2.0 * dt);
        }
        const cplx denom = u[k] * u[k] - v[k] * v[k];
        if (std::abs(denom) < 1e-8) {
            std::ostringstream msg;
            msg << "coefficients_derivative: u^2 - v^2 below guard at t=" << grid.time(k);
            throw NumericalError(msg.str());
        }
        const cplx g = -(u[k] * du - v[k] * dv) / denom;        // Gamma + i*Omega
        const cplx gc = -(v[k] * du - u[k] * dv) / denom;       // Gamma' + i*Omega'
        track.gamma[k] = g.real();
        track.gamma_cross[k] = gc.real();
        track.omega_shifted[k] = g.imag();
        track.omega_cross[k] = gc.imag();
        track.shift[k] = sys.omega0 - g.imag();
    }
    return track;
}

MarkovConstants markov_constants(const SystemParams& sys, const spectral::SpectralParams& env) {
    sys.validate();
    return MarkovConstants{spectral::markov_decay(env, sys.omega0),
                           spectral::markov_shift(env, sys.omega0)};
}

std::pair<cplx, cplx> markov_uv(const SystemParams& sys, const MarkovConstants& consts,
                                double t) {
    if (t < 0.0) throw std::domain_error("markov_uv: t must be >= 0");
    const double lam = static_cast<double>(sys.lambda);
    const cplx e1 = std::exp(cplx(0.0, -(sys.omega0 - lam * sys.kappa) * t));
    const cplx e2 = std::exp(cplx(-2.0 * consts.decay,
                                  -(sys.omega0 + lam * sys.kappa) + 2.0 * consts.shift) *
                             cplx(t, 0.0));
    return {0.5 * (e1 + e2), (e1 - e2) / (2.0 * lam)};
}

std::pair<cplx, cplx> markov_uv(const SystemParams& sys, const spectral::SpectralParams& env,
                                double t) {
    return markov_uv(sys, markov_constants(sys, env), t);
}

MarkovCoefficients markov_coefficients(const SystemParams& sys,
                                       const spectral::SpectralParams& env) {
    const auto c = markov_constants(sys, env);
    const double lam = static_cast<double>(sys.lambda);
    return MarkovCoefficients{c.decay, lam * c.decay, sys.omega0 - c.shift,
                              sys.kappa - lam * c.shift, c.shift};
}

} // namespace ecsim::dynamics
