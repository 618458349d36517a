#include "ecsim/volterra.hpp"

#include <cmath>
#include <sstream>

#include "ecsim/errors.hpp"

namespace ecsim::volterra {

using cplx = std::complex<double>;

void TimeGrid::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw ConfigError("TimeGrid: dt must be > 0");
    }
    if (!(t_max > 0.0) || !std::isfinite(t_max)) {
        throw ConfigError("TimeGrid: t_max must be > 0");
    }
    if (count() < 2) {
        throw ConfigError("TimeGrid: need at least two samples");
    }
}

AmplitudeTrack solve(const VolterraProblem& problem, const TimeGrid& grid) {
    grid.validate();
    if (problem.weight < 0.0) {
        throw ConfigError("VolterraProblem: weight must be >= 0");
    }
    const bool memory_active =
        problem.weight > 0.0 && problem.kernel.params.eta > 0.0;
    if (memory_active && grid.dt > 0.1 / problem.kernel.params.omega_c * (1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "solve: dt=" << grid.dt << " violates the resolution rule dt <= 0.1/omega_c"
            << " (omega_c=" << problem.kernel.params.omega_c << ")";
        throw ConfigError(msg.str());
    }

    const std::size_t n = grid.count();
    const double dt = grid.dt;
    const double a = problem.freq;
    const double c = problem.weight;

    // The pure phase e^{-iat} is factored out exactly: with G = e^{iat} F the
    // equation becomes Gdot + c * int mu~(t-s) G(s) ds = 0, mu~(s) = mu(s) e^{ias}.
    // weight = 0 then yields |F| = 1 to machine precision.
    std::vector<cplx> kt(n);
    if (c != 0.0) {
        for (std::size_t k = 0; k < n; ++k) {
            kt[k] = problem.kernel(grid.time(k)) * std::polar(1.0, a * grid.time(k));
        }
    }

    std::vector<cplx> g(n), dg(n);
    g[0] = 1.0;
    dg[0] = 0.0; // empty memory integral

    for (std::size_t k = 1; k < n; ++k) {
        if (c == 0.0) { // memory term absent: G stays exactly 1
            g[k] = 1.0;
            dg[k] = 0.0;
            continue;
        }
        // explicit Euler predictor at the new node
        const cplx gp = g[k - 1] + dt * dg[k - 1];
        cplx hist = 0.0;
        for (std::size_t j = 1; j < k; ++j) {
            hist += kt[k - j] * g[j];
        }
        const cplx conv_pred = dt * (0.5 * kt[k] * g[0] + hist + 0.5 * kt[0] * gp);
        const cplx dpred = -c * conv_pred;
        // single trapezoidal correction
        g[k] = g[k - 1] + 0.5 * dt * (dg[k - 1] + dpred);
        dg[k] = -c * dt * (0.5 * kt[k] * g[0] + hist + 0.5 * kt[0] * g[k]);
        if (!std::isfinite(g[k].real()) || !std::isfinite(g[k].imag())) {
            std::ostringstream msg;
            msg << "solve: non-finite amplitude at step " << k
                << " (t=" << grid.time(k) << ")";
            throw NumericalError(msg.str());
        }
    }

    AmplitudeTrack track{grid, std::vector<cplx>(n)};
    track.values[0] = 1.0;
    for (std::size_t k = 1; k < n; ++k) {
        track.values[k] = std::polar(1.0, -a * grid.time(k)) * g[k];
    }
    return track;
}

cplx convolve_tail(const spectral::MemoryKernel& kernel,
                   std::span<const cplx> values, std::size_t step, double dt) {
    if (step < 1 || values.size() <= step) {
        throw ConfigError("convolve_tail: step out of range");
    }
    const double t = static_cast<double>(step) * dt;
    cplx acc = 0.5 * kernel(t) * values[0] + 0.5 * kernel(0.0) * values[step];
    for (std::size_t j = 1; j < step; ++j) {
        acc += kernel(t - static_cast<double>(j) * dt) * values[j];
    }
    return dt * acc;
}

} // namespace ecsim::volterra
