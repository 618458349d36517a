#include "ecsim/states.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <string>

#include "ecsim/errors.hpp"

namespace ecsim::states {

using cplx = std::complex<double>;
using Vec4 = Eigen::Vector4cd;

const char* to_string(ECSKind kind) {
    switch (kind) {
        case ECSKind::psi_plus: return "psi_plus";
        case ECSKind::psi_minus: return "psi_minus";
        case ECSKind::phi_plus: return "phi_plus";
        case ECSKind::phi_minus: return "phi_minus";
    }
    return "?";
}

ECSKind kind_from_string(const std::string& name) {
    if (name == "psi_plus") return ECSKind::psi_plus;
    if (name == "psi_minus") return ECSKind::psi_minus;
    if (name == "phi_plus") return ECSKind::phi_plus;
    if (name == "phi_minus") return ECSKind::phi_minus;
    throw ConfigError("unknown state kind: " + name);
}

void ECSState::validate() const {
    if (sign() < 0 && std::abs(alpha) == 0.0) {
        throw std::domain_error(
            "ECSState: minus-branch normalization degenerates as alpha -> 0");
    }
}

EvolvedParams evolved_state_params(const ECSState& s, const dynamics::ModeAmplitudes& m,
                                   std::size_t t_index) {
    s.validate();
    const auto& track = s.is_psi() ? m.f_plus : m.f_minus;
    if (t_index >= track.values.size()) {
        throw ConfigError("evolved_state_params: track index out of range");
    }
    const cplx a = s.alpha * track.values[t_index];
    const double d = std::norm(s.alpha) - std::norm(a);
    return EvolvedParams{a, std::exp(2.0 * d), std::exp(-2.0 * d), s.sign()};
}

QubitDensityMatrix qubit_embed(const EvolvedParams& params, const ECSState& s) {
    const double asq = std::norm(params.a);
    const double p = std::exp(-2.0 * asq);
    QubitDensityMatrix rho = QubitDensityMatrix::Zero();
    if (1.0 - p < 1e-12) {
        // degenerate basis: every coherent component collapses to the vacuum
        rho(0, 0) = 1.0;
        return rho;
    }
    const double q = std::sqrt(1.0 - p * p);

    // normalized single-mode expansions: |a> = |0>, |-a> = p|0> + q|1>
    Vec4 A, B;
    if (s.is_psi()) {
        A << p, q, 0.0, 0.0; // |a, -a>
        B << p, 0.0, q, 0.0; // |-a, a>
    } else {
        A << 1.0, 0.0, 0.0, 0.0; // |a, a>
        B << p * p, p * q, q * p, q * q; // |-a, -a>
    }
    const double sign = static_cast<double>(params.sign);
    QubitDensityMatrix M =
        params.w_diag * (A * A.adjoint() + B * B.adjoint()) +
        sign * params.w_off * (A * B.adjoint() + B * A.adjoint());
    const double tr = M.trace().real();
    if (!(tr > 0.0) || !std::isfinite(tr)) {
        // catastrophic cancellation near the degenerate basis
        rho(0, 0) = 1.0;
        return rho;
    }
    return M / tr;
}

namespace {

void check_density_matrix(const QubitDensityMatrix& rho,
                          Eigen::SelfAdjointEigenSolver<QubitDensityMatrix>& es) {
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-12) {
        throw std::domain_error("concurrence: matrix is not Hermitian to 1e-12");
    }
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > 1e-12) {
        throw std::domain_error("concurrence: trace differs from 1 by more than 1e-12");
    }
    es.compute(rho);
    if (es.eigenvalues().minCoeff() < -1e-10) {
        throw std::domain_error("concurrence: matrix has eigenvalue below -1e-10");
    }
}

} // namespace

double concurrence(const QubitDensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<QubitDensityMatrix> es;
    check_density_matrix(rho, es);

    QubitDensityMatrix sqrt_rho = QubitDensityMatrix::Zero();
    for (int i = 0; i < 4; ++i) {
        const double ev = std::max(es.eigenvalues()(i), 0.0);
        sqrt_rho += std::sqrt(ev) * es.eigenvectors().col(i) *
                    es.eigenvectors().col(i).adjoint();
    }

    QubitDensityMatrix yy = QubitDensityMatrix::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;

    QubitDensityMatrix herm = sqrt_rho * yy * rho.conjugate() * yy * sqrt_rho;
    herm = 0.5 * (herm + herm.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<QubitDensityMatrix> es2(herm);

    // eigenvalues at roundoff scale relative to the largest are noise; the
    // square root would otherwise amplify 1e-16 jitter to 1e-8 in the result
    const double floor = 1e-13 * std::max(es2.eigenvalues().maxCoeff(), 0.0);
    std::array<double, 4> roots{};
    for (int i = 0; i < 4; ++i) {
        const double ev = es2.eigenvalues()(i);
        roots[static_cast<std::size_t>(i)] = ev > floor ? std::sqrt(ev) : 0.0;
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    const double c = roots[0] - roots[1] - roots[2] - roots[3];
    return std::clamp(c, 0.0, 1.0);
}

std::vector<double> concurrence_track(const ECSState& s, const dynamics::ModeAmplitudes& m) {
    const std::size_t n = m.f_plus.values.size();
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = concurrence(qubit_embed(evolved_state_params(s, m, k), s));
    }
    return out;
}

std::vector<double> concurrence_track(const ECSState& s, const dynamics::SystemParams& sys,
                                      const spectral::SpectralParams& env,
                                      const volterra::TimeGrid& grid) {
    return concurrence_track(s, dynamics::solve_modes(sys, env, grid));
}

std::vector<double> markov_concurrence_track(const ECSState& s,
                                             const dynamics::SystemParams& sys,
                                             const spectral::SpectralParams& env,
                                             const volterra::TimeGrid& grid) {
    s.validate();
    sys.validate();
    grid.validate();
    const auto consts = dynamics::markov_constants(sys, env);
    const std::size_t n = grid.count();
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto [u, v] = dynamics::markov_uv(sys, consts, grid.time(k));
        const cplx f = s.is_psi() ? (u + v) : (u - v);
        const cplx a = s.alpha * f;
        const double d = std::norm(s.alpha) - std::norm(a);
        const EvolvedParams params{a, std::exp(2.0 * d), std::exp(-2.0 * d), s.sign()};
        out[k] = concurrence(qubit_embed(params, s));
    }
    return out;
}

} // namespace ecsim::states
