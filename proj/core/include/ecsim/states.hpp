// states.hpp - entangled coherent states, orthogonal-basis embedding, concurrence

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "ecsim/dynamics.hpp"

namespace ecsim::states {

// The four quasi-Bell entangled coherent states. psi kinds evolve with the
// plus-branch amplitude a(t) = alpha*F+(t), phi kinds with alpha*F-(t).
enum class ECSKind { psi_plus, psi_minus, phi_plus, phi_minus };

const char* to_string(ECSKind kind);
ECSKind kind_from_string(const std::string& name); // throws ConfigError

struct ECSState {
    ECSKind kind{ECSKind::phi_minus};
    std::complex<double> alpha{0.8, 0.0};

    bool is_psi() const { return kind == ECSKind::psi_plus || kind == ECSKind::psi_minus; }
    int sign() const {
        return (kind == ECSKind::psi_plus || kind == ECSKind::phi_plus) ? +1 : -1;
    }
    void validate() const; // minus kinds need |alpha| > 0
};

// 4x4 density matrix in the ordered basis {|00>, |01>, |10>, |11>} of the
// orthogonalized single-mode states.
using QubitDensityMatrix = Eigen::Matrix4cd;

// The four parameters that fully determine the evolved state before
// normalization: the mode amplitude a(t), the diagonal and off-diagonal
// component weights e^{+-2(|alpha|^2 - |a|^2)}, and the superposition sign.
struct EvolvedParams {
    std::complex<double> a;
    double w_diag;
    double w_off;
    int sign;
};

EvolvedParams evolved_state_params(const ECSState& s, const dynamics::ModeAmplitudes& m,
                                   std::size_t t_index);

// Embeds the evolved state into the orthogonal two-qubit basis
// |0> = e^{-|a|^2/2}|a>, |1> = (e^{-|a|^2/2}|-a> - p|0>)/sqrt(1-p^2),
// p = e^{-2|a|^2}, and normalizes to unit trace. Near the degenerate basis
// limit p -> 1 (a -> 0) returns the analytic limit |00><00|.
QubitDensityMatrix qubit_embed(const EvolvedParams& params, const ECSState& s);

// Wootters concurrence, clamped to [0, 1]. Eigenvalues of rho (Y(x)Y) rho*
// (Y(x)Y) are taken through the Hermitian form sqrt(rho) (Y(x)Y) rho* (Y(x)Y)
// sqrt(rho). Throws std::domain_error if rho fails density-matrix invariants.
double concurrence(const QubitDensityMatrix& rho);

// C(t) per grid point with exact (non-Markovian) amplitudes.
std::vector<double> concurrence_track(const ECSState& s, const dynamics::SystemParams& sys,
                                      const spectral::SpectralParams& env,
                                      const volterra::TimeGrid& grid);
// Same on precomputed amplitudes.
std::vector<double> concurrence_track(const ECSState& s, const dynamics::ModeAmplitudes& m);

// C(t) with Markov-limit amplitudes F+- = u +- v built from the closed forms.
std::vector<double> markov_concurrence_track(const ECSState& s,
                                             const dynamics::SystemParams& sys,
                                             const spectral::SpectralParams& env,
                                             const volterra::TimeGrid& grid);

} // namespace ecsim::states
