// fock.hpp - truncated two-mode Fock space and master-equation integration,
// used as an independent check against the closed-form state evolution

#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <cstddef>
#include <functional>

#include "ecsim/dynamics.hpp"
#include "ecsim/states.hpp"

namespace ecsim::fock {

using DensityOperator = Eigen::MatrixXcd;

// Dense two-mode Fock basis truncated at cutoff photons per mode; the mode
// operators are kept sparse so the master-equation right-hand side stays
// O(dim^2) per evaluation.
struct FockSpace {
    int cutoff;
    Eigen::SparseMatrix<std::complex<double>> a1, a2;           // annihilation
    Eigen::SparseMatrix<std::complex<double>> a1_dag, a2_dag;   // creation
    Eigen::SparseMatrix<std::complex<double>> num_sum;          // n1 + n2
    Eigen::SparseMatrix<std::complex<double>> hop_sum;          // a1^+ a2 + a2^+ a1

    static FockSpace make(int cutoff);
    int dim() const { return (cutoff + 1) * (cutoff + 1); }
};

// Truncated coherent-state vector with amplitudes e^{-|a|^2/2} a^n / sqrt(n!).
Eigen::VectorXcd coherent_vector(std::complex<double> amp, int cutoff);

// Pure entangled-coherent-state density operator. Throws ConfigError when the
// truncated-tail norm deficit exceeds 1e-8 (suggesting a larger cutoff) or the
// minus-branch normalization degenerates.
DensityOperator embed_ecs(const states::ECSState& s, const FockSpace& space);

// The four-component closed-form mixture at grid index t_index, projected onto
// the truncated basis and renormalized.
DensityOperator closed_form_in_fock(const states::ECSState& s,
                                    const dynamics::ModeAmplitudes& m,
                                    std::size_t t_index, const FockSpace& space);

// Classical fourth-order fixed-step integration of the operator master
// equation over `grid`, with time-dependent coefficients interpolated
// linearly between the (typically finer) track samples. The grid horizon must
// not exceed the track horizon and dt*max|Omega| <= 0.1 for stability. The
// observer, when set, sees rho after every step (and the initial state at
// index 0). Enforces trace preservation to 1e-6 and periodic Hermiticity
// checks; returns the final state.
DensityOperator integrate_master(
    const DensityOperator& rho0, const dynamics::CoefficientTrack& coeffs,
    const FockSpace& space, const volterra::TimeGrid& grid,
    const std::function<void(std::size_t, const DensityOperator&)>& observer = {});

// Half the trace norm of r1 - r2.
double trace_distance(const DensityOperator& r1, const DensityOperator& r2);

} // namespace ecsim::fock
