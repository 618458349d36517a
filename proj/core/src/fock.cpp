#include "ecsim/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "ecsim/errors.hpp"

namespace ecsim::fock {

using cplx = std::complex<double>;
using Sparse = Eigen::SparseMatrix<cplx>;
using Triplet = Eigen::Triplet<cplx>;

FockSpace FockSpace::make(int cutoff) {
    if (cutoff < 1) throw ConfigError("FockSpace: cutoff must be >= 1");
    const int m = cutoff + 1;
    const int dim = m * m;
    auto index = [m](int n1, int n2) { return n1 * m + n2; };

    std::vector<Triplet> t1, t2, tn, th;
    for (int n1 = 0; n1 < m; ++n1) {
        for (int n2 = 0; n2 < m; ++n2) {
            const int row = index(n1, n2);
            if (n1 > 0) t1.emplace_back(index(n1 - 1, n2), row, std::sqrt(double(n1)));
            if (n2 > 0) t2.emplace_back(index(n1, n2 - 1), row, std::sqrt(double(n2)));
            if (n1 + n2 > 0) tn.emplace_back(row, row, double(n1 + n2));
            // a1^+ a2 : (n1, n2) -> (n1+1, n2-1)
            if (n2 > 0 && n1 + 1 < m) {
                th.emplace_back(index(n1 + 1, n2 - 1), row,
                                std::sqrt(double(n1 + 1) * double(n2)));
            }
            // a2^+ a1 : (n1, n2) -> (n1-1, n2+1)
            if (n1 > 0 && n2 + 1 < m) {
                th.emplace_back(index(n1 - 1, n2 + 1), row,
                                std::sqrt(double(n1) * double(n2 + 1)));
            }
        }
    }

    FockSpace space;
    space.cutoff = cutoff;
    space.a1.resize(dim, dim);
    space.a2.resize(dim, dim);
    space.num_sum.resize(dim, dim);
    space.hop_sum.resize(dim, dim);
    space.a1.setFromTriplets(t1.begin(), t1.end());
    space.a2.setFromTriplets(t2.begin(), t2.end());
    space.a1_dag = Sparse(space.a1.adjoint());
    space.a2_dag = Sparse(space.a2.adjoint());
    space.num_sum.setFromTriplets(tn.begin(), tn.end());
    space.hop_sum.setFromTriplets(th.begin(), th.end());
    return space;
}

Eigen::VectorXcd coherent_vector(cplx amp, int cutoff) {
    Eigen::VectorXcd v(cutoff + 1);
    cplx term = std::exp(-0.5 * std::norm(amp));
    v(0) = term;
    for (int k = 1; k <= cutoff; ++k) {
        term *= amp / std::sqrt(double(k));
        v(k) = term;
    }
    return v;
}

namespace {

Eigen::VectorXcd kron(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
    Eigen::VectorXcd out(x.size() * y.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        out.segment(i * y.size(), y.size()) = x(i) * y;
    }
    return out;
}

void check_tail(cplx amp, int cutoff) {
    const Eigen::VectorXcd v = coherent_vector(amp, cutoff);
    const double deficit = 1.0 - v.squaredNorm();
    if (deficit > 1e-8) {
        std::ostringstream msg;
        msg << "Fock cutoff " << cutoff << " leaves tail norm deficit " << deficit
            << " for |amp|=" << std::abs(amp) << "; increase the cutoff";
        throw ConfigError(msg.str());
    }
}

// The four coherent components of the evolved mixture with amplitude a:
// psi kinds use (a,-a) and (-a,a), phi kinds (a,a) and (-a,-a).
DensityOperator component_mixture(const states::ECSState& s, cplx a, double w_diag,
                                  double w_off, const FockSpace& space) {
    check_tail(a, space.cutoff);
    const Eigen::VectorXcd cp = coherent_vector(a, space.cutoff);
    const Eigen::VectorXcd cm = coherent_vector(-a, space.cutoff);
    // renormalize each single-mode vector so the truncated products stay unit
    const Eigen::VectorXcd cpn = cp / cp.norm();
    const Eigen::VectorXcd cmn = cm / cm.norm();
    Eigen::VectorXcd A, B;
    if (s.is_psi()) {
        A = kron(cpn, cmn);
        B = kron(cmn, cpn);
    } else {
        A = kron(cpn, cpn);
        B = kron(cmn, cmn);
    }
    const double sign = static_cast<double>(s.sign());
    DensityOperator M = w_diag * (A * A.adjoint() + B * B.adjoint()) +
                        sign * w_off * (A * B.adjoint() + B * A.adjoint());
    const double tr = M.trace().real();
    if (!(tr > 1e-12)) {
        throw NumericalError("Fock mixture has non-positive trace (degenerate state)");
    }
    return M / tr;
}

} // namespace

DensityOperator embed_ecs(const states::ECSState& s, const FockSpace& space) {
    s.validate();
    check_tail(s.alpha, space.cutoff);
    const Eigen::VectorXcd cp = coherent_vector(s.alpha, space.cutoff);
    const Eigen::VectorXcd cm = coherent_vector(-s.alpha, space.cutoff);
    Eigen::VectorXcd state;
    if (s.is_psi()) {
        state = kron(cp, cm) + double(s.sign()) * kron(cm, cp);
    } else {
        state = kron(cp, cp) + double(s.sign()) * kron(cm, cm);
    }
    const double nrm = state.norm();
    if (nrm < 1e-12) {
        throw NumericalError("embed_ecs: state normalization degenerates");
    }
    state /= nrm;
    return state * state.adjoint();
}

DensityOperator closed_form_in_fock(const states::ECSState& s,
                                    const dynamics::ModeAmplitudes& m,
                                    std::size_t t_index, const FockSpace& space) {
    const auto params = states::evolved_state_params(s, m, t_index);
    return component_mixture(s, params.a, params.w_diag, params.w_off, space);
}

namespace {

struct Coeffs {
    double gamma, gamma_cross, omega, omega_cross;
};

Coeffs lerp_coeffs(const dynamics::CoefficientTrack& c, double t) {
    const double pos = t / c.grid.dt;
    const auto k = std::min(static_cast<std::size_t>(std::max(0.0, pos)),
                            c.gamma.size() - 1);
    const auto k1 = std::min(k + 1, c.gamma.size() - 1);
    const double theta = std::clamp(pos - static_cast<double>(k), 0.0, 1.0);
    auto mix = [&](const std::vector<double>& v) {
        return (1.0 - theta) * v[k] + theta * v[k1];
    };
    return Coeffs{mix(c.gamma), mix(c.gamma_cross), mix(c.omega_shifted),
                  mix(c.omega_cross)};
}

// Uses only sparse*dense products (Eigen's fast path). For Hermitian rho and
// Hermitian N: rho N = (N rho)^H, and a_i rho a_j^+ = (a_j (a_i rho)^H)^H.
// Every RK4 stage input stays Hermitian, so the identities hold throughout.
DensityOperator rhs(const DensityOperator& rho, const Coeffs& c, const FockSpace& sp) {
    const cplx i(0.0, 1.0);
    const DensityOperator num_rho = sp.num_sum * rho;
    const DensityOperator hop_rho = sp.hop_sum * rho;
    const DensityOperator a1_rho_dag = (sp.a1 * rho).adjoint(); // rho a1^+
    const DensityOperator a2_rho_dag = (sp.a2 * rho).adjoint(); // rho a2^+
    const DensityOperator cross = sp.a2 * a1_rho_dag;           // a2 rho a1^+

    DensityOperator out =
        -i * (c.omega * (num_rho - num_rho.adjoint()) +
              c.omega_cross * (hop_rho - hop_rho.adjoint()));
    out += c.gamma * (2.0 * (sp.a1 * a1_rho_dag + sp.a2 * a2_rho_dag) -
                      num_rho - num_rho.adjoint());
    out += c.gamma_cross *
           (2.0 * (cross + cross.adjoint()) - hop_rho - hop_rho.adjoint());
    return out;
}

} // namespace

DensityOperator integrate_master(
    const DensityOperator& rho0, const dynamics::CoefficientTrack& coeffs,
    const FockSpace& space, const volterra::TimeGrid& grid,
    const std::function<void(std::size_t, const DensityOperator&)>& observer) {
    if (rho0.rows() != space.dim() || rho0.cols() != space.dim()) {
        throw std::invalid_argument("integrate_master: state/space dimension mismatch");
    }
    if (grid.t_max > coeffs.grid.t_max + 0.5 * coeffs.grid.dt) {
        throw ConfigError("integrate_master: grid horizon exceeds coefficient track");
    }
    const double dt = grid.dt;
    double omega_max = 0.0;
    for (double w : coeffs.omega_shifted) omega_max = std::max(omega_max, std::abs(w));
    for (double w : coeffs.omega_cross) omega_max = std::max(omega_max, std::abs(w));
    if (dt * omega_max > 0.1) {
        throw ConfigError("integrate_master: dt too coarse for stable RK4 stepping");
    }

    DensityOperator rho = rho0;
    if (observer) observer(0, rho);
    const std::size_t steps = grid.count() - 1;
    for (std::size_t k = 0; k < steps; ++k) {
        const double t = grid.time(k);
        const Coeffs c0 = lerp_coeffs(coeffs, t);
        const Coeffs ch = lerp_coeffs(coeffs, t + 0.5 * dt);
        const Coeffs c1 = lerp_coeffs(coeffs, t + dt);

        const DensityOperator k1 = rhs(rho, c0, space);
        const DensityOperator k2 = rhs(rho + 0.5 * dt * k1, ch, space);
        const DensityOperator k3 = rhs(rho + 0.5 * dt * k2, ch, space);
        const DensityOperator k4 = rhs(rho + dt * k3, c1, space);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        const double tr = rho.trace().real();
        if (std::abs(tr - 1.0) > 1e-6) {
            std::ostringstream msg;
            msg << "integrate_master: trace drifted to " << tr << " at step " << k + 1;
            throw NumericalError(msg.str());
        }
        if ((k + 1) % 200 == 0 || k + 1 == steps) {
            const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
            if (herm > 1e-10) {
                std::ostringstream msg;
                msg << "integrate_master: Hermiticity violated (" << herm
                    << ") at step " << k + 1;
                throw NumericalError(msg.str());
            }
        }
        if (observer) observer(k + 1, rho);
    }
    return rho;
}

double trace_distance(const DensityOperator& r1, const DensityOperator& r2) {
    if (r1.rows() != r2.rows() || r1.cols() != r2.cols()) {
        throw std::invalid_argument("trace_distance: dimension mismatch");
    }
    DensityOperator d = r1 - r2;
    d = 0.5 * (d + d.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<DensityOperator> es(d, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

} // namespace ecsim::fock
