#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "ecsim/dynamics.hpp"
#include "ecsim/errors.hpp"
#include "ecsim/states.hpp"

using namespace ecsim;
using cplx = std::complex<double>;

namespace {

const dynamics::SystemParams kFigSys{1.0, 0.5, +1};
const spectral::SpectralParams kFigEnv{0.005, 30.0, 1.0};
const volterra::TimeGrid kGrid{10.0, 2e-3};

states::QubitDensityMatrix bell_phi_plus() {
    states::QubitDensityMatrix rho = states::QubitDensityMatrix::Zero();
    rho(0, 0) = rho(0, 3) = rho(3, 0) = rho(3, 3) = 0.5;
    return rho;
}

} // namespace

TEST_CASE("kind round trip and validation") {
    for (auto kind : {states::ECSKind::psi_plus, states::ECSKind::psi_minus,
                      states::ECSKind::phi_plus, states::ECSKind::phi_minus}) {
        CHECK(states::kind_from_string(states::to_string(kind)) == kind);
    }
    CHECK_THROWS_AS(states::kind_from_string("bogus"), ConfigError);
    CHECK_THROWS_AS((states::ECSState{states::ECSKind::psi_minus, 0.0}.validate()),
                    std::domain_error);
    CHECK_NOTHROW((states::ECSState{states::ECSKind::psi_plus, 0.0}.validate()));
}

TEST_CASE("evolved_state_params") {
    const auto m = dynamics::solve_modes(kFigSys, kFigEnv, kGrid);
    SUBCASE("t=0 recovers the initial pure state") {
        for (auto kind : {states::ECSKind::psi_plus, states::ECSKind::phi_minus}) {
            const auto p = states::evolved_state_params({kind, 0.8}, m, 0);
            CHECK(p.a == cplx{0.8, 0.0});
            CHECK(p.w_diag == 1.0);
            CHECK(p.w_off == 1.0);
        }
    }
    SUBCASE("psi kinds ride F+, phi kinds ride F-") {
        const auto p_psi =
            states::evolved_state_params({states::ECSKind::psi_minus, 0.8}, m, 500);
        const auto p_phi =
            states::evolved_state_params({states::ECSKind::phi_minus, 0.8}, m, 500);
        CHECK(p_psi.a == 0.8 * m.f_plus.values[500]);
        CHECK(p_phi.a == 0.8 * m.f_minus.values[500]);
        // lambda=+1: psi amplitude is decoherence free
        CHECK(std::abs(p_psi.a) == doctest::Approx(0.8).epsilon(1e-10));
        CHECK(std::abs(p_phi.a) < 0.8);
    }
    SUBCASE("weights follow the population deficit") {
        const auto p =
            states::evolved_state_params({states::ECSKind::phi_minus, 0.8}, m, 2500);
        const double d = 2.0 * (0.64 - std::norm(p.a));
        CHECK(p.w_diag == doctest::Approx(std::exp(d)).epsilon(1e-12));
        CHECK(p.w_off == doctest::Approx(std::exp(-d)).epsilon(1e-12));
        CHECK(p.sign == -1);
    }
}

TEST_CASE("qubit_embed produces valid density matrices") {
    const auto m = dynamics::solve_modes(kFigSys, kFigEnv, kGrid);
    for (auto kind : {states::ECSKind::psi_plus, states::ECSKind::psi_minus,
                      states::ECSKind::phi_plus, states::ECSKind::phi_minus}) {
        const states::ECSState s{kind, 0.8};
        for (std::size_t k : {0u, 100u, 2500u, 5000u}) {
            const auto params = states::evolved_state_params(s, m, k);
            const auto rho = states::qubit_embed(params, s);
            CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
            CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
            Eigen::SelfAdjointEigenSolver<states::QubitDensityMatrix> es(rho);
            CHECK(es.eigenvalues().minCoeff() > -1e-10);
        }
    }
}

TEST_CASE("degenerate basis limit a -> 0") {
    states::EvolvedParams p{cplx{0.0, 0.0}, std::exp(2.0 * 0.64),
                            std::exp(-2.0 * 0.64), -1};
    const states::ECSState s{states::ECSKind::phi_minus, 0.8};
    const auto rho = states::qubit_embed(p, s);
    CHECK(std::abs(rho(0, 0).real() - 1.0) < 1e-12);
    CHECK(rho.cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(states::concurrence(rho) == 0.0);
}

TEST_CASE("concurrence point values") {
    CHECK(states::concurrence(bell_phi_plus()) == doctest::Approx(1.0).epsilon(1e-12));
    SUBCASE("product state") {
        states::QubitDensityMatrix rho = states::QubitDensityMatrix::Zero();
        rho(1, 1) = 1.0;
        CHECK(states::concurrence(rho) == 0.0);
    }
    SUBCASE("Werner state p=0.8") {
        const states::QubitDensityMatrix rho =
            0.8 * bell_phi_plus() +
            0.2 * 0.25 * states::QubitDensityMatrix::Identity();
        CHECK(states::concurrence(rho) == doctest::Approx(0.7).epsilon(1e-10));
    }
    SUBCASE("invalid matrices are rejected") {
        states::QubitDensityMatrix rho = states::QubitDensityMatrix::Identity();
        CHECK_THROWS_AS(states::concurrence(rho), std::domain_error); // trace 4
        rho = bell_phi_plus();
        rho(0, 3) = 0.9; // breaks positivity and Hermiticity
        CHECK_THROWS_AS(states::concurrence(rho), std::domain_error);
    }
}

TEST_CASE("initial concurrences for random alpha") {
    const volterra::TimeGrid grid{0.1, 2e-3};
    const auto m = dynamics::solve_modes(kFigSys, kFigEnv, grid);
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> u_mod(0.2, 2.0);
    std::uniform_real_distribution<double> u_arg(0.0, 6.28);
    for (int trial = 0; trial < 20; ++trial) {
        const cplx alpha = std::polar(u_mod(rng), u_arg(rng));
        const double t2 = std::tanh(2.0 * std::norm(alpha));
        for (auto kind : {states::ECSKind::psi_minus, states::ECSKind::phi_minus}) {
            const auto p = states::evolved_state_params({kind, alpha}, m, 0);
            CHECK(states::concurrence(states::qubit_embed(p, {kind, alpha})) ==
                  doctest::Approx(1.0).epsilon(1e-8));
        }
        for (auto kind : {states::ECSKind::psi_plus, states::ECSKind::phi_plus}) {
            const auto p = states::evolved_state_params({kind, alpha}, m, 0);
            CHECK(states::concurrence(states::qubit_embed(p, {kind, alpha})) ==
                  doctest::Approx(t2).epsilon(1e-8));
        }
    }
}

TEST_CASE("concurrence depends on a(t) only through its modulus") {
    const auto m = dynamics::solve_modes(kFigSys, kFigEnv, kGrid);
    const states::ECSState s{states::ECSKind::phi_minus, 0.8};
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u_arg(0.0, 6.28);
    for (std::size_t k : {250u, 1000u, 4000u}) {
        auto p = states::evolved_state_params(s, m, k);
        const double base = states::concurrence(states::qubit_embed(p, s));
        for (int trial = 0; trial < 5; ++trial) {
            auto q = p;
            q.a = p.a * std::polar(1.0, u_arg(rng));
            CHECK(states::concurrence(states::qubit_embed(q, s)) ==
                  doctest::Approx(base).epsilon(1e-10));
        }
    }
}

TEST_CASE("decoherence-free tracks are constant") {
    SUBCASE("lambda=+1, psi_minus stays maximally entangled") {
        const auto c = states::concurrence_track({states::ECSKind::psi_minus, 0.8},
                                                 kFigSys, kFigEnv, kGrid);
        for (double v : c) CHECK(std::abs(v - 1.0) < 1e-8);
    }
    SUBCASE("lambda=+1, psi_plus stays at tanh 2|alpha|^2") {
        const double t2 = std::tanh(1.28);
        const auto c = states::concurrence_track({states::ECSKind::psi_plus, 0.8},
                                                 kFigSys, kFigEnv, kGrid);
        for (double v : c) CHECK(std::abs(v - t2) < 1e-8);
    }
    SUBCASE("lambda=-1 mirrors to the phi states") {
        const dynamics::SystemParams sys{1.0, 0.5, -1};
        const auto cm = states::concurrence_track({states::ECSKind::phi_minus, 0.8},
                                                  sys, kFigEnv, kGrid);
        for (double v : cm) CHECK(std::abs(v - 1.0) < 1e-8);
    }
}

TEST_CASE("lambda-exchange symmetry of the protected pair") {
    const auto a = states::concurrence_track({states::ECSKind::psi_minus, 0.8},
                                             {1.0, 0.5, +1}, kFigEnv, kGrid);
    const auto b = states::concurrence_track({states::ECSKind::phi_minus, 0.8},
                                             {1.0, 0.5, -1}, kFigEnv, kGrid);
    const auto c = states::concurrence_track({states::ECSKind::psi_plus, 0.8},
                                             {1.0, 0.5, +1}, kFigEnv, kGrid);
    const auto d = states::concurrence_track({states::ECSKind::phi_plus, 0.8},
                                             {1.0, 0.5, -1}, kFigEnv, kGrid);
    for (std::size_t k = 0; k < a.size(); k += 7) {
        CHECK(std::abs(a[k] - b[k]) < 1e-8);
        CHECK(std::abs(c[k] - d[k]) < 1e-8);
    }
}

TEST_CASE("non-Markovian decay lies below the Markov run after the transient") {
    const states::ECSState s{states::ECSKind::phi_minus, 0.8};
    const auto exact = states::concurrence_track(s, kFigSys, kFigEnv, kGrid);
    const auto markov = states::markov_concurrence_track(s, kFigSys, kFigEnv, kGrid);
    CHECK(exact[0] == doctest::Approx(markov[0]).epsilon(1e-10));
    for (std::size_t k = 0; k < kGrid.count(); ++k) {
        if (kGrid.time(k) < 0.5) continue;
        CHECK(exact[k] <= markov[k] + 1e-6);
    }
    // decay from 1 toward 0
    CHECK(exact[0] == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(exact.back() < 0.3);
}

TEST_CASE("markov track: eta=0 is constant, t=0 matches") {
    const states::ECSState s{states::ECSKind::phi_plus, 0.8};
    const volterra::TimeGrid grid{2.0, 2e-3};
    const auto c = states::markov_concurrence_track(s, kFigSys, {0.0, 30.0, 1.0}, grid);
    for (double v : c) CHECK(v == doctest::Approx(std::tanh(1.28)).epsilon(1e-10));
}

TEST_CASE("damped amplitude is non-increasing after the transient") {
    const auto m = dynamics::solve_modes(kFigSys, kFigEnv, kGrid);
    double prev = 1.0;
    for (std::size_t k = 0; k < kGrid.count(); ++k) {
        if (kGrid.time(k) < 0.2) continue;
        const double mag = std::abs(m.f_minus.values[k]);
        CHECK(mag <= prev + 1e-12);
        prev = mag;
    }
}
