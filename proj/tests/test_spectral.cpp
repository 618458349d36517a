#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "ecsim/errors.hpp"
#include "ecsim/quadrature.hpp"
#include "ecsim/spectral.hpp"

using namespace ecsim;
using cplx = std::complex<double>;

namespace {

// Quadrature oracle for mu(t) = int_0^inf J(w) e^{-iwt} dw. For small w_c*t
// the real-axis integral is cheap; once the phase winds many times the
// contour is rotated onto the negative imaginary axis (w = -is), where the
// exponential becomes a plain decay e^{-st} and the integrand is smooth.
// Both paths substitute the integration variable by x^2 so the sub-Ohmic
// integrand (~ w^n near 0) keeps bounded derivatives at the left endpoint.
cplx mu_quadrature(const spectral::SpectralParams& p, double t, double tol) {
    const cplx i(0.0, 1.0);
    if (p.eta == 0.0) return 0.0;
    if (t * p.omega_c < 5.0) {
        auto f = [&](double x) {
            const double w = x * x;
            return 2.0 * x * spectral::j_omega(p, w) * std::exp(-i * w * t);
        };
        const double x_end = std::sqrt(p.omega_c * (45.0 + 6.0 * p.n));
        return quadrature::adaptive_simpson(f, 0.0, x_end, tol, 70);
    }
    auto jc = [&](cplx z) {
        return p.eta * z * std::pow(z / p.omega_c, p.n - 1.0) * std::exp(-z / p.omega_c);
    };
    auto f = [&](double x) {
        if (x == 0.0) return cplx(0.0);
        const double s = x * x;
        return -i * 2.0 * x * jc(-i * s) * std::exp(-s * t);
    };
    const double x_end = std::sqrt((50.0 + 10.0 * p.n) / t);
    return quadrature::adaptive_simpson(f, 0.0, x_end, tol, 70);
}

} // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((spectral::SpectralParams{-0.1, 30.0, 1.0}.validate()),
                    std::domain_error);
    CHECK_THROWS_AS((spectral::SpectralParams{0.005, 0.0, 1.0}.validate()),
                    std::domain_error);
    CHECK_THROWS_AS((spectral::SpectralParams{0.005, 30.0, 0.0}.validate()),
                    std::domain_error);
    CHECK_NOTHROW((spectral::SpectralParams{0.0, 30.0, 0.5}.validate()));
}

TEST_CASE("j_omega point values") {
    const spectral::SpectralParams p{0.005, 30.0, 1.0};
    CHECK(spectral::j_omega(p, 1.0) ==
          doctest::Approx(0.005 * std::exp(-1.0 / 30.0)).epsilon(1e-12));
    CHECK(spectral::j_omega(p, 0.0) == 0.0);
    CHECK(spectral::j_omega({0.0, 30.0, 1.0}, 2.0) == 0.0);
    CHECK_THROWS_AS(spectral::j_omega(p, -1.0), std::domain_error);
}

TEST_CASE("j_omega peaks at n*omega_c") {
    for (double n : {0.5, 1.0, 3.0}) {
        const spectral::SpectralParams p{0.01, 7.0, n};
        const double w_star = n * p.omega_c;
        double best_w = 0.0, best_j = -1.0;
        for (int k = 1; k <= 4000; ++k) {
            const double w = 0.05 * k;
            const double j = spectral::j_omega(p, w);
            if (j > best_j) {
                best_j = j;
                best_w = w;
            }
        }
        CHECK(best_w == doctest::Approx(w_star).epsilon(0.02));
    }
}

TEST_CASE("kernel point values") {
    const spectral::SpectralParams p{0.005, 30.0, 1.0};
    const cplx mu0 = spectral::kernel_mu(p, 0.0);
    CHECK(mu0.real() == doctest::Approx(4.5).epsilon(1e-12));
    CHECK(mu0.imag() == doctest::Approx(0.0));
    // t = 1/omega_c: 4.5 / (1+i)^2 = -2.25i
    const cplx mu1 = spectral::kernel_mu(p, 1.0 / 30.0);
    CHECK(mu1.real() == doctest::Approx(0.0));
    CHECK(mu1.imag() == doctest::Approx(-2.25).epsilon(1e-12));
    CHECK(spectral::kernel_mu({0.0, 30.0, 1.0}, 0.7) == cplx{0.0, 0.0});
    CHECK_THROWS_AS(spectral::kernel_mu(p, -0.5), std::domain_error);
}

TEST_CASE("kernel Hermitian symmetry and mu(0) real non-negative") {
    for (double n : {0.5, 1.0, 3.0}) {
        const spectral::SpectralParams p{0.02, 5.0, n};
        const auto kernel = spectral::MemoryKernel::closed_form(p);
        CHECK(kernel(0.0).imag() == 0.0);
        CHECK(kernel(0.0).real() >= 0.0);
        for (double t : {0.1, 0.9, 3.3}) {
            CHECK(kernel(-t) == std::conj(kernel(t)));
        }
    }
}

TEST_CASE("mu(0) equals the integral of J") {
    for (double n : {0.5, 1.0, 3.0}) {
        const spectral::SpectralParams p{0.01, 12.0, n};
        auto f = [&](double x) { return 2.0 * x * spectral::j_omega(p, x * x); };
        const double x_end = std::sqrt(p.omega_c * (45.0 + 6.0 * n));
        const double quad = quadrature::adaptive_simpson(f, 0.0, x_end, 1e-13, 70);
        const double closed = spectral::kernel_mu(p, 0.0).real();
        CHECK(std::abs(closed - quad) <= 1e-8 * std::abs(closed));
    }
}

TEST_CASE("closed-form kernel matches quadrature on random parameters") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> u_eta(1e-4, 0.05);
    std::uniform_real_distribution<double> u_wc(1.0, 100.0);
    std::uniform_real_distribution<double> u_t(0.0, 10.0);
    const double ns[] = {0.5, 1.0, 3.0};
    for (int trial = 0; trial < 100; ++trial) {
        const spectral::SpectralParams p{u_eta(rng), u_wc(rng), ns[trial % 3]};
        const double t = u_t(rng);
        const cplx closed = spectral::kernel_mu(p, t);
        const double tol = 0.05 * (1e-8 * std::abs(closed) + 1e-12);
        const cplx quad = mu_quadrature(p, t, tol);
        CAPTURE(p.eta);
        CAPTURE(p.omega_c);
        CAPTURE(p.n);
        CAPTURE(t);
        CHECK(std::abs(closed - quad) <= 1e-8 * std::abs(closed) + 1e-12);
    }
}

TEST_CASE("markov_decay") {
    const spectral::SpectralParams p{0.005, 30.0, 1.0};
    CHECK(spectral::markov_decay(p, 1.0) ==
          doctest::Approx(1.5192994978540186e-2).epsilon(1e-12));
    CHECK(spectral::markov_decay({0.0, 30.0, 1.0}, 1.0) == 0.0);
    // cutoff-free Ohmic limit: pi * eta * omega0
    const spectral::SpectralParams wide{0.005, 1e6, 1.0};
    CHECK(spectral::markov_decay(wide, 1.0) ==
          doctest::Approx(std::numbers::pi * 0.005).epsilon(1e-5));
}

TEST_CASE("markov_shift") {
    const spectral::SpectralParams p{0.005, 30.0, 1.0};
    const double shift = spectral::markov_shift(p, 1.0);
    // frozen high-precision quadrature value
    CHECK(shift == doctest::Approx(0.163494446867171).epsilon(1e-6));
    CHECK(shift > 0.0);
    CHECK(spectral::markov_shift({0.0, 30.0, 1.0}, 1.0) == 0.0);
}

TEST_CASE("markov constants are linear in eta") {
    const spectral::SpectralParams p1{0.004, 20.0, 1.0};
    spectral::SpectralParams p2 = p1;
    p2.eta = 2.0 * p1.eta;
    CHECK(spectral::markov_decay(p2, 1.0) ==
          doctest::Approx(2.0 * spectral::markov_decay(p1, 1.0)).epsilon(1e-12));
    CHECK(spectral::markov_shift(p2, 1.0) ==
          doctest::Approx(2.0 * spectral::markov_shift(p1, 1.0)).epsilon(1e-10));
}
