#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "hermspace/errors.hpp"
#include "hermspace/hermite.hpp"
#include "hermspace/phase_space.hpp"

using namespace hermspace;
using namespace hermspace::phase;

namespace {

constexpr double kPi = std::numbers::pi;

numerics::LineRule wide_rule(double half_width, std::size_t panels) {
    return numerics::composite_gauss_legendre(-half_width, half_width, panels, 16);
}

HermiteCoeffs random_coeffs(std::mt19937_64& gen, std::size_t n_max) {
    std::normal_distribution<double> normal(0.0, 1.0);
    HermiteCoeffs f;
    f.c.resize(n_max + 1);
    for (auto& v : f.c) v = {normal(gen), normal(gen)};
    return f;
}

}  // namespace

TEST_CASE("stft_hermite_gauss examples") {
    CHECK(stft_hermite_gauss({0.0, 0.0}, 0) == std::complex<double>(1.0, 0.0));
    for (std::size_t n : {1u, 2u, 17u}) CHECK(stft_hermite_gauss({0.0, 0.0}, n) == 0.0);
    const double x = 1.0 / std::sqrt(kPi);
    CHECK(std::abs(stft_hermite_gauss({x, 0.0}, 1)) == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
}

TEST_CASE("stft_hermite_gauss phase convention") {
    const PhasePoint z{0.4, -1.1};
    const std::complex<double> zc = z.as_complex();
    for (std::size_t n : {0u, 1u, 5u}) {
        const std::complex<double> expected =
            std::exp(std::complex<double>(-0.5 * kPi * z.norm_sq(), kPi * z.x * z.omega)) *
            std::sqrt(std::pow(kPi, n) / std::tgamma(n + 1.0)) * std::pow(zc, static_cast<int>(n));
        CHECK(std::abs(stft_hermite_gauss(z, n) - expected) <= 1e-14);
    }
}

TEST_CASE("stft_quadrature examples") {
    const numerics::LineRule rule = wide_rule(12.0, 120);
    CHECK(std::abs(stft_quadrature(HermiteCoeffs::basis(0), {0.0, 0.0}, rule) - 1.0) <= 1e-10);
    CHECK(std::abs(stft_quadrature(HermiteCoeffs::basis(1), {0.0, 0.0}, rule)) <= 1e-10);
    const numerics::LineRule narrow = wide_rule(2.0, 20);
    CHECK_THROWS_AS(stft_quadrature(HermiteCoeffs::basis(3), {0.0, 0.0}, narrow), DomainError);
}

TEST_CASE("Laguerre connection agreement") {
    const numerics::LineRule rule = wide_rule(13.0, 200);
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const PhasePoint z{-3.0 + 1.5 * i, -3.0 + 1.5 * j};
            for (std::size_t n = 0; n <= 30; ++n) {
                const std::complex<double> quad = stft_quadrature(HermiteCoeffs::basis(n), z, rule);
                worst = std::max(worst, std::abs(quad - std::conj(stft_hermite_gauss(z, n))));
            }
        }
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("radial weights") {
    for (double t : {0.0, 0.2, 1.0, 3.0, 7.5}) {
        const RadialWeights rw = radial_weights(t, 300);
        for (std::size_t n = 0; n <= 300; ++n) {
            CHECK(rw.w[n] >= 0.0);
            CHECK(rw.w[n] <= 1.0);
            CHECK(rw.w[n] == doctest::Approx(std::abs(stft_hermite_gauss({t, 0.0}, n))).epsilon(1e-12));
        }
    }
    for (std::size_t n : {1u, 10u, 100u}) {
        double best_t = 0.0;
        double best = -1.0;
        for (double t = 0.0; t <= 8.0; t += 1e-3) {
            const double v = radial_weights(t, n).w[n];
            if (v > best) {
                best = v;
                best_t = t;
            }
        }
        CHECK(std::abs(best_t - std::sqrt(n / kPi)) <= 1e-3);
    }
}

TEST_CASE("mp_norm examples") {
    const QuadratureSpec spec;
    CHECK(mp_norm(HermiteCoeffs::basis(0), 1.0, spec) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(mp_norm(HermiteCoeffs::basis(0), 2.0, spec) == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t n = 0; n <= 60; n += 3) {
        CHECK(mp_norm(HermiteCoeffs::basis(n), 1.0, spec) ==
              doctest::Approx(m1_hermite_closed_form(n)).epsilon(1e-6));
    }
    HermiteCoeffs zero;
    zero.c.assign(4, 0.0);
    CHECK(mp_norm(zero, 1.0, spec) == 0.0);
    CHECK_THROWS_AS(mp_norm(HermiteCoeffs::basis(0), 0.5, spec), DomainError);
    CHECK_THROWS_AS(mp_norm(HermiteCoeffs::basis(0), INFINITY, spec), DomainError);
}

TEST_CASE("Parseval") {
    const QuadratureSpec spec;
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 10; ++trial) {
        const HermiteCoeffs f = random_coeffs(gen, 5 + 3 * trial);
        CHECK(std::abs(mp_norm(f, 2.0, spec) - f.l2_norm()) <= 1e-8 * f.l2_norm());
    }
}

TEST_CASE("polar reduction agrees with a Cartesian phase-space quadrature") {
    const QuadratureSpec spec;
    std::mt19937_64 gen(11);
    const HermiteCoeffs f = random_coeffs(gen, 6);
    const numerics::LineRule rule = wide_rule(14.0, 160);
    constexpr double L = 6.0;
    constexpr double h = 0.05;  // |V_f| has kinks when p = 1, so the Riemann sum is only O(h^2)
    const int steps = static_cast<int>(std::round(2.0 * L / h));
    std::vector<double> modulus;
    modulus.reserve(static_cast<std::size_t>(steps * steps));
    for (int i = 0; i < steps; ++i) {
        for (int j = 0; j < steps; ++j) {
            const PhasePoint z{-L + h * i, -L + h * j};
            modulus.push_back(std::abs(stft_quadrature(f, z, rule)));
        }
    }
    for (double p : {1.0, 2.0, 3.0}) {
        double sum = 0.0;
        for (double m : modulus) sum += std::pow(m, p);
        const double cartesian = std::pow(sum * h * h, 1.0 / p);
        INFO("p = " << p);
        CHECK(mp_norm(f, p, spec) == doctest::Approx(cartesian).epsilon(1e-5));
    }
}

TEST_CASE("M1 norm is invariant under time-frequency shifts") {
    const QuadratureSpec spec;
    for (PhasePoint z : {PhasePoint{1.0, 0.0}, PhasePoint{0.0, 1.0}, PhasePoint{2.0, 3.0}}) {
        CHECK(mp_norm(shifted_gaussian_coeffs(z), 1.0, spec) == doctest::Approx(2.0).epsilon(1e-6));
    }
}

TEST_CASE("shifted_gaussian_coeffs is a unit vector") {
    for (PhasePoint z : {PhasePoint{0.0, 0.0}, PhasePoint{1.5, -0.5}, PhasePoint{12.0, 0.0}}) {
        CHECK(shifted_gaussian_coeffs(z).l2_norm() == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("m1_hermite_closed_form") {
    CHECK(m1_hermite_closed_form(0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(m1_hermite_closed_form(1) == doctest::Approx(2.50662827463100050).epsilon(1e-14));
    for (std::size_t n = 8; n <= 500; ++n) {
        const double ratio = m1_hermite_closed_form(n) / std::pow(8.0 * kPi * n, 0.25);
        CHECK(std::abs(ratio - 1.0) <= 2.0 / n);
    }
    const double far = m1_hermite_closed_form(100000) / std::pow(8.0 * kPi * 1e5, 0.25);
    CHECK(far == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("bargmann_coeff") {
    CHECK(bargmann_coeff(0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(bargmann_coeff(1) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-15));
    CHECK(bargmann_coeff(2) == doctest::Approx(kPi / std::sqrt(2.0)).epsilon(1e-15));
    const PhasePoint z{0.7, 0.2};
    for (std::size_t n = 0; n <= 40; ++n) {
        const double magnitude = std::abs(stft_hermite_gauss(z, n)) * std::exp(0.5 * kPi * z.norm_sq()) /
                                 std::pow(std::sqrt(z.norm_sq()), static_cast<double>(n));
        CHECK(magnitude == doctest::Approx(bargmann_coeff(n)).epsilon(1e-12));
    }
}

TEST_CASE("tensor_mp_norm") {
    const QuadratureSpec spec;
    const std::vector<HermiteCoeffs> two{HermiteCoeffs::basis(0), HermiteCoeffs::basis(0)};
    CHECK(tensor_mp_norm(two, 1.0, spec) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(tensor_mp_norm(two, 2.0, spec) == doctest::Approx(1.0).epsilon(1e-12));
    const std::vector<HermiteCoeffs> one{HermiteCoeffs::basis(3)};
    CHECK(tensor_mp_norm(one, 1.5, spec) == mp_norm(HermiteCoeffs::basis(3), 1.5, spec));
    CHECK_THROWS_AS(tensor_mp_norm({}, 1.0, spec), DomainError);
    const std::vector<HermiteCoeffs> five(5, HermiteCoeffs::basis(0));
    CHECK_THROWS_AS(tensor_mp_norm(five, 1.0, spec), DomainError);
}
