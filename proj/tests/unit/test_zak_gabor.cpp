#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "hermspace/errors.hpp"
#include "hermspace/hermite.hpp"
#include "hermspace/zak_gabor.hpp"

using namespace hermspace;
using namespace hermspace::zak;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTheta = 1.08643481121330801;  // sum_k e^{-pi k^2}

std::complex<double> direct_zak(std::size_t n, double x, double omega, int K) {
    std::complex<double> sum = 0.0;
    for (int k = -K; k <= K; ++k) {
        sum += hermite::hermite_batch(n, x + k).values[n] * std::polar(1.0, 2.0 * kPi * k * omega);
    }
    return sum;
}

}  // namespace

TEST_CASE("zak_hermite examples") {
    CHECK(std::abs(zak_hermite(0, 0.0, 0.0) - std::pow(2.0, 0.25) * kTheta) <= 1e-14);
    CHECK(std::abs(zak_hermite(0, 0.0, 0.0) - direct_zak(0, 0.0, 0.0, 30)) <= 1e-14);
    CHECK(std::abs(zak_hermite(1, 0.0, 0.0)) <= 1e-15);
    CHECK(std::abs(zak_hermite(0, 0.5, 0.5)) <= 1e-10);
}

TEST_CASE("zak_hermite against direct summation") {
    for (std::size_t n : {0u, 3u, 20u, 150u, 500u}) {
        for (auto [x, w] : {std::pair{0.1, 0.7}, std::pair{0.45, 0.0}, std::pair{0.9, 0.33}}) {
            CHECK(std::abs(zak_hermite(n, x, w) - direct_zak(n, x, w, 40)) <= 1e-11);
        }
    }
}

TEST_CASE("zak_hermite preconditions") {
    CHECK_THROWS_AS(zak_hermite(501, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(zak_hermite(2, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(zak_hermite(2, 0.0, -0.1), DomainError);
    CHECK_THROWS_AS(zak_hermite(2, 0.1, 0.1, 1e-300), NumericalError);
}

TEST_CASE("quasi-periodicity at modulus level") {
    for (std::size_t n : {0u, 2u, 7u, 40u}) {
        for (double x : {0.0, 0.25, 0.6}) {
            for (double w : {0.0, 0.3, 0.85}) {
                const double here = std::abs(direct_zak(n, x, w, 40));
                const double shifted = std::abs(direct_zak(n, x + 1.0, w, 40));
                CHECK(std::abs(here - shifted) <= 1e-9);
                CHECK(std::abs(zak_hermite(n, x, w)) == doctest::Approx(here).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("zak grid unitarity") {
    for (std::size_t n : {0u, 1u, 10u, 100u}) {
        const ZakGrid grid = zak_grid(n, 256);
        double mean = 0.0;
        for (const auto& v : grid.values) mean += std::norm(v);
        mean /= static_cast<double>(grid.values.size());
        CHECK(std::abs(mean - 1.0) <= 1e-3);
    }
}

TEST_CASE("zak_sup") {
    const ZakSup zero = zak_sup(0, 256);
    CHECK(zero.sup == doctest::Approx(std::pow(2.0, 0.25) * kTheta).epsilon(1e-14));
    CHECK(zero.ratio == doctest::Approx(zero.sup).epsilon(1e-15));
    const ZakSup one = zak_sup(1, 256);
    CHECK(std::isfinite(one.ratio));
    CHECK(one.ratio == doctest::Approx(one.sup / std::pow(2.0, 0.25)).epsilon(1e-15));
    CHECK_THROWS_AS(zak_sup(1, 63), DomainError);
    const std::vector<ZakSup> sweep = zak_sup_sweep(12, 64);
    for (std::size_t n = 0; n <= 12; ++n) {
        CHECK(sweep[n].sup == doctest::Approx(zak_sup(n, 64).sup).epsilon(1e-13));
    }
}

TEST_CASE("rel_lattice") {
    CHECK(rel_lattice(Lattice2D::integer(), RelMode::exact_rectangular) == 1);
    CHECK(rel_lattice(Lattice2D::integer(), RelMode::sliding_estimate) == 1);
    CHECK(rel_lattice(Lattice2D::rectangular(0.5, 1.0), RelMode::exact_rectangular) == 2);
    CHECK(rel_lattice(Lattice2D::rectangular(0.5, 1.0), RelMode::sliding_estimate) == 2);
    CHECK(rel_lattice(Lattice2D::rectangular(2.0, 2.0), RelMode::exact_rectangular) == 1);
    for (double a : {1.0 / 3.0, 0.5, 0.7, 1.0, 2.0}) {
        for (double b : {1.0 / 3.0, 0.5, 0.7, 1.0, 2.0}) {
            const Lattice2D lattice = Lattice2D::rectangular(a, b);
            CHECK(rel_lattice(lattice, RelMode::sliding_estimate) ==
                  rel_lattice(lattice, RelMode::exact_rectangular));
        }
    }
    CHECK_THROWS_AS(rel_lattice(Lattice2D::hexagonal(), RelMode::exact_rectangular), DomainError);
    CHECK(rel_lattice(Lattice2D::hexagonal(), RelMode::sliding_estimate) >= 1);
    CHECK_THROWS_AS(Lattice2D(1.0, 2.0, 0.5, 1.0), DomainError);
}

TEST_CASE("lattice enumeration") {
    const Lattice2D hex = Lattice2D::hexagonal();
    CHECK(hex.det() == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
    const std::vector<PhasePoint> pts = hex.points_in_disk(1.01);
    CHECK(pts.size() == 7);
    const std::vector<PhasePoint> sq = Lattice2D::integer().points_in_disk(5.0);
    std::size_t expected = 0;
    for (int i = -5; i <= 5; ++i) {
        for (int j = -5; j <= 5; ++j) expected += i * i + j * j <= 25 ? 1 : 0;
    }
    CHECK(sq.size() == expected);
}

TEST_CASE("bessel_sum") {
    const Lattice2D z2 = Lattice2D::integer();
    // The planar sum is theta^2, the square of the one-dimensional theta value.
    CHECK(bessel_sum(0, z2, {0.0, 0.0}, 8.0) == doctest::Approx(kTheta * kTheta).epsilon(1e-14));
    CHECK_THROWS_AS(bessel_sum(0, z2, {0.0, 0.0}, 5.0), DomainError);
    for (std::size_t n : {0u, 1u, 6u, 30u}) {
        const double R = bessel_min_radius(n, {3.0, -2.0});
        CHECK(bessel_sum(n, z2, {3.0, -2.0}, R) ==
              doctest::Approx(bessel_sum(n, z2, {0.0, 0.0}, R)).epsilon(1e-12));
    }
}

TEST_CASE("Bessel sums over Z^2 scale like (n+1)^{1/2}") {
    const Lattice2D z2 = Lattice2D::integer();
    double worst = 0.0;
    for (std::size_t n = 0; n <= 100; n += 5) {
        const PhasePoint w{0.3, 0.7};
        worst = std::max(worst, bessel_sum(n, z2, w, bessel_min_radius(n, w)) / std::sqrt(n + 1.0));
    }
    CHECK(worst < 2.0);
}

TEST_CASE("synthesis_norm") {
    const std::vector<LatticeCoefficient> single{{{1.0, -2.0}, 1.0}};
    CHECK(synthesis_norm(3, single, synthesis_rule(3, single)).norm == doctest::Approx(1.0).epsilon(1e-8));
    const std::vector<LatticeCoefficient> far{{{-10.0, 0.0}, 1.0}, {{10.0, 1.0}, 1.0}};
    CHECK(synthesis_norm(0, far, synthesis_rule(0, far)).norm == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
    const std::vector<LatticeCoefficient> stacked{{{0.0, 0.0}, 1.0}, {{0.0, 3.0}, std::complex<double>(0.0, 2.0)}};
    const SynthesisResult r = synthesis_norm(5, stacked, synthesis_rule(5, stacked));
    CHECK(r.ratio_sq == doctest::Approx(1.0).epsilon(1e-3));
    const numerics::LineRule narrow = numerics::composite_gauss_legendre(-1.0, 1.0, 4);
    CHECK_THROWS_AS(synthesis_norm(0, single, narrow), DomainError);
    CHECK_THROWS_AS(synthesis_norm(0, {}, narrow), DomainError);
}

TEST_CASE("synthesis ratio stays below the Bessel constant") {
    std::mt19937_64 gen(5);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::size_t n : {0u, 4u, 20u}) {
        std::vector<LatticeCoefficient> coeffs;
        for (const PhasePoint& lambda : Lattice2D::integer().points_in_disk(4.0)) {
            coeffs.push_back({lambda, {normal(gen), normal(gen)}});
        }
        const SynthesisResult r = synthesis_norm(n, coeffs, synthesis_rule(n, coeffs));
        const double sup = zak_sup(n, 128).sup;
        CHECK(r.ratio_sq <= sup * sup * (1.0 + 1e-3));
    }
}

TEST_CASE("frame_identity_check") {
    const std::vector<PhasePoint> probes{{0.0, 0.0}, {0.5, 0.5}, {0.3, 0.7}};
    for (std::size_t n : {0u, 1u, 5u}) {
        const double R = bessel_min_radius(n, {0.5, 0.5}) + 1.0;
        const BoundReport report = frame_identity_check(n, probes, R);
        CHECK(report.pass);
    }
    const std::vector<PhasePoint> origin{{0.0, 0.0}};
    const BoundReport zero = frame_identity_check(0, origin, 8.0);
    CHECK(zero.measured == doctest::Approx(kTheta * kTheta).epsilon(1e-14));
    CHECK(zero.upper == doctest::Approx(std::sqrt(2.0) * kTheta * kTheta).epsilon(1e-13));
    CHECK_THROWS_AS(frame_identity_check(0, {}, 8.0), DomainError);
}
