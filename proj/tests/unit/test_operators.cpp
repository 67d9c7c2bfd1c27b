#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "hermspace/errors.hpp"
#include "hermspace/operators.hpp"

using namespace hermspace;
using namespace hermspace::ops;

namespace {

constexpr double kPi = std::numbers::pi;

HermiteCoeffs inverse_square(std::size_t n_max) {
    std::vector<double> c(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) c[n] = 1.0 / ((1.0 + n) * (1.0 + n));
    return HermiteCoeffs::from_real(c);
}

}  // namespace

TEST_CASE("multiplier symbols") {
    const MultiplierSymbol s = MultiplierSymbol::partial_sum(3);
    for (long long n = -5; n <= 5; ++n) CHECK(s(n) == (std::llabs(n) <= 3 ? 1.0 : 0.0));
    const MultiplierSymbol b = MultiplierSymbol::bochner_riesz(4, 1.5);
    CHECK(b(0) == 1.0);
    CHECK(b(4) == 0.0);
    CHECK(b(-2) == doctest::Approx(std::pow(0.75, 1.5)).epsilon(1e-15));
    CHECK(b(9) == 0.0);
    const MultiplierSymbol c = MultiplierSymbol::custom({0.5, 0.25});
    CHECK(c(-1) == 0.25);
    CHECK(c(2) == 0.0);
    CHECK_THROWS_AS(MultiplierSymbol::bochner_riesz(0, 1.0), DomainError);
    CHECK_THROWS_AS(MultiplierSymbol::bochner_riesz(3, 0.0), DomainError);
}

TEST_CASE("apply_multiplier") {
    HermiteCoeffs f;
    f.c = {1.0, 1.0};
    const HermiteCoeffs s0 = partial_sum(f, 0);
    CHECK(s0.c[0] == 1.0);
    CHECK(s0.c[1] == 0.0);
    const HermiteCoeffs g = inverse_square(6);
    const HermiteCoeffs same = partial_sum(g, 6);
    CHECK(same.c == g.c);
    const HermiteCoeffs br = apply_multiplier(MultiplierSymbol::bochner_riesz(6, 2.0), g);
    CHECK(br.c[6] == 0.0);
    CHECK(br.c[0] == g.c[0]);
}

TEST_CASE("projection algebra") {
    const HermiteCoeffs f = inverse_square(40);
    for (std::size_t N : {0u, 3u, 17u, 40u}) {
        for (std::size_t M : {0u, 5u, 17u, 60u}) {
            CHECK(partial_sum(partial_sum(f, M), N).c == partial_sum(f, std::min(N, M)).c);
        }
    }
}

TEST_CASE("probe at the origin is the M1 norm of the Gaussian") {
    const QuadratureSpec spec;
    CHECK(partial_sum_probe_m1(0, 0.0, spec) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK_THROWS_AS(partial_sum_probe_m1(2, -1.0, spec), DomainError);
}

TEST_CASE("probe with N far beyond the Poisson bulk recovers the unshifted norm") {
    const QuadratureSpec spec;
    CHECK(partial_sum_probe_m1(400, 2.0, spec) == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("sn_probe_m1 and the explicit lower bound") {
    const QuadratureSpec spec;
    CHECK(sn_probe_m1(3, spec) / 2.0 >= sn_growth_lower_bound(3));
    CHECK(sn_probe_m1(3, spec) == doctest::Approx(1.99901279843).epsilon(1e-8));
    CHECK_THROWS_AS(sn_probe_m1(2, spec), DomainError);
}

TEST_CASE("sn_growth_lower_bound") {
    CHECK(sn_growth_lower_bound(3) == 0.0);
    CHECK(sn_growth_lower_bound(978) == 0.0);
    CHECK(sn_growth_lower_bound(979) == doctest::Approx(0.0).epsilon(1e-3));
    CHECK(sn_growth_lower_bound(979) < 1e-5);
    CHECK(sn_growth_lower_bound(10000) == doctest::Approx(0.0412694518409140).epsilon(1e-13));
    CHECK_THROWS_AS(sn_growth_lower_bound(2), DomainError);
}

TEST_CASE("truncation_error") {
    const QuadratureSpec spec;
    const HermiteCoeffs tail_only = HermiteCoeffs::basis(9);
    CHECK(truncation_error(tail_only, 8, 1.0, spec) ==
          doctest::Approx(phase::mp_norm(tail_only, 1.0, spec)).epsilon(1e-14));
    HermiteCoeffs head = inverse_square(8);
    head.c.resize(12, 0.0);
    CHECK(truncation_error(head, 8, 1.5, spec) == 0.0);
    CHECK_THROWS_AS(truncation_error(inverse_square(8), 8, 1.0, spec), DomainError);
}

TEST_CASE("truncation_error equals the Parseval tail at p = 2") {
    const QuadratureSpec spec;
    const HermiteCoeffs f = inverse_square(1024);
    double tail = 0.0;
    for (std::size_t n = 1024; n > 100; --n) tail += std::pow(1.0 + n, -4.0);
    CHECK(std::sqrt(tail) == doctest::Approx(0.000564311776502249867).epsilon(1e-12));
    CHECK(std::abs(truncation_error(f, 100, 2.0, spec) - std::sqrt(tail)) <= 1e-8 * std::sqrt(tail));
}

TEST_CASE("bochner_riesz_error") {
    const QuadratureSpec spec;
    CHECK(bochner_riesz_error(HermiteCoeffs::basis(0), 50, 1.0, 1.0, spec) == 0.0);
    const double e1 = phase::mp_norm(HermiteCoeffs::basis(1), 1.3, spec);
    CHECK(bochner_riesz_error(HermiteCoeffs::basis(1), 2, 1.0, 1.3, spec) ==
          doctest::Approx(0.25 * e1).epsilon(1e-12));
    CHECK_THROWS_AS(bochner_riesz_error(HermiteCoeffs::basis(1), 2, 0.0, 1.0, spec), DomainError);
    CHECK_THROWS_AS(bochner_riesz_error(HermiteCoeffs::basis(1), 2, -1.0, 1.0, spec), DomainError);
}

TEST_CASE("c_gamma_norm") {
    CHECK(c_gamma_norm(HermiteCoeffs::basis(0), 3.7) == 1.0);
    HermiteCoeffs two;
    two.c = {1.0, 1.0};
    CHECK(c_gamma_norm(two, 0.25) == doctest::Approx(1.0 + std::pow(2.0, 0.25)).epsilon(1e-15));
    HermiteCoeffs three;
    three.c = {1.0, 1.0, 1.0};
    CHECK(c_gamma_norm(three, 0.0) == 3.0);
    std::mt19937_64 gen(3);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        HermiteCoeffs f;
        f.c.resize(30);
        for (auto& v : f.c) v = {normal(gen), normal(gen)};
        double previous = 0.0;
        for (double gamma = -1.0; gamma <= 1.0; gamma += 0.25) {
            const double value = c_gamma_norm(f, gamma);
            CHECK(value >= previous);
            previous = value;
        }
    }
}

TEST_CASE("dirichlet_l1") {
    const QuadratureSpec spec;
    CHECK(dirichlet_l1(0, spec) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dirichlet_l1(1, spec) == doctest::Approx(2.0 * std::sqrt(3.0) / kPi + 1.0 / 3.0).epsilon(1e-8));
    const double asymptotic = 4.0 / (kPi * kPi) * std::log(1000.0) + 1.2706;
    CHECK(std::abs(dirichlet_l1(1000, spec) - asymptotic) <= 0.05);
    double previous = 0.0;
    for (std::size_t N = 1; N <= 100; ++N) {
        const double value = dirichlet_l1(N, spec);
        CHECK(value > previous);
        previous = value;
    }
}

TEST_CASE("torus ratio at p = 2") {
    for (std::size_t N : {1u, 4u, 33u}) {
        CHECK(torus_partial_sum_lp_ratio(N, 2.0, 8, 99) <= 1.0 + 1e-9);
        CHECK(torus_partial_sum_lp_ratio(N, 2.0, 8, 99, 1) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(torus_partial_sum_lp_ratio(N, 4.0, 8, 99, 1) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("torus ratio is reproducible for a fixed seed") {
    const double a = torus_partial_sum_lp_ratio(16, 4.0, 5, 1234);
    const double b = torus_partial_sum_lp_ratio(16, 4.0, 5, 1234);
    CHECK(a == b);
    CHECK(torus_partial_sum_lp_ratio(16, 4.0, 5, 1235) != a);
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK_THROWS_AS(torus_partial_sum_lp_ratio(4, 1.0, 3, 1), DomainError);
    CHECK_THROWS_AS(torus_partial_sum_lp_ratio(4, 2.0, 0, 1), DomainError);
}

TEST_CASE("trigonometric polynomial sampling") {
    TrigPolynomial g{1, {std::complex<double>(1.0, 0.0), 0.0, std::complex<double>(1.0, 0.0)}};
    const std::vector<double> m = g.abs_on_grid(8, 1);
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK(m[k] == doctest::Approx(std::abs(2.0 * std::cos(2.0 * kPi * k / 8.0))).epsilon(1e-12).scale(1.0));
    }
    const std::vector<double> dc = g.abs_on_grid(8, 0);
    for (double v : dc) CHECK(v == 0.0);
}
