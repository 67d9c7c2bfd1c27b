#pragma once

// Time-frequency shifts of the Gaussian, the closed-form STFT of Hermite functions,
// and modulation-space norms of finite Hermite expansions by polar quadrature.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "hermspace/numerics.hpp"

namespace hermspace::phase {

/// z = (x, omega), identified with x + i omega.
struct PhasePoint {
    double x = 0.0;
    double omega = 0.0;

    std::complex<double> as_complex() const { return {x, omega}; }
    double norm_sq() const { return x * x + omega * omega; }
};

/// Coefficients <f, h_n>, n = 0 .. n_max.
struct HermiteCoeffs {
    std::vector<std::complex<double>> c;

    std::size_t n_max() const { return c.empty() ? 0 : c.size() - 1; }
    double l2_norm() const;

    /// The n-th basis vector e_n.
    static HermiteCoeffs basis(std::size_t n);
    static HermiteCoeffs from_real(std::span<const double> values);
};

/// w[n] = e^{-pi t^2/2} (sqrt(pi) t)^n / sqrt(n!) = |<pi(z) h_0, h_n>| at |z| = t.
struct RadialWeights {
    double t = 0.0;
    std::size_t n_max = 0;
    std::vector<double> w;
};

RadialWeights radial_weights(double t, std::size_t n_max);

/// <pi(z) h_0, h_n> = e^{pi i x omega - pi |z|^2 / 2} sqrt(pi^n / n!) z^n.
std::complex<double> stft_hermite_gauss(PhasePoint z, std::size_t n);

/// Direct line quadrature of <f, pi(z) phi> = int f(t) e^{-2 pi i omega t} phi(t - x) dt.
/// For f = e_n this is the complex conjugate of stft_hermite_gauss(z, n).
std::complex<double> stft_quadrature(const HermiteCoeffs& f, PhasePoint z,
                                     const numerics::LineRule& rule);

/// ||f||_{M^p} for 1 <= p < inf, by angular trapezoid and radial Gauss-Legendre
/// quadrature of |sum_n c_n w_n(t) e^{-i n theta}|^p. Returns 0 for the zero vector.
double mp_norm(const HermiteCoeffs& f, double p, const QuadratureSpec& spec);

/// ||h_n||_{M^1} = 2 * 2^{n/2} Gamma(n/2 + 1) / Gamma(n + 1)^{1/2}.
double m1_hermite_closed_form(std::size_t n);

/// Coefficient of z^n in the Bargmann transform of h_n: pi^{n/2} / sqrt(n!).
double bargmann_coeff(std::size_t n);

/// M^p norm of a tensor product: the product of the factor norms (1 <= d <= 4).
double tensor_mp_norm(std::span<const HermiteCoeffs> factors, double p,
                      const QuadratureSpec& spec);

/// Hermite coefficients of pi(z) h_0, truncated where the Poisson tail of
/// |c_n|^2 = p_n(pi |z|^2) is far below double precision.
HermiteCoeffs shifted_gaussian_coeffs(PhasePoint z);
HermiteCoeffs shifted_gaussian_coeffs(PhasePoint z, std::size_t n_max);

}  // namespace hermspace::phase
