#pragma once

// Hermite multipliers (partial sums S_N, Bochner-Riesz means), the M^1 divergence
// probe of S_N, C(gamma) norms, and Fourier-multiplier checks on the torus.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hermspace/numerics.hpp"
#include "hermspace/phase_space.hpp"

namespace hermspace::ops {

using phase::HermiteCoeffs;

class MultiplierSymbol {
public:
    enum class Kind { partial_sum, bochner_riesz, custom };

    static MultiplierSymbol partial_sum(std::size_t N);
    /// (1 - n^2/N^2)_+^alpha, N >= 1, alpha > 0.
    static MultiplierSymbol bochner_riesz(std::size_t N, double alpha);
    /// m(n) = table[|n|] inside the table, 0 outside.
    static MultiplierSymbol custom(std::vector<double> table);

    Kind kind() const { return kind_; }
    /// Symbol value at n in Z (evenly extended to negative n).
    double operator()(long long n) const;

private:
    Kind kind_ = Kind::partial_sum;
    std::size_t cutoff_ = 0;
    double alpha_ = 1.0;
    std::vector<double> table_;
};

/// Coefficientwise product m(n) <f, h_n>.
HermiteCoeffs apply_multiplier(const MultiplierSymbol& m, const HermiteCoeffs& f);

/// S_N applied to f.
HermiteCoeffs partial_sum(const HermiteCoeffs& f, std::size_t N);

/// ||S_N(pi(z) h_0)||_{M^1} for |z| = r, as the radial integral of
/// t e^{-pi (t - r)^2 / 2} times the angular L1 norm of e^{-s} P_N(s, .), s = pi r t.
double partial_sum_probe_m1(std::size_t N, double r, const QuadratureSpec& spec);

/// The probe at z_N = sqrt(N / pi), N >= 3.
double sn_probe_m1(std::size_t N, const QuadratureSpec& spec);

/// max(0, ln(N / (360 e)) / (4 e^{3/2} pi)), N >= 3.
double sn_growth_lower_bound(std::size_t N);

/// ||f - S_N f||_{M^p}; f must extend beyond N.
double truncation_error(const HermiteCoeffs& f, std::size_t N, double p, const QuadratureSpec& spec);

/// ||f - B_N^alpha f||_{M^p}, alpha > 0.
double bochner_riesz_error(const HermiteCoeffs& f, std::size_t N, double alpha, double p,
                           const QuadratureSpec& spec);

/// sum_n |<f, h_n>| (1 + n)^gamma.
double c_gamma_norm(const HermiteCoeffs& f, double gamma);

/// Lebesgue constant int_0^1 |sum_{|n|<=N} e^{2 pi i n xi}| d xi.
double dirichlet_l1(std::size_t N, const QuadratureSpec& spec);

/// Trigonometric polynomial sum_{|n| <= degree} a_n e^{2 pi i n xi}.
struct TrigPolynomial {
    std::size_t degree = 0;
    std::vector<std::complex<double>> coeffs;  // coeffs[n + degree]

    /// |g| at xi_k = k / grid, k = 0 .. grid - 1, keeping only |n| <= band.
    std::vector<double> abs_on_grid(std::size_t grid, std::size_t band) const;
};

/// Discrete L^p norm (mean over the grid) of a sampled modulus.
double discrete_lp_norm(const std::vector<double>& modulus, double p);

/// max over `trials` seeded random polynomials of degree degree_factor * N of
/// ||A_{m_N} g||_p / ||g||_p on a grid of max(16 N + 16, 4 * degree + 16) points.
double torus_partial_sum_lp_ratio(std::size_t N, double p, std::size_t trials, std::uint64_t seed,
                                  std::size_t degree_factor = 4);

/// Independent seed for one trial of a seeded experiment.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace hermspace::ops
