#pragma once

// Poisson weights p_n(t) = e^{-t} t^n / n!, the normalized polynomial
// e^{-t} P_N(t, phi) = sum_{n<=N} p_n(t) e^{i n phi}, its L1 norm on the circle and
// the inequalities that bracket it.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "hermspace/bound_report.hpp"
#include "hermspace/errors.hpp"
#include "hermspace/numerics.hpp"

namespace hermspace::poisson {

struct PoissonWeights {
    double t = 0.0;
    std::size_t n_max = 0;
    std::vector<double> p;      // p[n] = e^{-t} t^n / n!, underflows to 0 far in the tails
    std::vector<double> log_p;  // ln p[n], always finite for t > 0
};

/// Seeded at the mode in log form and recurred outwards, so t up to 1e6 is safe.
PoissonWeights poisson_weights(double t, std::size_t n_max);

std::complex<double> eval_pn_normalized(double t, std::size_t N, double phi);

/// Second differences r of q: (1 - z)^2 sum q_n z^n = sum r_m z^m, length N + 3.
template <class T>
struct SecondDiffCoeffs {
    std::vector<T> r;
};

template <class T>
SecondDiffCoeffs<T> second_diff_coeffs(std::span<const T> q) {
    if (q.size() < 2) {
        throw DomainError("second_diff_coeffs: need N >= 1 (at least two coefficients)");
    }
    const std::size_t N = q.size() - 1;
    SecondDiffCoeffs<T> out{std::vector<T>(N + 3)};
    auto& r = out.r;
    r[0] = q[0];
    r[1] = q[1] - T(2) * q[0];
    for (std::size_t m = 2; m <= N; ++m) r[m] = q[m] - T(2) * q[m - 1] + q[m - 2];
    r[N + 1] = -T(2) * q[N] + q[N - 1];
    r[N + 2] = q[N];
    return out;
}

/// Integral over [0, 2pi) of |sum_n w_n e^{i n phi}| for non-negative w. Terms below
/// 1e-17 of the largest are dropped; the node floor is 16 * (retained degree + 1).
double angular_l1(std::span<const double> weights, const QuadratureSpec& spec);

/// Normalized L1 norm: integral over [0, 2pi] of e^{-t} |P_N(t, phi)|. Needs t >= 1, N <= 2000.
double l1_norm_pn(double t, std::size_t N, const QuadratureSpec& spec);

struct TheoremBounds {
    double lower;
    double upper;
};

/// ln(t) p_N(t) - 30/sqrt(t) and (pi/2) ln(pi^2 t) p_N(t) + 30/sqrt(t).
TheoremBounds theorem_bounds(double t, std::size_t N);

BoundReport check_sandwich(double t, std::size_t N, const QuadratureSpec& spec);

/// sup_{x>0} p_N(x) |N - x| <= 1, probed at the two critical points and a 1e4-point grid.
BoundReport pointwise_bound_check(std::size_t N);

/// e^{-t} t^{N+1/2} / N! >= 1/(4e) on |t - N| <= sqrt(N), N >= 3.
BoundReport aux_inequality_check(std::size_t N);

/// (2/pi) phi <= |1 - e^{i phi}| <= phi on (0, pi].
BoundReport geometric_bound_check(double phi);

/// sum_{n=2}^{N} |r_n(t)| <= 2/t for the second differences of the Poisson weights.
BoundReport remainder_mass_check(double t, std::size_t N);

/// |(1 - z)^2 sum q_n z^n - sum r_m z^m| for the coefficients produced above.
double resummation_residual(std::span<const std::complex<double>> q, std::complex<double> z);

}  // namespace hermspace::poisson
