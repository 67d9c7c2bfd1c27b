#include "hermspace/poisson_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "trig_eval.hpp"

namespace hermspace::poisson {

PoissonWeights poisson_weights(double t, std::size_t n_max) {
    if (!std::isfinite(t) || t < 0.0 || t > 1e6) {
        throw DomainError("poisson_weights: t must lie in [0, 1e6]");
    }
    if (n_max > 100000) throw DomainError("poisson_weights: n_max exceeds 1e5");

    PoissonWeights w{t, n_max, std::vector<double>(n_max + 1, 0.0),
                     std::vector<double>(n_max + 1, 0.0)};
    if (t == 0.0) {
        w.p[0] = 1.0;
        std::fill(w.log_p.begin() + 1, w.log_p.end(), -std::numeric_limits<double>::infinity());
        return w;
    }
    const std::size_t mode = std::min(static_cast<std::size_t>(std::floor(t)), n_max);
    const double log_t = std::log(t);
    w.log_p[mode] = numerics::log_poisson_weight(mode, t);
    w.p[mode] = std::exp(w.log_p[mode]);
    for (std::size_t n = mode; n < n_max; ++n) {
        const double k = static_cast<double>(n + 1);
        w.p[n + 1] = w.p[n] * (t / k);
        w.log_p[n + 1] = w.log_p[n] + log_t - std::log(k);
    }
    for (std::size_t n = mode; n > 0; --n) {
        const double k = static_cast<double>(n);
        w.p[n - 1] = w.p[n] * (k / t);
        w.log_p[n - 1] = w.log_p[n] - log_t + std::log(k);
    }
    return w;
}

std::complex<double> eval_pn_normalized(double t, std::size_t N, double phi) {
    const PoissonWeights w = poisson_weights(t, N);
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    double re = 0.0;
    double im = 0.0;
    for (std::size_t n = N + 1; n-- > 0;) {
        const double nr = re * c - im * s + w.p[n];
        im = re * s + im * c;
        re = nr;
    }
    return {re, im};
}

double angular_l1(std::span<const double> weights, const QuadratureSpec& spec) {
    if (weights.empty()) return 0.0;
    const double peak = *std::max_element(weights.begin(), weights.end());
    if (!(peak > 0.0)) return 0.0;
    const double cut = 1e-17 * peak;
    std::size_t lo = 0;
    while (weights[lo] < cut) ++lo;
    std::size_t hi = weights.size() - 1;
    while (weights[hi] < cut) --hi;
    const std::span<const double> kept = weights.subspan(lo, hi - lo + 1);

    // |sum_n w_n z^n| is unchanged by the shift n -> n - lo, and even in phi.
    auto modulus = [kept](std::span<const double> phi, std::span<double> out) {
        detail::trig_modulus(kept, phi, out);
    };
    const std::size_t floor_nodes = std::max(spec.periodic_nodes_initial, 16 * kept.size());
    return numerics::integrate_periodic_batch(modulus, spec, floor_nodes, true);
}

double l1_norm_pn(double t, std::size_t N, const QuadratureSpec& spec) {
    if (!(t >= 1.0)) throw DomainError("l1_norm_pn: t must be >= 1");
    if (N > 2000) throw DomainError("l1_norm_pn: N must not exceed 2000");
    const PoissonWeights w = poisson_weights(t, N);
    return angular_l1(w.p, spec);
}

TheoremBounds theorem_bounds(double t, std::size_t N) {
    if (!(t >= 1.0)) throw DomainError("theorem_bounds: t must be >= 1");
    const double pN = std::exp(numerics::log_poisson_weight(N, t));
    const double remainder = 30.0 / std::sqrt(t);
    const double pi = std::numbers::pi;
    return {std::log(t) * pN - remainder, 0.5 * pi * std::log(pi * pi * t) * pN + remainder};
}

BoundReport check_sandwich(double t, std::size_t N, const QuadratureSpec& spec) {
    const TheoremBounds bounds = theorem_bounds(t, N);
    const double measured = l1_norm_pn(t, N, spec);
    return BoundReport::make(bounds.lower, measured, bounds.upper, spec.relative_tolerance);
}

BoundReport pointwise_bound_check(std::size_t N) {
    if (N < 1) throw DomainError("pointwise_bound_check: N must be >= 1");
    const double n = static_cast<double>(N);
    auto value = [N, n](double x) {
        return std::exp(numerics::log_poisson_weight(N, x)) * std::abs(n - x);
    };
    const double root = std::sqrt(n + 0.25);
    double best = std::max(value(n + 0.5 + root), value(n + 0.5 - root));
    constexpr int kGrid = 10000;
    const double span = 3.0 * n + 10.0;
    for (int k = 1; k <= kGrid; ++k) {
        best = std::max(best, value(span * k / kGrid));
    }
    return BoundReport::make(0.0, best, 1.0, 1e-12);
}

BoundReport aux_inequality_check(std::size_t N) {
    if (N < 3) throw DomainError("aux_inequality_check: N must be >= 3");
    const double n = static_cast<double>(N);
    auto value = [N](double t) {
        return std::exp(numerics::log_poisson_weight(N, t) + 0.5 * std::log(t));
    };
    const double half = std::sqrt(n);
    double worst = std::min({value(n - half), value(n + half), value(n + 0.5)});
    constexpr int kGrid = 1000;
    for (int k = 0; k < kGrid; ++k) {
        worst = std::min(worst, value(n - half + 2.0 * half * k / (kGrid - 1)));
    }
    return BoundReport::make(1.0 / (4.0 * std::numbers::e), worst,
                             std::numeric_limits<double>::infinity(), 1e-12);
}

BoundReport geometric_bound_check(double phi) {
    if (!(phi > 0.0 && phi <= std::numbers::pi)) {
        throw DomainError("geometric_bound_check: phi must lie in (0, pi]");
    }
    const double chord = std::abs(std::complex<double>(1.0 - std::cos(phi), -std::sin(phi)));
    return BoundReport::make(2.0 / std::numbers::pi * phi, chord, phi, 1e-12);
}

BoundReport remainder_mass_check(double t, std::size_t N) {
    if (!(t >= 1.0) || N < 2) {
        throw DomainError("remainder_mass_check: need t >= 1 and N >= 2");
    }
    const PoissonWeights w = poisson_weights(t, N);
    const auto r = second_diff_coeffs<double>(w.p);
    double mass = 0.0;
    for (std::size_t n = 2; n <= N; ++n) mass += std::abs(r.r[n]);
    return BoundReport::make(0.0, mass, 2.0 / t, 1e-12);
}

double resummation_residual(std::span<const std::complex<double>> q, std::complex<double> z) {
    const auto r = second_diff_coeffs<std::complex<double>>(q);
    std::complex<double> lhs = 0.0;
    for (std::size_t n = q.size(); n-- > 0;) lhs = lhs * z + q[n];
    lhs *= (1.0 - z) * (1.0 - z);
    std::complex<double> rhs = 0.0;
    for (std::size_t m = r.r.size(); m-- > 0;) rhs = rhs * z + r.r[m];
    return std::abs(lhs - rhs);
}

}  // namespace hermspace::poisson
