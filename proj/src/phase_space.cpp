#include "hermspace/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hermspace/errors.hpp"
#include "hermspace/hermite.hpp"
#include "trig_eval.hpp"

namespace hermspace::phase {

namespace {

constexpr double kPi = std::numbers::pi;
// Terms below e^{-39.2} ~ 1e-17 of the largest are dropped from angular sums.
constexpr double kLogDropBelow = 39.2;

std::vector<double> log_sqrt_factorials(std::size_t n_max) {
    std::vector<double> out(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        out[n] = 0.5 * numerics::log_factorial(static_cast<double>(n));
    }
    return out;
}

// Integral over the circle of |sum_k a_k e^{i k theta}|^p.
// Real coefficients make the modulus even in theta, so half the circle suffices.
double angular_lp(std::span<const std::complex<double>> a, double p, const QuadratureSpec& spec,
                  bool real_coeffs) {
    auto integrand = [a, p](std::span<const double> theta, std::span<double> out) {
        detail::trig_modulus(a, theta, out);
        if (p == 2.0) {
            for (double& v : out) v *= v;
        } else if (p != 1.0) {
            for (double& v : out) v = std::pow(v, p);
        }
    };
    const std::size_t floor_nodes = std::max(spec.periodic_nodes_initial, 16 * a.size());
    return numerics::integrate_periodic_batch(integrand, spec, floor_nodes, real_coeffs);
}

}  // namespace

double HermiteCoeffs::l2_norm() const {
    double s = 0.0;
    for (const auto& v : c) s += std::norm(v);
    return std::sqrt(s);
}

HermiteCoeffs HermiteCoeffs::basis(std::size_t n) {
    HermiteCoeffs f;
    f.c.assign(n + 1, 0.0);
    f.c[n] = 1.0;
    return f;
}

HermiteCoeffs HermiteCoeffs::from_real(std::span<const double> values) {
    HermiteCoeffs f;
    f.c.assign(values.begin(), values.end());
    return f;
}

RadialWeights radial_weights(double t, std::size_t n_max) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("radial_weights: t must be >= 0");
    RadialWeights rw{t, n_max, std::vector<double>(n_max + 1, 0.0)};
    if (t == 0.0) {
        rw.w[0] = 1.0;
        return rw;
    }
    const double log_root_pi_t = 0.5 * std::log(kPi) + std::log(t);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const double k = static_cast<double>(n);
        rw.w[n] = std::exp(-0.5 * kPi * t * t + k * log_root_pi_t -
                           0.5 * numerics::log_factorial(k));
    }
    return rw;
}

std::complex<double> stft_hermite_gauss(PhasePoint z, std::size_t n) {
    if (n > hermite::kMaxOrder) throw DomainError("stft_hermite_gauss: n exceeds 10^4");
    const double r2 = z.norm_sq();
    if (r2 == 0.0) return n == 0 ? 1.0 : 0.0;
    const double k = static_cast<double>(n);
    const double log_mag = -0.5 * kPi * r2 + 0.5 * k * (std::log(kPi) + std::log(r2)) -
                           0.5 * numerics::log_factorial(k);
    const double phase = kPi * z.x * z.omega + k * std::atan2(z.omega, z.x);
    return std::polar(std::exp(log_mag), phase);
}

std::complex<double> stft_quadrature(const HermiteCoeffs& f, PhasePoint z,
                                     const numerics::LineRule& rule) {
    const double reach = hermite::decay_radius(f.n_max());
    if (rule.lo > std::min(-reach, z.x - 6.0) || rule.hi < std::max(reach, z.x + 6.0)) {
        throw DomainError("stft_quadrature: rule does not cover the decay region of f and of the window");
    }
    std::vector<double> h(f.n_max() + 1);
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = rule.nodes[i];
        hermite::hermite_values(t, h);
        std::complex<double> ft = 0.0;
        for (std::size_t n = 0; n < h.size(); ++n) ft += f.c[n] * h[n];
        const double window = std::pow(2.0, 0.25) * std::exp(-kPi * (t - z.x) * (t - z.x));
        sum += rule.weights[i] * ft * window * std::polar(1.0, -2.0 * kPi * z.omega * t);
    }
    return sum;
}

double mp_norm(const HermiteCoeffs& f, double p, const QuadratureSpec& spec) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("mp_norm: p must lie in [1, inf)");
    spec.validate();
    std::size_t n_lo = f.c.size();
    std::size_t n_hi = 0;
    for (std::size_t n = 0; n < f.c.size(); ++n) {
        if (f.c[n] != 0.0) {
            n_lo = std::min(n_lo, n);
            n_hi = n;
        }
    }
    if (n_lo == f.c.size()) return 0.0;

    const std::vector<double> log_sqrt_fact = log_sqrt_factorials(n_hi);
    std::vector<double> log_abs_c(n_hi + 1, -std::numeric_limits<double>::infinity());
    std::vector<std::complex<double>> unit_c(n_hi + 1, 0.0);
    bool real_coeffs = true;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        if (f.c[n] != 0.0) {
            log_abs_c[n] = std::log(std::abs(f.c[n]));
            unit_c[n] = f.c[n] / std::abs(f.c[n]);
            real_coeffs = real_coeffs && f.c[n].imag() == 0.0;
        }
    }

    std::vector<double> log_a(n_hi + 1);
    std::vector<std::complex<double>> a;
    auto radial_integrand = [&](double t) {
        double peak = -std::numeric_limits<double>::infinity();
        if (t == 0.0) {
            std::fill(log_a.begin(), log_a.end(), -std::numeric_limits<double>::infinity());
            log_a[0] = log_abs_c[0];
            peak = log_a[0];
        } else {
            const double gauss = -0.5 * kPi * t * t;
            const double log_root_pi_t = 0.5 * std::log(kPi) + std::log(t);
            for (std::size_t n = n_lo; n <= n_hi; ++n) {
                log_a[n] = log_abs_c[n] + gauss + static_cast<double>(n) * log_root_pi_t -
                           log_sqrt_fact[n];
                peak = std::max(peak, log_a[n]);
            }
        }
        if (!std::isfinite(peak)) return 0.0;
        std::size_t k0 = n_hi;
        std::size_t k1 = n_lo;
        for (std::size_t n = n_lo; n <= n_hi; ++n) {
            if (log_a[n] >= peak - kLogDropBelow) {
                k0 = std::min(k0, n);
                k1 = n;
            }
        }
        a.assign(k1 - k0 + 1, 0.0);
        for (std::size_t n = k0; n <= k1; ++n) {
            if (log_a[n] >= peak - kLogDropBelow) a[n - k0] = std::exp(log_a[n] - peak) * unit_c[n];
        }
        const double scale = std::exp(p * peak);
        if (scale == 0.0) return 0.0;
        return t * scale * angular_lp(a, p, spec, real_coeffs);
    };

    const double half_width = spec.radial_truncation_margin / std::sqrt(0.5 * kPi);
    const double lo = std::max(0.0, std::sqrt(static_cast<double>(n_lo) / kPi) - half_width);
    const double hi = std::sqrt(static_cast<double>(n_hi) / kPi) + half_width;
    const double integral = numerics::integrate_interval(radial_integrand, lo, hi, spec);
    return std::pow(integral, 1.0 / p);
}

double m1_hermite_closed_form(std::size_t n) {
    const double k = static_cast<double>(n);
    return 2.0 * std::exp(0.5 * k * std::numbers::ln2 + numerics::log_gamma(0.5 * k + 1.0) -
                          0.5 * numerics::log_gamma(k + 1.0));
}

double bargmann_coeff(std::size_t n) {
    const double k = static_cast<double>(n);
    return std::exp(0.5 * k * std::log(kPi) - 0.5 * numerics::log_factorial(k));
}

double tensor_mp_norm(std::span<const HermiteCoeffs> factors, double p,
                      const QuadratureSpec& spec) {
    if (factors.empty()) throw DomainError("tensor_mp_norm: empty factor list");
    if (factors.size() > 4) throw DomainError("tensor_mp_norm: at most 4 factors");
    double product = 1.0;
    for (const auto& f : factors) product *= mp_norm(f, p, spec);
    return product;
}

HermiteCoeffs shifted_gaussian_coeffs(PhasePoint z, std::size_t n_max) {
    HermiteCoeffs f;
    f.c.resize(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) f.c[n] = stft_hermite_gauss(z, n);
    return f;
}

HermiteCoeffs shifted_gaussian_coeffs(PhasePoint z) {
    const double s = kPi * z.norm_sq();
    const auto n_max = static_cast<std::size_t>(std::ceil(s + 12.0 * std::sqrt(s) + 40.0));
    return shifted_gaussian_coeffs(z, std::min(n_max, hermite::kMaxOrder));
}

}  // namespace hermspace::phase
