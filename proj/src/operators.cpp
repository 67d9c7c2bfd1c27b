#include "hermspace/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hermspace/errors.hpp"
#include "hermspace/poisson_poly.hpp"
#include "trig_eval.hpp"

namespace hermspace::ops {

namespace {
constexpr double kPi = std::numbers::pi;
}

MultiplierSymbol MultiplierSymbol::partial_sum(std::size_t N) {
    MultiplierSymbol m;
    m.kind_ = Kind::partial_sum;
    m.cutoff_ = N;
    return m;
}

MultiplierSymbol MultiplierSymbol::bochner_riesz(std::size_t N, double alpha) {
    if (N < 1) throw DomainError("bochner_riesz: N must be >= 1");
    if (!(alpha > 0.0)) throw DomainError("bochner_riesz: alpha must be > 0");
    MultiplierSymbol m;
    m.kind_ = Kind::bochner_riesz;
    m.cutoff_ = N;
    m.alpha_ = alpha;
    return m;
}

MultiplierSymbol MultiplierSymbol::custom(std::vector<double> table) {
    MultiplierSymbol m;
    m.kind_ = Kind::custom;
    m.table_ = std::move(table);
    return m;
}

double MultiplierSymbol::operator()(long long n) const {
    const auto k = static_cast<std::size_t>(n < 0 ? -n : n);
    switch (kind_) {
        case Kind::partial_sum:
            return k <= cutoff_ ? 1.0 : 0.0;
        case Kind::bochner_riesz: {
            if (k >= cutoff_) return 0.0;
            const double ratio = static_cast<double>(k) / static_cast<double>(cutoff_);
            return std::pow(1.0 - ratio * ratio, alpha_);
        }
        case Kind::custom:
            return k < table_.size() ? table_[k] : 0.0;
    }
    return 0.0;
}

HermiteCoeffs apply_multiplier(const MultiplierSymbol& m, const HermiteCoeffs& f) {
    HermiteCoeffs out = f;
    for (std::size_t n = 0; n < out.c.size(); ++n) out.c[n] *= m(static_cast<long long>(n));
    return out;
}

HermiteCoeffs partial_sum(const HermiteCoeffs& f, std::size_t N) {
    return apply_multiplier(MultiplierSymbol::partial_sum(N), f);
}

double partial_sum_probe_m1(std::size_t N, double r, const QuadratureSpec& spec) {
    if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("partial_sum_probe_m1: r must be >= 0");
    // e^{-pi (r^2 + t^2)/2} e^{s} = e^{-pi (t - r)^2 / 2} keeps the integrand bounded.
    auto integrand = [N, r, &spec](double t) {
        const double s = kPi * r * t;
        const poisson::PoissonWeights w = poisson::poisson_weights(s, N);
        return t * std::exp(-0.5 * kPi * (t - r) * (t - r)) * poisson::angular_l1(w.p, spec);
    };
    return numerics::integrate_radial_gaussian(integrand, r, spec, 0.5 * kPi);
}

double sn_probe_m1(std::size_t N, const QuadratureSpec& spec) {
    if (N < 3) throw DomainError("sn_probe_m1: N must be >= 3");
    return partial_sum_probe_m1(N, std::sqrt(static_cast<double>(N) / kPi), spec);
}

double sn_growth_lower_bound(std::size_t N) {
    if (N < 3) throw DomainError("sn_growth_lower_bound: N must be >= 3");
    const double value = std::log(static_cast<double>(N) / (360.0 * std::numbers::e)) /
                         (4.0 * std::pow(std::numbers::e, 1.5) * kPi);
    return std::max(0.0, value);
}

double truncation_error(const HermiteCoeffs& f, std::size_t N, double p, const QuadratureSpec& spec) {
    if (f.n_max() <= N) throw DomainError("truncation_error: f must have n_max > N");
    HermiteCoeffs tail = f;
    std::fill(tail.c.begin(), tail.c.begin() + static_cast<std::ptrdiff_t>(N + 1), 0.0);
    return phase::mp_norm(tail, p, spec);
}

double bochner_riesz_error(const HermiteCoeffs& f, std::size_t N, double alpha, double p,
                           const QuadratureSpec& spec) {
    if (!(alpha > 0.0)) throw DomainError("bochner_riesz_error: alpha must be > 0");
    const MultiplierSymbol m = MultiplierSymbol::bochner_riesz(N, alpha);
    HermiteCoeffs residual = f;
    for (std::size_t n = 0; n < residual.c.size(); ++n) {
        residual.c[n] *= 1.0 - m(static_cast<long long>(n));
    }
    return phase::mp_norm(residual, p, spec);
}

double c_gamma_norm(const HermiteCoeffs& f, double gamma) {
    double sum = 0.0;
    for (std::size_t n = 0; n < f.c.size(); ++n) {
        sum += std::abs(f.c[n]) * std::pow(1.0 + static_cast<double>(n), gamma);
    }
    return sum;
}

double dirichlet_l1(std::size_t N, const QuadratureSpec& spec) {
    const double order = 2.0 * static_cast<double>(N) + 1.0;
    auto kernel = [order](double theta) {
        const double den = std::sin(0.5 * theta);
        if (den == 0.0) return order;
        return std::abs(std::sin(0.5 * order * theta) / den);
    };
    const auto floor_nodes = static_cast<std::size_t>(16.0 * order);
    return numerics::integrate_periodic(kernel, spec, std::max(spec.periodic_nodes_initial, floor_nodes)) /
           (2.0 * kPi);
}

std::vector<double> TrigPolynomial::abs_on_grid(std::size_t grid, std::size_t band) const {
    const std::size_t keep = std::min(band, degree);
    std::vector<double> xi(grid);
    for (std::size_t k = 0; k < grid; ++k) {
        xi[k] = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(grid);
    }
    // The factor e^{-2 pi i keep xi} in front of the kept block has modulus 1.
    std::vector<double> out(grid);
    detail::trig_modulus<std::complex<double>>(
        std::span<const std::complex<double>>(coeffs).subspan(degree - keep, 2 * keep + 1), xi, out);
    return out;
}

double discrete_lp_norm(const std::vector<double>& modulus, double p) {
    std::vector<double> powered(modulus.size());
    std::transform(modulus.begin(), modulus.end(), powered.begin(),
                   [p](double v) { return std::pow(v, p); });
    return std::pow(numerics::pairwise_sum(powered) / static_cast<double>(modulus.size()), 1.0 / p);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over (seed, stream)
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double torus_partial_sum_lp_ratio(std::size_t N, double p, std::size_t trials, std::uint64_t seed,
                                  std::size_t degree_factor) {
    if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("torus_partial_sum_lp_ratio: p must lie in (1, inf)");
    if (trials < 1) throw DomainError("torus_partial_sum_lp_ratio: trials must be >= 1");
    if (degree_factor < 1) throw DomainError("torus_partial_sum_lp_ratio: degree_factor must be >= 1");
    const std::size_t degree = degree_factor * N;
    const std::size_t grid = std::max(16 * N + 16, 4 * degree + 16);
    double best = 0.0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::mt19937_64 gen(derive_seed(seed, trial));
        std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
        TrigPolynomial g{degree, std::vector<std::complex<double>>(2 * degree + 1)};
        for (auto& a : g.coeffs) {
            const double re = normal(gen);
            const double im = normal(gen);
            a = {re, im};
        }
        const double full = discrete_lp_norm(g.abs_on_grid(grid, degree), p);
        const double projected = discrete_lp_norm(g.abs_on_grid(grid, N), p);
        best = std::max(best, projected / full);
    }
    return best;
}

}  // namespace hermspace::ops
