#pragma once

// Special functions and quadrature engines shared by every other module.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hermspace/bound_report.hpp"

namespace hermspace {

/// Knobs of the adaptive quadratures. Validated on use.
struct QuadratureSpec {
    std::size_t periodic_nodes_initial = 256;
    double relative_tolerance = 1e-8;
    int max_doublings = 16;
    /// Radial truncation half-width in units of the Gaussian decay length.
    double radial_truncation_margin = 10.0;

    /// Throws DomainError when a field is outside its admissible range.
    void validate() const;

    /// Copy with a different tolerance (clamped to the admissible range).
    QuadratureSpec with_tolerance(double tol) const;
};

namespace numerics {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;    // strictly increasing
    std::vector<double> weights;  // positive, sum to 2
};

/// A quadrature rule on a bounded interval [lo, hi] of the real line.
struct LineRule {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> nodes;
    std::vector<double> weights;

    double integrate(const std::function<double(double)>& f) const;
};

/// ln Gamma(x) for x > 0 (Lanczos series, g = 7).
double log_gamma(double x);

/// ln(n!) for n >= 0.
inline double log_factorial(double n) { return log_gamma(n + 1.0); }

/// ln(e^{-t} t^n / n!) for integer n >= 0 and real t >= 0, accurate when n and t are
/// both large (saddle-point form, no cancellation between n ln t and ln n!).
double log_poisson_weight(std::size_t n, double t);

/// Stirling sandwich sqrt(2 pi n)(n/e)^n <= n! <= e sqrt(n)(n/e)^n, checked in log form.
/// Fields of the report are logarithms: ln(lower), ln(n!), ln(upper).
BoundReport stirling_check(long long n);

GaussRule gauss_legendre(std::size_t count);

/// `panels` copies of the `order`-point Gauss-Legendre rule tiled over [lo, hi].
LineRule composite_gauss_legendre(double lo, double hi, std::size_t panels, std::size_t order = 16);

/// Trapezoid rule over [0, 2pi) with node doubling until successive values agree to
/// spec.relative_tolerance. `initial_nodes` (if nonzero) overrides the spec's start count.
double integrate_periodic(const std::function<double(double)>& f, const QuadratureSpec& spec,
                          std::size_t initial_nodes = 0);

/// Fills out[j] = f(phi[j]) for a batch of angles.
using PeriodicBatch = std::function<void(std::span<const double> phi, std::span<double> out)>;

/// integrate_periodic for a batched integrand. With `even` set, f(phi) = f(-phi) is
/// assumed and only [0, pi] is sampled; the value is still the integral over [0, 2pi).
double integrate_periodic_batch(const PeriodicBatch& f, const QuadratureSpec& spec,
                                std::size_t initial_nodes = 0, bool even = false);

/// Composite Gauss-Legendre over [lo, hi] with panel doubling until successive values
/// agree to spec.relative_tolerance. Non-finite samples raise NumericalError.
double integrate_interval(const std::function<double(double)>& g, double lo, double hi,
                          const QuadratureSpec& spec);

/// Integral over [0, inf) of g, where |g(t)| <= poly(t) exp(-decay (t - center)^2).
/// The range is truncated to center +/- margin / sqrt(decay), clipped at 0.
double integrate_radial_gaussian(const std::function<double(double)>& g, double center,
                                 const QuadratureSpec& spec, double decay = 1.5707963267948966);

/// Pairwise sum; order-independent of thread count by construction.
double pairwise_sum(std::span<const double> values);

}  // namespace numerics
}  // namespace hermspace
