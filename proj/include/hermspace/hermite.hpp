#pragma once

// L2-normalized Hermite functions h_n(t) = 2^{1/4} (2^n n!)^{-1/2} H_n(sqrt(2 pi) t) e^{-pi t^2}.

#include <cstddef>
#include <span>
#include <vector>

#include "hermspace/numerics.hpp"

namespace hermspace::hermite {

constexpr std::size_t kMaxOrder = 10000;
constexpr double kMaxAbsArgument = 100.0;

struct HermiteBatch {
    std::size_t n_max = 0;
    double t = 0.0;
    std::vector<double> values;  // h_0(t) ... h_{n_max}(t)
};

/// Upward three-term recurrence with running exponent rescaling, so that
/// large orders are correct far outside the range where e^{-pi t^2} underflows.
HermiteBatch hermite_batch(std::size_t n_max, double t);

/// Allocation-free variant; `out.size()` determines n_max + 1.
void hermite_values(double t, std::span<double> out);

/// Product of per-axis Hermite functions, 1 <= d <= 4.
double hermite_tensor(std::span<const std::size_t> index, std::span<const double> t);

/// Radius beyond which |h_n(t)| <= 1e-10: turning point sqrt((2n+1)/(2 pi)) plus 6.
double decay_radius(std::size_t n);

/// max_{m,n <= n_max} |<h_m, h_n> - delta_mn| under `rule`. The rule must cover
/// [-decay_radius(n_max), decay_radius(n_max)].
double orthonormality_defect(std::size_t n_max, const numerics::LineRule& rule);

}  // namespace hermspace::hermite
