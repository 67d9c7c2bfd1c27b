#include "hermspace/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hermspace/errors.hpp"

namespace hermspace::hermite {

namespace {

constexpr double kRescaleAt = 1e150;
const double kLogRescale = std::log(kRescaleAt);

void check_args(std::size_t n_max, double t) {
    if (n_max > kMaxOrder) throw DomainError("hermite: n_max exceeds 10^4");
    if (!std::isfinite(t) || std::abs(t) > kMaxAbsArgument) {
        throw DomainError("hermite: |t| must not exceed 100");
    }
}

}  // namespace

void hermite_values(double t, std::span<double> out) {
    if (out.empty()) return;
    const std::size_t n_max = out.size() - 1;
    check_args(n_max, t);

    // Mantissas m_n with h_n = m_n * exp(log_scale_n); the scale only grows.
    const double log_h0 = 0.25 * std::numbers::ln2 - std::numbers::pi * t * t;
    double log_scale = log_h0;
    double prev = 0.0;
    double cur = 1.0;
    double factor = std::exp(log_scale);
    out[0] = factor;
    const double two_sqrt_pi_t = 2.0 * std::sqrt(std::numbers::pi) * t;
    for (std::size_t n = 0; n < n_max; ++n) {
        const double k = static_cast<double>(n);
        const double next =
            two_sqrt_pi_t / std::sqrt(k + 1.0) * cur - std::sqrt(k / (k + 1.0)) * prev;
        prev = cur;
        cur = next;
        if (std::abs(cur) > kRescaleAt) {
            cur /= kRescaleAt;
            prev /= kRescaleAt;
            log_scale += kLogRescale;
            factor = std::exp(log_scale);
        }
        if (log_scale > -700.0 || cur == 0.0) {
            out[n + 1] = cur * factor;
        } else {
            out[n + 1] = std::copysign(std::exp(std::log(std::abs(cur)) + log_scale), cur);
        }
    }
}

HermiteBatch hermite_batch(std::size_t n_max, double t) {
    check_args(n_max, t);
    HermiteBatch batch{n_max, t, std::vector<double>(n_max + 1)};
    hermite_values(t, batch.values);
    return batch;
}

double hermite_tensor(std::span<const std::size_t> index, std::span<const double> t) {
    if (index.size() != t.size()) {
        throw DomainError("hermite_tensor: index and point dimensions differ");
    }
    if (index.empty() || index.size() > 4) {
        throw DomainError("hermite_tensor: dimension must lie in [1, 4]");
    }
    double product = 1.0;
    std::vector<double> values;
    for (std::size_t axis = 0; axis < index.size(); ++axis) {
        values.assign(index[axis] + 1, 0.0);
        hermite_values(t[axis], values);
        product *= values.back();
    }
    return product;
}

double decay_radius(std::size_t n) {
    return std::sqrt((2.0 * static_cast<double>(n) + 1.0) / (2.0 * std::numbers::pi)) + 6.0;
}

double orthonormality_defect(std::size_t n_max, const numerics::LineRule& rule) {
    const double needed = decay_radius(n_max);
    if (rule.lo > -needed || rule.hi < needed) {
        throw DomainError("orthonormality_defect: rule support must cover [-T, T] with T = " +
                          std::to_string(needed));
    }
    const std::size_t dim = n_max + 1;
    std::vector<double> gram(dim * dim, 0.0);
    std::vector<double> h(dim);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        hermite_values(rule.nodes[i], h);
        const double w = rule.weights[i];
        for (std::size_t m = 0; m < dim; ++m) {
            const double wm = w * h[m];
            for (std::size_t n = m; n < dim; ++n) gram[m * dim + n] += wm * h[n];
        }
    }
    double defect = 0.0;
    for (std::size_t m = 0; m < dim; ++m) {
        for (std::size_t n = m; n < dim; ++n) {
            const double target = m == n ? 1.0 : 0.0;
            defect = std::max(defect, std::abs(gram[m * dim + n] - target));
        }
    }
    return defect;
}

}  // namespace hermspace::hermite
