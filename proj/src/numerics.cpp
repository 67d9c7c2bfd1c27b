#include "hermspace/numerics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hermspace/errors.hpp"

namespace hermspace {

void QuadratureSpec::validate() const {
    if (periodic_nodes_initial < 1) {
        throw DomainError("QuadratureSpec: periodic_nodes_initial must be positive");
    }
    if (!(relative_tolerance > 0.0 && relative_tolerance <= 1e-2)) {
        throw DomainError("QuadratureSpec: relative_tolerance must lie in (0, 1e-2]");
    }
    if (max_doublings < 1 || max_doublings > 24) {
        throw DomainError("QuadratureSpec: max_doublings must lie in [1, 24]");
    }
    if (!(radial_truncation_margin >= 4.0)) {
        throw DomainError("QuadratureSpec: radial_truncation_margin must be >= 4");
    }
}

QuadratureSpec QuadratureSpec::with_tolerance(double tol) const {
    QuadratureSpec out = *this;
    out.relative_tolerance = tol;
    out.validate();
    return out;
}

namespace numerics {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * std::numbers::pi);

// ln Gamma(n+1) - [(n + 1/2) ln n - n + ln sqrt(2 pi)]
double stirling_error(double n) {
    constexpr double s0 = 1.0 / 12.0;
    constexpr double s1 = 1.0 / 360.0;
    constexpr double s2 = 1.0 / 1260.0;
    constexpr double s3 = 1.0 / 1680.0;
    constexpr double s4 = 1.0 / 1188.0;
    if (n <= 15.0) {
        return log_gamma(n + 1.0) - (n + 0.5) * std::log(n) + n - kHalfLog2Pi;
    }
    const double nn = n * n;
    if (n > 500.0) return (s0 - s1 / nn) / n;
    if (n > 80.0) return (s0 - (s1 - s2 / nn) / nn) / n;
    if (n > 35.0) return (s0 - (s1 - (s2 - s3 / nn) / nn) / nn) / n;
    return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

// x ln(x / m) + m - x without cancellation when x ~ m.
double deviance_term(double x, double m) {
    if (std::abs(x - m) < 0.1 * (x + m)) {
        double v = (x - m) / (x + m);
        double s = (x - m) * v;
        double ej = 2.0 * x * v;
        v *= v;
        for (int j = 1; j < 1000; ++j) {
            ej *= v;
            const double next = s + ej / (2 * j + 1);
            if (next == s) return next;
            s = next;
        }
        return s;
    }
    return x * std::log(x / m) + m - x;
}

void check_finite(double value, double at, const char* where) {
    if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << where << ": non-finite integrand sample " << value << " at node " << at;
        throw NumericalError(msg.str());
    }
}

}  // namespace

double log_gamma(double x) {
    if (!std::isfinite(x) || x <= 0.0) {
        throw DomainError("log_gamma: argument must be positive and finite");
    }
    if (x < 0.5) {
        // Reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x), sin(pi x) > 0 on (0, 1/2).
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double a = kLanczosCoeffs[0];
    for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
        a += kLanczosCoeffs[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(a);
}

double log_poisson_weight(std::size_t n, double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw DomainError("log_poisson_weight: t must be finite and non-negative");
    }
    if (n == 0) return -t;
    if (t == 0.0) return -std::numeric_limits<double>::infinity();
    const double x = static_cast<double>(n);
    return -stirling_error(x) - deviance_term(x, t) - 0.5 * std::log(2.0 * std::numbers::pi * x);
}

BoundReport stirling_check(long long n) {
    if (n < 1) {
        throw DomainError("stirling_check: n must be >= 1");
    }
    const double x = static_cast<double>(n);
    const double log_ratio = x * (std::log(x) - 1.0);  // ln (n/e)^n
    const double lower = 0.5 * std::log(2.0 * std::numbers::pi * x) + log_ratio;
    const double upper = 1.0 + 0.5 * std::log(x) + log_ratio;
    return BoundReport::make(lower, log_factorial(x), upper, 1e-12);
}

GaussRule gauss_legendre(std::size_t count) {
    if (count < 1 || count > 4096) {
        throw DomainError("gauss_legendre: count must lie in [1, 4096]");
    }
    GaussRule rule;
    rule.nodes.assign(count, 0.0);
    rule.weights.assign(count, 0.0);
    const double n = static_cast<double>(count);
    const std::size_t half = (count + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
        double dp = 0.0;
        bool converged = false;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= count; ++k) {
                const double kk = static_cast<double>(k);
                const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) <= 1e-15) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            throw NumericalError("gauss_legendre: Newton iteration did not converge");
        }
        // Recompute the derivative at the converged node for the weight.
        {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= count; ++k) {
                const double kk = static_cast<double>(k);
                const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        if (2 * i + 1 == count) x = 0.0;
        rule.nodes[i] = -x;
        rule.nodes[count - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[count - 1 - i] = w;
    }
    return rule;
}

LineRule composite_gauss_legendre(double lo, double hi, std::size_t panels, std::size_t order) {
    if (!(hi > lo) || panels < 1) {
        throw DomainError("composite_gauss_legendre: need hi > lo and at least one panel");
    }
    const GaussRule base = gauss_legendre(order);
    LineRule rule;
    rule.lo = lo;
    rule.hi = hi;
    rule.nodes.reserve(panels * order);
    rule.weights.reserve(panels * order);
    const double width = (hi - lo) / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
        const double mid = lo + (static_cast<double>(p) + 0.5) * width;
        for (std::size_t k = 0; k < order; ++k) {
            rule.nodes.push_back(mid + 0.5 * width * base.nodes[k]);
            rule.weights.push_back(0.5 * width * base.weights[k]);
        }
    }
    return rule;
}

double LineRule::integrate(const std::function<double(double)>& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double v = f(nodes[i]);
        check_finite(v, nodes[i], "LineRule::integrate");
        sum += weights[i] * v;
    }
    return sum;
}

double integrate_periodic(const std::function<double(double)>& f, const QuadratureSpec& spec,
                          std::size_t initial_nodes) {
    spec.validate();
    std::size_t n = initial_nodes > 0 ? initial_nodes : spec.periodic_nodes_initial;
    double h = 2.0 * std::numbers::pi / static_cast<double>(n);
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double x = h * static_cast<double>(k);
        const double v = f(x);
        check_finite(v, x, "integrate_periodic");
        sum += v;
    }
    double previous = h * sum;
    double older = previous;
    for (int d = 0; d < spec.max_doublings; ++d) {
        double odd = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double x = h * (static_cast<double>(k) + 0.5);
            const double v = f(x);
            check_finite(v, x, "integrate_periodic");
            odd += v;
        }
        const double current = 0.5 * previous + 0.5 * h * odd;
        if (std::abs(current - previous) <= spec.relative_tolerance * std::abs(current)) {
            return current;
        }
        older = previous;
        previous = current;
        n *= 2;
        h *= 0.5;
    }
    throw NonConvergenceError("integrate_periodic: max_doublings exhausted", older, previous);
}

double integrate_periodic_batch(const PeriodicBatch& f, const QuadratureSpec& spec,
                                std::size_t initial_nodes, bool even) {
    spec.validate();
    std::size_t n = initial_nodes > 0 ? initial_nodes : spec.periodic_nodes_initial;
    if (even) n += n % 2;
    double h = 2.0 * std::numbers::pi / static_cast<double>(n);
    std::vector<double> phi;
    std::vector<double> val;
    auto sample = [&](std::size_t count, double offset) {
        phi.resize(count);
        val.resize(count);
        for (std::size_t k = 0; k < count; ++k) phi[k] = h * (static_cast<double>(k) + offset);
        f(phi, val);
        for (std::size_t k = 0; k < count; ++k) check_finite(val[k], phi[k], "integrate_periodic");
    };
    double sum = 0.0;
    if (even) {
        // Nodes 0 and pi appear once on the full circle, the rest twice.
        sample(n / 2 + 1, 0.0);
        for (std::size_t k = 1; k < n / 2; ++k) sum += 2.0 * val[k];
        sum += val[0] + val[n / 2];
    } else {
        sample(n, 0.0);
        for (double v : val) sum += v;
    }
    double previous = h * sum;
    double older = previous;
    for (int d = 0; d < spec.max_doublings; ++d) {
        double odd = 0.0;
        if (even) {
            sample(n / 2, 0.5);
            for (double v : val) odd += 2.0 * v;
        } else {
            sample(n, 0.5);
            for (double v : val) odd += v;
        }
        const double current = 0.5 * previous + 0.5 * h * odd;
        if (std::abs(current - previous) <= spec.relative_tolerance * std::abs(current)) {
            return current;
        }
        older = previous;
        previous = current;
        n *= 2;
        h *= 0.5;
    }
    throw NonConvergenceError("integrate_periodic: max_doublings exhausted", older, previous);
}

double integrate_interval(const std::function<double(double)>& g, double lo, double hi,
                          const QuadratureSpec& spec) {
    spec.validate();
    if (!(hi > lo)) return 0.0;
    constexpr std::size_t kOrder = 16;
    const GaussRule base = gauss_legendre(kOrder);
    auto panel_sum = [&](std::size_t panels) {
        const double width = (hi - lo) / static_cast<double>(panels);
        double total = 0.0;
        for (std::size_t p = 0; p < panels; ++p) {
            const double mid = lo + (static_cast<double>(p) + 0.5) * width;
            double s = 0.0;
            for (std::size_t k = 0; k < kOrder; ++k) {
                const double x = mid + 0.5 * width * base.nodes[k];
                const double v = g(x);
                check_finite(v, x, "integrate_interval");
                s += base.weights[k] * v;
            }
            total += 0.5 * width * s;
        }
        return total;
    };
    std::size_t panels = std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil((hi - lo) / 4.0)));
    double previous = panel_sum(panels);
    double current = previous;
    for (int d = 0; d < spec.max_doublings; ++d) {
        panels *= 2;
        current = panel_sum(panels);
        if (std::abs(current - previous) <= spec.relative_tolerance * std::abs(current)) {
            return current;
        }
        previous = current;
    }
    throw NonConvergenceError("integrate_interval: max_doublings exhausted", previous, current);
}

double integrate_radial_gaussian(const std::function<double(double)>& g, double center,
                                 const QuadratureSpec& spec, double decay) {
    if (!(center >= 0.0) || !(decay > 0.0)) {
        throw DomainError("integrate_radial_gaussian: need center >= 0 and decay > 0");
    }
    spec.validate();
    const double half_width = spec.radial_truncation_margin / std::sqrt(decay);
    return integrate_interval(g, std::max(0.0, center - half_width), center + half_width, spec);
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t mid = values.size() / 2;
    return pairwise_sum(values.first(mid)) + pairwise_sum(values.subspan(mid));
}

}  // namespace numerics
}  // namespace hermspace
