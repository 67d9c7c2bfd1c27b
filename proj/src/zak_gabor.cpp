#include "hermspace/zak_gabor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "hermspace/errors.hpp"
#include "hermspace/hermite.hpp"

namespace hermspace::zak {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxZakOrder = 500;
constexpr double kContainSlack = 1e-9;

long long zak_cutoff(std::size_t n) {
    return static_cast<long long>(
               std::ceil(std::sqrt((2.0 * static_cast<double>(n) + 1.0) / (2.0 * kPi)))) +
           10;
}

// Bound on sum_{j >= 1} |h(x + s (K + j))| from the first two omitted terms, valid
// where the tail decays at least geometrically (beyond the turning point).
double tail_bound(std::size_t n, double x, long long K) {
    std::vector<double> h(n + 1);
    double total = 0.0;
    for (double side : {1.0, -1.0}) {
        hermite::hermite_values(x + side * static_cast<double>(K + 1), h);
        const double first = std::abs(h[n]);
        hermite::hermite_values(x + side * static_cast<double>(K + 2), h);
        const double second = std::abs(h[n]);
        if (first == 0.0) continue;
        const double q = second / first;
        if (!(q < 1.0)) return std::numeric_limits<double>::infinity();
        total += first / (1.0 - q);
    }
    return total;
}

// h_n(x + k), k = -K .. K; certifies the truncated tail.
std::vector<double> zak_terms(std::size_t n, double x, double tail_tol) {
    const long long K = zak_cutoff(n);
    std::vector<double> terms(static_cast<std::size_t>(2 * K + 1));
    std::vector<double> h(n + 1);
    for (long long k = -K; k <= K; ++k) {
        hermite::hermite_values(x + static_cast<double>(k), h);
        terms[static_cast<std::size_t>(k + K)] = h[n];
    }
    const double tail = tail_bound(n, x, K);
    if (!(tail <= tail_tol)) {
        std::ostringstream msg;
        msg << "zak_hermite: tail certificate failed for n=" << n << " x=" << x << " (bound "
            << tail << ")";
        throw NumericalError(msg.str());
    }
    return terms;
}

std::complex<double> zak_sum(std::span<const double> terms, double omega) {
    // sum_k terms[k + K] e^{2 pi i k omega}; the Horner shift e^{-2 pi i K omega} is
    // restored so the phase convention matches the definition.
    const long long K = static_cast<long long>(terms.size() / 2);
    const double c = std::cos(2.0 * kPi * omega);
    const double s = std::sin(2.0 * kPi * omega);
    double re = 0.0;
    double im = 0.0;
    for (std::size_t j = terms.size(); j-- > 0;) {
        const double nr = re * c - im * s + terms[j];
        im = re * s + im * c;
        re = nr;
    }
    return std::complex<double>(re, im) * std::polar(1.0, -2.0 * kPi * static_cast<double>(K) * omega);
}

double zak_abs_sum(std::span<const double> terms, double c, double s) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t j = terms.size(); j-- > 0;) {
        const double nr = re * c - im * s + terms[j];
        im = re * s + im * c;
        re = nr;
    }
    return std::hypot(re, im);
}

void check_zak_args(std::size_t n, double x, double omega) {
    if (n > kMaxZakOrder) throw DomainError("zak_hermite: n must not exceed 500");
    if (!(x >= 0.0 && x < 1.0 && omega >= 0.0 && omega < 1.0)) {
        throw DomainError("zak_hermite: (x, omega) must lie in [0,1)^2");
    }
}

}  // namespace

Lattice2D::Lattice2D(double a00, double a01, double a10, double a11) : a_{a00, a01, a10, a11} {
    if (!(std::abs(det()) > 1e-9)) throw DomainError("Lattice2D: generator is singular");
}

Lattice2D Lattice2D::hexagonal() { return {1.0, 0.5, 0.0, std::sqrt(3.0) / 2.0}; }

PhasePoint Lattice2D::point(long long k1, long long k2) const {
    const double a = static_cast<double>(k1);
    const double b = static_cast<double>(k2);
    return {a_[0] * a + a_[1] * b, a_[2] * a + a_[3] * b};
}

std::vector<PhasePoint> Lattice2D::points_in_disk(double radius) const {
    // |A k| >= sigma_min |k|, so |k| <= radius / sigma_min covers the disk.
    const double frob = a_[0] * a_[0] + a_[1] * a_[1] + a_[2] * a_[2] + a_[3] * a_[3];
    const double d = std::abs(det());
    const double sigma_min_sq = 0.5 * (frob - std::sqrt(std::max(0.0, frob * frob - 4.0 * d * d)));
    const auto K = static_cast<long long>(std::ceil(radius / std::sqrt(sigma_min_sq))) + 1;
    std::vector<PhasePoint> out;
    for (long long k1 = -K; k1 <= K; ++k1) {
        for (long long k2 = -K; k2 <= K; ++k2) {
            const PhasePoint p = point(k1, k2);
            if (p.norm_sq() <= radius * radius) out.push_back(p);
        }
    }
    return out;
}

std::complex<double> zak_hermite(std::size_t n, double x, double omega, double tail_tol) {
    check_zak_args(n, x, omega);
    const std::vector<double> terms = zak_terms(n, x, tail_tol);
    return zak_sum(terms, omega);
}

ZakGrid zak_grid(std::size_t n, std::size_t resolution) {
    if (resolution < 1) throw DomainError("zak_grid: resolution must be positive");
    if (n > kMaxZakOrder) throw DomainError("zak_grid: n must not exceed 500");
    ZakGrid grid{n, resolution, std::vector<std::complex<double>>(resolution * resolution)};
    const double G = static_cast<double>(resolution);
    for (std::size_t i = 0; i < resolution; ++i) {
        const std::vector<double> terms = zak_terms(n, static_cast<double>(i) / G, 1e-10);
        for (std::size_t j = 0; j < resolution; ++j) {
            grid.values[i * resolution + j] = zak_sum(terms, static_cast<double>(j) / G);
        }
    }
    return grid;
}

ZakSup zak_sup(std::size_t n, std::size_t resolution) {
    if (resolution < 64) throw DomainError("zak_sup: grid resolution must be >= 64");
    if (n > kMaxZakOrder) throw DomainError("zak_sup: n must not exceed 500");
    const double G = static_cast<double>(resolution);
    double sup = 0.0;
    for (std::size_t i = 0; i < resolution; ++i) {
        const std::vector<double> terms = zak_terms(n, static_cast<double>(i) / G, 1e-10);
        for (std::size_t j = 0; j < resolution; ++j) {
            const double w = 2.0 * kPi * static_cast<double>(j) / G;
            sup = std::max(sup, zak_abs_sum(terms, std::cos(w), std::sin(w)));
        }
    }
    return {n, sup, sup / std::pow(static_cast<double>(n) + 1.0, 0.25)};
}

std::vector<ZakSup> zak_sup_sweep(std::size_t n_max, std::size_t resolution) {
    if (resolution < 64) throw DomainError("zak_sup_sweep: grid resolution must be >= 64");
    if (n_max > kMaxZakOrder) throw DomainError("zak_sup_sweep: n must not exceed 500");
    const long long K = zak_cutoff(n_max);
    const std::size_t width = static_cast<std::size_t>(2 * K + 1);
    const double G = static_cast<double>(resolution);
    std::vector<double> sup(n_max + 1, 0.0);
    std::vector<double> batch(n_max + 1);
    std::vector<double> table(width * (n_max + 1));  // table[n * width + k + K]
    std::vector<double> cosines(resolution);
    std::vector<double> sines(resolution);
    for (std::size_t j = 0; j < resolution; ++j) {
        const double w = 2.0 * kPi * static_cast<double>(j) / G;
        cosines[j] = std::cos(w);
        sines[j] = std::sin(w);
    }
    for (std::size_t i = 0; i < resolution; ++i) {
        const double x = static_cast<double>(i) / G;
        for (long long k = -K; k <= K; ++k) {
            hermite::hermite_values(x + static_cast<double>(k), batch);
            for (std::size_t n = 0; n <= n_max; ++n) {
                table[n * width + static_cast<std::size_t>(k + K)] = batch[n];
            }
        }
        for (std::size_t n = 0; n <= n_max; ++n) {
            // Restrict to this order's own cutoff so the certified truncation applies.
            const long long Kn = zak_cutoff(n);
            const std::span<const double> terms(&table[n * width + static_cast<std::size_t>(K - Kn)],
                                                static_cast<std::size_t>(2 * Kn + 1));
            if (i == 0 || i == resolution / 2) {
                if (!(tail_bound(n, x, Kn) <= 1e-10)) {
                    throw NumericalError("zak_sup_sweep: tail certificate failed");
                }
            }
            for (std::size_t j = 0; j < resolution; ++j) {
                sup[n] = std::max(sup[n], zak_abs_sum(terms, cosines[j], sines[j]));
            }
        }
    }
    std::vector<ZakSup> out(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        out[n] = {n, sup[n], sup[n] / std::pow(static_cast<double>(n) + 1.0, 0.25)};
    }
    return out;
}

int rel_lattice(const Lattice2D& lattice, RelMode mode) {
    const auto& a = lattice.generator();
    if (mode == RelMode::exact_rectangular) {
        if (!lattice.is_rectangular()) {
            throw DomainError("rel_lattice: exact_rectangular needs a diagonal generator");
        }
        const double per_x = std::ceil(1.0 / std::abs(a[0]) - kContainSlack);
        const double per_y = std::ceil(1.0 / std::abs(a[3]) - kContainSlack);
        return static_cast<int>(per_x * per_y);
    }
    const PhasePoint c1 = lattice.point(1, 1);
    const PhasePoint c2 = lattice.point(1, -1);
    const double diameter = std::sqrt(std::max(c1.norm_sq(), c2.norm_sq()));
    const std::vector<PhasePoint> pts = lattice.points_in_disk(3.0 + diameter);
    constexpr int kOffsets = 256;
    int best = 0;
    for (int i = 0; i < kOffsets; ++i) {
        for (int j = 0; j < kOffsets; ++j) {
            const double u = static_cast<double>(i) / kOffsets;
            const double v = static_cast<double>(j) / kOffsets;
            const double ox = a[0] * u + a[1] * v;
            const double oy = a[2] * u + a[3] * v;
            int count = 0;
            for (const auto& p : pts) {
                if (p.x >= ox - kContainSlack && p.x < ox + 1.0 - kContainSlack &&
                    p.omega >= oy - kContainSlack && p.omega < oy + 1.0 - kContainSlack) {
                    ++count;
                }
            }
            best = std::max(best, count);
        }
    }
    return best;
}

double bessel_min_radius(std::size_t n, PhasePoint probe) {
    return std::sqrt(probe.norm_sq()) + 5.0 + std::sqrt((static_cast<double>(n) + 1.0) / kPi);
}

double bessel_sum(std::size_t n, const Lattice2D& lattice, PhasePoint probe, double R) {
    if (!(R >= bessel_min_radius(n, probe))) {
        throw DomainError("bessel_sum: R must be >= |w| + 5 + sqrt((n+1)/pi)");
    }
    double sum = 0.0;
    for (const PhasePoint& lambda : lattice.points_in_disk(R)) {
        const PhasePoint d{probe.x - lambda.x, probe.omega - lambda.omega};
        sum += std::exp(numerics::log_poisson_weight(n, kPi * d.norm_sq()));
    }
    return sum;
}

numerics::LineRule synthesis_rule(std::size_t n, std::span<const LatticeCoefficient> coefficients) {
    if (coefficients.empty()) throw DomainError("synthesis_rule: no coefficients");
    double lo = coefficients.front().lambda.x;
    double hi = lo;
    double band = 0.0;
    for (const auto& c : coefficients) {
        lo = std::min(lo, c.lambda.x);
        hi = std::max(hi, c.lambda.x);
        band = std::max(band, std::abs(c.lambda.omega));
    }
    const double reach = hermite::decay_radius(n);
    lo -= reach;
    hi += reach;
    // Resolve both the Hermite oscillation and the modulation.
    const double per_unit = 4.0 + std::sqrt(2.0 * static_cast<double>(n) + 1.0) + 2.0 * band;
    const auto panels = static_cast<std::size_t>(std::ceil((hi - lo) * per_unit / 4.0));
    return numerics::composite_gauss_legendre(lo, hi, std::max<std::size_t>(panels, 8), 16);
}

SynthesisResult synthesis_norm(std::size_t n, std::span<const LatticeCoefficient> coefficients,
                               const numerics::LineRule& rule) {
    if (coefficients.empty()) throw DomainError("synthesis_norm: no coefficients");
    const double reach = hermite::decay_radius(n);
    double a_sq = 0.0;
    std::map<double, std::vector<std::size_t>> by_shift;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        const auto& c = coefficients[i];
        if (rule.lo > c.lambda.x - reach || rule.hi < c.lambda.x + reach) {
            throw DomainError("synthesis_norm: rule does not cover the shifted Hermite supports");
        }
        a_sq += std::norm(c.a);
        by_shift[c.lambda.x].push_back(i);
    }
    std::vector<double> h(n + 1);
    double norm_sq = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const double t = rule.nodes[q];
        std::complex<double> g = 0.0;
        for (const auto& [shift, members] : by_shift) {
            const double arg = t - shift;
            if (std::abs(arg) > hermite::kMaxAbsArgument) continue;
            hermite::hermite_values(arg, h);
            std::complex<double> modulated = 0.0;
            for (std::size_t i : members) {
                const auto& c = coefficients[i];
                modulated += c.a * std::polar(1.0, 2.0 * kPi * c.lambda.omega * t);
            }
            g += modulated * h[n];
        }
        norm_sq += rule.weights[q] * std::norm(g);
    }
    return {std::sqrt(norm_sq), a_sq > 0.0 ? norm_sq / a_sq : 0.0};
}

BoundReport frame_identity_check(std::size_t n, std::span<const PhasePoint> probes, double R,
                                 double tol, std::size_t resolution) {
    if (probes.empty()) throw DomainError("frame_identity_check: no probes");
    const Lattice2D lattice = Lattice2D::integer();
    double worst = 0.0;
    for (const PhasePoint& w : probes) worst = std::max(worst, bessel_sum(n, lattice, w, R));
    const ZakSup zs = zak_sup(n, resolution);
    return BoundReport::make(0.0, worst, zs.sup * zs.sup, tol);
}

}  // namespace hermspace::zak
