#pragma once

// Zak transform of Hermite functions, relative lattice density, and Bessel and
// synthesis sums of Gabor systems generated by h_n.

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "hermspace/bound_report.hpp"
#include "hermspace/numerics.hpp"
#include "hermspace/phase_space.hpp"

namespace hermspace::zak {

using phase::PhasePoint;

/// Lattice A Z^2 in the time-frequency plane. Columns of A generate the lattice.
class Lattice2D {
public:
    /// Rows of A: {{a00, a01}, {a10, a11}}.
    Lattice2D(double a00, double a01, double a10, double a11);

    static Lattice2D rectangular(double a, double b) { return {a, 0.0, 0.0, b}; }
    static Lattice2D integer() { return rectangular(1.0, 1.0); }
    /// Columns (1, 0) and (1/2, sqrt(3)/2).
    static Lattice2D hexagonal();

    double det() const { return a_[0] * a_[3] - a_[1] * a_[2]; }
    bool is_rectangular() const { return a_[1] == 0.0 && a_[2] == 0.0; }
    PhasePoint point(long long k1, long long k2) const;
    const std::array<double, 4>& generator() const { return a_; }

    /// All lattice points with |lambda| <= radius.
    std::vector<PhasePoint> points_in_disk(double radius) const;

private:
    std::array<double, 4> a_;  // row-major
};

/// Zh_n(x, omega) = sum_k h_n(x + k) e^{2 pi i k omega}, truncated at
/// |k| <= ceil(sqrt((2n+1)/(2 pi))) + 10 with a certified tail bound.
std::complex<double> zak_hermite(std::size_t n, double x, double omega, double tail_tol = 1e-10);

struct ZakGrid {
    std::size_t n = 0;
    std::size_t resolution = 0;
    std::vector<std::complex<double>> values;  // row-major, values[i * G + j] at (i/G, j/G)
};

ZakGrid zak_grid(std::size_t n, std::size_t resolution);

struct ZakSup {
    std::size_t n = 0;
    double sup = 0.0;    // max |Zh_n| over the grid
    double ratio = 0.0;  // sup / (n + 1)^{1/4}
};

ZakSup zak_sup(std::size_t n, std::size_t resolution);

/// zak_sup for n = 0 .. n_max, sharing one Hermite batch per grid abscissa.
std::vector<ZakSup> zak_sup_sweep(std::size_t n_max, std::size_t resolution);

enum class RelMode { exact_rectangular, sliding_estimate };

/// max over x of |Lambda intersected with x + [0,1)^2|. The sliding estimate scans a
/// 256 x 256 grid of offsets in the fundamental domain and is a lower bound.
int rel_lattice(const Lattice2D& lattice, RelMode mode);

/// Smallest admissible truncation radius for bessel_sum.
double bessel_min_radius(std::size_t n, PhasePoint probe);

/// sum over lambda in Lambda, |lambda| <= R, of |<pi(w) h_0, pi(lambda) h_n>|^2
/// = p_n(pi |w - lambda|^2).
double bessel_sum(std::size_t n, const Lattice2D& lattice, PhasePoint probe, double R);

struct LatticeCoefficient {
    PhasePoint lambda;
    std::complex<double> a;
};

struct SynthesisResult {
    double norm = 0.0;      // || sum a_lambda pi(lambda) h_n ||_2
    double ratio_sq = 0.0;  // norm^2 / ||a||^2
};

/// Line-quadrature L2 norm of g(t) = sum a_lambda e^{2 pi i lambda_omega t} h_n(t - lambda_x).
SynthesisResult synthesis_norm(std::size_t n, std::span<const LatticeCoefficient> coefficients,
                               const numerics::LineRule& rule);

/// A rule wide enough for synthesis_norm on the given coefficients.
numerics::LineRule synthesis_rule(std::size_t n, std::span<const LatticeCoefficient> coefficients);

/// Bessel sums over Z^2 for each probe against ||Zh_n||_inf^2 on a grid.
/// measured = largest probe sum, upper = squared grid sup of |Zh_n|.
BoundReport frame_identity_check(std::size_t n, std::span<const PhasePoint> probes, double R,
                                 double tol = 1e-3, std::size_t resolution = 256);

}  // namespace hermspace::zak
