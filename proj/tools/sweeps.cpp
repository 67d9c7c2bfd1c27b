#include "sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "hermspace/errors.hpp"
#include "hermspace/hermite.hpp"
#include "hermspace/operators.hpp"
#include "hermspace/parallel.hpp"
#include "hermspace/phase_space.hpp"
#include "hermspace/poisson_poly.hpp"
#include "hermspace/zak_gabor.hpp"
#include "range.hpp"

namespace hermspace::cli {

namespace {

using Row = std::vector<std::string>;
using phase::HermiteCoeffs;
using phase::PhasePoint;

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) { return format_real(v); }
std::string fmt(std::size_t v) { return std::to_string(v); }
std::string flag(bool ok) { return ok ? "1" : "0"; }

void require_nonempty(const std::vector<std::size_t>& v, const char* what) {
    if (v.empty()) throw DomainError(std::string(what) + ": --n sweep is empty");
}

void require_nonempty(const std::vector<double>& v, const char* what) {
    if (v.empty()) throw DomainError(std::string(what) + ": sweep is empty");
}

template <class Make>
std::vector<Row> build_rows(std::size_t count, Make make) {
    std::vector<Row> rows(count);
    parallel_for(count, [&](std::size_t i) { rows[i] = make(i); });
    return rows;
}

void record(Table& table, bool ok) {
    ++table.checks;
    if (!ok) ++table.failures;
}

HermiteCoeffs inverse_square(std::size_t n_max) {
    std::vector<double> c(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) c[n] = 1.0 / ((1.0 + n) * (1.0 + n));
    return HermiteCoeffs::from_real(c);
}

PhasePoint probe_point(std::size_t N) { return {std::sqrt(static_cast<double>(N) / kPi), 0.0}; }

// Rows of a (p, N) sweep whose value must strictly decrease along N for each p.
Table decreasing_sweep(const SweepOptions& o, std::vector<std::string> header,
                       const std::function<double(double, std::size_t)>& value,
                       const std::vector<std::string>& extra) {
    require_nonempty(o.n, "sweep");
    require_nonempty(o.p, "--p");
    Table table;
    table.header = std::move(header);
    const std::size_t nN = o.n.size();
    std::vector<double> values(o.p.size() * nN);
    parallel_for(values.size(), [&](std::size_t i) { values[i] = value(o.p[i / nN], o.n[i % nN]); });
    for (std::size_t i = 0; i < values.size(); ++i) {
        Row row{fmt(o.p[i / nN]), fmt(o.n[i % nN])};
        row.insert(row.end(), extra.begin(), extra.end());
        row.push_back(fmt(values[i]));
        if (i % nN == 0) {
            row.push_back("");
        } else {
            const bool ok = values[i] < values[i - 1];
            record(table, ok);
            row.push_back(flag(ok));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace

Table pn_bounds(const SweepOptions& o) {
    require_nonempty(o.n, "pn-bounds");
    require_nonempty(o.t, "pn-bounds --t");
    Table table;
    table.header = {"t", "N", "lower", "measured", "upper", "pass"};
    const std::size_t nN = o.n.size();
    std::vector<BoundReport> reports(o.t.size() * nN);
    parallel_for(reports.size(), [&](std::size_t i) {
        reports[i] = poisson::check_sandwich(o.t[i / nN], o.n[i % nN], o.spec);
    });
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const BoundReport& r = reports[i];
        record(table, r.pass);
        table.rows.push_back({fmt(o.t[i / nN]), fmt(o.n[i % nN]), fmt(r.lower), fmt(r.measured),
                              fmt(r.upper), flag(r.pass)});
    }
    return table;
}

Table pn_identities(const SweepOptions& o) {
    require_nonempty(o.n, "pn-identities");
    Table table;
    table.header = {"check", "N", "t", "lower", "measured", "upper", "pass"};
    const std::vector<double> ts = o.t.empty() ? std::vector<double>{1.0, 2.0, 10.0, 100.0} : o.t;
    std::vector<std::vector<std::pair<std::string, BoundReport>>> per_n(o.n.size());
    std::vector<std::vector<std::string>> t_col(o.n.size());
    parallel_for(o.n.size(), [&](std::size_t i) {
        const std::size_t N = o.n[i];
        auto& out = per_n[i];
        auto& tc = t_col[i];
        auto add = [&](const char* name, const BoundReport& r, const std::string& t) {
            out.emplace_back(name, r);
            tc.push_back(t);
        };
        if (N >= 1) {
            add("stirling", numerics::stirling_check(static_cast<long long>(N)), "");
            add("pointwise", poisson::pointwise_bound_check(N), "");
            add("geometric", poisson::geometric_bound_check(kPi / static_cast<double>(N)), "");
            std::mt19937_64 gen(ops::derive_seed(o.seed, N));
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            std::vector<std::complex<double>> q(N + 1);
            double mass = 0.0;
            for (auto& v : q) {
                v = std::polar(std::sqrt(unit(gen)), 2.0 * kPi * unit(gen));
                mass += std::abs(v);
            }
            const double angle = 2.0 * kPi * (0.5 + 0.999 * (unit(gen) - 0.5));
            const double residual = poisson::resummation_residual(q, std::polar(1.0, angle));
            add("resummation", BoundReport::make(0.0, residual, 1e-12 * mass, 0.0), "");
        }
        if (N >= 3) add("aux", poisson::aux_inequality_check(N), "");
        if (N >= 2) {
            for (double t : ts) add("remainder", poisson::remainder_mass_check(t, N), fmt(t));
        }
    });
    for (std::size_t i = 0; i < o.n.size(); ++i) {
        for (std::size_t k = 0; k < per_n[i].size(); ++k) {
            const auto& [name, r] = per_n[i][k];
            record(table, r.pass);
            table.rows.push_back({name, fmt(o.n[i]), t_col[i][k], fmt(r.lower), fmt(r.measured),
                                  fmt(r.upper), flag(r.pass)});
        }
    }
    return table;
}

Table sn_growth(const SweepOptions& o) {
    require_nonempty(o.n, "sn-growth");
    Table table;
    table.header = {"N", "probe_m1", "lower_bound", "ratio_to_logN", "pass"};
    std::vector<double> probe(o.n.size());
    for (std::size_t N : o.n) {
        if (N < 3) throw DomainError("sn-growth: N must be >= 3");
    }
    parallel_for(o.n.size(), [&](std::size_t i) { probe[i] = ops::sn_probe_m1(o.n[i], o.spec); });
    for (std::size_t i = 0; i < o.n.size(); ++i) {
        const double lb = ops::sn_growth_lower_bound(o.n[i]);
        const bool ok = probe[i] / 2.0 >= lb;
        record(table, ok);
        table.rows.push_back({fmt(o.n[i]), fmt(probe[i]), fmt(lb),
                              fmt(probe[i] / std::log(static_cast<double>(o.n[i]))), flag(ok)});
    }
    return table;
}

Table mp_convergence(const SweepOptions& o) {
    if (o.quantity == "truncation") {
        const HermiteCoeffs f = inverse_square(o.n_max);
        return decreasing_sweep(o, {"p", "N", "truncation_error", "decreasing"},
                                [&](double p, std::size_t N) { return ops::truncation_error(f, N, p, o.spec); },
                                {});
    }
    if (o.quantity != "probe-ratio") {
        throw DomainError("mp-convergence: --quantity must be truncation or probe-ratio");
    }
    require_nonempty(o.n, "mp-convergence");
    require_nonempty(o.p, "mp-convergence --p");
    Table table;
    table.header = {"p", "N", "probe_ratio"};
    const std::size_t nN = o.n.size();
    std::vector<double> ratio(o.p.size() * nN);
    parallel_for(ratio.size(), [&](std::size_t i) {
        const double p = o.p[i / nN];
        const HermiteCoeffs g = phase::shifted_gaussian_coeffs(probe_point(o.n[i % nN]));
        ratio[i] = phase::mp_norm(ops::partial_sum(g, o.n[i % nN]), p, o.spec) / phase::mp_norm(g, p, o.spec);
    });
    for (std::size_t a = 0; a < o.p.size(); ++a) {
        const auto first = ratio.begin() + static_cast<std::ptrdiff_t>(a * nN);
        const auto [lo, hi] = std::minmax_element(first, first + static_cast<std::ptrdiff_t>(nN));
        record(table, *hi <= 2.0 * *lo);
    }
    for (std::size_t i = 0; i < ratio.size(); ++i) {
        table.rows.push_back({fmt(o.p[i / nN]), fmt(o.n[i % nN]), fmt(ratio[i])});
    }
    return table;
}

Table bochner_riesz(const SweepOptions& o) {
    if (!(o.alpha > 0.0)) throw DomainError("bochner-riesz: --alpha must be > 0");
    const HermiteCoeffs f = inverse_square(o.n_max);
    return decreasing_sweep(
        o, {"p", "N", "alpha", "error", "decreasing"},
        [&](double p, std::size_t N) { return ops::bochner_riesz_error(f, N, o.alpha, p, o.spec); },
        {fmt(o.alpha)});
}

Table m1_hermite(const SweepOptions& o) {
    require_nonempty(o.n, "m1-hermite");
    Table table;
    table.header = {"n", "closed_form", "quadrature", "rel_diff", "asymptotic_ratio", "pass"};
    std::vector<double> quad(o.n.size(), std::nan(""));
    parallel_for(o.n.size(), [&](std::size_t i) {
        if (o.n[i] <= o.quad_max) quad[i] = phase::mp_norm(HermiteCoeffs::basis(o.n[i]), 1.0, o.spec);
    });
    for (std::size_t i = 0; i < o.n.size(); ++i) {
        const std::size_t n = o.n[i];
        const double closed = phase::m1_hermite_closed_form(n);
        bool ok = true;
        Row row{fmt(n), fmt(closed)};
        if (std::isnan(quad[i])) {
            row.insert(row.end(), {"", ""});
        } else {
            const double rel = std::abs(quad[i] - closed) / closed;
            ok = ok && rel <= 1e-6;
            row.insert(row.end(), {fmt(quad[i]), fmt(rel)});
        }
        if (n == 0) {
            row.push_back("");
        } else {
            const double ratio = closed / std::pow(8.0 * kPi * static_cast<double>(n), 0.25);
            if (n >= 8) ok = ok && std::abs(ratio - 1.0) <= 2.0 / static_cast<double>(n);
            row.push_back(fmt(ratio));
        }
        record(table, ok);
        row.push_back(flag(ok));
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table cgamma_compare(const SweepOptions& o) {
    require_nonempty(o.n, "cgamma-compare");
    auto make = [&](std::size_t n) -> HermiteCoeffs {
        if (o.family == "basis") return HermiteCoeffs::basis(n);
        if (o.family == "shifted-gaussian") return phase::shifted_gaussian_coeffs(probe_point(n));
        if (o.family == "inverse-square") return inverse_square(n);
        throw DomainError("cgamma-compare: --family must be basis, shifted-gaussian or inverse-square");
    };
    make(0);
    Table table;
    table.header = {"family", "n", "c_minus_quarter", "m1", "c_quarter", "m1_over_c_quarter",
                    "c_minus_quarter_over_m1", "pass"};
    table.rows = build_rows(o.n.size(), [&](std::size_t i) {
        const HermiteCoeffs f = make(o.n[i]);
        const double lo = ops::c_gamma_norm(f, -0.25);
        const double hi = ops::c_gamma_norm(f, 0.25);
        const double m1 = phase::mp_norm(f, 1.0, o.spec);
        return Row{o.family, fmt(o.n[i]), fmt(lo), fmt(m1), fmt(hi), fmt(m1 / hi), fmt(lo / m1),
                   flag(lo <= hi)};
    });
    for (const Row& row : table.rows) record(table, row.back() == "1");
    return table;
}

Table torus_riesz(const SweepOptions& o) {
    require_nonempty(o.n, "torus-riesz");
    require_nonempty(o.p, "torus-riesz --p");
    Table table;
    table.header = {"N", "p", "trials", "ratio", "pass"};
    const std::size_t np = o.p.size();
    std::vector<double> ratio(o.n.size() * np);
    parallel_for(ratio.size(), [&](std::size_t i) {
        ratio[i] = ops::torus_partial_sum_lp_ratio(o.n[i / np], o.p[i % np], o.trials, o.seed, o.degree_factor);
    });
    for (std::size_t i = 0; i < ratio.size(); ++i) {
        const double p = o.p[i % np];
        std::string verdict;
        if (p == 2.0) {
            const bool ok = ratio[i] <= 1.0 + 1e-9;
            record(table, ok);
            verdict = flag(ok);
        }
        table.rows.push_back({fmt(o.n[i / np]), fmt(p), fmt(o.trials), fmt(ratio[i]), verdict});
    }
    return table;
}

Table zak_sup(const SweepOptions& o) {
    require_nonempty(o.n, "zak-sup");
    Table table;
    table.header = {"n", "sup", "ratio"};
    table.rows = build_rows(o.n.size(), [&](std::size_t i) {
        const zak::ZakSup z = zak::zak_sup(o.n[i], o.grid);
        return Row{fmt(o.n[i]), fmt(z.sup), fmt(z.ratio)};
    });
    return table;
}

Table bessel_bounds(const SweepOptions& o) {
    require_nonempty(o.n, "bessel-bounds");
    const std::vector<std::string> names =
        o.lattices.empty() ? std::vector<std::string>{"z2", "half", "hex"} : o.lattices;
    std::vector<zak::Lattice2D> lattices;
    for (const std::string& name : names) {
        if (name == "z2") {
            lattices.push_back(zak::Lattice2D::integer());
        } else if (name == "half") {
            lattices.push_back(zak::Lattice2D::rectangular(0.5, 1.0));
        } else if (name == "hex") {
            lattices.push_back(zak::Lattice2D::hexagonal());
        } else {
            throw DomainError("bessel-bounds: unknown lattice '" + name + "' (z2, half, hex)");
        }
    }
    const std::vector<PhasePoint> probes{{0.0, 0.0}, {0.5, 0.5}, {0.3, 0.7}};
    Table table;
    table.header = {"lattice", "n", "rel", "bessel_max", "bessel_normalized", "synthesis_ratio_sq",
                    "synthesis_normalized", "frame_bound", "pass"};
    const std::size_t nn = o.n.size();
    table.rows = build_rows(names.size() * nn, [&](std::size_t i) {
        const std::size_t li = i / nn;
        const std::size_t n = o.n[i % nn];
        const zak::Lattice2D& lattice = lattices[li];
        const int rel = lattice.is_rectangular() ? zak::rel_lattice(lattice, zak::RelMode::exact_rectangular)
                                                 : zak::rel_lattice(lattice, zak::RelMode::sliding_estimate);
        double bessel = 0.0;
        for (const PhasePoint& w : probes) {
            bessel = std::max(bessel, zak::bessel_sum(n, lattice, w, zak::bessel_min_radius(n, w) + 1.0));
        }
        std::mt19937_64 gen(ops::derive_seed(o.seed, i));
        std::normal_distribution<double> normal(0.0, 1.0);
        std::vector<zak::LatticeCoefficient> coeffs;
        for (const PhasePoint& lambda : lattice.points_in_disk(4.0)) {
            coeffs.push_back({lambda, {normal(gen), normal(gen)}});
        }
        const zak::SynthesisResult syn = zak::synthesis_norm(n, coeffs, zak::synthesis_rule(n, coeffs));
        const double scale = rel * std::sqrt(static_cast<double>(n) + 1.0);
        Row row{names[li], fmt(n), std::to_string(rel), fmt(bessel), fmt(bessel / scale),
                fmt(syn.ratio_sq), fmt(syn.ratio_sq / scale)};
        if (names[li] == "z2") {
            const double sup = zak::zak_sup(n, o.grid).sup;
            row.push_back(fmt(sup * sup));
            row.push_back(flag(BoundReport::make(0.0, bessel, sup * sup, 1e-3).pass &&
                               syn.ratio_sq <= sup * sup * (1.0 + 1e-3)));
        } else {
            row.insert(row.end(), {"", ""});
        }
        return row;
    });
    for (const Row& row : table.rows) {
        if (!row.back().empty()) record(table, row.back() == "1");
    }
    return table;
}

Table tensor_check(const SweepOptions& o) {
    require_nonempty(o.n, "tensor-check");
    if (o.dimension < 1 || o.dimension > 4) throw DomainError("tensor-check: --d must lie in [1, 4]");
    Table table;
    table.header = {"N", "d", "probe_1d", "probe_1d_poisson", "probe_d", "power_1d", "rel_diff",
                    "lower_bound_1d", "lower_bound_d", "pass"};
    table.rows = build_rows(o.n.size(), [&](std::size_t i) {
        const std::size_t N = o.n[i];
        const PhasePoint z = probe_point(N);
        const HermiteCoeffs g = ops::partial_sum(phase::shifted_gaussian_coeffs(z), N);
        const double one = phase::mp_norm(g, 1.0, o.spec);
        const double poisson = ops::partial_sum_probe_m1(N, z.x, o.spec);
        const std::vector<HermiteCoeffs> factors(o.dimension, g);
        const double many = phase::tensor_mp_norm(factors, 1.0, o.spec);
        const double power = std::pow(one, static_cast<double>(o.dimension));
        const double rel = std::abs(many - power) / power;
        const double lb = N >= 3 ? ops::sn_growth_lower_bound(N) : 0.0;
        const bool ok = rel <= 1e-9 && std::abs(one - poisson) <= 1e-6 * one;
        return Row{fmt(N), fmt(o.dimension), fmt(one), fmt(poisson), fmt(many), fmt(power), fmt(rel),
                   fmt(lb), fmt(std::pow(lb, static_cast<double>(o.dimension))), flag(ok)};
    });
    for (const Row& row : table.rows) record(table, row.back() == "1");
    return table;
}

std::string render_csv(const Table& table, std::uint64_t seed) {
    std::ostringstream out;
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << cells[k];
        out << '\n';
    };
    line(table.header);
    out << "# seed=" << seed << ",version=" << HERMSPACE_VERSION << '\n';
    for (const auto& row : table.rows) line(row);
    return out.str();
}

}  // namespace hermspace::cli
